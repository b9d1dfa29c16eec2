#pragma once

#include <cstddef>
#include <vector>

namespace angmom {

//! n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
//! up to 2n-1. Nodes are ascending.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F> double integrate(F &&f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      s += weights[i] * f(nodes[i]);
    return s;
  }

  //! Same rule mapped affinely onto [a, b].
  template <class F> double integrate(F &&f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      s += weights[i] * f(mid + half * nodes[i]);
    return half * s;
  }
};

//! Throws InvalidArgument for n == 0.
QuadratureRule gauss_legendre(std::size_t n);

} // namespace angmom

namespace angmom {

//! Shared, lazily built copy of gauss_legendre(n); safe to call concurrently.
const QuadratureRule &cached_gauss_legendre(std::size_t n);

} // namespace angmom
