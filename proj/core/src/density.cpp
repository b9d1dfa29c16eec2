#include "angmom/density.hpp"
#include "angmom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace angmom {

Density1D Density1D::continuous(double lo, double hi, Fn pdf, Fn cdf) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw InvalidArgument("Density1D: support must be a finite interval with lo < hi");
  return Density1D(Kind::continuous, lo, hi, std::move(pdf), std::move(cdf));
}

Density1D Density1D::degenerate(double point) {
  if (!std::isfinite(point))
    throw InvalidArgument("Density1D: degenerate point must be finite");
  return Density1D(Kind::degenerate, point, point, {}, {});
}

double Density1D::pdf(double x) const {
  if (kind_ == Kind::degenerate)
    throw std::logic_error("Density1D: pdf of a point mass is not a function");
  if (!(x > lo_ && x < hi_))
    return 0.0;
  return pdf_(x);
}

double Density1D::cdf(double x) const {
  if (kind_ == Kind::degenerate)
    return x >= lo_ ? 1.0 : 0.0;
  if (x <= lo_)
    return 0.0;
  if (x >= hi_)
    return 1.0;
  return std::clamp(cdf_(x), 0.0, 1.0);
}

double Histogram::total() const { return std::accumulate(masses.begin(), masses.end(), 0.0); }

std::size_t Histogram::bin_of(double x) const {
  if (edges.size() < 2 || !(x >= edges.front()) || x > edges.back())
    return bins();
  if (x == edges.back())
    return bins() - 1;
  const auto it = std::upper_bound(edges.begin(), edges.end(), x);
  return static_cast<std::size_t>(it - edges.begin()) - 1;
}

void require_ascending(std::span<const double> edges) {
  if (edges.size() < 2)
    throw NonAscendingEdges("bin edges need at least two entries");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i] < edges[i + 1]))
      throw NonAscendingEdges("bin edges not strictly ascending at index " + std::to_string(i));
  }
}

std::vector<double> uniform_edges(double lo, double hi, std::size_t n) {
  if (n == 0 || !(lo < hi))
    throw InvalidArgument("uniform_edges: need n >= 1 and lo < hi");
  std::vector<double> e(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    e[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
  e.back() = hi;
  return e;
}

Histogram bin_masses(const Density1D &d, std::span<const double> edges) {
  require_ascending(edges);
  Histogram h{{edges.begin(), edges.end()}, std::vector<double>(edges.size() - 1, 0.0)};

  if (d.is_degenerate()) {
    if (const auto i = h.bin_of(d.point()); i < h.bins())
      h.masses[i] = 1.0;
    return h;
  }

  for (std::size_t i = 0; i < h.bins(); ++i) {
    const double a = std::max(edges[i], d.lo());
    const double b = std::min(edges[i + 1], d.hi());
    if (a < b)
      h.masses[i] = d.cdf(b) - d.cdf(a);
  }
  return h;
}

} // namespace angmom
