#pragma once

#include <functional>
#include <span>
#include <vector>

namespace angmom {

//==============================================================================
//! One-dimensional probability density on a closed support [lo, hi], or a
//! Dirac mass at a single point.
//!
//! Continuous densities may have integrable endpoint singularities, so
//! comparisons downstream always go through the cdf (bin masses), never
//! through pointwise pdf values.
class Density1D {
public:
  enum class Kind { continuous, degenerate };
  using Fn = std::function<double(double)>;

  //! pdf and cdf are only called on the open interior (lo, hi); the wrapper
  //! supplies zeros outside and cdf(lo) = 0, cdf(hi) = 1.
  static Density1D continuous(double lo, double hi, Fn pdf, Fn cdf);
  static Density1D degenerate(double point);

  Kind kind() const { return kind_; }
  bool is_degenerate() const { return kind_ == Kind::degenerate; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  //! Location of the Dirac mass; equals lo() == hi() for degenerate kind.
  double point() const { return lo_; }

  //! Throws std::logic_error for the degenerate kind.
  double pdf(double x) const;
  double cdf(double x) const;

private:
  Density1D(Kind k, double lo, double hi, Fn pdf, Fn cdf)
      : kind_(k), lo_(lo), hi_(hi), pdf_(std::move(pdf)), cdf_(std::move(cdf)) {}

  Kind kind_;
  double lo_, hi_;
  Fn pdf_, cdf_;
};

//==============================================================================
struct Histogram {
  std::vector<double> edges;  //!< ascending, size = masses.size() + 1
  std::vector<double> masses; //!< probability per bin

  std::size_t bins() const { return masses.size(); }
  double total() const;
  //! Index of the half-open bin [e_i, e_{i+1}) holding x; the last bin is
  //! closed on the right. Returns bins() when x is outside the edges.
  std::size_t bin_of(double x) const;
};

//! Throws NonAscendingEdges unless edges are strictly increasing (size >= 2).
void require_ascending(std::span<const double> edges);

//! Uniform edges: n bins over [lo, hi].
std::vector<double> uniform_edges(double lo, double hi, std::size_t n);

//! Mass of d in each bin, from the cdf clamped to the support. A degenerate
//! density puts all of its mass into the bin containing its point.
Histogram bin_masses(const Density1D &d, std::span<const double> edges);

} // namespace angmom
