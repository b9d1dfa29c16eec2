#pragma once

#include "angmom/half_int.hpp"
#include "angmom/harmonics.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace angmom {

struct TurningPoints {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double theta) const { return theta > lo && theta < hi; }
};

//! (arcsin q, pi - arcsin q) with q = |m|/j, or |m|/(j + 1/2) when use_jbar,
//! clamped to [0, 1]. j = 0 gives the whole sphere.
TurningPoints turning_points(HalfInt j, HalfInt m, bool use_jbar);

enum class WkbVariant { leading, refined };

//==============================================================================
//! Semiclassical approximation to Theta_{j,m}(theta), valid strictly between
//! the classical turning points. Evaluates to 0 outside the band (no Airy
//! tails).
class WkbProfile {
public:
  WkbVariant variant() const { return variant_; }
  int j() const { return j_; }
  int m() const { return m_; }
  double jbar() const { return j_ + 0.5; }
  //! |m|/j for the leading form, |m|/(j+1/2) for the refined form.
  double q() const { return q_; }
  const TurningPoints &band() const { return band_; }

  double operator()(double theta) const;
  double density(double theta) const {
    const double v = (*this)(theta);
    return v * v;
  }
  //! Local wavenumber k(theta) of the oscillation in theta; 0 outside the band.
  double local_wavenumber(double theta) const;
  //! Argument of the cosine before the pi/4 shift, i.e. j S(theta) or
  //! jbar S0(theta).
  double phase(double theta) const;
  //! |Theta|^2 averaged over one oscillation: amplitude^2 / 2.
  double envelope_density(double theta) const;
  //! Overall factor in front of (sin^2 - q^2)^{-1/4} cos(...).
  double prefactor() const { return prefactor_; }

private:
  friend WkbProfile wkb_leading(HalfInt, HalfInt);
  friend WkbProfile wkb_refined(HalfInt, HalfInt);
  WkbProfile(WkbVariant v, int j, int m);

  double radicand(double theta) const; // sin^2 theta - q^2
  double leading_phase_integral(double theta) const;

  WkbVariant variant_;
  int j_, m_;
  double q_;
  TurningPoints band_;
  double prefactor_ = 1.0;
};

//! Leading-order form from the reduced equation T'' + (j^2 - m^2/sin^2) T = 0:
//! Theta ~ (sin^2 - m^2/j^2)^{-1/4} cos(j S(theta) - pi/4), S integrated
//! numerically from the lower turning point, normalized a posteriori.
//! Needs integer j >= 1 and |m| < j (DegenerateBand at |m| = j).
WkbProfile wkb_leading(HalfInt j, HalfInt m);

//! Closed form with jbar = j + 1/2:
//! Theta ~ (-1)^{j-m} / pi (sin^2 - m^2/jbar^2)^{-1/4} cos(jbar S0 - pi/4), used as given.
WkbProfile wkb_refined(HalfInt j, HalfInt m);

//! int_a^b f(theta) sin(theta) dtheta for a density that may carry
//! inverse-square-root singularities at a and b (tanh-sinh). With such
//! singularities the result is good to about 1e-8: theta cannot resolve the
//! last ulp next to the endpoint.
double sphere_mass(const std::function<double(double)> &density, double a, double b);

//==============================================================================
//! Window-averaged comparison of exact |Y|^2 against a WKB profile.
//! Centres are spread uniformly over the band minus `margin` (fraction of the
//! band width) at each end; each window spans `periods` local periods
//! 2 pi / k(theta) centred on the point, clipped to [0, pi]. Window averages
//! are probability masses (weight sin theta).
struct WindowComparison {
  std::vector<double> theta;
  std::vector<double> exact_mass;
  std::vector<double> wkb_mass;
  std::vector<double> rel_error;
  double max_rel_error = 0.0;
  double theta_at_max = 0.0;
};

WindowComparison compare_window_averages(const ThetaProfile &exact, const WkbProfile &wkb,
                                         double margin, double periods, std::size_t points);

} // namespace angmom
