#pragma once

#include "angmom/density.hpp"
#include "angmom/half_int.hpp"

namespace angmom {

//==============================================================================
//! Polar part of a spherical harmonic, Y_{j,m}(theta, phi) = Theta(theta) e^{i m phi},
//! normalized so that 2 pi * int |Theta|^2 sin(theta) dtheta = 1, with the
//! Condon-Shortley phase (-1)^m for m > 0.
//!
//! Evaluated by the upward three-term recurrence in l on normalized
//! associated Legendre functions, starting from the diagonal l = |m|; this
//! stays in range for j in the hundreds.
class ThetaProfile {
public:
  //! Throws InvalidQuantumNumbers / HalfIntegerUnsupported.
  ThetaProfile(HalfInt j, HalfInt m);
  ThetaProfile(int j, int m) : ThetaProfile(HalfInt::integer(j), HalfInt::integer(m)) {}

  int j() const { return j_; }
  int m() const { return m_; }

  double operator()(double theta) const;
  //! Theta at cos(theta) = c, sin(theta) = s (s >= 0).
  double at(double c, double s) const;
  //! Same as at() with s = sqrt(1 - c^2).
  double at_cos(double c) const;
  //! |Y_{j,m}|^2, independent of phi.
  double density(double theta) const {
    const double v = (*this)(theta);
    return v * v;
  }

private:
  int j_, m_;
};

inline ThetaProfile theta_profile(HalfInt j, HalfInt m) { return ThetaProfile(j, m); }

//! int Y_{j1,m1} Y_{j2,m2} conj(Y_{J,M}) dOmega by Gauss-Legendre in cos(theta),
//! with enough nodes that the polynomial integrand is integrated exactly.
//! Returns exactly 0 when m1 + m2 != M, when j1 + j2 + J is odd or when the
//! triangle rule fails.
double gaunt_integral(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);
double gaunt_integral_int(int j1, int m1, int j2, int m2, int J, int M);

//! Distribution of cos(theta) for a particle in |j m>: pdf(c) = 2 pi |Theta|^2.
//! The cdf is assembled from per-interval Gauss-Legendre sums on a grid with
//! about 20 points per oscillation, each sum exact for the degree-2j pdf.
Density1D angular_density(HalfInt j, HalfInt m);

} // namespace angmom
