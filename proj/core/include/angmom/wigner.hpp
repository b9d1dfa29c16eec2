#pragma once

#include "angmom/coupled_pair.hpp"
#include "angmom/exact_rational.hpp"
#include "angmom/half_int.hpp"

namespace angmom {

//==============================================================================
//! A real number of the form sign * sqrt(square) with `square` rational:
//! the exact carrier for Clebsch-Gordan coefficients and 3j symbols.
struct SignedSqrtRational {
  int sign = 0;         //!< -1, 0 or +1; zero iff square is zero
  ExactRational square; //!< the coefficient squared, >= 0

  static SignedSqrtRational zero() { return {}; }
  static SignedSqrtRational make(int sign, ExactRational square);

  bool is_zero() const { return sign == 0; }
  //! sign * sqrt(square), correctly rounded.
  double value() const;

  friend bool operator==(const SignedSqrtRational &, const SignedSqrtRational &) = default;
};

//! The prefactor linking the Gaunt integral to a single CG coefficient,
//! sqrt((2j1+1)(2j2+1)(2J+1)/(4 pi)) * (j1 j2 J; 0 0 0).
//! The 1/(4 pi) is kept out of the exact part: `times_sqrt_4pi` holds
//! K * sqrt(4 pi) exactly.
struct KFactor {
  SignedSqrtRational times_sqrt_4pi;

  bool is_zero() const { return times_sqrt_4pi.is_zero(); }
  int sign() const { return times_sqrt_4pi.sign; }
  double value() const;
};

//! <j1 m1; j2 m2 | J M> in the Condon-Shortley convention (all real,
//! <j1 j1; j2 J-j1 | J J> > 0), from the Racah single sum.
//! Throws InvalidQuantumNumbers when an individual (j,m) pair is invalid;
//! returns an exact zero when selection rules fail.
SignedSqrtRational clebsch_gordan(const CoupledPair &p);
SignedSqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                                  HalfInt M);
//! Integer-argument convenience overload.
SignedSqrtRational clebsch_gordan_int(int j1, int m1, int j2, int m2, int J, int M);

//! Wigner 3j symbol (j1 j2 j3; m1 m2 m3), related to CG by
//! (j1 j2 j3; m1 m2 m3) = (-1)^(j1-j2-m3) / sqrt(2 j3 + 1) <j1 m1; j2 m2 | j3 -m3>.
SignedSqrtRational wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                             HalfInt m3);

//! Integer j's only; exactly zero when j1+j2+J is odd or the triangle fails.
KFactor k_factor(HalfInt j1, HalfInt j2, HalfInt J);

//! Variance of Jx (equal to that of Jy) in |j m>, in units of hbar^2:
//! (j(j+1) - m^2) / 2.
ExactRational dispersion_xy(HalfInt j, HalfInt m);

//! Triangle rule |j1-j2| <= J <= j1+j2 with j1+j2+J integer.
bool triangle(HalfInt j1, HalfInt j2, HalfInt J);

} // namespace angmom
