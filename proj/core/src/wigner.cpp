#include "angmom/errors.hpp"
#include "angmom/wigner.hpp"
#include "factorial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace angmom {

using detail::factorial;
using detail::falling_ratio;

SignedSqrtRational SignedSqrtRational::make(int sign, ExactRational square) {
  if (square.sign() < 0)
    throw std::domain_error("SignedSqrtRational: negative square");
  if (square.is_zero() || sign == 0)
    return zero();
  return {sign > 0 ? 1 : -1, std::move(square)};
}

double SignedSqrtRational::value() const {
  if (sign == 0)
    return 0.0;
  return sign * square.sqrt_to_double();
}

double KFactor::value() const {
  return times_sqrt_4pi.value() / std::sqrt(4.0 * std::numbers::pi);
}

bool triangle(HalfInt j1, HalfInt j2, HalfInt J) {
  if (j1.twice < 0 || j2.twice < 0 || J.twice < 0)
    return false;
  if ((j1.twice + j2.twice + J.twice) % 2 != 0)
    return false;
  return J.twice <= j1.twice + j2.twice && J.twice >= std::abs(j1.twice - j2.twice);
}

namespace {

// All arguments are plain integers here; the caller has already checked the
// selection rules so every factorial argument below is a nonnegative integer.
SignedSqrtRational racah(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  const int a = (tj1 + tj2 - tJ) / 2;
  const int b = (tj1 - tm1) / 2;
  const int c = (tj2 + tm2) / 2;
  const int d = (tJ - tj2 + tm1) / 2;
  const int e = (tJ - tj1 - tm2) / 2;

  const int kmin = std::max({0, -d, -e});
  const int kmax = std::min({a, b, c});
  if (kmin > kmax)
    return SignedSqrtRational::zero();

  // Sum_k (-1)^k / [k! (a-k)! (b-k)! (c-k)! (d+k)! (e+k)!] over the common
  // denominator N = kmax! (a-kmin)! (b-kmin)! (c-kmin)! (d+kmax)! (e+kmax)!.
  // T_k = N / denom_k is an integer and follows a ratio recurrence.
  BigInt term = falling_ratio(kmax, kmin) * falling_ratio(d + kmax, d + kmin) *
                falling_ratio(e + kmax, e + kmin);
  BigInt sum = (kmin % 2 == 0) ? term : BigInt(-term);
  for (int k = kmin; k < kmax; ++k) {
    term *= static_cast<unsigned long>(a - k);
    term *= static_cast<unsigned long>(b - k);
    term *= static_cast<unsigned long>(c - k);
    // exact: T_{k+1} is an integer
    term /= static_cast<unsigned long>(k + 1);
    term /= static_cast<unsigned long>(d + k + 1);
    term /= static_cast<unsigned long>(e + k + 1);
    if ((k + 1) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum == 0)
    return SignedSqrtRational::zero();

  const BigInt common = factorial(kmax) * factorial(a - kmin) * factorial(b - kmin) *
                        factorial(c - kmin) * factorial(d + kmax) * factorial(e + kmax);

  BigInt pre_num = BigInt(tJ + 1) * factorial((tJ + tj1 - tj2) / 2) *
                   factorial((tJ - tj1 + tj2) / 2) * factorial(a) * factorial((tJ + tM) / 2) *
                   factorial((tJ - tM) / 2) * factorial((tj1 - tm1) / 2) *
                   factorial((tj1 + tm1) / 2) * factorial((tj2 - tm2) / 2) *
                   factorial((tj2 + tm2) / 2);
  const BigInt &pre_den = factorial((tj1 + tj2 + tJ) / 2 + 1);

  const int sign = sum > 0 ? 1 : -1;
  return SignedSqrtRational::make(
      sign, ExactRational(pre_num * sum * sum, pre_den * common * common));
}

} // namespace

SignedSqrtRational clebsch_gordan(const CoupledPair &p) {
  p.validate();
  if (!p.satisfies_selection_rules())
    return SignedSqrtRational::zero();
  return racah(p.j1.twice, p.m1.twice, p.j2.twice, p.m2.twice, p.J.twice, p.M.twice);
}

SignedSqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J,
                                  HalfInt M) {
  return clebsch_gordan(CoupledPair{j1, m1, j2, m2, J, M});
}

SignedSqrtRational clebsch_gordan_int(int j1, int m1, int j2, int m2, int J, int M) {
  return clebsch_gordan(HalfInt::integer(j1), HalfInt::integer(m1), HalfInt::integer(j2),
                        HalfInt::integer(m2), HalfInt::integer(J), HalfInt::integer(M));
}

SignedSqrtRational wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                             HalfInt m3) {
  require_jm(j1, m1, "(j1,m1)");
  require_jm(j2, m2, "(j2,m2)");
  require_jm(j3, m3, "(j3,m3)");
  if ((m1 + m2 + m3).twice != 0 || !triangle(j1, j2, j3))
    return SignedSqrtRational::zero();
  auto cg = clebsch_gordan(j1, m1, j2, m2, j3, -m3);
  if (cg.is_zero())
    return cg;
  const int phase = parity_sign(j1 - j2 - m3);
  return SignedSqrtRational::make(cg.sign * phase,
                                  cg.square / ExactRational(std::int64_t{j3.twice + 1}));
}

KFactor k_factor(HalfInt j1, HalfInt j2, HalfInt J) {
  for (const auto j : {j1, j2, J}) {
    if (j.twice < 0 || !j.is_integer())
      throw InvalidQuantumNumbers("k_factor needs nonnegative integer j, got " + j.to_string());
  }
  const HalfInt zero{};
  const auto three_j = wigner_3j(j1, j2, J, zero, zero, zero);
  if (three_j.is_zero())
    return {};
  const ExactRational degeneracy =
      ExactRational(std::int64_t{j1.twice + 1}) * ExactRational(std::int64_t{j2.twice + 1}) *
      ExactRational(std::int64_t{J.twice + 1});
  return {SignedSqrtRational::make(three_j.sign, degeneracy * three_j.square)};
}

ExactRational dispersion_xy(HalfInt j, HalfInt m) {
  require_jm(j, m);
  const std::int64_t tj = j.twice;
  const std::int64_t tm = m.twice;
  return ExactRational(BigInt(tj * (tj + 2) - tm * tm), BigInt(8));
}

} // namespace angmom
