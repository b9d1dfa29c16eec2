#include "common.hpp"

#include <angmom/classical_rotor.hpp>
#include <angmom/harmonics.hpp>
#include <angmom/quadrature.hpp>
#include <angmom/semiclassics.hpp>
#include <angmom/wigner.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace angmom::cli {

namespace {

constexpr double kPi = std::numbers::pi;
HalfInt hi(int twice) { return HalfInt::from_twice(twice); }

bool cg_orthogonality() {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int tm1 = -a; tm1 <= a; tm1 += 2)
        for (int tm2 = -b; tm2 <= b; tm2 += 2) {
          const int tM = tm1 + tm2;
          ExactRational sum(0);
          for (int tJ = std::abs(a - b); tJ <= a + b; tJ += 2) {
            if (std::abs(tM) > tJ)
              continue;
            const auto c = clebsch_gordan(hi(a), hi(tm1), hi(b), hi(tm2), hi(tJ), hi(tM));
            const auto s = clebsch_gordan(hi(b), hi(tm2), hi(a), hi(tm1), hi(tJ), hi(tM));
            if (s.square != c.square || s.sign != c.sign * detail::parity((a + b - tJ) / 2))
              return false;
            const auto w = wigner_3j(hi(a), hi(b), hi(tJ), hi(tm1), hi(tm2), hi(-tM));
            if (c.square != ExactRational(std::int64_t{tJ + 1}) * w.square)
              return false;
            sum += c.square;
          }
          if (sum != ExactRational(1))
            return false;
        }
  return true;
}

bool rational_inverse() {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const ExactRational x(BigInt(rng() >> 1) * BigInt(rng() >> 1) + 1, BigInt(rng() >> 1) + 1);
    if (x * (ExactRational(1) / x) != ExactRational(1))
      return false;
  }
  return true;
}

bool quadrature_exactness() {
  const auto rule = gauss_legendre(10);
  for (int k = 0; k <= 19; ++k) {
    const double exact = (k % 2) ? 0.0 : 2.0 / (k + 1);
    if (std::abs(rule.integrate([k](double x) { return std::pow(x, k); }) - exact) > 1e-12)
      return false;
  }
  return true;
}

bool harmonic_normalization_parity() {
  for (int j = 0; j <= 12; ++j)
    for (int m = -j; m <= j; ++m) {
      const ThetaProfile p(j, m);
      const double norm = 2.0 * kPi * cached_gauss_legendre(j + 2).integrate([&p](double c) {
        const double v = p.at_cos(c);
        return v * v;
      });
      if (std::abs(norm - 1.0) > 1e-10)
        return false;
      for (double t : {0.2, 0.9, 1.4})
        if (std::abs(p(kPi - t) - detail::parity(j + m) * p(t)) > 1e-12)
          return false;
    }
  return true;
}

bool gaunt_identity() {
  for (int j1 = 0; j1 <= 4; ++j1)
    for (int j2 = 0; j2 <= 4; ++j2)
      for (int m1 = -j1; m1 <= j1; ++m1)
        for (int m2 = -j2; m2 <= j2; ++m2)
          for (int J = std::max(std::abs(j1 - j2), std::abs(m1 + m2)); J <= j1 + j2; ++J) {
            const double g = gaunt_integral_int(j1, m1, j2, m2, J, m1 + m2);
            const double expect = k_factor(HalfInt::integer(j1), HalfInt::integer(j2),
                                           HalfInt::integer(J))
                                      .value() *
                                  detail::parity(j1 - j2) *
                                  clebsch_gordan_int(j1, m1, j2, m2, J, m1 + m2).value() /
                                  std::sqrt(2.0 * J + 1.0);
            if (std::abs(g - expect) > 1e-12)
              return false;
          }
  return true;
}

bool wkb_checks() {
  const auto w = wkb_leading(HalfInt::integer(4), HalfInt::integer(2));
  const double mass =
      2.0 * kPi * sphere_mass([&w](double t) { return w.density(t); }, w.band().lo, w.band().hi);
  if (std::abs(mass - 1.0) > 1e-6)
    return false;
  const auto r = wkb_refined(HalfInt::integer(30), HalfInt::integer(9));
  const double q = 9.0 / 30.5;
  const auto cl = angle_density(std::asin(std::sqrt(1.0 - q * q)));
  for (int i = 1; i < 20; ++i) {
    const double t = r.band().lo + r.band().width() * i / 20.0;
    const double p = cl.pdf(std::cos(t));
    if (std::abs(2.0 * kPi * r.envelope_density(t) - p) > 1e-12 * p)
      return false;
  }
  return true;
}

bool classical_checks() {
  for (double beta : {0.3, 1.0, 2.0}) {
    const auto d = angle_density(beta);
    if (d.cdf(d.hi()) - d.cdf(d.lo()) != 1.0)
      return false;
    if (std::abs(d.cdf(-0.1) - (1.0 - d.cdf(0.1))) > 1e-14)
      return false;
  }
  if (!angle_density(0.0).is_degenerate())
    return false;

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const ClassicalPair p{0.5 + 4 * u(rng), 0.5 + 4 * u(rng), 0.1 + 2.9 * u(rng),
                          0.1 + 2.9 * u(rng)};
    const auto d = addition_density(p);
    if (d.base.lo() < std::abs(p.L1 - p.L2) - 1e-12 || d.base.hi() > p.L1 + p.L2 + 1e-12)
      return false;
    if (d.base.is_degenerate())
      continue;
    const double L = d.base.lo() + (0.05 + 0.9 * u(rng)) * (d.base.hi() - d.base.lo());
    if (std::abs(d.pdf_projection_form(L) - d.base.pdf(L)) > 1e-9 * d.base.pdf(L))
      return false;
  }
  const auto aligned = addition_density({2.0, 3.0, 0.0, 0.0});
  return aligned.base.is_degenerate() && aligned.base.point() == 5.0;
}

bool sampler_determinism() {
  const auto a = sample_angles(1.0, 5000, 77);
  const auto b = sample_angles(1.0, 5000, 77);
  const ClassicalPair p{2.0, 3.0, 1.0, 2.0};
  return a.masses == b.masses &&
         sample_total_L(p, 5000, 5).masses == sample_total_L(p, 5000, 5).masses;
}

} // namespace

std::vector<std::string> self_check() {
  const std::vector<std::pair<std::string, std::function<bool()>>> suites{
      {"core_types: rational inverse", rational_inverse},
      {"wigner_exact: orthogonality, exchange symmetry, 3j relation", cg_orthogonality},
      {"harmonics: quadrature exactness", quadrature_exactness},
      {"harmonics: normalization and parity", harmonic_normalization_parity},
      {"harmonics: Gaunt identity", gaunt_identity},
      {"semiclassics: normalization and envelope", wkb_checks},
      {"classical: densities", classical_checks},
      {"classical: sampler determinism", sampler_determinism},
  };
  std::vector<std::string> failed;
  for (const auto &[name, fn] : suites) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception &) {
      ok = false;
    }
    if (!ok)
      failed.push_back(name);
  }
  return failed;
}

} // namespace angmom::cli
