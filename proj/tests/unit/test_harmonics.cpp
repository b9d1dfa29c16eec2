#include <angmom/harmonics.hpp>
#include <angmom/quadrature.hpp>
#include <angmom/wigner.hpp>
#include <angmom/errors.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace angmom;

namespace {

constexpr double kPi = std::numbers::pi;
HalfInt in(int n) { return HalfInt::integer(n); }

double norm(const ThetaProfile &p) {
  const auto &rule = cached_gauss_legendre(static_cast<std::size_t>(p.j()) + 2);
  return 2.0 * kPi * rule.integrate([&p](double c) {
    const double v = p.at_cos(c);
    return v * v;
  });
}

// Closed forms for low l.
double y10(double t) { return std::sqrt(3.0 / (4.0 * kPi)) * std::cos(t); }
double y11(double t) { return -std::sqrt(3.0 / (8.0 * kPi)) * std::sin(t); }
double y20(double t) {
  return std::sqrt(5.0 / (16.0 * kPi)) * (3.0 * std::cos(t) * std::cos(t) - 1.0);
}
double y22(double t) { return std::sqrt(15.0 / (32.0 * kPi)) * std::sin(t) * std::sin(t); }

} // namespace

TEST_CASE("quadrature exactness on monomials") {
  for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
    const auto rule = gauss_legendre(n);
    for (std::size_t k = 0; k <= 2 * n - 1; ++k) {
      const double exact = (k % 2 == 1) ? 0.0 : 2.0 / static_cast<double>(k + 1);
      const double got = rule.integrate([k](double x) { return std::pow(x, static_cast<double>(k)); });
      CHECK(std::abs(got - exact) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), InvalidArgument);
  const auto &a = cached_gauss_legendre(12);
  const auto &b = cached_gauss_legendre(12);
  CHECK(&a == &b);
}

TEST_CASE("theta profile closed forms and signs") {
  const ThetaProfile p00(0, 0);
  for (double t : {0.0, 0.4, 1.7, kPi})
    CHECK(p00(t) == doctest::Approx(1.0 / std::sqrt(4.0 * kPi)).epsilon(1e-15));

  for (double t : {0.1, 0.9, 2.0, 3.0}) {
    CHECK(ThetaProfile(1, 0)(t) == doctest::Approx(y10(t)).epsilon(1e-14));
    CHECK(ThetaProfile(1, 1)(t) == doctest::Approx(y11(t)).epsilon(1e-14));
    CHECK(ThetaProfile(1, -1)(t) == doctest::Approx(-y11(t)).epsilon(1e-14));
    CHECK(ThetaProfile(2, 0)(t) == doctest::Approx(y20(t)).epsilon(1e-13));
    CHECK(ThetaProfile(2, 2)(t) == doctest::Approx(y22(t)).epsilon(1e-14));
    CHECK(ThetaProfile(2, -2)(t) == doctest::Approx(y22(t)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(ThetaProfile(HalfInt::from_twice(3), HalfInt::from_twice(1)),
                  HalfIntegerUnsupported);
  CHECK_THROWS_AS(ThetaProfile(2, 3), InvalidQuantumNumbers);
}

TEST_CASE("stretched profile peaks on the equator") {
  const ThetaProfile p(20, 20);
  double best = 0.0, at = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double t = kPi * i / 1000.0;
    if (p.density(t) > best) {
      best = p.density(t);
      at = t;
    }
    // |Y_jj|^2 is proportional to sin^2j
    if (i > 0 && i < 1000)
      CHECK(p.density(t) / std::pow(std::sin(t), 40) ==
            doctest::Approx(p.density(kPi / 2)).epsilon(1e-10));
  }
  CHECK(at == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("normalization and parity") {
  for (int j = 0; j <= 60; j += 3)
    for (int m = -j; m <= j; m += std::max(1, j / 4)) {
      const ThetaProfile p(j, m);
      CHECK(std::abs(norm(p) - 1.0) <= 1e-10);
      const int parity = ((j + m) % 2 == 0) ? 1 : -1;
      for (double t : {0.05, 0.6, 1.2, 1.5}) {
        const double scale = std::max(1.0, std::abs(p(t)));
        CHECK(std::abs(p(kPi - t) - parity * p(t)) <= 1e-12 * scale);
      }
    }
  const ThetaProfile big(150, 70);
  CHECK(std::abs(norm(big) - 1.0) <= 1e-10);
}

TEST_CASE("gaunt integral") {
  CHECK(gaunt_integral_int(0, 0, 0, 0, 0, 0) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * kPi)).epsilon(1e-14));
  CHECK(gaunt_integral_int(3, 1, 2, 1, 4, 1) == 0.0);
  CHECK(gaunt_integral_int(31, 13, 31, 14, 56, 26) == 0.0);
  CHECK_THROWS_AS(gaunt_integral_int(1, 2, 1, 0, 2, 2), InvalidQuantumNumbers);

  // gaunt = K (-1)^(j1-j2) CG / sqrt(2J+1)
  for (int j1 = 0; j1 <= 6; ++j1)
    for (int j2 = 0; j2 <= 6; ++j2)
      for (int m1 = -j1; m1 <= j1; ++m1)
        for (int m2 = -j2; m2 <= j2; ++m2)
          for (int J = std::abs(j1 - j2); J <= j1 + j2; ++J) {
            const int M = m1 + m2;
            if (std::abs(M) > J)
              continue;
            const double g = gaunt_integral_int(j1, m1, j2, m2, J, M);
            const double k = k_factor(in(j1), in(j2), in(J)).value();
            const double cg = clebsch_gordan_int(j1, m1, j2, m2, J, M).value();
            const double phase = ((j1 - j2) % 2 == 0) ? 1.0 : -1.0;
            CHECK(std::abs(g - k * phase * cg / std::sqrt(2.0 * J + 1.0)) <= 1e-12);
          }

  for (int J : {36, 43, 56}) {
    const double g = gaunt_integral_int(31, 13, 31, 14, J, 27);
    const double k = k_factor(in(31), in(31), in(J)).value();
    const double cg = clebsch_gordan_int(31, 13, 31, 14, J, 27).value();
    CHECK(std::abs(g - k * cg / std::sqrt(2.0 * J + 1.0)) <= 1e-12);
  }
}

TEST_CASE("angular density") {
  const auto flat = angular_density(in(0), in(0));
  CHECK(flat.lo() == -1.0);
  CHECK(flat.hi() == 1.0);
  CHECK(flat.pdf(0.3) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(flat.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(flat.cdf(1.0) == 1.0);

  const auto d2 = angular_density(in(2), in(0));
  CHECK(std::abs(d2.pdf(1.0 / std::sqrt(3.0))) <= 1e-15);
  CHECK(std::abs(d2.pdf(-1.0 / std::sqrt(3.0))) <= 1e-15);

  const auto d = angular_density(in(30), in(15));
  const double edge = std::sqrt(1.0 - 15.0 * 15.0 / (30.5 * 30.5));
  double best = 0.0, at = 0.0;
  for (int i = 0; i <= 20000; ++i) {
    const double c = -1.0 + 2.0 * i / 20000.0;
    if (d.pdf(c) > best) {
      best = d.pdf(c);
      at = c;
    }
  }
  CHECK(std::abs(std::abs(at) - edge) < 0.05);

  // the tabulated cdf reaches 1 and differentiates back to the pdf
  CHECK(std::abs(d.cdf(std::nextafter(1.0, 0.0)) - 1.0) <= 1e-10);
  for (double c : {-0.7, -0.2, 0.1, 0.55}) {
    const double h = 1e-5;
    const double fd = (d.cdf(c + h) - d.cdf(c - h)) / (2.0 * h);
    CHECK(fd == doctest::Approx(d.pdf(c)).epsilon(1e-6));
  }
  const auto hist = bin_masses(d, uniform_edges(-1.0, 1.0, 37));
  CHECK(std::abs(hist.total() - 1.0) <= 1e-10);
}
