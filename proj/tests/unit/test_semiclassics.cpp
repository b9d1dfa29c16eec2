#include <angmom/classical_rotor.hpp>
#include <angmom/errors.hpp>
#include <angmom/semiclassics.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace angmom;

namespace {

constexpr double kPi = std::numbers::pi;
HalfInt in(int n) { return HalfInt::integer(n); }

template <class F> int sign_changes(F &&f, double a, double b, int n) {
  int count = 0;
  double prev = f(a + (b - a) * 0.5 / n);
  for (int i = 1; i < n; ++i) {
    const double v = f(a + (b - a) * (i + 0.5) / n);
    if ((v > 0) != (prev > 0))
      ++count;
    prev = v;
  }
  return count;
}

// Sphere mass with theta = lo + w (1 - cos v) / 2, which cancels the
// inverse-sqrt envelope at both turning points; plain midpoint rule in v.
double substituted_mass(const WkbProfile &w) {
  const auto band = w.band();
  const int n = 20000;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = kPi * (i + 0.5) / n;
    const double t = band.lo + 0.5 * band.width() * (1.0 - std::cos(v));
    total += w.density(t) * std::sin(t) * 0.5 * band.width() * std::sin(v);
  }
  return 2.0 * kPi * total * kPi / n;
}

} // namespace

TEST_CASE("turning points") {
  const auto tp = turning_points(in(43), in(27), false);
  CHECK(tp.lo == doctest::Approx(0.680).epsilon(1e-3));
  CHECK(tp.hi == doctest::Approx(kPi - tp.lo).epsilon(1e-15));
  const auto full = turning_points(in(10), in(0), true);
  CHECK(full.lo == 0.0);
  CHECK(full.hi == kPi);
  const auto eq = turning_points(in(7), in(7), false);
  CHECK(eq.lo == doctest::Approx(kPi / 2));
  CHECK(eq.hi == doctest::Approx(kPi / 2));
  const auto narrow = turning_points(in(30), in(29), true);
  CHECK(kPi / 2 - narrow.lo == doctest::Approx(std::acos(29.0 / 30.5)).epsilon(1e-12));
}

TEST_CASE("leading WKB: inputs, normalization, zeros") {
  CHECK_THROWS_AS(wkb_leading(in(5), in(5)), DegenerateBand);
  CHECK_THROWS_AS(wkb_leading(in(0), in(0)), InvalidQuantumNumbers);
  CHECK_THROWS_AS(wkb_leading(HalfInt::from_twice(3), HalfInt::from_twice(1)),
                  HalfIntegerUnsupported);

  const auto w = wkb_leading(in(4), in(2));
  const double mass =
      2.0 * kPi * sphere_mass([&w](double t) { return w.density(t); }, w.band().lo, w.band().hi);
  CHECK(std::abs(mass - 1.0) <= 1e-6);

  const auto w30 = wkb_leading(in(30), in(15));
  const ThetaProfile exact(30, 15);
  const int exact_zeros = sign_changes(exact, 1e-6, kPi - 1e-6, 20000);
  const int wkb_zeros = sign_changes(w30, w30.band().lo, w30.band().hi, 20000);
  CHECK(exact_zeros == 15);
  CHECK(std::abs(wkb_zeros - exact_zeros) <= 1);
  CHECK(w30(0.1) == 0.0);
  CHECK(w30(w30.band().lo) == 0.0);
}

TEST_CASE("refined WKB follows the exact profile") {
  CHECK_NOTHROW(wkb_refined(in(5), in(5)));
  CHECK_THROWS_AS(wkb_refined(in(5), in(6)), InvalidQuantumNumbers);

  // The oscillation-averaged envelope carries exactly unit mass. The full
  // |Theta|^2 exceeds it by a turning-point layer that shrinks slowly with j
  // (about 8% at j = 30, 5% at j = 100); the 1/pi prefactor is kept as is.
  auto mass_of = [](int j, int m) {
    const auto w = wkb_refined(in(j), in(m));
    return 2.0 * kPi *
           sphere_mass([&w](double t) { return w.density(t); }, w.band().lo, w.band().hi);
  };
  const auto w = wkb_refined(in(30), in(15));
  const double envelope = 2.0 * kPi * sphere_mass([&w](double t) { return w.envelope_density(t); },
                                                  w.band().lo, w.band().hi);
  CHECK(std::abs(envelope - 1.0) <= 1e-7);
  const double mass = mass_of(30, 15);
  CHECK(std::abs(substituted_mass(w) - mass) <= 1e-6);
  CHECK(mass == doctest::Approx(1.0781912181).epsilon(1e-8));
  CHECK(mass_of(100, 50) < mass_of(60, 30));
  CHECK(mass_of(60, 30) < mass);

  // same sign and shape in the band interior
  for (int m : {-20, -7, 0, 7, 20}) {
    const auto r = wkb_refined(in(40), in(m));
    const ThetaProfile e(40, m);
    const double mid = 0.5 * (r.band().lo + r.band().hi);
    const double peak = std::abs(e(mid)) + std::abs(r(mid));
    // pick a point near a local extremum so the comparison is not at a zero
    double t = mid, best = 0.0;
    for (int i = -50; i <= 50; ++i) {
      const double s = mid + i * 1e-3;
      if (std::abs(e(s)) > best) {
        best = std::abs(e(s));
        t = s;
      }
    }
    CHECK(peak > 0.0);
    CHECK((e(t) > 0) == (r(t) > 0));
    CHECK(r(t) == doctest::Approx(e(t)).epsilon(0.05));
  }
}

TEST_CASE("refined WKB zero spacing matches exact") {
  for (int j : {20, 40}) {
    const int m = j / 3;
    const auto w = wkb_refined(in(j), in(m));
    const ThetaProfile e(j, m);
    const double a = w.band().lo + 0.15 * w.band().width();
    const double b = w.band().hi - 0.15 * w.band().width();
    const int ze = sign_changes(e, a, b, 20000);
    const int zw = sign_changes(w, a, b, 20000);
    CHECK(ze > 3);
    CHECK(std::abs(zw - ze) <= std::max(1, ze / 10));
  }
}

TEST_CASE("window averages for m = 0, j = 60") {
  const auto w = wkb_refined(in(60), in(0));
  const ThetaProfile e(60, 0);
  const auto cmp = compare_window_averages(e, w, 0.3 / kPi, 1.0, 40);
  CHECK(cmp.max_rel_error <= 0.05);
}

TEST_CASE("envelope equals the classical angle density") {
  for (int m : {0, 9, 25}) {
    const auto w = wkb_refined(in(30), in(m));
    const double q = m / 30.5;
    const double beta = std::asin(std::sqrt(1.0 - q * q));
    const auto cl = angle_density(beta);
    for (int i = 1; i < 50; ++i) {
      const double t = w.band().lo + w.band().width() * i / 50.0;
      const double env = 2.0 * kPi * w.envelope_density(t);
      CHECK(std::abs(env - cl.pdf(std::cos(t))) <= 1e-12 * cl.pdf(std::cos(t)));
    }
  }
}

TEST_CASE("local wavenumber") {
  const auto w = wkb_refined(in(60), in(0));
  CHECK(w.local_wavenumber(kPi / 2) == doctest::Approx(60.5));
  CHECK(w.local_wavenumber(-1.0) == 0.0);
}
