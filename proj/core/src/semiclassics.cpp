#include "angmom/errors.hpp"
#include "angmom/quadrature.hpp"
#include "angmom/semiclassics.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace angmom {

namespace {

constexpr double kPi = std::numbers::pi;

// One instance per thread: integrate() is not a const member in older Boost.
boost::math::quadrature::tanh_sinh<double> &integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts;
}

// Separate instance for the phase integral, which runs inside integrands
// handled by integrator().
boost::math::quadrature::tanh_sinh<double> &phase_integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

void require_wkb_inputs(HalfInt j, HalfInt m) {
  require_jm(j, m);
  if (!j.is_integer())
    throw HalfIntegerUnsupported("WKB profiles need integer j, got " + j.to_string());
  if (j.twice < 2)
    throw InvalidQuantumNumbers("WKB profiles need j >= 1");
}

} // namespace

TurningPoints turning_points(HalfInt j, HalfInt m, bool use_jbar) {
  const double denom = use_jbar ? j.value() + 0.5 : j.value();
  double q = denom > 0.0 ? std::abs(m.value()) / denom : 0.0;
  q = std::clamp(q, 0.0, 1.0);
  const double lo = std::asin(q);
  return {lo, kPi - lo};
}

WkbProfile::WkbProfile(WkbVariant v, int j, int m) : variant_(v), j_(j), m_(m) {
  const double scale = v == WkbVariant::leading ? static_cast<double>(j) : j + 0.5;
  q_ = std::abs(m) / scale;
  band_ = turning_points(HalfInt::integer(j), HalfInt::integer(m), v == WkbVariant::refined);
}

// sin^2 theta - sin^2 lo, factored to stay accurate next to the turning points
double WkbProfile::radicand(double theta) const {
  return std::sin(theta - band_.lo) * std::sin(theta + band_.lo);
}

double WkbProfile::local_wavenumber(double theta) const {
  const double r = radicand(theta);
  if (!(r > 0.0) || !band_.contains(theta))
    return 0.0;
  const double scale = variant_ == WkbVariant::leading ? static_cast<double>(j_) : jbar();
  return scale * std::sqrt(r) / std::abs(std::sin(theta));
}

double WkbProfile::leading_phase_integral(double theta) const {
  if (theta <= band_.lo)
    return 0.0;
  const double upper = std::min(theta, band_.hi);
  if (q_ == 0.0)
    return upper - band_.lo;
  const double q2 = q_ * q_;
  auto f = [q2](double t) {
    const double s = std::sin(t);
    return std::sqrt(std::max(0.0, 1.0 - q2 / (s * s)));
  };
  return phase_integrator().integrate(f, band_.lo, upper, 1e-13);
}

double WkbProfile::phase(double theta) const {
  if (variant_ == WkbVariant::leading)
    return j_ * leading_phase_integral(theta);
  // Signed q here: the closed form carries the sign of m.
  const double qs = m_ / jbar();
  const double c = std::sqrt(1.0 - qs * qs);
  const double s0 = qs * std::acos(clamp_unit(qs * std::cos(theta) / std::sin(theta) / c)) +
                    std::acos(clamp_unit(-std::cos(theta) / c));
  return jbar() * s0;
}

double WkbProfile::operator()(double theta) const {
  const double r = radicand(theta);
  if (!(r > 0.0) || !band_.contains(theta))
    return 0.0;
  return prefactor_ * std::pow(r, -0.25) * std::cos(phase(theta) - kPi / 4.0);
}

double WkbProfile::envelope_density(double theta) const {
  const double r = radicand(theta);
  if (!(r > 0.0) || !band_.contains(theta))
    return 0.0;
  return 0.5 * prefactor_ * prefactor_ / std::sqrt(r);
}

WkbProfile wkb_leading(HalfInt j, HalfInt m) {
  require_wkb_inputs(j, m);
  if (std::abs(m.twice) == j.twice)
    throw DegenerateBand("leading WKB form has no allowed band for |m| = j");
  WkbProfile p(WkbVariant::leading, j.as_int(), m.as_int());
  // The leading form fixes neither sign nor normalization.
  const double raw = 2.0 * kPi * sphere_mass([&p](double t) { return p.density(t); },
                                             p.band().lo, p.band().hi);
  p.prefactor_ = 1.0 / std::sqrt(raw);
  return p;
}

WkbProfile wkb_refined(HalfInt j, HalfInt m) {
  require_wkb_inputs(j, m);
  WkbProfile p(WkbVariant::refined, j.as_int(), m.as_int());
  const int sign = ((j.as_int() - m.as_int()) % 2 == 0) ? 1 : -1;
  p.prefactor_ = sign / kPi;
  return p;
}

double sphere_mass(const std::function<double(double)> &density, double a, double b) {
  if (!(a < b))
    return 0.0;
  auto f = [&density](double t) { return density(t) * std::sin(t); };
  // Split into pieces no longer than ~0.25 rad so oscillatory integrands
  // converge quickly; tanh-sinh absorbs endpoint singularities.
  const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / 0.25)));
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + (b - a) * i / pieces;
    const double hi = (i + 1 == pieces) ? b : a + (b - a) * (i + 1) / pieces;
    total += integrator().integrate(f, lo, hi, 1e-12);
  }
  return total;
}

WindowComparison compare_window_averages(const ThetaProfile &exact, const WkbProfile &wkb,
                                         double margin, double periods, std::size_t points) {
  if (points < 1 || !(margin >= 0.0 && margin < 0.5) || !(periods > 0.0))
    throw InvalidArgument("compare_window_averages: bad margin/periods/points");
  const auto &band = wkb.band();
  const double first = band.lo + margin * band.width();
  const double last = band.hi - margin * band.width();

  WindowComparison out;
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.5 * (first + last)
                                 : first + (last - first) * static_cast<double>(i) /
                                               static_cast<double>(points - 1);
    const double k = wkb.local_wavenumber(t);
    if (!(k > 0.0))
      continue;
    const double half = 0.5 * periods * 2.0 * kPi / k;
    const double a = std::max(0.0, t - half);
    const double b = std::min(kPi, t + half);

    const double e = sphere_mass([&exact](double x) { return exact.density(x); }, a, b);
    const double w = sphere_mass([&wkb](double x) { return wkb.density(x); },
                                 std::max(a, band.lo), std::min(b, band.hi));
    const double rel = std::abs(e / w - 1.0);
    out.theta.push_back(t);
    out.exact_mass.push_back(e);
    out.wkb_mass.push_back(w);
    out.rel_error.push_back(rel);
    if (rel > out.max_rel_error) {
      out.max_rel_error = rel;
      out.theta_at_max = t;
    }
  }
  return out;
}

} // namespace angmom
