#include "common.hpp"

#include <angmom/classical_rotor.hpp>
#include <angmom/harmonics.hpp>
#include <angmom/quadrature.hpp>
#include <angmom/semiclassics.hpp>

#include <cmath>
#include <functional>
#include <optional>
#include <numbers>

namespace angmom::cli {

namespace {

constexpr double kPi = std::numbers::pi;

const char *variant_name(ThetaVariant v) {
  switch (v) {
  case ThetaVariant::exact:
    return "exact";
  case ThetaVariant::wkb:
    return "wkb";
  case ThetaVariant::wkb_refined:
    return "wkb_refined";
  case ThetaVariant::classical:
    return "classical";
  }
  return "?";
}

} // namespace

CommandResult cmd_theta(const ThetaArgs &a) {
  if (a.grid < 2)
    throw InvalidArgument("grid needs at least 2 points");
  require_jm(a.j, a.m);
  if (!a.j.is_integer())
    throw HalfIntegerUnsupported("theta profiles need integer j");

  std::function<double(double)> f;
  TurningPoints band{0.0, kPi};
  const ThetaProfile exact(a.j, a.m);
  std::optional<WkbProfile> wkb;
  switch (a.variant) {
  case ThetaVariant::exact:
    f = [&exact](double t) { return exact.density(t); };
    break;
  case ThetaVariant::wkb:
    wkb = wkb_leading(a.j, a.m);
    break;
  case ThetaVariant::wkb_refined:
    wkb = wkb_refined(a.j, a.m);
    break;
  case ThetaVariant::classical: {
    band = turning_points(a.j, a.m, true);
    const double q = std::abs(a.m.value()) / (a.j.value() + 0.5);
    const auto d = angle_density(std::asin(std::sqrt(1.0 - q * q)));
    f = [d](double t) { return d.pdf(std::cos(t)) / (2.0 * kPi); };
    break;
  }
  }
  if (wkb) {
    band = wkb->band();
    f = [&wkb](double t) { return wkb->density(t); };
  }

  std::vector<double> theta(a.grid), value(a.grid);
  for (std::size_t i = 0; i < a.grid; ++i) {
    theta[i] = (i + 1 == a.grid) ? kPi : kPi * static_cast<double>(i) / (a.grid - 1);
    value[i] = f(theta[i]);
  }

  CommandResult r;
  auto &t = r.table;
  detail::header_meta(t, "theta");
  t.meta("j", a.j.to_string());
  t.meta("m", a.m.to_string());
  t.meta("variant", std::string(variant_name(a.variant)));
  t.meta("grid", static_cast<std::int64_t>(a.grid));
  t.meta("band_lo", band.lo);
  t.meta("band_hi", band.hi);
  t.add("theta", std::move(theta));
  t.add("value", std::move(value));

  if (a.variant == ThetaVariant::exact) {
    const auto &rule = cached_gauss_legendre(static_cast<std::size_t>(a.j.as_int()) + 2);
    const double norm = 2.0 * kPi * rule.integrate([&exact](double c) {
      const double v = exact.at_cos(c);
      return v * v;
    });
    if (std::abs(norm - 1.0) > 1e-10)
      r.failed_checks.push_back("theta: exact profile not normalized");
  }
  return r;
}

CommandResult cmd_classical_theta(const ClassicalThetaArgs &a) {
  if (a.grid < 2)
    throw InvalidArgument("grid needs at least 2 points");
  const auto d = angle_density(a.beta);

  std::vector<double> c(a.grid), cdf(a.grid);
  std::vector<std::optional<double>> pdf(a.grid);
  for (std::size_t i = 0; i < a.grid; ++i) {
    c[i] = (i + 1 == a.grid) ? 1.0 : -1.0 + 2.0 * static_cast<double>(i) / (a.grid - 1);
    if (!d.is_degenerate())
      pdf[i] = d.pdf(c[i]);
    cdf[i] = d.cdf(c[i]);
  }

  CommandResult r;
  auto &t = r.table;
  detail::header_meta(t, "classical-theta");
  t.meta("beta", a.beta);
  t.meta("grid", static_cast<std::int64_t>(a.grid));
  t.meta("kind", std::string(d.is_degenerate() ? "degenerate" : "continuous"));
  t.meta("support_lo", d.lo());
  t.meta("support_hi", d.hi());
  t.add("cos_theta", std::move(c));
  t.add("pdf", std::move(pdf));
  t.add("cdf", std::move(cdf));

  if (!d.is_degenerate() && d.cdf(d.hi()) - d.cdf(d.lo()) != 1.0)
    r.failed_checks.push_back("classical-theta: cdf endpoints not exact");
  return r;
}

} // namespace angmom::cli
