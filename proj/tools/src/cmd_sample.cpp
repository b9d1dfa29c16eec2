#include "common.hpp"

#include <angmom/classical_rotor.hpp>

#include <algorithm>
#include <cmath>

namespace angmom::cli {

CommandResult cmd_sample(const SampleArgs &a) {
  Histogram mc, analytic;
  CommandResult r;
  auto &t = r.table;
  detail::header_meta(t, "sample");
  if (a.kind == SampleKind::angle) {
    mc = sample_angles(a.beta, a.n, a.seed);
    analytic = bin_masses(angle_density(a.beta), mc.edges);
    t.meta("kind", std::string("angle"));
    t.meta("beta", a.beta);
  } else {
    detail::require_pair(a.pair);
    const auto pair = ClassicalPair::from_projections(a.pair.j1.value(), a.pair.m1.value(),
                                                      a.pair.j2.value(), a.pair.m2.value());
    mc = sample_total_L(pair, a.n, a.seed);
    analytic = bin_masses(addition_density(pair).base, mc.edges);
    t.meta("kind", std::string("total-L"));
    detail::pair_meta(t, a.pair);
  }

  double sup = 0.0;
  for (std::size_t i = 0; i < mc.bins(); ++i)
    sup = std::max(sup, std::abs(mc.masses[i] - analytic.masses[i]));
  const double peak = *std::max_element(analytic.masses.begin(), analytic.masses.end());

  t.meta("n", static_cast<std::int64_t>(a.n));
  t.meta("seed", std::to_string(a.seed));
  t.meta("sup_distance", sup);
  t.meta("binomial_bound", 4.0 * std::sqrt(peak / static_cast<double>(a.n)));
  t.add("bin_lo", std::vector<double>(mc.edges.begin(), mc.edges.end() - 1));
  t.add("bin_hi", std::vector<double>(mc.edges.begin() + 1, mc.edges.end()));
  t.add("mc", mc.masses);
  t.add("analytic", analytic.masses);

  if (std::abs(mc.total() - 1.0) > 1e-12)
    r.failed_checks.push_back("sample: histogram lost samples outside the edges");
  if (std::abs(analytic.total() - 1.0) > 1e-12)
    r.failed_checks.push_back("sample: analytic masses do not sum to 1");
  return r;
}

} // namespace angmom::cli
