#include "common.hpp"

#include <angmom/wigner.hpp>

#include <algorithm>
#include <cmath>

namespace angmom::cli {

std::pair<double, double> distances(const std::vector<double> &a, const std::vector<double> &b) {
  double sup = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    sup = std::max(sup, d);
    l1 += d;
  }
  return {sup, l1};
}

ComparisonReport compare_addition(const CompareArgs &a) {
  detail::require_pair(a.pair);
  if (!(a.dL > 0.0))
    throw InvalidArgument("dL must be positive");
  const auto pair = ClassicalPair::from_projections(a.pair.j1.value(), a.pair.m1.value(),
                                                    a.pair.j2.value(), a.pair.m2.value());
  const auto density = addition_density(pair);

  const HalfInt M = a.pair.M();
  const HalfInt Jmin =
      HalfInt::from_twice(std::max(std::abs(a.pair.j1.twice - a.pair.j2.twice), std::abs(M.twice)));
  const HalfInt Jmax = a.pair.j1 + a.pair.j2;
  const double offset = a.mapping == BinMapping::L_equals_J_plus_half ? 0.5 : 0.0;

  // Align one edge half a unit below the first quantum point and step out by
  // whole bins until both the quantum points and the classical support fit.
  double first = Jmin.value() + offset - 0.5;
  if (first > density.base.lo())
    first -= std::ceil((first - density.base.lo()) / a.dL) * a.dL;
  const double last = std::max(Jmax.value() + offset + 0.5, density.base.hi());
  const auto nbins =
      static_cast<std::size_t>(std::max(1.0, std::ceil((last - first) / a.dL - 1e-9)));

  ComparisonReport r;
  r.dL = a.dL;
  r.mapping = a.mapping;
  r.edges.resize(nbins + 1);
  for (std::size_t i = 0; i <= nbins; ++i)
    r.edges[i] = first + static_cast<double>(i) * a.dL;

  Histogram bins{r.edges, std::vector<double>(nbins, 0.0)};
  r.quantum_exact.assign(nbins, ExactRational(0));
  for (HalfInt J = Jmin; J <= Jmax; J = J + HalfInt::integer(1)) {
    const auto c = clebsch_gordan(a.pair.j1, a.pair.m1, a.pair.j2, a.pair.m2, J, M);
    const auto b = bins.bin_of(J.value() + offset);
    if (b < nbins)
      r.quantum_exact[b] += c.square;
  }
  for (const auto &q : r.quantum_exact)
    r.quantum.push_back(q.to_double());

  r.classical = bin_masses(density.base, r.edges).masses;
  if (a.mc > 0)
    r.mc = sample_total_L(pair, a.mc, a.seed, r.edges).masses;

  std::tie(r.sup_distance, r.l1_distance) = distances(r.quantum, r.classical);
  r.peak_quantum = *std::max_element(r.quantum.begin(), r.quantum.end());
  return r;
}

CommandResult cmd_compare_add(const CompareArgs &a) {
  const auto rep = compare_addition(a);
  CommandResult r;

  ExactRational qtotal(0);
  for (const auto &q : rep.quantum_exact)
    qtotal += q;
  double ctotal = 0.0;
  for (double c : rep.classical)
    ctotal += c;

  auto &t = r.table;
  detail::header_meta(t, "compare-add");
  detail::pair_meta(t, a.pair);
  t.meta("dL", a.dL);
  t.meta("mapping",
         std::string(a.mapping == BinMapping::L_equals_J_plus_half ? "J+1/2" : "J"));
  t.meta("seed", std::to_string(a.seed));
  t.meta("mc_samples", static_cast<std::int64_t>(a.mc));
  t.meta("sup_distance", rep.sup_distance);
  t.meta("l1_distance", rep.l1_distance);
  t.meta("peak_quantum", rep.peak_quantum);
  t.meta("quantum_total", qtotal.to_string());
  t.meta("classical_total", ctotal);

  std::vector<double> lo(rep.edges.begin(), rep.edges.end() - 1);
  std::vector<double> hi(rep.edges.begin() + 1, rep.edges.end());
  std::vector<std::string> exact;
  for (const auto &q : rep.quantum_exact)
    exact.push_back(q.to_string());
  t.add("bin_lo", std::move(lo));
  t.add("bin_hi", std::move(hi));
  t.add("quantum", rep.quantum);
  t.add("quantum_exact", std::move(exact));
  t.add("classical", rep.classical);
  if (rep.mc)
    t.add("mc", *rep.mc);

  if (qtotal != ExactRational(1))
    r.failed_checks.push_back("compare-add: quantum column does not sum to 1");
  if (std::abs(ctotal - 1.0) > 1e-12)
    r.failed_checks.push_back("compare-add: classical column does not sum to 1");
  const auto [sup, l1] = distances(rep.quantum, rep.classical);
  if (sup != rep.sup_distance || l1 != rep.l1_distance)
    r.failed_checks.push_back("compare-add: stored metrics differ from columns");
  if (rep.mc) {
    double mtotal = 0.0;
    for (double m : *rep.mc)
      mtotal += m;
    if (std::abs(mtotal - 1.0) > 1e-12)
      r.failed_checks.push_back("compare-add: Monte Carlo column does not sum to 1");
  }
  return r;
}

} // namespace angmom::cli
