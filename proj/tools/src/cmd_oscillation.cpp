#include "common.hpp"

#include <angmom/harmonics.hpp>
#include <angmom/semiclassics.hpp>
#include <angmom/wigner.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace angmom::cli {

double semiclassical_gaunt(int j1, int m1, int j2, int m2, int J, int M) {
  if (m1 + m2 != M)
    return 0.0;
  const auto w1 = wkb_refined(HalfInt::integer(j1), HalfInt::integer(m1));
  const auto w2 = wkb_refined(HalfInt::integer(j2), HalfInt::integer(m2));
  const auto w3 = wkb_refined(HalfInt::integer(J), HalfInt::integer(M));
  const double lo = std::max({w1.band().lo, w2.band().lo, w3.band().lo});
  const double hi = std::min({w1.band().hi, w2.band().hi, w3.band().hi});
  return 2.0 * std::numbers::pi *
         sphere_mass([&](double t) { return w1(t) * w2(t) * w3(t); }, lo, hi);
}

void flag_oscillations(std::vector<OscillationRow> &rows) {
  const std::size_t n = rows.size();
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int ks = rows[i].k > 0 ? 1 : (rows[i].k < 0 ? -1 : 0);
    const int cs = rows[i].cb > 0 ? 1 : (rows[i].cb < 0 ? -1 : 0);
    s[i] = ks * cs;
  }
  auto alternates = [&](std::size_t i) {
    if (s[i] == 0)
      return false;
    return (i >= 2 && s[i - 2] != 0 && s[i - 2] != s[i]) ||
           (i + 2 < n && s[i + 2] != 0 && s[i + 2] != s[i]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].k != 0.0)
      rows[i].oscillatory = alternates(i);
    else
      rows[i].oscillatory = (i >= 1 && alternates(i - 1)) || (i + 1 < n && alternates(i + 1));
  }
}

std::vector<OscillationRow> oscillation_rows(const PairArgs &p, bool semiclassical) {
  detail::require_integer_pair(p);
  const int j1 = p.j1.as_int(), m1 = p.m1.as_int();
  const int j2 = p.j2.as_int(), m2 = p.m2.as_int();
  const int M = m1 + m2;
  const int Jmin = std::max(std::abs(j1 - j2), std::abs(M));

  std::optional<AdditionDensity> density;
  if (j1 > 0 && j2 > 0)
    density = addition_density(ClassicalPair::from_projections(j1, m1, j2, m2));

  std::vector<OscillationRow> rows;
  for (int J = Jmin; J <= j1 + j2; ++J) {
    OscillationRow r;
    r.J = HalfInt::integer(J);
    const auto c = clebsch_gordan_int(j1, m1, j2, m2, J, M);
    r.cb = c.value();
    r.cb_square = c.square;
    const auto k = k_factor(p.j1, p.j2, r.J);
    r.k = k.value();
    r.gaunt = gaunt_integral_int(j1, m1, j2, m2, J, M);
    if (!k.is_zero()) {
      // gaunt = K (-1)^(j1-j2) CB / sqrt(2J+1)
      const double scale = detail::parity(j1 - j2) * std::sqrt(2.0 * J + 1.0) / r.k;
      r.cb_from_gaunt = r.gaunt * scale;
      if (semiclassical && j1 > 0 && j2 > 0 && J > 0)
        r.cb_semiclassical = semiclassical_gaunt(j1, m1, j2, m2, J, M) * scale;
    }
    if (density)
      r.classical = classical_cg_square(*density, r.J, 1.0);
    else
      r.classical = (J == j1 + j2) ? 1.0 : 0.0;
    rows.push_back(std::move(r));
  }
  flag_oscillations(rows);
  return rows;
}

CommandResult cmd_oscillation(const PairArgs &p) {
  const auto rows = oscillation_rows(p);
  CommandResult r;
  auto &t = r.table;
  detail::header_meta(t, "oscillation");
  detail::pair_meta(t, p);

  std::vector<double> J, cb, k, gaunt, classical;
  std::vector<std::string> sq;
  std::vector<std::optional<double>> from_gaunt, semi;
  std::vector<std::int64_t> flag;
  double worst = 0.0;
  for (const auto &row : rows) {
    J.push_back(row.J.value());
    cb.push_back(row.cb);
    sq.push_back(row.cb_square.to_string());
    k.push_back(row.k);
    gaunt.push_back(row.gaunt);
    from_gaunt.push_back(row.cb_from_gaunt);
    semi.push_back(row.cb_semiclassical);
    classical.push_back(row.classical);
    flag.push_back(row.oscillatory ? 1 : 0);
    if (row.cb_from_gaunt)
      worst = std::max(worst, std::abs(*row.cb_from_gaunt - row.cb));
  }
  t.meta("max_gaunt_recovery_error", worst);
  t.add("J", std::move(J));
  t.add("cb_exact", std::move(cb));
  t.add("cb_square_exact", std::move(sq));
  t.add("K", std::move(k));
  t.add("gaunt", std::move(gaunt));
  t.add("cb_from_gaunt", std::move(from_gaunt));
  t.add("cb_semiclassical", std::move(semi));
  t.add("classical_mass", std::move(classical));
  t.add("oscillatory", std::move(flag));

  if (worst > 1e-8)
    r.failed_checks.push_back("oscillation: CB recovered from the Gaunt integral differs by > 1e-8");
  return r;
}

} // namespace angmom::cli
