#include "common.hpp"

#include <angmom/wigner.hpp>

#include <cstdlib>

namespace angmom::cli {

CommandResult cmd_cg(const CgArgs &a) {
  detail::require_pair(a.pair);
  const HalfInt M = a.M.value_or(a.pair.M());

  std::vector<HalfInt> Js;
  if (a.J) {
    Js.push_back(*a.J);
  } else {
    const HalfInt lo = HalfInt::from_twice(std::abs(a.pair.j1.twice - a.pair.j2.twice));
    for (HalfInt J = lo; J <= a.pair.j1 + a.pair.j2; J = J + HalfInt::integer(1)) {
      if (validate_jm(J, M))
        Js.push_back(J);
    }
  }

  std::vector<double> Jcol, Mcol, value;
  std::vector<std::int64_t> sign;
  std::vector<std::string> square;
  ExactRational total(0);
  for (const HalfInt J : Js) {
    const auto c = clebsch_gordan(a.pair.j1, a.pair.m1, a.pair.j2, a.pair.m2, J, M);
    Jcol.push_back(J.value());
    Mcol.push_back(M.value());
    sign.push_back(c.sign);
    square.push_back(c.square.to_string());
    value.push_back(c.value());
    total += c.square;
  }

  CommandResult r;
  auto &t = r.table;
  detail::header_meta(t, "cg");
  detail::pair_meta(t, a.pair);
  t.meta("M", M.to_string());
  t.meta("sum_squares", total.to_string());
  t.add("J", std::move(Jcol));
  t.add("M", std::move(Mcol));
  t.add("sign", std::move(sign));
  t.add("square_exact", std::move(square));
  t.add("value", std::move(value));

  if (!a.J && M == a.pair.M() && total != ExactRational(1))
    r.failed_checks.push_back("cg: squares over J do not sum to 1");
  return r;
}

} // namespace angmom::cli
