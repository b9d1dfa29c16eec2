#include <angmom_cli/commands.hpp>
#include <angmom/errors.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace angmom;
using namespace angmom::cli;

namespace {

HalfInt in(int n) { return HalfInt::integer(n); }

PairArgs wide_pair() { return {in(57), in(-25), in(85), in(37)}; }

std::vector<std::string> split(const std::string &line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep))
    out.push_back(cell);
  return out;
}

// Every numeric CSV cell must equal the corresponding JSON array entry.
void check_same_numbers(const Table &t) {
  const auto csv = to_csv(t);
  const auto json = nlohmann::json::parse(to_json(t));
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  REQUIRE(line.front() == '#');
  std::getline(ss, line);
  const auto header = split(line, ',');
  REQUIRE(header.size() == t.columns.size());
  std::size_t row = 0;
  while (std::getline(ss, line)) {
    const auto cells = split(line, ',');
    REQUIRE(cells.size() == header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      const auto &v = json["columns"][header[c]][row];
      if (v.is_number())
        CHECK(std::stod(cells[c]) == v.get<double>());
      else if (v.is_null())
        CHECK(cells[c] == "undetermined");
      else
        CHECK(cells[c] == v.get<std::string>());
    }
    ++row;
  }
  CHECK(row == t.rows());
}

} // namespace

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(std::stod(format_double(std::numbers::pi)) == std::numbers::pi);
  CHECK_THROWS(format_double(INFINITY));
}

TEST_CASE("table writers") {
  Table t;
  t.meta("tool", std::string("angmom"));
  t.meta("n", std::int64_t{3});
  t.add("x", std::vector<double>{0.5, 2.0});
  t.add("k", std::vector<std::int64_t>{-1, 7});
  t.add("s", std::vector<std::string>{"1/3", "2"});
  t.add("o", std::vector<std::optional<double>>{std::nullopt, 1.25});
  CHECK(to_csv(t) == "# tool=angmom n=3\nx,k,s,o\n0.5,-1,1/3,undetermined\n2,7,2,1.25\n");
  const auto j = nlohmann::json::parse(to_json(t));
  CHECK(j["metadata"]["n"] == 3);
  CHECK(j["columns"]["o"][0].is_null());
  CHECK(j["columns"]["x"][1] == 2.0);
  check_same_numbers(t);

  t.add("bad", std::vector<double>{1.0});
  CHECK_THROWS_AS(t.rows(), std::logic_error);
}

TEST_CASE("cg command") {
  const auto r = cmd_cg({wide_pair(), {}, {}});
  CHECK(r.ok());
  CHECK(r.table.rows() == 115);
  const auto &J = std::get<std::vector<double>>(r.table.columns[0].values);
  CHECK(J.front() == 28.0);
  CHECK(J.back() == 142.0);
  check_same_numbers(r.table);

  const auto zero = cmd_cg({{in(0), in(0), in(0), in(0)}, {}, {}});
  REQUIRE(zero.table.rows() == 1);
  CHECK(std::get<std::vector<double>>(zero.table.columns[4].values)[0] == 1.0);

  const auto one = cmd_cg({{in(31), in(13), in(31), in(14)}, in(43), {}});
  REQUIRE(one.table.rows() == 1);
  CHECK(std::get<std::vector<std::int64_t>>(one.table.columns[2].values)[0] == 1);

  CHECK_THROWS_AS(cmd_cg({{in(1), in(2), in(1), in(0)}, {}, {}}), InvalidQuantumNumbers);
}

TEST_CASE("theta command") {
  const auto r = cmd_theta({in(0), in(0), 9, ThetaVariant::exact});
  CHECK(r.ok());
  for (double v : std::get<std::vector<double>>(r.table.columns[1].values))
    CHECK(v == doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-15));

  const auto c = cmd_theta({in(30), in(15), 2001, ThetaVariant::classical});
  const auto &theta = std::get<std::vector<double>>(c.table.columns[0].values);
  const auto &value = std::get<std::vector<double>>(c.table.columns[1].values);
  const double lo = std::asin(15.0 / 30.5);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] <= lo || theta[i] >= std::numbers::pi - lo)
      CHECK(value[i] == 0.0);
    else
      CHECK(value[i] > 0.0);
  }
  CHECK_THROWS_AS(cmd_theta({in(3), in(3), 1, ThetaVariant::exact}), InvalidArgument);
  CHECK_THROWS_AS(cmd_theta({in(3), in(3), 10, ThetaVariant::wkb}), DegenerateBand);
  CHECK(cmd_theta({in(3), in(3), 10, ThetaVariant::wkb_refined}).ok());
}

TEST_CASE("classical-theta command") {
  const auto r = cmd_classical_theta({std::numbers::pi / 2, 11});
  CHECK(r.ok());
  check_same_numbers(r.table);
  const auto flat = cmd_classical_theta({0.0, 5});
  CHECK(flat.ok());
  check_same_numbers(flat.table);
}

TEST_CASE("compare-add command") {
  CompareArgs a{wide_pair(), 1.0, BinMapping::L_equals_J, 0, 1};
  const auto fine = compare_addition(a);
  a.dL = 3.0;
  const auto coarse = compare_addition(a);
  CHECK(coarse.sup_distance < fine.sup_distance);
  CHECK(fine.sup_distance > 0.01);

  for (const auto *rep : {&fine, &coarse}) {
    ExactRational total(0);
    for (const auto &q : rep->quantum_exact)
      total += q;
    CHECK(total == ExactRational(1));
    double c = 0.0;
    for (double x : rep->classical)
      c += x;
    CHECK(std::abs(c - 1.0) <= 1e-12);
  }
  // dL = 1 bins are exactly the per-J classical squares
  const auto d = addition_density(ClassicalPair::from_projections(57, -25, 85, 37));
  for (std::size_t i = 0; i < fine.bins(); ++i) {
    const double centre = 0.5 * (fine.edges[i] + fine.edges[i + 1]);
    CHECK(fine.classical[i] ==
          doctest::Approx(classical_cg_square(d, HalfInt::integer(static_cast<int>(std::lround(centre))), 1.0))
              .epsilon(1e-12));
  }

  a.mc = 20000;
  const auto r1 = cmd_compare_add(a);
  const auto r2 = cmd_compare_add(a);
  CHECK(r1.ok());
  CHECK(to_csv(r1.table) == to_csv(r2.table));
  CHECK(to_json(r1.table) == to_json(r2.table));
  check_same_numbers(r1.table);
  a.seed = 2;
  CHECK(to_csv(cmd_compare_add(a).table) != to_csv(r1.table));

  a.dL = 0.0;
  CHECK_THROWS_AS(compare_addition(a), InvalidArgument);

  // half-integer inputs
  const auto h = compare_addition({{HalfInt::from_twice(3), HalfInt::from_twice(1),
                                    HalfInt::from_twice(5), HalfInt::from_twice(-1)},
                                   1.0, BinMapping::L_equals_J_plus_half, 0, 1});
  ExactRational total(0);
  for (const auto &q : h.quantum_exact)
    total += q;
  CHECK(total == ExactRational(1));
}

TEST_CASE("oscillation command") {
  const auto rows = oscillation_rows({in(31), in(13), in(31), in(14)}, false);
  CHECK(rows.front().J == in(27));
  CHECK(rows.back().J == in(62));
  for (const auto &r : rows) {
    if (r.k == 0.0) {
      CHECK_FALSE(r.cb_from_gaunt);
      CHECK(r.gaunt == 0.0);
    } else {
      REQUIRE(r.cb_from_gaunt);
      CHECK(std::abs(*r.cb_from_gaunt - r.cb) <= 1e-8);
    }
  }
  const auto full = cmd_oscillation({in(31), in(13), in(31), in(14)});
  CHECK(full.ok());
  check_same_numbers(full.table);
  CHECK_THROWS_AS(oscillation_rows({HalfInt::from_twice(1), HalfInt::from_twice(1), in(1), in(0)}),
                  HalfIntegerUnsupported);
}

TEST_CASE("oscillation flag rule") {
  auto row = [](double k, double cb) {
    OscillationRow r;
    r.k = k;
    r.cb = cb;
    return r;
  };
  std::vector<OscillationRow> rows{row(1, 1), row(0, 1), row(1, 1), row(0, 1),
                                   row(1, -1), row(0, 1), row(-1, 1), row(0, 1)};
  flag_oscillations(rows);
  CHECK_FALSE(rows[0].oscillatory);
  CHECK(rows[1].oscillatory); // neighbour of a flagged row
  CHECK(rows[2].oscillatory);
  CHECK(rows[4].oscillatory);
  CHECK_FALSE(rows[6].oscillatory); // K*CB = -1 matches row 4
  CHECK(rows[3].oscillatory);
}

TEST_CASE("sample command") {
  SampleArgs a;
  a.beta = 1.0;
  a.n = 50000;
  a.seed = 4;
  const auto r = cmd_sample(a);
  CHECK(r.ok());
  CHECK(to_csv(r.table) == to_csv(cmd_sample(a).table));
  a.kind = SampleKind::total_L;
  a.pair = {in(5), in(3), in(4), in(-1)};
  CHECK(cmd_sample(a).ok());
}

TEST_CASE("self check") { CHECK(self_check().empty()); }
