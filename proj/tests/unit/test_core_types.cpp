#include <angmom/core_types.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace angmom;

namespace {
HalfInt hi(int twice) { return HalfInt::from_twice(twice); }
} // namespace

TEST_CASE("validate_jm") {
  CHECK(validate_jm(HalfInt::integer(2), HalfInt::integer(-2)));
  CHECK_FALSE(validate_jm(hi(3), HalfInt::integer(0)));
  CHECK_FALSE(validate_jm(HalfInt::integer(1), HalfInt::integer(2)));
  CHECK_FALSE(validate_jm(hi(-2), hi(0)));

  for (int tj = 0; tj <= 12; ++tj)
    for (int tm = -14; tm <= 14; ++tm)
      CHECK(validate_jm(hi(tj), hi(tm)) == validate_jm(hi(tj), hi(-tm)));
}

TEST_CASE("HalfInt parsing") {
  CHECK(HalfInt::parse("3").twice == 6);
  CHECK(HalfInt::parse("-2").twice == -4);
  CHECK(HalfInt::parse("3/2").twice == 3);
  CHECK(HalfInt::parse("-1/2").twice == -1);
  CHECK(HalfInt::parse("2.5").twice == 5);
  CHECK(HalfInt::parse("4/2").twice == 4);
  CHECK_THROWS_AS(HalfInt::parse("1/3"), InvalidQuantumNumbers);
  CHECK_THROWS_AS(HalfInt::parse("0.25"), InvalidQuantumNumbers);
  CHECK_THROWS_AS(HalfInt::parse("x"), InvalidQuantumNumbers);
  CHECK_THROWS_AS(HalfInt::parse(""), InvalidQuantumNumbers);
  CHECK(hi(3).to_string() == "3/2");
  CHECK(hi(-4).to_string() == "-2");
}

TEST_CASE("CoupledPair validation") {
  CoupledPair ok{hi(2), hi(0), hi(2), hi(0), hi(4), hi(0)};
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.satisfies_selection_rules());

  CoupledPair bad_m{hi(2), hi(4), hi(2), hi(0), hi(2), hi(4)};
  CHECK_THROWS_AS(bad_m.validate(), InvalidQuantumNumbers);

  CoupledPair wrong_M{hi(2), hi(0), hi(2), hi(0), hi(2), hi(2)};
  CHECK_NOTHROW(wrong_M.validate());
  CHECK_FALSE(wrong_M.satisfies_selection_rules());

  CoupledPair out_of_triangle{hi(2), hi(0), hi(2), hi(0), hi(6), hi(0)};
  CHECK_FALSE(out_of_triangle.satisfies_selection_rules());
}

TEST_CASE("ExactRational arithmetic and rounding") {
  const ExactRational third(1, 3);
  CHECK(third.to_string() == "1/3");
  CHECK(ExactRational(2, -4).to_string() == "-1/2");
  CHECK(ExactRational(6, 3).denominator() == 1);
  CHECK_THROWS(ExactRational(1, 0));
  CHECK_THROWS(third / ExactRational(0));

  CHECK(third.to_double() == 1.0 / 3.0);
  CHECK(ExactRational(2, 3).to_double() == 2.0 / 3.0);
  CHECK(ExactRational(1, 3).sqrt_to_double() == std::sqrt(1.0 / 3.0));
  CHECK(ExactRational(2).sqrt_to_double() == std::sqrt(2.0));
  CHECK(ExactRational(0).sqrt_to_double() == 0.0);

  // every double round-trips exactly
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(ExactRational::from_double(x).to_double() == x);
  }
  const double tiny = std::numeric_limits<double>::denorm_min();
  CHECK(ExactRational::from_double(tiny).to_double() == tiny);
}

TEST_CASE("ExactRational: (a/b)(b/a) = 1 over random big integers") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    BigInt a = 1, b = 1;
    for (int k = 0; k < 4; ++k) {
      a = a * BigInt(rng() >> 1) + 1;
      b = b * BigInt(rng() >> 1) + 3;
    }
    if (rng() & 1)
      a = -a;
    const ExactRational x(a, b), y(b, a);
    CHECK(x * y == ExactRational(1));
    CHECK((x + y) - y == x);
  }
}

TEST_CASE("ExactRational to_double is monotone and within 1 ulp") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const BigInt n = BigInt(rng() >> 3) * BigInt(rng() >> 7) + 1;
    const BigInt d = BigInt(rng() >> 9) + 1;
    const ExactRational q(n, d);
    const double v = q.to_double();
    // rounding is correct iff q lies within half an ulp of v
    const ExactRational err = q - ExactRational::from_double(v);
    const double ulp = std::nextafter(v, INFINITY) - v;
    CHECK(std::abs(err.to_double()) <= 0.5 * ulp);
    const ExactRational bigger = q + ExactRational(BigInt(1), d * d);
    CHECK(bigger.to_double() >= v);
  }
}

TEST_CASE("bin_masses") {
  const auto uniform = Density1D::continuous(
      0.0, 1.0, [](double) { return 1.0; }, [](double x) { return x; });
  const std::vector<double> edges{0.0, 0.5, 1.0};
  const auto h = bin_masses(uniform, edges);
  REQUIRE(h.bins() == 2);
  CHECK(h.masses[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h.masses[1] == doctest::Approx(0.5).epsilon(1e-15));

  const auto point = Density1D::degenerate(2.0);
  const auto hp = bin_masses(point, std::vector<double>{0.0, 1.0, 3.0});
  CHECK(hp.masses[0] == 0.0);
  CHECK(hp.masses[1] == 1.0);
  CHECK_THROWS_AS(point.pdf(2.0), std::logic_error);
  CHECK(point.cdf(1.99) == 0.0);
  CHECK(point.cdf(2.0) == 1.0);

  CHECK_THROWS_AS(bin_masses(uniform, std::vector<double>{0.0, 0.0, 1.0}), NonAscendingEdges);
  CHECK_THROWS_AS(bin_masses(uniform, std::vector<double>{1.0}), NonAscendingEdges);

  // edges wider than the support clip to it
  const auto wide = bin_masses(uniform, std::vector<double>{-5.0, 0.25, 9.0});
  CHECK(wide.total() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(uniform.pdf(-1.0) == 0.0);
  CHECK(uniform.cdf(-1.0) == 0.0);
  CHECK(uniform.cdf(2.0) == 1.0);
}

TEST_CASE("Histogram bin lookup") {
  Histogram h{{0.0, 1.0, 2.0}, {0.5, 0.5}};
  CHECK(h.bin_of(0.0) == 0);
  CHECK(h.bin_of(1.0) == 1);
  CHECK(h.bin_of(2.0) == 1);
  CHECK(h.bin_of(2.1) == 2);
  CHECK(h.bin_of(-0.1) == 2);
}
