#include "angmom/errors.hpp"
#include "angmom/harmonics.hpp"
#include "angmom/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

namespace angmom {

namespace {

void require_integer_jm(HalfInt j, HalfInt m) {
  require_jm(j, m);
  if (!j.is_integer())
    throw HalfIntegerUnsupported("spherical harmonics need integer j, got " + j.to_string());
}

} // namespace

ThetaProfile::ThetaProfile(HalfInt j, HalfInt m) {
  require_integer_jm(j, m);
  j_ = j.as_int();
  m_ = m.as_int();
}

double ThetaProfile::operator()(double theta) const {
  return at(std::cos(theta), std::abs(std::sin(theta)));
}

double ThetaProfile::at_cos(double c) const {
  return at(c, std::sqrt(std::max(0.0, 1.0 - c * c)));
}

double ThetaProfile::at(double c, double s) const {
  const int am = std::abs(m_);
  // Diagonal: Ybar_{mm} = (-1)^m sqrt((2m+1)!!/(4 pi (2m)!!)) s^m.
  double ymm = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int k = 1; k <= am; ++k)
    ymm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;

  double value = ymm;
  if (j_ > am) {
    double prev = ymm;
    double cur = std::sqrt(2.0 * am + 3.0) * c * ymm;
    double a_prev = std::sqrt(2.0 * am + 3.0);
    for (int l = am + 2; l <= j_; ++l) {
      const double dl = l, dm = am;
      const double a = std::sqrt((4.0 * dl * dl - 1.0) / (dl * dl - dm * dm));
      const double next = a * (c * cur - prev / a_prev);
      prev = cur;
      cur = next;
      a_prev = a;
    }
    value = cur;
  }
  if (m_ < 0 && (am % 2 == 1))
    value = -value;
  return value;
}

double gaunt_integral(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  const ThetaProfile y1(j1, m1), y2(j2, m2), y3(J, M);
  if (m1 + m2 != M)
    return 0.0;
  // odd under theta -> pi - theta, or outside the triangle: zero by symmetry
  const int jsum = y1.j() + y2.j() + y3.j();
  if (jsum % 2 != 0 || y3.j() > y1.j() + y2.j() || y3.j() < std::abs(y1.j() - y2.j()))
    return 0.0;
  const std::size_t n =
      static_cast<std::size_t>(jsum / 2 + 2);
  const auto &rule = cached_gauss_legendre(n);
  const double s = rule.integrate([&](double c) {
    const double sn = std::sqrt(std::max(0.0, 1.0 - c * c));
    return y1.at(c, sn) * y2.at(c, sn) * y3.at(c, sn);
  });
  return 2.0 * std::numbers::pi * s;
}

double gaunt_integral_int(int j1, int m1, int j2, int m2, int J, int M) {
  return gaunt_integral(HalfInt::integer(j1), HalfInt::integer(m1), HalfInt::integer(j2),
                        HalfInt::integer(m2), HalfInt::integer(J), HalfInt::integer(M));
}

namespace {

struct CumulativeTable {
  ThetaProfile profile;
  std::vector<double> grid; // ascending in c
  std::vector<double> cum;  // cdf at grid points
  const QuadratureRule *rule;

  double pdf(double c) const {
    const double v = profile.at_cos(c);
    return 2.0 * std::numbers::pi * v * v;
  }
  double piece(double a, double b) const {
    return rule->integrate([this](double c) { return pdf(c); }, a, b);
  }
  double cdf(double x) const {
    const auto it = std::upper_bound(grid.begin(), grid.end(), x);
    const auto i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - grid.begin() - 1, 0));
    if (i + 1 >= grid.size())
      return cum.back();
    return cum[i] + piece(grid[i], x);
  }
};

} // namespace

Density1D angular_density(HalfInt j, HalfInt m) {
  ThetaProfile profile(j, m);
  const int jj = profile.j();
  // Oscillation period in theta ~ pi / j; about 20 samples per period.
  const std::size_t intervals = std::max<std::size_t>(64, 20 * static_cast<std::size_t>(jj + 1));
  auto table = std::make_shared<CumulativeTable>(CumulativeTable{
      profile, {}, {}, &cached_gauss_legendre(static_cast<std::size_t>(jj + 1))});
  table->grid.resize(intervals + 1);
  for (std::size_t k = 0; k <= intervals; ++k) {
    table->grid[k] =
        -std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(intervals));
  }
  table->grid.front() = -1.0;
  table->grid.back() = 1.0;
  table->cum.assign(intervals + 1, 0.0);
  for (std::size_t k = 0; k < intervals; ++k)
    table->cum[k + 1] = table->cum[k] + table->piece(table->grid[k], table->grid[k + 1]);

  return Density1D::continuous(
      -1.0, 1.0, [table](double c) { return table->pdf(c); },
      [table](double c) { return table->cdf(c); });
}

} // namespace angmom
