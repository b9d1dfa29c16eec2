#include "angmom/errors.hpp"
#include "angmom/sampling.hpp"
#include "angmom/vector_addition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace angmom {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerate = 1e-12;

struct Vec3 {
  double x, y, z;
};

Vec3 direction(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

// Length of the sum when the azimuths differ by phi.
double total_length(const ClassicalPair &p, double phi1, double phi2) {
  const Vec3 a = direction(p.theta1, phi1);
  const Vec3 b = direction(p.theta2, phi2);
  return std::hypot(p.L1 * a.x + p.L2 * b.x, p.L1 * a.y + p.L2 * b.y, p.L1 * a.z + p.L2 * b.z);
}

} // namespace

ClassicalPair ClassicalPair::from_projections(double L1, double Lz1, double L2, double Lz2) {
  if (!(L1 > 0.0) || !(L2 > 0.0))
    throw NonPositiveLength("L1 and L2 must be positive");
  if (std::abs(Lz1) > L1 || std::abs(Lz2) > L2)
    throw InvalidAngles("|Lz| must not exceed L");
  return {L1, L2, std::acos(Lz1 / L1), std::acos(Lz2 / L2)};
}

void ClassicalPair::validate() const {
  if (!(L1 > 0.0) || !(L2 > 0.0))
    throw NonPositiveLength("L1 and L2 must be positive");
  for (const double t : {theta1, theta2}) {
    if (!(t >= 0.0 && t <= kPi))
      throw InvalidAngles("polar angles must lie in [0, pi]");
  }
}

double ClassicalPair::lz1() const { return L1 * std::cos(theta1); }
double ClassicalPair::lz2() const { return L2 * std::cos(theta2); }

double AdditionDensity::asq(double L) const {
  const double x = L * L;
  const double a = pair.L1 * pair.L1;
  const double b = pair.L2 * pair.L2;
  return -x * x - a * a - b * b + 2.0 * x * (a + b) + 2.0 * a * b;
}

double AdditionDensity::pdf_projection_form(double L) const {
  const double x = L * L;
  const double z1 = pair.lz1(), z2 = pair.lz2();
  const double radicand =
      asq(L) + 4.0 * (x * z1 * z2 -
                      (pair.L2 * pair.L2 * z1 + pair.L1 * pair.L1 * z2) * (z1 + z2));
  if (!(radicand > 0.0))
    return 0.0;
  return 2.0 * L / (kPi * std::sqrt(radicand));
}

double AdditionDensity::pdf_l2(double x) const {
  if (base.is_degenerate() || !(x > B && x < A))
    return 0.0;
  return 1.0 / (kPi * std::sqrt((A - x) * (x - B)));
}

double AdditionDensity::cdf_l2(double x) const {
  if (base.is_degenerate())
    return x >= A ? 1.0 : 0.0;
  if (x <= B)
    return 0.0;
  if (x >= A)
    return 1.0;
  return std::acos(std::clamp((A + B - 2.0 * x) / (A - B), -1.0, 1.0)) / kPi;
}

AdditionDensity addition_density(const ClassicalPair &p) {
  p.validate();
  const double d = p.theta1 - p.theta2;
  const double s = p.theta1 + p.theta2;
  // clamped so rounding never pushes the support outside the triangle
  const double rootA =
      std::min(std::hypot(p.L1 + p.L2 * std::cos(d), p.L2 * std::sin(d)), p.L1 + p.L2);
  const double rootB =
      std::max(std::hypot(p.L1 + p.L2 * std::cos(s), p.L2 * std::sin(s)), std::abs(p.L1 - p.L2));
  const double A = rootA * rootA;
  const double B = rootB * rootB;
  // A - B directly, without cancellation
  const double gap = 4.0 * p.L1 * p.L2 * std::sin(p.theta1) * std::sin(p.theta2);

  AdditionDensity out{Density1D::degenerate(rootA), p, A, B};
  if (gap <= kDegenerate * (A + B)) {
    out.B = A;
    return out;
  }
  out.base = Density1D::continuous(
      rootB, rootA,
      [A, B](double L) {
        const double x = L * L;
        return 2.0 * L / (kPi * std::sqrt((A - x) * (x - B)));
      },
      [A, B](double L) {
        return std::acos(std::clamp((A + B - 2.0 * L * L) / (A - B), -1.0, 1.0)) / kPi;
      });
  return out;
}

double classical_cg_square(const AdditionDensity &d, HalfInt J, double dL, BinMapping mapping) {
  if (!(dL > 0.0))
    throw InvalidArgument("dL must be positive");
  const double centre = J.value() + (mapping == BinMapping::L_equals_J_plus_half ? 0.5 : 0.0);
  const double lo = centre - 0.5 * dL;
  const double hi = centre + 0.5 * dL;
  if (d.base.is_degenerate()) {
    const double p = d.base.point();
    return (p >= lo && p < hi) ? 1.0 : 0.0;
  }
  return d.base.cdf(hi) - d.base.cdf(lo);
}

double classical_cg_square(const ClassicalPair &p, HalfInt J, double dL, BinMapping mapping) {
  return classical_cg_square(addition_density(p), J, dL, mapping);
}

std::vector<double> default_total_L_edges(const ClassicalPair &p) {
  p.validate();
  const double first = std::floor(std::abs(p.L1 - p.L2));
  const double last = std::ceil(p.L1 + p.L2);
  std::vector<double> edges;
  for (double c = first; c <= last; c += 1.0)
    edges.push_back(c - 0.5);
  edges.push_back(last + 0.5);
  return edges;
}

Histogram sample_total_L(const ClassicalPair &p, std::size_t n, std::uint64_t seed,
                         std::span<const double> edges) {
  p.validate();
  const auto defaults = default_total_L_edges(p);
  if (edges.empty())
    edges = defaults;
  return sample_histogram(n, seed, edges, [&p](UniformStream &rng) {
    const double phi1 = 2.0 * kPi * rng.next();
    const double phi2 = 2.0 * kPi * rng.next();
    return total_length(p, phi1, phi2);
  });
}

std::vector<TotalSample> sample_total(const ClassicalPair &p, std::size_t n, std::uint64_t seed) {
  p.validate();
  UniformStream rng(derive_seed(seed, 0));
  std::vector<TotalSample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double phi1 = 2.0 * kPi * rng.next();
    const double phi2 = 2.0 * kPi * rng.next();
    const Vec3 a = direction(p.theta1, phi1);
    const Vec3 b = direction(p.theta2, phi2);
    out.push_back({total_length(p, phi1, phi2), p.L1 * a.z + p.L2 * b.z});
  }
  return out;
}

} // namespace angmom
