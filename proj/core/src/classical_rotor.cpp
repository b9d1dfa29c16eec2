#include "angmom/classical_rotor.hpp"
#include "angmom/errors.hpp"
#include "angmom/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace angmom {

namespace {

constexpr double kPi = std::numbers::pi;
// sin(beta) below this is treated as an orbit in the z = 0 plane.
constexpr double kFlatOrbit = 1e-12;

void require_beta(double beta) {
  if (!(beta >= 0.0 && beta <= kPi))
    throw InvalidAngles("beta must lie in [0, pi]");
}

} // namespace

void RotorConfig::validate() const {
  if (!(mass > 0.0) || !(radius > 0.0) || !(omega > 0.0))
    throw InvalidArgument("rotor mass, radius and omega must be positive");
  require_beta(beta);
}

double RotorConfig::lz() const { return angular_momentum() * std::cos(beta); }

Position trajectory(const RotorConfig &c, double t) {
  const double phase = c.omega * t + c.alpha;
  const double in_plane = c.radius * std::cos(phase);
  return {in_plane * std::cos(c.beta), c.radius * std::sin(phase), in_plane * std::sin(c.beta)};
}

Density1D angle_density(double beta) {
  require_beta(beta);
  const double s = std::abs(std::sin(beta));
  if (s <= kFlatOrbit)
    return Density1D::degenerate(0.0);
  return Density1D::continuous(
      -s, s, [s](double c) { return 1.0 / (kPi * std::sqrt((s - c) * (s + c))); },
      [s](double c) { return (std::asin(std::clamp(c / s, -1.0, 1.0)) + kPi / 2.0) / kPi; });
}

std::vector<double> default_cos_edges() { return uniform_edges(-1.0, 1.0, 101); }

Histogram sample_angles(double beta, std::size_t n, std::uint64_t seed,
                        std::span<const double> edges) {
  require_beta(beta);
  const auto defaults = default_cos_edges();
  if (edges.empty())
    edges = defaults;
  const double s = std::sin(beta);
  return sample_histogram(n, seed, edges,
                          [s](UniformStream &rng) { return std::cos(2.0 * kPi * rng.next()) * s; });
}

} // namespace angmom
