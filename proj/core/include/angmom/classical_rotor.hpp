#pragma once

#include "angmom/density.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace angmom {

//! A particle on a circular orbit whose angular momentum is tilted by beta
//! from the z axis (rotation about y).
struct RotorConfig {
  double mass = 1.0;   //!< mu
  double radius = 1.0; //!< r
  double omega = 1.0;  //!< angular frequency
  double beta = 0.0;   //!< tilt of L from z, in [0, pi]
  double alpha = 0.0;  //!< initial phase

  //! Throws InvalidArgument for nonpositive mu, r, omega; InvalidAngles for
  //! beta outside [0, pi].
  void validate() const;
  double angular_momentum() const { return mass * radius * radius * omega; }
  double lz() const;
};

struct Position {
  double x, y, z;
};

//! x = r cos(wt+a) cos b, y = r sin(wt+a), z = r cos(wt+a) sin b.
Position trajectory(const RotorConfig &c, double t);

//! Ensemble density of cos(theta) over a uniformly random initial phase:
//! pdf(c) = 1 / (pi sqrt(sin^2 b - c^2)) on |c| < |sin b|. For sin b = 0 the
//! orbit stays in z = 0 and the density is a point mass at cos(theta) = 0.
Density1D angle_density(double beta);

//! 101 uniform bins on [-1, 1]; 0 sits in the middle of a bin.
std::vector<double> default_cos_edges();

//! Monte Carlo histogram of cos(theta) = cos(alpha) sin(beta), alpha uniform
//! in [0, 2 pi). Empty `edges` selects default_cos_edges().
Histogram sample_angles(double beta, std::size_t n, std::uint64_t seed,
                        std::span<const double> edges = {});

} // namespace angmom
