#pragma once

#include "angmom/half_int.hpp"

namespace angmom {

//! Coupling input <j1 m1; j2 m2 | J M>.
struct CoupledPair {
  HalfInt j1, m1, j2, m2, J, M;

  //! Throws InvalidQuantumNumbers if any individual (j,m) pair is invalid.
  //! Parity, triangle and projection failures are not errors: they are
  //! legal zeros of the coupling coefficient.
  void validate() const;

  //! j1+j2+J integer, |j1-j2| <= J <= j1+j2 and M = m1+m2.
  bool satisfies_selection_rules() const;
};

} // namespace angmom
