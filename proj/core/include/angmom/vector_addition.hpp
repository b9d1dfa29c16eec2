#pragma once

#include "angmom/density.hpp"
#include "angmom/half_int.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace angmom {

//! Two classical angular momenta of fixed length and fixed polar angle whose
//! azimuths are independent and uniform.
struct ClassicalPair {
  double L1 = 1.0, L2 = 1.0;
  double theta1 = 0.0, theta2 = 0.0;

  //! theta = acos(Lz / L). Throws NonPositiveLength or InvalidAngles when
  //! |Lz| > L.
  static ClassicalPair from_projections(double L1, double Lz1, double L2, double Lz2);

  //! Throws NonPositiveLength (L <= 0) or InvalidAngles (theta outside [0, pi]).
  void validate() const;
  double lz1() const;
  double lz2() const;
  double lz() const { return lz1() + lz2(); }
};

//! Distribution of the total length L. The support is [sqrt(B), sqrt(A)],
//! A = |L1 + L2|^2 with equal azimuths, B with opposite ones.
struct AdditionDensity {
  Density1D base;
  ClassicalPair pair;
  double A = 0.0, B = 0.0;

  //! Quartic combination -L^4 - L1^4 - L2^4 + 2L^2(L1^2 + L2^2) + 2L1^2 L2^2.
  double asq(double L) const;
  //! pdf written through asq and the projections; equals base.pdf on the
  //! interior (the radicand is (A - L^2)(L^2 - B)).
  double pdf_projection_form(double L) const;
  //! Density and cdf in the variable x = L^2.
  double pdf_l2(double x) const;
  double cdf_l2(double x) const;
};

//! Throws as ClassicalPair::validate. Returns a degenerate base at sqrt(A)
//! when A - B <= 1e-12 (A + B).
AdditionDensity addition_density(const ClassicalPair &p);

enum class BinMapping { L_equals_J, L_equals_J_plus_half };

//! Mass of the L density in [c - dL/2, c + dL/2), c = J or J + 1/2.
//! Throws InvalidArgument for dL <= 0.
double classical_cg_square(const ClassicalPair &p, HalfInt J, double dL,
                           BinMapping mapping = BinMapping::L_equals_J);
double classical_cg_square(const AdditionDensity &d, HalfInt J, double dL,
                           BinMapping mapping = BinMapping::L_equals_J);

//! Unit bins centred on the integers from floor(|L1 - L2|) to ceil(L1 + L2).
std::vector<double> default_total_L_edges(const ClassicalPair &p);

//! Monte Carlo histogram of L with phi1, phi2 uniform in [0, 2 pi). Empty
//! `edges` selects default_total_L_edges().
Histogram sample_total_L(const ClassicalPair &p, std::size_t n, std::uint64_t seed,
                         std::span<const double> edges = {});

struct TotalSample {
  double L;
  double Lz; //!< z component of the vector sum
};

//! Raw samples (single stream, intended for small n and property checks).
std::vector<TotalSample> sample_total(const ClassicalPair &p, std::size_t n, std::uint64_t seed);

} // namespace angmom
