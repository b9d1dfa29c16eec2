#pragma once

#include "angmom_cli/table.hpp"

#include <angmom/exact_rational.hpp>
#include <angmom/half_int.hpp>
#include <angmom/vector_addition.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace angmom::cli {

inline constexpr const char *kVersion = "0.1.0";

//! Result of one subcommand: the table to write plus the outcome of the
//! invariant checks run along the way.
struct CommandResult {
  Table table;
  std::vector<std::string> failed_checks;
  bool ok() const { return failed_checks.empty(); }
};

struct PairArgs {
  HalfInt j1, m1, j2, m2;
  HalfInt M() const { return m1 + m2; }
};

//==============================================================================
struct CgArgs {
  PairArgs pair;
  std::optional<HalfInt> J;
  std::optional<HalfInt> M; //!< defaults to m1 + m2
};
CommandResult cmd_cg(const CgArgs &a);

//==============================================================================
enum class ThetaVariant { exact, wkb, wkb_refined, classical };

struct ThetaArgs {
  HalfInt j, m;
  std::size_t grid = 181;
  ThetaVariant variant = ThetaVariant::exact;
};
//! |Y|^2 on a uniform theta grid over [0, pi]. The classical variant is the
//! angle density with sin(beta) = sqrt(1 - m^2/(j+1/2)^2) per steradian,
//! pdf(cos theta) / (2 pi), so it sits on the same scale as |Y|^2.
CommandResult cmd_theta(const ThetaArgs &a);

struct ClassicalThetaArgs {
  double beta = 0.0;
  std::size_t grid = 201;
};
//! pdf and cdf of cos(theta) on a uniform grid over [-1, 1]; the pdf column
//! is undetermined for the point-mass case sin(beta) = 0.
CommandResult cmd_classical_theta(const ClassicalThetaArgs &a);

//==============================================================================
struct CompareArgs {
  PairArgs pair;
  double dL = 1.0;
  BinMapping mapping = BinMapping::L_equals_J;
  std::size_t mc = 0;
  std::uint64_t seed = 1;
};

//! Quantum vs classical probability of the total angular momentum, binned at
//! resolution dL.
struct ComparisonReport {
  std::vector<double> edges;
  std::vector<ExactRational> quantum_exact;
  std::vector<double> quantum;
  std::vector<double> classical;
  std::optional<std::vector<double>> mc;
  double dL = 1.0;
  BinMapping mapping = BinMapping::L_equals_J;
  double sup_distance = 0.0;
  double l1_distance = 0.0;
  double peak_quantum = 0.0;

  std::size_t bins() const { return quantum.size(); }
};

//! Bins of width dL with edges at J_min + offset - 1/2 + k dL, extended to
//! cover the classical support and every admissible J.
ComparisonReport compare_addition(const CompareArgs &a);
//! (sup, l1) of quantum minus classical.
std::pair<double, double> distances(const std::vector<double> &a, const std::vector<double> &b);
CommandResult cmd_compare_add(const CompareArgs &a);

//==============================================================================
struct OscillationRow {
  HalfInt J;
  double cb = 0.0;
  ExactRational cb_square;
  double k = 0.0;
  double gaunt = 0.0;
  std::optional<double> cb_from_gaunt;
  std::optional<double> cb_semiclassical;
  double classical = 0.0; //!< classical mass of [J - 1/2, J + 1/2)
  bool oscillatory = false;
};

//! Per-J table for integer quantum numbers. `semiclassical` toggles the WKB
//! Gaunt quadrature (the slow part).
std::vector<OscillationRow> oscillation_rows(const PairArgs &p, bool semiclassical = true);

//! Oscillatory-region flag: K*CB changes sign against J-2 or J+2 (both
//! nonzero); a J with K = 0 inherits the flag of a flagged neighbour J+-1.
void flag_oscillations(std::vector<OscillationRow> &rows);

//! 2 pi int W1 W2 W_J sin(theta) over the common band, W = refined WKB.
double semiclassical_gaunt(int j1, int m1, int j2, int m2, int J, int M);

CommandResult cmd_oscillation(const PairArgs &p);

//==============================================================================
enum class SampleKind { angle, total_L };

struct SampleArgs {
  SampleKind kind = SampleKind::angle;
  double beta = 0.0;
  PairArgs pair;
  std::size_t n = 100000;
  std::uint64_t seed = 1;
};
//! Monte Carlo histogram next to the analytic bin masses.
CommandResult cmd_sample(const SampleArgs &a);

//==============================================================================
//! Property checks over small parameter ranges for every library module;
//! returns the names of failed checks.
std::vector<std::string> self_check();

} // namespace angmom::cli
