#include "angmom_cli/commands.hpp"

#include <angmom/errors.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

using namespace angmom;
using namespace angmom::cli;

namespace {

struct QuantumFlag {
  std::string text;
  bool given() const { return !text.empty(); }
};

HalfInt parse_qn(const std::string &text, bool twice, const char *name) {
  try {
    if (twice) {
      std::size_t used = 0;
      const long v = std::stol(text, &used);
      if (used != text.size() || std::abs(v) > (1L << 28))
        throw std::invalid_argument(text);
      return HalfInt::from_twice(static_cast<int>(v));
    }
    return HalfInt::parse(text);
  } catch (const InvalidQuantumNumbers &) {
    throw;
  } catch (const std::exception &) {
    throw InvalidQuantumNumbers(std::string("cannot read --") + name + " '" + text + "'");
  }
}

void add_pair(CLI::App *cmd, std::map<std::string, std::string> &qn, bool required = true) {
  for (const char *name : {"j1", "m1", "j2", "m2"}) {
    auto *opt = cmd->add_option(std::string("--") + name, qn[name], "quantum number (3, -1/2, 2.5)");
    if (required)
      opt->required();
  }
}

PairArgs read_pair(std::map<std::string, std::string> &qn, bool twice) {
  return {parse_qn(qn["j1"], twice, "j1"), parse_qn(qn["m1"], twice, "m1"),
          parse_qn(qn["j2"], twice, "j2"), parse_qn(qn["m2"], twice, "m2")};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact and classical angular-momentum coupling data"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 1;
  bool check = false;
  bool twice = false;
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out, "output path (default: stdout)");
  app.add_option("--seed", seed, "random seed for Monte Carlo columns");
  app.add_flag("--check", check, "also run the library property suites");
  app.add_flag("--twice", twice, "read quantum numbers as twice their value");

  std::map<std::string, std::string> qn;

  auto *cg = app.add_subcommand("cg", "Clebsch-Gordan coefficients for every admissible J");
  add_pair(cg, qn);
  cg->add_option("--J", qn["J"], "single total J");
  cg->add_option("--M", qn["M"], "total projection (default m1 + m2)");

  ThetaArgs theta_args;
  std::string variant = "exact";
  auto *theta = app.add_subcommand("theta", "|Y_jm|^2 on a theta grid");
  theta->add_option("--j", qn["j"])->required();
  theta->add_option("--m", qn["m"])->required();
  theta->add_option("--grid", theta_args.grid, "number of grid points")->check(CLI::Range(2, 10000000));
  theta->add_option("--variant", variant)
      ->check(CLI::IsMember({"exact", "wkb", "wkb_refined", "classical"}));

  ClassicalThetaArgs ct_args;
  auto *ctheta = app.add_subcommand("classical-theta", "classical density of cos(theta)");
  auto *beta_opt = ctheta->add_option("--beta", ct_args.beta, "tilt in radians");
  auto *ct_j = ctheta->add_option("--j", qn["ct_j"], "take sin(beta) = sqrt(1 - m^2/(j+1/2)^2)");
  ctheta->add_option("--m", qn["ct_m"])->needs(ct_j);
  ct_j->excludes(beta_opt);
  ctheta->add_option("--grid", ct_args.grid)->check(CLI::Range(2, 10000000));

  CompareArgs cmp_args;
  std::string mapping = "J";
  auto *cmp = app.add_subcommand("compare-add", "binned quantum vs classical total-L probability");
  add_pair(cmp, qn);
  cmp->add_option("--dL", cmp_args.dL, "bin width");
  cmp->add_option("--mapping", mapping, "L=J or L=J+1/2")->check(CLI::IsMember({"J", "J+1/2"}));
  cmp->add_option("--mc", cmp_args.mc, "Monte Carlo samples (0: none)");

  auto *osc = app.add_subcommand("oscillation", "per-J Gaunt, K and semiclassical diagnostics");
  add_pair(osc, qn);

  SampleArgs sample_args;
  std::string kind = "angle";
  auto *sample = app.add_subcommand("sample", "Monte Carlo histograms against analytic masses");
  sample->add_option("--kind", kind)->check(CLI::IsMember({"angle", "total-L"}));
  sample->add_option("--beta", sample_args.beta, "tilt in radians (angle)");
  add_pair(sample, qn, false);
  sample->add_option("--n", sample_args.n, "number of samples")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  CommandResult result;
  try {
    if (*cg) {
      CgArgs a{read_pair(qn, twice), {}, {}};
      if (!qn["J"].empty())
        a.J = parse_qn(qn["J"], twice, "J");
      if (!qn["M"].empty())
        a.M = parse_qn(qn["M"], twice, "M");
      result = cmd_cg(a);
    } else if (*theta) {
      theta_args.j = parse_qn(qn["j"], twice, "j");
      theta_args.m = parse_qn(qn["m"], twice, "m");
      theta_args.variant = variant == "wkb"           ? ThetaVariant::wkb
                           : variant == "wkb_refined" ? ThetaVariant::wkb_refined
                           : variant == "classical"   ? ThetaVariant::classical
                                                      : ThetaVariant::exact;
      result = cmd_theta(theta_args);
    } else if (*ctheta) {
      if (!qn["ct_j"].empty()) {
        const HalfInt j = parse_qn(qn["ct_j"], twice, "j");
        const HalfInt m = parse_qn(qn["ct_m"].empty() ? "0" : qn["ct_m"], twice, "m");
        require_jm(j, m);
        const double q = std::abs(m.value()) / (j.value() + 0.5);
        ct_args.beta = std::asin(std::sqrt(1.0 - q * q));
      }
      result = cmd_classical_theta(ct_args);
    } else if (*cmp) {
      cmp_args.pair = read_pair(qn, twice);
      cmp_args.mapping =
          mapping == "J+1/2" ? BinMapping::L_equals_J_plus_half : BinMapping::L_equals_J;
      cmp_args.seed = seed;
      result = cmd_compare_add(cmp_args);
    } else if (*osc) {
      result = cmd_oscillation(read_pair(qn, twice));
    } else if (*sample) {
      sample_args.seed = seed;
      if (kind == "total-L") {
        for (const char *name : {"j1", "m1", "j2", "m2"})
          if (qn[name].empty())
            throw InvalidArgument(std::string("sample --kind total-L needs --") + name);
        sample_args.kind = SampleKind::total_L;
        sample_args.pair = read_pair(qn, twice);
      }
      result = cmd_sample(sample_args);
    }
  } catch (const std::exception &e) {
    std::cerr << "angmom: " << e.what() << '\n';
    return 1;
  }

  std::string text;
  try {
    text = format == "json" ? to_json(result.table) : to_csv(result.table);
  } catch (const std::exception &e) {
    std::cerr << "angmom: " << e.what() << '\n';
    return 1;
  }

  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout)
      return 1;
  } else {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    f << text;
    f.close();
    if (!f) {
      std::cerr << "angmom: cannot write " << out << '\n';
      return 1;
    }
  }

  auto failed = result.failed_checks;
  if (check) {
    for (auto &name : self_check())
      failed.push_back("self-check: " + name);
  }
  for (const auto &f : failed)
    std::cerr << "angmom: check failed: " << f << '\n';
  if (check && failed.empty())
    std::cerr << "angmom: all checks passed\n";
  return failed.empty() ? 0 : 2;
}
