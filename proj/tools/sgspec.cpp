// Command-line driver: finite spectra, limit constants, gap-claim
// verification sweeps, the base-case gap table and the graph-Laplacian
// cross-check.
//
// Exit codes: 0 success/certified, 1 domain error, 2 usage error,
// 3 inconclusive verification, 4 oracle mismatch.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "sgspec/serialize.hpp"

namespace {

using namespace sgspec;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitMismatch = 4;

mpfr_prec_t default_precision() {
  if (const char* env = std::getenv("SGSPEC_PRECISION")) {
    long p = std::strtol(env, nullptr, 10);
    if (p >= 64) return static_cast<mpfr_prec_t>(p);
  }
  return Ball::kDefaultPrecision;
}

BoundaryCondition parse_bc(const std::string& name) {
  if (name == "dirichlet") return BoundaryCondition::Dirichlet;
  if (name == "neumann") return BoundaryCondition::Neumann;
  throw CLI::ValidationError("--bc", "expected 'dirichlet' or 'neumann'");
}

int emit_reports(const std::vector<GapReport>& reports) {
  bool all_certified = true;
  for (const auto& r : reports) {
    std::cout << report_jsonl(r) << "\n";
    all_certified = all_certified && r.certified();
  }
  return all_certified ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigorous spectra of the Laplacian on the Sierpinski gasket"};
  app.require_subcommand(1);

  long precision = static_cast<long>(default_precision());
  std::string tolerance = "1e-30";
  std::function<int()> run;

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Finite-level eigenvalue set");
  long sp_level = 0;
  std::string sp_bc = "dirichlet", sp_format = "csv";
  long sp_digits = 20;
  spectrum_cmd->add_option("--level", sp_level, "level m")->required();
  spectrum_cmd->add_option("--bc", sp_bc, "dirichlet|neumann");
  spectrum_cmd->add_option("--format", sp_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  spectrum_cmd->add_option("--digits", sp_digits, "significant digits")->check(CLI::Range(2L, 60L));
  spectrum_cmd->add_option("--precision", precision, "mantissa bits (>= 64)");
  spectrum_cmd->callback([&] {
    run = [&]() {
      auto s = finite_spectrum(static_cast<int>(sp_level), parse_bc(sp_bc),
                               static_cast<mpfr_prec_t>(precision));
      if (sp_format == "json") {
        std::cout << spectrum_json(*s, static_cast<int>(sp_digits)).dump(2) << "\n";
      } else {
        std::cout << spectrum_csv(*s, static_cast<int>(sp_digits));
      }
      return kExitOk;
    };
  });

  // constants
  auto* constants_cmd = app.add_subcommand("constants", "Limit constants and gap ratios");
  constants_cmd->add_option("--precision", precision, "mantissa bits (>= 64)");
  constants_cmd->add_option("--tolerance", tolerance, "limit enclosure radius bound");
  constants_cmd->callback([&] {
    run = [&]() {
      Ball tol = Ball::from_decimal(tolerance, 64);
      std::cout << constants_json(static_cast<mpfr_prec_t>(precision), tol).dump(2) << "\n";
      return kExitOk;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Certify gap claims (JSON lines)");
  std::string claim, vf_bc;
  long min_m = -1, max_m = -1, min_k = -1, max_k = -1, fixation = -1;
  verify_cmd
      ->add_option("--claim", claim, "key1|key2|induction|prelowest|fullmin|theorem|dyadic")
      ->required()
      ->check(CLI::IsMember({"key1", "key2", "induction", "prelowest", "fullmin", "theorem",
                             "dyadic"}));
  verify_cmd->add_option("--bc", vf_bc, "restrict to one boundary condition");
  verify_cmd->add_option("--min-m", min_m, "first level of the sweep");
  verify_cmd->add_option("--max-m", max_m, "last level of the sweep");
  verify_cmd->add_option("--min-k", min_k, "first k (prelowest)");
  verify_cmd->add_option("--max-k", max_k, "last k (prelowest)");
  verify_cmd->add_option("--fixation", fixation, "single truncation level (theorem)");
  verify_cmd->add_option("--precision", precision, "mantissa bits (>= 64)");
  verify_cmd->add_option("--tolerance", tolerance, "limit enclosure radius bound");
  verify_cmd->callback([&] {
    run = [&]() {
      auto prec = static_cast<mpfr_prec_t>(precision);
      Ball tol = Ball::from_decimal(tolerance, 64);
      std::vector<BoundaryCondition> bcs;
      if (vf_bc.empty()) {
        bcs = {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann};
      } else {
        bcs = {parse_bc(vf_bc)};
      }
      std::vector<GapReport> reports;
      if (claim == "key1" || claim == "key2") {
        long lo = min_m > 0 ? min_m : 1, hi = max_m > 0 ? max_m : 40;
        for (long m = lo; m <= hi; ++m) {
          reports.push_back(claim == "key1" ? verify_key1(static_cast<int>(m), prec)
                                            : verify_key2(static_cast<int>(m), prec));
        }
      } else if (claim == "induction") {
        long lo = min_m > 0 ? min_m : 3, hi = max_m > 0 ? max_m : 10;
        for (long m = lo; m <= hi; ++m) {
          reports.push_back(verify_induction_step(static_cast<int>(m), prec));
        }
      } else if (claim == "prelowest") {
        long mlo = min_m > 0 ? min_m : 3, mhi = max_m > 0 ? max_m : 6;
        long klo = min_k > 0 ? min_k : 2, khi = max_k > 0 ? max_k : 5;
        for (long m = mlo; m <= mhi; ++m) {
          for (long k = klo; k <= khi; ++k) {
            reports.push_back(verify_pre_lowest(static_cast<int>(m), static_cast<int>(k), prec));
          }
        }
      } else if (claim == "fullmin") {
        long lo = min_m > 0 ? min_m : 1, hi = max_m > 0 ? max_m : 10;
        for (BoundaryCondition bc : bcs) {
          for (long m = lo; m <= hi; ++m) {
            reports.push_back(verify_full_level_minimum(static_cast<int>(m), bc, prec));
          }
        }
      } else if (claim == "theorem") {
        for (BoundaryCondition bc : bcs) {
          long lo = fixation > 0 ? fixation : 4, hi = fixation > 0 ? fixation : 8;
          for (long L = lo; L <= hi; ++L) {
            reports.push_back(verify_min_gap_theorem(static_cast<int>(L), bc, tol, prec));
          }
        }
      } else if (claim == "dyadic") {
        long hi = max_m > 0 ? max_m : 8;
        for (long m = 2; m <= hi; ++m) {
          for (long mp = m; mp <= hi; ++mp) {
            if (mp > m) {
              reports.push_back(report_interval_separation(static_cast<int>(m),
                                                           static_cast<int>(mp), prec, tol));
            }
            reports.push_back(report_sum_closure(static_cast<int>(m), static_cast<int>(mp), prec,
                                                 tol));
          }
        }
      }
      return emit_reports(reports);
    };
  });

  // table1
  auto* table1_cmd = app.add_subcommand("table1", "Base-case spacing table (CSV)");
  table1_cmd->add_option("--precision", precision, "mantissa bits (>= 64)");
  table1_cmd->callback([&] {
    run = [&]() {
      std::cout << table1_csv(static_cast<mpfr_prec_t>(precision));
      return kExitOk;
    };
  });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Graph-Laplacian cross-check");
  long or_level = 0, or_cap = 5;
  std::string or_bc = "dirichlet", or_tol = "1e-9", dump_graph, dump_matrix;
  oracle_cmd->add_option("--level", or_level, "level m")->required();
  oracle_cmd->add_option("--bc", or_bc, "dirichlet|neumann");
  oracle_cmd->add_option("--tol", or_tol, "match tolerance");
  oracle_cmd->add_option("--cap", or_cap, "largest level accepted");
  oracle_cmd->add_option("--dump-graph", dump_graph, "write edge list to file");
  oracle_cmd->add_option("--dump-matrix", dump_matrix, "write dense matrix to file");
  oracle_cmd->add_option("--precision", precision, "mantissa bits (>= 64)");
  oracle_cmd->callback([&] {
    run = [&]() {
      if (or_level < 0 || or_level > or_cap) {
        std::cerr << "oracle: level " << or_level << " above cap " << or_cap << "\n";
        return kExitUsage;
      }
      BoundaryCondition bc = parse_bc(or_bc);
      if (!dump_graph.empty() || !dump_matrix.empty()) {
        GasketGraph g = build_graph(static_cast<int>(or_level));
        if (!dump_graph.empty()) {
          std::ofstream os(dump_graph);
          write_graph(os, g);
        }
        if (!dump_matrix.empty()) {
          std::ofstream os(dump_matrix);
          write_matrix(os, laplacian_matrix(g, bc));
        }
      }
      CrossCheckReport r = cross_check(static_cast<int>(or_level), bc, std::stod(or_tol),
                                       static_cast<mpfr_prec_t>(precision));
      std::cout << cross_check_json(r).dump(2) << "\n";
      return r.match ? kExitOk : kExitMismatch;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (precision < 64) {
    std::cerr << "precision must be at least 64 bits\n";
    return kExitUsage;
  }

  try {
    return run();
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const MismatchError& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const ToleranceNotReached& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
