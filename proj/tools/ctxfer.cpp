// ctxfer: command-line front end for the three-path interferometer toolkit.
//
// Subcommands: build, probs, weak, kd, coherence, check, scan, sample, probe.
// Exit codes: 0 ok, 2 usage/parse error, 3 violation detected (check only),
// 4 undefined rows with --strict.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctxfer/contextuality.hpp"
#include "ctxfer/errors.hpp"
#include "ctxfer/io.hpp"
#include "ctxfer/measurement.hpp"
#include "ctxfer/states.hpp"
#include "ctxfer/weak.hpp"

namespace {

using ctxfer::Context;
using ctxfer::PathId;

struct CommonOptions {
  double r1 = 0.5;
  double r2 = 0.5;
  bool symmetric = false;
  std::string state = "nf";
  std::string format = "json";
  std::string out;
  bool strict = false;
};

void add_network_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--r1", opt.r1, "first free reflectivity, in (0,1)");
  cmd->add_option("--r2", opt.r2, "last free reflectivity, in (0,1)");
  cmd->add_flag("--symmetric", opt.symmetric,
                "use the all-equal reflectivity (3-sqrt(5))/2 for r1 and r2");
}

void add_output_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
}

void add_state_flag(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--state", opt.state,
                  "input state: 'nf', 3 comma-separated amplitudes, or "
                  "@density.json");
}

ctxfer::PathVectorTable make_table(const CommonOptions& opt) {
  double r1 = opt.r1;
  double r2 = opt.r2;
  if (opt.symmetric) r1 = r2 = ctxfer::symmetric_reflectivity();
  return ctxfer::build_network(ctxfer::derive_reflectivities(r1, r2));
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw ctxfer::Error("cannot open output file '" + opt.out + "'");
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

PathId parse_path_or_throw(const std::string& name) {
  const auto id = ctxfer::parse_path(name);
  if (!id) throw ctxfer::ParseError("unknown path '" + name + "'");
  return *id;
}

PathId parse_outcome_or_throw(const std::string& name) {
  const PathId id = parse_path_or_throw(name);
  if (std::find(ctxfer::kOutcomes.begin(), ctxfer::kOutcomes.end(), id) ==
      ctxfer::kOutcomes.end())
    throw ctxfer::ParseError("outcome must be one of 1, 2, 3");
  return id;
}

Context parse_context_or_throw(const std::string& text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  names.push_back(current);
  if (names.size() != 3)
    throw ctxfer::ParseError("a context is a comma-separated triple of paths");
  std::array<PathId, 3> ids;
  for (std::size_t k = 0; k < 3; ++k) ids[k] = parse_path_or_throw(names[k]);
  for (const Context& ctx : ctxfer::contexts()) {
    const bool match = ctx.contains(ids[0]) && ctx.contains(ids[1]) &&
                       ctx.contains(ids[2]) && ids[0] != ids[1] &&
                       ids[1] != ids[2] && ids[0] != ids[2];
    if (match) return ctx;
  }
  throw ctxfer::ParseError("'" + text + "' is not one of the five contexts");
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) throw ctxfer::ParseError("empty entry in list");
    std::size_t used = 0;
    values.push_back(std::stod(current, &used));
    if (used != current.size())
      throw ctxfer::ParseError("bad number '" + current + "'");
    current.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      current.push_back(c);
  }
  flush();
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"five-context three-path interferometer toolkit"};
  app.require_subcommand(1);

  CommonOptions opt;

  CLI::App* cmd_build =
      app.add_subcommand("build", "derive reflectivities and path vectors");
  add_network_flags(cmd_build, opt);
  add_output_flags(cmd_build, opt);

  CLI::App* cmd_probs =
      app.add_subcommand("probs", "path probabilities for a state");
  add_network_flags(cmd_probs, opt);
  add_state_flag(cmd_probs, opt);
  add_output_flags(cmd_probs, opt);

  CLI::App* cmd_weak = app.add_subcommand(
      "weak", "weak values, KD elements and continuity residuals");
  add_network_flags(cmd_weak, opt);
  add_state_flag(cmd_weak, opt);
  add_output_flags(cmd_weak, opt);
  cmd_weak->add_flag("--strict", opt.strict,
                     "exit 4 when any outcome row is undefined");

  CLI::App* cmd_kd =
      app.add_subcommand("kd", "Kirkwood-Dirac quasiprobability table");
  add_network_flags(cmd_kd, opt);
  add_state_flag(cmd_kd, opt);
  add_output_flags(cmd_kd, opt);

  CLI::App* cmd_coherence = app.add_subcommand(
      "coherence", "coherence coefficients C(i|n,o) for one outcome pair");
  add_network_flags(cmd_coherence, opt);
  add_output_flags(cmd_coherence, opt);
  std::string coherence_n = "3";
  std::string coherence_o = "1";
  cmd_coherence->add_option("--n", coherence_n, "ket outcome n (1, 2 or 3)");
  cmd_coherence->add_option("--o", coherence_o, "bra outcome o (1, 2 or 3)");

  CLI::App* cmd_check =
      app.add_subcommand("check", "noncontextual inequality and decomposition");
  add_network_flags(cmd_check, opt);
  add_state_flag(cmd_check, opt);
  add_output_flags(cmd_check, opt);

  CLI::App* cmd_scan =
      app.add_subcommand("scan", "pf over a reflectivity grid");
  // Scan output is a plotting table, so it defaults to CSV; the shared
  // format option would inherit the json default.
  std::string scan_format = "csv";
  cmd_scan->add_option("--format", scan_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_scan->add_option("--out", opt.out, "write output to this file instead of stdout");
  std::size_t scan_grid = 21;
  double scan_min = 0.05;
  double scan_max = 0.95;
  cmd_scan->add_option("--grid", scan_grid, "points per axis (>= 2)");
  cmd_scan->add_option("--min", scan_min, "smallest reflectivity");
  cmd_scan->add_option("--max", scan_max, "largest reflectivity");

  CLI::App* cmd_sample =
      app.add_subcommand("sample", "Monte Carlo photon counting in one context");
  add_network_flags(cmd_sample, opt);
  add_state_flag(cmd_sample, opt);
  add_output_flags(cmd_sample, opt);
  std::string sample_context_text = "1,2,3";
  std::uint64_t sample_shots = 1000000;
  std::uint64_t sample_seed = 1;
  cmd_sample->add_option("--context", sample_context_text,
                         "context triple, e.g. f,S1,P1");
  cmd_sample->add_option("--shots", sample_shots, "number of detections");
  cmd_sample->add_option("--seed", sample_seed, "generator seed");

  CLI::App* cmd_probe = app.add_subcommand(
      "probe", "weak polarization probe of one path at one outcome");
  add_network_flags(cmd_probe, opt);
  add_state_flag(cmd_probe, opt);
  add_output_flags(cmd_probe, opt);
  cmd_probe->add_flag("--strict", opt.strict,
                      "exit 4 when the postselection is impossible");
  std::string probe_path = "f";
  std::string probe_outcome = "3";
  std::string probe_eps = "0.04,0.02,0.01";
  std::uint64_t probe_shots = 0;
  std::uint64_t probe_seed = 1;
  cmd_probe->add_option("--path", probe_path, "probed path");
  cmd_probe->add_option("--outcome", probe_outcome, "postselected output port");
  cmd_probe->add_option("--eps-list", probe_eps,
                        "comma-separated coupling angles in (0, 0.1]");
  cmd_probe->add_option("--shots", probe_shots,
                        "sampled mode with this many shots (0 = exact)");
  cmd_probe->add_option("--seed", probe_seed, "generator seed (sampled mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_build)) {
      const ctxfer::PathVectorTable table = make_table(opt);
      emit(opt, opt.format == "csv" ? ctxfer::io::network_csv(table)
                                    : ctxfer::io::network_document(table).dump(2));
      return 0;
    }

    if (app.got_subcommand(cmd_probs)) {
      const ctxfer::PathVectorTable table = make_table(opt);
      const ctxfer::DensityMatrix rho = ctxfer::io::load_state(opt.state, table);
      const ctxfer::ProbabilityTable probs = ctxfer::probability_table(rho, table);
      emit(opt, opt.format == "csv"
                    ? ctxfer::io::probability_csv(probs)
                    : ctxfer::io::probability_document(table, probs, opt.state)
                          .dump(2));
      return 0;
    }

    if (app.got_subcommand(cmd_weak)) {
      const ctxfer::PathVectorTable table = make_table(opt);
      const ctxfer::DensityMatrix rho = ctxfer::io::load_state(opt.state, table);
      const ctxfer::WeakReport report = ctxfer::weak_report(rho, table);
      emit(opt, opt.format == "csv"
                    ? ctxfer::io::weak_csv(report)
                    : ctxfer::io::weak_document(table, report, opt.state).dump(2));
      const bool any_undefined =
          !(report.outcome_defined[0] && report.outcome_defined[1] &&
            report.outcome_defined[2]);
      return (any_undefined && opt.strict) ? 4 : 0;
    }

    if (app.got_subcommand(cmd_kd)) {
      const ctxfer::PathVectorTable table = make_table(opt);
      const ctxfer::DensityMatrix rho = ctxfer::io::load_state(opt.state, table);
      emit(opt, opt.format == "csv"
                    ? ctxfer::io::kd_csv(table, rho)
                    : ctxfer::io::kd_document(table, rho, opt.state).dump(2));
      return 0;
    }

    if (app.got_subcommand(cmd_coherence)) {
      const ctxfer::PathVectorTable table = make_table(opt);
      const PathId n = parse_outcome_or_throw(coherence_n);
      const PathId o = parse_outcome_or_throw(coherence_o);
      emit(opt, opt.format == "csv"
                    ? ctxfer::io::coherence_csv(table, n, o)
                    : ctxfer::io::coherence_document(table, n, o).dump(2));
      return 0;
    }

    if (app.got_subcommand(cmd_check)) {
      const ctxfer::PathVectorTable table = make_table(opt);
      const ctxfer::DensityMatrix rho = ctxfer::io::load_state(opt.state, table);
      const ctxfer::ContextualityReport report =
          ctxfer::noncontextual_margin(rho, table);
      emit(opt, opt.format == "csv"
                    ? ctxfer::io::check_csv(report)
                    : ctxfer::io::check_document(table, report, opt.state).dump(2));
      return report.violated ? 3 : 0;
    }

    if (app.got_subcommand(cmd_scan)) {
      const std::vector<double> grid =
          ctxfer::uniform_grid(scan_min, scan_max, scan_grid);
      const ctxfer::ScanResult result = ctxfer::scan_violation(grid, grid);
      emit(opt, scan_format == "json" ? ctxfer::io::scan_document(result).dump(2)
                                      : ctxfer::io::scan_csv(result));
      return 0;
    }

    if (app.got_subcommand(cmd_sample)) {
      const ctxfer::PathVectorTable table = make_table(opt);
      const ctxfer::DensityMatrix rho = ctxfer::io::load_state(opt.state, table);
      const Context context = parse_context_or_throw(sample_context_text);
      const ctxfer::CountRecord record =
          ctxfer::sample_context(rho, table, context, sample_shots, sample_seed);
      emit(opt, opt.format == "csv"
                    ? ctxfer::io::count_csv(record)
                    : ctxfer::io::count_document(table, record, opt.state).dump(2));
      return 0;
    }

    if (app.got_subcommand(cmd_probe)) {
      const ctxfer::PathVectorTable table = make_table(opt);
      const ctxfer::DensityMatrix rho = ctxfer::io::load_state(opt.state, table);
      const PathId path = parse_path_or_throw(probe_path);
      const PathId outcome = parse_outcome_or_throw(probe_outcome);
      const std::vector<double> epsilons = parse_double_list(probe_eps);
      const ctxfer::ProbeMode mode =
          probe_shots > 0 ? ctxfer::ProbeMode::sample(probe_shots, probe_seed)
                          : ctxfer::ProbeMode::exact();
      try {
        std::vector<ctxfer::ProbeResult> samples;
        for (std::size_t k = 0; k < epsilons.size(); ++k) {
          ctxfer::ProbeMode step = mode;
          if (mode.sampled) step.seed = mode.seed + k;
          samples.push_back(
              ctxfer::weak_probe(rho, table, path, outcome, epsilons[k], step));
        }
        const ctxfer::Cx intercept =
            ctxfer::probe_extrapolate(rho, table, path, outcome, epsilons, mode);
        emit(opt, opt.format == "csv"
                      ? ctxfer::io::probe_csv(samples, intercept)
                      : ctxfer::io::probe_document(table, samples, intercept,
                                                   opt.state)
                            .dump(2));
      } catch (const ctxfer::ImpossiblePostselection& e) {
        ctxfer::io::json doc{{"schema", ctxfer::io::kSchema},
                             {"kind", "probe"},
                             {"state", opt.state},
                             {"path", probe_path},
                             {"outcome", probe_outcome},
                             {"defined", false},
                             {"reason", e.what()}};
        emit(opt, doc.dump(2));
        return opt.strict ? 4 : 0;
      }
      return 0;
    }
  } catch (const ctxfer::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  return 0;
}
