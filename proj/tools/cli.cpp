// Copyright 2026 The fockchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "validate.hpp"

namespace fockchan::cli {

namespace {

using nlohmann::ordered_json;

struct FigureSpec {
  StateFamily family;
  ChannelKind kind;
  const char* title;
};

FigureSpec figure_spec(int id) {
  switch (id) {
    case 1: return {StateFamily::Noon, ChannelKind::Attenuator, "NOON state vs Gaussian states, noisy attenuator"};
    case 2: return {StateFamily::Pnes, ChannelKind::Attenuator, "PNES vs Gaussian states, noisy attenuator"};
    case 3: return {StateFamily::Noon, ChannelKind::Amplifier, "NOON state vs Gaussian states, noisy amplifier"};
    case 4: return {StateFamily::Pnes, ChannelKind::Amplifier, "PNES vs Gaussian states, noisy amplifier"};
    default: throw UsageError("figure id must be 1, 2, 3 or 4");
  }
}

// Writes to --out when given, otherwise to the command's stdout.
void emit(const RunConfig& config, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (config.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open " + config.out_path + " for writing");
  body(file);
  if (!file) throw std::ios_base::failure("write failed for " + config.out_path);
}

ordered_json curve_json(const ThresholdCurve& curve) {
  ordered_json records = ordered_json::array();
  for (const CurvePoint& p : curve.points) {
    records.push_back({{"kappa", p.kappa},
                       {"a_curve", p.a_threshold},
                       {"g_inf", p.g_inf},
                       {"g_1", p.g_1},
                       {"margin", p.margin()},
                       {"bracket_width", p.bracket_width},
                       {"iterations", p.iterations}});
  }
  ordered_json failures = ordered_json::array();
  for (const CurveFailure& f : curve.failures) failures.push_back({{"kappa", f.kappa}, {"reason", f.reason}});
  return {{"family", to_string(curve.family)},
          {"channel", to_string(curve.kind)},
          {"n", curve.n},
          {"tol", curve.tol},
          {"records", records},
          {"failures", failures}};
}

void report_failures(const ThresholdCurve& curve, std::ostream& err) {
  for (const CurveFailure& f : curve.failures) {
    err << "warning: solver: kappa=" << format_double(f.kappa) << ": " << f.reason << "\n";
  }
}

int cmd_witness(const RunConfig& config, std::ostream& out) {
  const ChannelParams params(config.kind, *config.kappa, *config.noise);
  const WitnessResult w = evaluate_witness(witness_index(config.family, config.kind), config.family, config.n, params);
  std::optional<double> ppt;
  if (config.full_ppt) {
    const int cutoff = config.cutoff.value_or(adaptive_cutoff(config.n, params, config.tail_tol));
    ppt = full_ppt_min_eigenvalue(
        evolve_two_sided(make_state(config.family, config.n), params, cutoff, config.tail_tol).rho);
  }
  const SingleModeElements& x = w.elements;
  emit(config, out, [&](std::ostream& os) {
    if (config.format == OutputFormat::Json) {
      ordered_json j = {{"family", to_string(config.family)},
                        {"n", config.n},
                        {"kind", to_string(config.kind)},
                        {"kappa", params.kappa()},
                        {"a", params.noise()},
                        {"index", to_string(w.index)},
                        {"delta", w.delta},
                        {"entangled", w.entangled},
                        {"x1", x.x1},
                        {"x2", x.x2},
                        {"x3", x.x3},
                        {"x4", x.x4},
                        {"x5", x.x5}};
      if (ppt) j["full_ppt_min_eigenvalue"] = *ppt;
      os << j.dump(2) << "\n";
      return;
    }
    os << "family,n,kind,kappa,a,index,delta,entangled,x1,x2,x3,x4,x5" << (ppt ? ",full_ppt_min_eigenvalue" : "")
       << "\n";
    os << to_string(config.family) << ',' << config.n << ',' << to_string(config.kind) << ','
       << format_double(params.kappa()) << ',' << format_double(params.noise()) << ',' << to_string(w.index) << ','
       << format_double(w.delta) << ',' << (w.entangled ? "true" : "false") << ',' << format_double(x.x1) << ','
       << format_double(x.x2) << ',' << format_double(x.x3) << ',' << format_double(x.x4) << ','
       << format_double(x.x5);
    if (ppt) os << ',' << format_double(*ppt);
    os << "\n";
  });
  return kExitOk;
}

int cmd_evolve(const RunConfig& config, std::ostream& out) {
  const ChannelParams params(config.kind, *config.kappa, *config.noise);
  const int cutoff = config.cutoff.value_or(adaptive_cutoff(config.n, params, config.tail_tol));
  const NonGaussianState state = make_state(config.family, config.n);
  const TwoSidedOutput evolved = evolve_two_sided(state, params, cutoff, config.tail_tol);
  const Eigen::Matrix4d block = project_subspace(evolved.rho, config.n);

  std::vector<std::pair<std::string, double>> rows = {
      {"cutoff", cutoff},
      {"trace", evolved.rho.trace()},
      {"dropped_weight", evolved.dropped_weight},
      {"delta_projected", delta_from_projection(config.family, block)},
      {"full_ppt_min_eigenvalue", full_ppt_min_eigenvalue(evolved.rho)},
  };
  const char* labels[] = {"00", "0n", "n0", "nn"};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows.emplace_back(std::string("rho_") + labels[i] + "_" + labels[j], block(i, j));

  emit(config, out, [&](std::ostream& os) {
    if (config.format == OutputFormat::Json) {
      ordered_json j = {{"family", to_string(config.family)},
                        {"n", config.n},
                        {"kind", to_string(config.kind)},
                        {"kappa", params.kappa()},
                        {"a", params.noise()}};
      for (const auto& [k, v] : rows) j[k] = v;
      os << j.dump(2) << "\n";
      return;
    }
    os << "quantity,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << format_double(v) << "\n";
  });
  return kExitOk;
}

int write_curve(const RunConfig& config, const ThresholdCurve& curve, std::ostream& out, std::ostream& err) {
  report_failures(curve, err);
  emit(config, out, [&](std::ostream& os) {
    if (config.format == OutputFormat::Json) {
      os << curve_json(curve).dump(2) << "\n";
    } else {
      write_curve_csv(curve, os);
    }
  });
  if (curve.points.empty()) {
    err << "error: solver: no grid point produced a threshold\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const KappaGrid grid = config.grid.value_or(config.kind == ChannelKind::Attenuator ? KappaGrid::attenuator_default()
                                                                                     : KappaGrid::amplifier_default());
  const ThresholdCurve curve = sweep_curve(config.family, config.kind, config.n, grid, config.tol, config.threads);
  return write_curve(config, curve, out, err);
}

int cmd_figure(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const FigureSpec spec = figure_spec(config.figure_id);
  const KappaGrid grid = config.grid.value_or(spec.kind == ChannelKind::Attenuator ? KappaGrid::attenuator_default()
                                                                                   : KappaGrid::amplifier_default());
  const ThresholdCurve curve = sweep_curve(spec.family, spec.kind, config.n, grid, config.tol, config.threads);
  const int code = write_curve(config, curve, out, err);

  if (!config.meta_path.empty()) {
    const std::string curve_name = std::string(spec.family == StateFamily::Noon ? "N" : "P") + std::to_string(config.n);
    const ordered_json meta = {
        {"figure", config.figure_id},
        {"title", spec.title},
        {"x_axis", {{"column", "kappa"}, {"label", "kappa"}}},
        {"y_axis", {{"label", "additional noise a"}}},
        {"curves",
         {{{"column", "a_curve"}, {"name", curve_name}},
          {{"column", "g_inf"}, {"name", "g_inf"}},
          {{"column", "g_1"}, {"name", "g_1"}}}},
        {"region", {{"name", "R"}, {"condition", "margin > 0"}}},
        {"family", to_string(spec.family)},
        {"channel", to_string(spec.kind)},
        {"n", config.n},
        {"kappa_min", grid.kappa_min},
        {"kappa_max", grid.kappa_max},
        {"steps", grid.steps},
        {"tol", config.tol},
        {"failures", curve_json(curve)["failures"]},
    };
    std::ofstream file(config.meta_path, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open " + config.meta_path + " for writing");
    file << meta.dump(2) << "\n";
  }
  return code;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  const std::vector<CheckResult> checks = run_validation({config.quick, config.perturb});
  bool all = true;
  ordered_json list = ordered_json::array();
  for (const CheckResult& c : checks) {
    all = all && c.passed;
    list.push_back({{"name", c.name},
                    {"description", c.description},
                    {"tolerance", c.tolerance},
                    {"observed", c.observed},
                    {"passed", c.passed}});
  }
  const ordered_json report = {{"quick", config.quick}, {"perturb_x5", config.perturb}, {"passed", all}, {"checks", list}};
  emit(config, out, [&](std::ostream& os) { os << report.dump(2) << "\n"; });
  return all ? kExitOk : kExitFailure;
}

// --- argument plumbing -------------------------------------------------------

struct RawArgs {
  std::string state = "noon";
  std::string channel = "att";
  std::string cutoff = "auto";
  std::string format = "csv";
  std::optional<double> kappa_min, kappa_max;
  std::optional<int> steps;
};

StateFamily parse_family(const std::string& s) {
  if (s == "noon") return StateFamily::Noon;
  if (s == "pnes") return StateFamily::Pnes;
  throw UsageError("--state must be noon or pnes");
}

ChannelKind parse_kind(const std::string& s) {
  if (s == "att") return ChannelKind::Attenuator;
  if (s == "amp") return ChannelKind::Amplifier;
  throw UsageError("--channel must be att or amp");
}

std::optional<int> parse_cutoff(const std::string& s) {
  if (s == "auto") return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    throw UsageError("--cutoff must be 'auto' or a non-negative integer");
  }
  return value;
}

void finish_config(RunConfig& config, const RawArgs& raw) {
  config.family = parse_family(raw.state);
  config.kind = parse_kind(raw.channel);
  config.cutoff = parse_cutoff(raw.cutoff);
  if (raw.format == "csv") {
    config.format = OutputFormat::Csv;
  } else if (raw.format == "json") {
    config.format = OutputFormat::Json;
  } else {
    throw UsageError("--format must be csv or json");
  }
  if (raw.kappa_min || raw.kappa_max || raw.steps) {
    KappaGrid grid = config.kind == ChannelKind::Attenuator ? KappaGrid::attenuator_default()
                                                            : KappaGrid::amplifier_default();
    if (config.command == "figure") {
      grid = figure_spec(config.figure_id).kind == ChannelKind::Attenuator ? KappaGrid::attenuator_default()
                                                                            : KappaGrid::amplifier_default();
    }
    if (raw.kappa_min) grid.kappa_min = *raw.kappa_min;
    if (raw.kappa_max) grid.kappa_max = *raw.kappa_max;
    if (raw.steps) grid.steps = *raw.steps;
    config.grid = grid;
  }
}

}  // namespace

void check_config(const RunConfig& config) {
  const bool single = config.kappa.has_value() || config.noise.has_value();
  if (single && config.grid) throw UsageError("single-point (--kappa/--a) and grid options are mutually exclusive");
  if (config.command == "witness" || config.command == "evolve") {
    if (!config.kappa || !config.noise) throw UsageError(config.command + " requires --kappa and --a");
  }
  if (config.grid) {
    if (!(config.grid->kappa_min < config.grid->kappa_max)) throw UsageError("grid requires --kappa-min < --kappa-max");
    if (config.grid->steps < 2) throw UsageError("grid requires --steps >= 2");
  }
  if (!(config.tol > 0.0)) throw UsageError("--tol must be > 0");
  if (!(config.tail_tol > 0.0)) throw UsageError("--tail-tol must be > 0");
  if (config.n < 1) throw UsageError("--n must be >= 1");
  if (config.cutoff && *config.cutoff < config.n) throw UsageError("--cutoff must be >= n");
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

unsigned threads_from_env() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FOCKCHAN_THREADS")) {
    unsigned cap = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc() && ptr == s.data() + s.size() && cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

void write_curve_csv(const ThresholdCurve& curve, std::ostream& os) {
  os << kCurveCsvHeader << "\n";
  for (const CurvePoint& p : curve.points) {
    os << format_double(p.kappa) << ',' << format_double(p.a_threshold) << ',' << format_double(p.g_inf) << ','
       << format_double(p.g_1) << ',' << format_double(p.margin()) << "\n";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noisy attenuator/amplifier channels and non-Gaussian entanglement witnesses", "fockchan"};
  app.require_subcommand(1);

  RunConfig config;
  RawArgs raw;
  double kappa = 0.0, noise = 0.0;

  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", raw.state, "State family: noon | pnes")->capture_default_str();
    sub->add_option("--n", config.n, "Photon number n")->capture_default_str();
  };
  auto add_channel = [&](CLI::App* sub) {
    sub->add_option("--channel", raw.channel, "Channel kind: att | amp")->capture_default_str();
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--kappa", kappa, "Channel parameter kappa")->required();
    sub->add_option("--a", noise, "Additional noise a")->required();
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--kappa-min", raw.kappa_min, "Smallest grid kappa");
    sub->add_option("--kappa-max", raw.kappa_max, "Largest grid kappa");
    sub->add_option("--steps", raw.steps, "Number of grid points (>= 2)");
    sub->add_option("--tol", config.tol, "Root-finding tolerance in a")->capture_default_str();
  };
  auto add_numerics = [&](CLI::App* sub) {
    sub->add_option("--tail-tol", config.tail_tol, "Truncation tolerance for the gain series")->capture_default_str();
    sub->add_option("--cutoff", raw.cutoff, "Fock cutoff: auto | <int>")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "Output format: csv | json")->capture_default_str();
    sub->add_option("--out", config.out_path, "Output file (default: stdout)");
  };

  CLI::App* witness = app.add_subcommand("witness", "Evaluate the 2x2 NPT witness at one channel");
  add_state(witness);
  add_channel(witness);
  add_point(witness);
  add_numerics(witness);
  add_output(witness);
  witness->add_flag("--full-ppt", config.full_ppt, "Also report the full partial-transpose minimum eigenvalue");

  CLI::App* evolve = app.add_subcommand("evolve", "Evolve a NOON/PNES state through two identical channels");
  add_state(evolve);
  add_channel(evolve);
  add_point(evolve);
  add_numerics(evolve);
  add_output(evolve);

  CLI::App* sweep = app.add_subcommand("sweep", "Threshold curve a(kappa) over a kappa grid");
  add_state(sweep);
  add_channel(sweep);
  add_grid(sweep);
  add_output(sweep);

  CLI::App* figure = app.add_subcommand("figure", "Data for figure 1-4 (NOON/PNES x attenuator/amplifier)");
  figure->add_option("--id", config.figure_id, "Figure id 1..4")->required()->check(CLI::Range(1, 4));
  figure->add_option("--n", config.n, "Photon number n")->capture_default_str();
  add_grid(figure);
  add_output(figure);
  figure->add_option("--meta", config.meta_path, "Write plot metadata JSON to this path");

  CLI::App* validate = app.add_subcommand("validate", "Run the oracle cross-check suite");
  validate->add_flag("--quick", config.quick, "Small subset (n <= 3, cutoff <= 16)");
  validate->add_option("--perturb", config.perturb, "Perturb closed-form x5 by this amount");
  validate->add_option("--out", config.out_path, "Report file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    finish_config(config, raw);
    if (config.command == "witness" || config.command == "evolve") {
      config.kappa = kappa;
      config.noise = noise;
    }
    config.threads = threads_from_env();
    check_config(config);

    if (config.command == "witness") return cmd_witness(config, out);
    if (config.command == "evolve") return cmd_evolve(config, out);
    if (config.command == "sweep") return cmd_sweep(config, out, err);
    if (config.command == "figure") return cmd_figure(config, out, err);
    return cmd_validate(config, out);
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: domain: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: dimension: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BracketError& e) {
    err << "error: solver: " << e.what() << "\n";
    return kExitFailure;
  } catch (const NumericError& e) {
    err << "error: numeric: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::ios_base::failure& e) {
    err << "error: io: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace fockchan::cli
