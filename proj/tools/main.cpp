// hyperspec: spectral radii of adjacency / signless Laplacian tensors of
// k-uniform hypergraphs, degree-based bounds, and a verification suite.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/json_report.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/suite.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitParseError = 2;
constexpr int kExitNumericFailure = 3;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenSpec {
  std::string family;
  std::vector<int> args;
};

GenSpec parse_gen_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("generator spec must look like 'hyperstar:4,3'");
  }
  GenSpec spec;
  spec.family = text.substr(0, colon);
  std::stringstream rest(text.substr(colon + 1));
  std::string field;
  while (std::getline(rest, field, ',')) {
    try {
      spec.args.push_back(std::stoi(field));
    } catch (const std::exception&) {
      throw ParseError("bad generator argument '" + field + "' in '" + text + "'");
    }
  }
  return spec;
}

bool spec_needs_seed(const std::string& text) {
  return text.rfind("random:", 0) == 0 || text.rfind("regular:", 0) == 0;
}

hyperspec::Hypergraph generate(const GenSpec& spec, std::optional<std::uint64_t> seed) {
  const auto expect = [&](std::size_t count) {
    if (spec.args.size() != count) {
      throw ParseError("generator '" + spec.family + "' takes " +
                       std::to_string(count) + " arguments");
    }
  };
  try {
    if (spec.family == "hyperstar") {
      expect(2);
      return hyperspec::gen_hyperstar(spec.args[0], spec.args[1]);
    }
    if (spec.family == "complete") {
      expect(2);
      return hyperspec::gen_complete(spec.args[0], spec.args[1]);
    }
    if (spec.family == "blocks") {
      expect(2);
      return hyperspec::gen_disjoint_blocks(spec.args[0], spec.args[1]);
    }
    if (spec.family == "random") {
      expect(3);
      if (!seed) throw ParseError("random generators need --seed");
      return hyperspec::gen_random(spec.args[0], spec.args[1], spec.args[2], *seed);
    }
    if (spec.family == "regular") {
      expect(3);
      if (!seed) throw ParseError("random generators need --seed");
      return hyperspec::gen_random_regular(spec.args[0], spec.args[1], spec.args[2],
                                           *seed);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("infeasible generator spec: ") + e.what());
  }
  throw ParseError("unknown generator family '" + spec.family + "'");
}

// Positional SOURCE: a generator spec when it contains ':', otherwise a path.
hyperspec::Hypergraph load_source(const std::string& source,
                                  std::optional<std::uint64_t> seed) {
  if (source.find(':') != std::string::npos) {
    return generate(parse_gen_spec(source), seed);
  }
  try {
    return hyperspec::read_uhg_file(source);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

std::vector<hyperspec::WeightSpec> parse_weight_choices(const std::string& weights) {
  using hyperspec::WeightSpec;
  if (weights.empty()) return {WeightSpec::uniform(), WeightSpec::degree()};
  if (weights == "uniform") return {WeightSpec::uniform()};
  if (weights == "degree") return {WeightSpec::degree()};
  if (weights.rfind("file:", 0) == 0) {
    const std::string path = weights.substr(5);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open weights file '" + path + "'");
    std::vector<double> values;
    double v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw ParseError("bad entry in weights file '" + path + "'");
    if (values.empty()) throw ParseError("weights file '" + path + "' is empty");
    return {WeightSpec::explicit_values("file:" + path, std::move(values))};
  }
  throw ParseError("weights must be uniform, degree, or file:PATH");
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm utc{};
  gmtime_r(&t, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string fmt(double v, int precision = 12) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

void print_estimate(std::ostream& out, const char* label,
                    const hyperspec::SpectralEstimate& est) {
  out << label << " = " << fmt(est.estimate) << "  in [" << fmt(est.lo, 15) << ", "
      << fmt(est.hi, 15) << "]"
      << "  iterations=" << est.iterations
      << "  converged=" << (est.converged ? "yes" : "no")
      << "  residual=" << fmt(est.residual, 3);
  if (!est.connected_input) out << "  (per-component)";
  out << '\n';
}

void print_instance_line(std::ostream& out, const hyperspec::BoundReport& report) {
  out << "instance: k=" << report.k << " n=" << report.n << " m=" << report.m
      << " connected=" << (report.connected ? "yes" : "no") << " class=";
  const auto& c = report.classification;
  out << hyperspec::to_string(c.kind);
  if (c.kind == hyperspec::Classification::Kind::Regular) out << "(d=" << c.degree << ")";
  if (c.kind == hyperspec::Classification::Kind::BlowupOfRegular) {
    out << "(apex=" << c.apex << ",d=" << c.base_degree << ")";
  }
  out << '\n';
}

void print_report_table(std::ostream& out, const hyperspec::BoundReport& report) {
  print_instance_line(out, report);
  if (report.spectral_adj) print_estimate(out, "rho(A)", *report.spectral_adj);
  if (report.adj_error) out << "rho(A): failed: " << *report.adj_error << '\n';
  if (report.spectral_q) print_estimate(out, "rho(Q)", *report.spectral_q);
  if (report.q_error) out << "rho(Q): failed: " << *report.q_error << '\n';

  // Sharpest bound first.
  auto entries = report.entries;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const hyperspec::BoundEntry& a, const hyperspec::BoundEntry& b) {
                     const double sa = a.slack ? *a.slack : std::numeric_limits<double>::infinity();
                     const double sb = b.slack ? *b.slack : std::numeric_limits<double>::infinity();
                     return sa < sb;
                   });
  out << std::left << std::setw(28) << "bound" << std::setw(18) << "value"
      << std::setw(18) << "slack" << std::setw(12) << "applicable"
      << "notes" << '\n';
  for (const auto& entry : entries) {
    out << std::left << std::setw(28) << entry.name << std::setw(18)
        << (std::isfinite(entry.value) ? fmt(entry.value) : "-") << std::setw(18)
        << (entry.slack ? fmt(*entry.slack, 6) : "-") << std::setw(12)
        << (entry.applicable ? "yes" : "no");
    std::string notes;
    if (entry.predicted_equality) notes += "equality-predicted ";
    if (entry.per_component_value) {
      notes += "per-component=" + fmt(*entry.per_component_value, 6) + " ";
    }
    if (!entry.witness.empty()) notes += entry.witness + " ";
    if (entry.error) notes += "error: " + *entry.error;
    out << notes << '\n';
  }
  int passed = 0;
  for (const auto& check : report.checks) passed += check.pass ? 1 : 0;
  out << "checks: " << passed << "/" << report.checks.size() << " passed\n";
  for (const auto& check : report.checks) {
    if (!check.pass) out << "  FAIL " << check.name << ": " << check.detail << '\n';
  }
}

int report_exit_code(const hyperspec::BoundReport& report) {
  if (report.numeric_failure()) return kExitNumericFailure;
  if (!report.all_checks_pass()) return kExitViolation;
  return 0;
}

void print_failures_to_stderr(const hyperspec::BoundReport& report) {
  if (report.adj_error) {
    std::cerr << "numeric failure (adjacency): " << *report.adj_error << '\n';
  }
  if (report.q_error) {
    std::cerr << "numeric failure (laplacian): " << *report.q_error << '\n';
  }
  if (report.spectral_adj && !report.spectral_adj->converged) {
    std::cerr << "numeric failure: adjacency solve did not converge within budget\n";
  }
  if (report.spectral_q && !report.spectral_q->converged) {
    std::cerr << "numeric failure: laplacian solve did not converge within budget\n";
  }
  for (const auto& check : report.checks) {
    if (!check.pass) {
      std::cerr << "violated: " << check.name << " (" << check.detail << ")\n";
    }
  }
}

struct CommonArgs {
  std::string source;
  std::string input_flag;
  double tolerance = 1e-10;
  long max_iterations = 200000;
  std::optional<std::uint64_t> seed;
  std::string weights;
  bool per_component = true;
  bool json = false;
  bool no_timestamp = false;

  std::string resolved_source() const {
    if (!input_flag.empty()) return input_flag;
    if (!source.empty()) return source;
    throw ParseError("no input: pass SOURCE or --input PATH");
  }

  hyperspec::SolverOptions solver_options() const {
    hyperspec::SolverOptions opts;
    opts.tolerance = tolerance;
    opts.max_iterations = max_iterations;
    opts.per_component = per_component;
    return opts;
  }
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool with_source = true) {
  if (with_source) {
    cmd->add_option("source", args.source,
                    "input .uhg path, or generator spec like hyperstar:4,3");
    cmd->add_option("--input", args.input_flag, ".uhg input path");
  }
  cmd->add_option("--tol", args.tolerance, "solver tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", args.max_iterations, "iteration budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", args.seed, "seed for random generators");
  cmd->add_flag("--per-component,!--no-per-component", args.per_component,
                "solve disconnected inputs per component (default on)");
  cmd->add_flag("--json", args.json, "emit machine-readable JSON on stdout");
  cmd->add_flag("--no-timestamp", args.no_timestamp,
                "omit the timestamp field from JSON output");
}

void emit_json(hyperspec::Json j, bool no_timestamp) {
  if (!no_timestamp) j["generated_at"] = iso_timestamp();
  std::cout << j.dump(2) << '\n';
}

int run_gen(const std::string& spec_text, std::optional<std::uint64_t> seed,
            const std::string& out_path, bool json, bool no_timestamp) {
  if (spec_needs_seed(spec_text) && !seed) {
    throw ParseError("generator '" + spec_text + "' needs --seed");
  }
  const auto h = generate(parse_gen_spec(spec_text), seed);
  if (!out_path.empty()) {
    hyperspec::write_uhg_file(h, out_path);
  } else {
    std::cout << hyperspec::write_uhg(h);
  }
  if (json) {
    hyperspec::Json j;
    j["spec"] = spec_text;
    j["k"] = h.uniformity();
    j["n"] = h.vertex_count();
    j["m"] = h.edge_count();
    if (!out_path.empty()) j["path"] = out_path;
    emit_json(std::move(j), no_timestamp);
  } else if (!out_path.empty()) {
    std::cout << "wrote " << out_path << ": k=" << h.uniformity()
              << " n=" << h.vertex_count() << " m=" << h.edge_count() << '\n';
  }
  return 0;
}

int run_spectral(const CommonArgs& args) {
  const auto h = load_source(args.resolved_source(), args.seed);
  const auto opts = args.solver_options();
  const auto adj = hyperspec::spectral_radius(h, hyperspec::TensorKind::Adjacency, opts);
  const auto q =
      hyperspec::spectral_radius(h, hyperspec::TensorKind::SignlessLaplacian, opts);
  if (args.json) {
    hyperspec::Json j;
    j["k"] = h.uniformity();
    j["n"] = h.vertex_count();
    j["m"] = h.edge_count();
    j["spectral_adj"] = hyperspec::to_json(adj);
    j["spectral_q"] = hyperspec::to_json(q);
    j["options"] = hyperspec::to_json(opts);
    emit_json(std::move(j), args.no_timestamp);
  } else {
    std::cout << "k=" << h.uniformity() << " n=" << h.vertex_count()
              << " m=" << h.edge_count() << '\n';
    print_estimate(std::cout, "rho(A)", adj);
    print_estimate(std::cout, "rho(Q)", q);
  }
  return (adj.converged && q.converged) ? 0 : kExitNumericFailure;
}

int run_bounds(const CommonArgs& args, bool verify) {
  const auto h = load_source(args.resolved_source(), args.seed);
  const auto report = hyperspec::full_report(h, args.solver_options(),
                                             parse_weight_choices(args.weights));
  if (args.json) {
    emit_json(hyperspec::to_json(report), args.no_timestamp);
  } else if (!verify) {
    print_report_table(std::cout, report);
  }
  const int code = report_exit_code(report);
  if (verify) {
    if (code != 0) {
      print_failures_to_stderr(report);
    } else if (!args.json) {
      std::cout << "ok: " << report.checks.size() << " checks passed ("
                << hyperspec::to_string(report.classification.kind) << ", rho(A)="
                << fmt(report.spectral_adj->estimate) << ", rho(Q)="
                << fmt(report.spectral_q->estimate) << ")\n";
    }
    return code;
  }
  return report.numeric_failure() ? kExitNumericFailure : 0;
}

int run_suite(int cases, std::uint64_t seed, const hyperspec::SuiteRanges& ranges,
              const CommonArgs& args) {
  const auto instances = hyperspec::suite_instances(cases, seed, ranges);
  const auto summary = hyperspec::run_suite(instances, args.solver_options());
  if (args.json) {
    emit_json(hyperspec::to_json(summary), args.no_timestamp);
  } else {
    std::cout << "cases: " << summary.cases << "  passed: " << summary.passed
              << "  failed: " << summary.cases - summary.passed << '\n';
    std::cout << "worst slack per bound:\n";
    for (const auto& [name, slack] : summary.worst_slack) {
      std::cout << "  " << std::left << std::setw(28) << name << fmt(slack, 6) << '\n';
    }
  }
  for (const auto& result : summary.results) {
    for (const auto& failure : result.failures) {
      std::cerr << "case " << result.index << " (k=" << result.k << " n=" << result.n
                << " m=" << result.m << "): " << failure << '\n';
    }
  }
  return summary.all_pass() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral radii and degree bounds for uniform hypergraph tensors"};
  app.require_subcommand(1);

  // gen
  std::string gen_spec;
  std::string gen_out;
  CommonArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a hypergraph and write .uhg");
  gen->add_option("spec", gen_spec,
                  "hyperstar:t,k | complete:n,k | blocks:t,r | random:n,m,k | regular:n,d,k")
      ->required();
  gen->add_option("-o,--output", gen_out, "output path (default: stdout)");
  add_common_flags(gen, gen_args, false);

  CommonArgs spectral_args;
  auto* spectral = app.add_subcommand("spectral", "certified spectral radius estimates");
  add_common_flags(spectral, spectral_args);

  CommonArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "bound report with slacks and checks");
  bounds->add_option("--weights", bounds_args.weights,
                     "uniform | degree | file:PATH (default: both uniform and degree)");
  add_common_flags(bounds, bounds_args);

  CommonArgs verify_args;
  auto* verify = app.add_subcommand("verify", "exit 0 iff all bound checks hold");
  verify->add_option("--weights", verify_args.weights,
                     "uniform | degree | file:PATH (default: both uniform and degree)");
  add_common_flags(verify, verify_args);

  int suite_cases = 100;
  std::uint64_t suite_seed = 0;
  bool suite_seed_set = false;
  hyperspec::SuiteRanges ranges;
  CommonArgs suite_args;
  auto* suite = app.add_subcommand("suite", "verify a seeded mix of instances");
  suite->add_option("cases", suite_cases, "number of instances")->check(CLI::PositiveNumber);
  auto* seed_opt = suite->add_option("--seed", suite_seed, "suite seed");
  suite->add_option("--kmin", ranges.k_min, "minimum uniformity");
  suite->add_option("--kmax", ranges.k_max, "maximum uniformity");
  suite->add_option("--nmax", ranges.n_max, "maximum vertex count");
  suite->add_option("--mmax", ranges.m_max, "maximum edge count");
  suite->add_option("--tol", suite_args.tolerance, "solver tolerance")
      ->check(CLI::PositiveNumber);
  suite->add_option("--max-iters", suite_args.max_iterations, "iteration budget")
      ->check(CLI::PositiveNumber);
  suite->add_flag("--json", suite_args.json, "emit JSON summary");
  suite->add_flag("--no-timestamp", suite_args.no_timestamp, "omit timestamp from JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return run_gen(gen_spec, gen_args.seed, gen_out, gen_args.json,
                     gen_args.no_timestamp);
    }
    if (spectral->parsed()) return run_spectral(spectral_args);
    if (bounds->parsed()) return run_bounds(bounds_args, false);
    if (verify->parsed()) return run_bounds(verify_args, true);
    if (suite->parsed()) {
      suite_seed_set = seed_opt->count() > 0;
      if (!suite_seed_set) throw ParseError("suite needs --seed");
      return run_suite(suite_cases, suite_seed, ranges, suite_args);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumericFailure;
  }
  return 0;
}
