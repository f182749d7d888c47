// Command-line runner for the GAS toolkit: term/gate cost tables, seeded GAS
// experiment bundles, dictionary verification, circuit dumps, and the
// exhaustive-search baseline. Exit codes: 0 success, 2 configuration error,
// 3 resource limit.

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gas/circuit.hpp"
#include "gas/experiments.hpp"
#include "gas/polynomial.hpp"
#include "gas/problems.hpp"
#include "gas/rng.hpp"
#include "gas/search.hpp"
#include "gas/statevector.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ProblemOptions {
  std::string problem = "mimo";
  // mimo
  int mod_bits = 2;
  int n_tx = 2;
  int n_rx = 2;
  double sigma = 0.1;
  bool fixed = false;
  // syndrome
  std::string code = "hamming74";
  std::string syndrome_bits;
  // shared
  std::string instance_file;
  std::string objective_file;
};

struct ResolvedProblem {
  std::string name;
  int n = 0;
  gas::Polynomial binary{gas::VariableKind::Binary, 0};
  gas::Polynomial spin{gas::VariableKind::Spin, 0};
  bool census_counts_constant = false;  // syndrome tables count the merged constant
  json description;
};

void add_problem_options(CLI::App* cmd, ProblemOptions& opts) {
  cmd->add_option("--problem", opts.problem, "Problem family: mimo, syndrome or file")
      ->check(CLI::IsMember({"mimo", "syndrome", "file"}));
  cmd->add_option("--mod", opts.mod_bits,
                  "MIMO: half bits per symbol M (constellation 2^(2M)-QAM)");
  cmd->add_option("--nt", opts.n_tx, "MIMO: transmit antennas");
  cmd->add_option("--nr", opts.n_rx, "MIMO: receive antennas");
  cmd->add_option("--sigma", opts.sigma, "MIMO: noise standard deviation");
  cmd->add_flag("--fixed", opts.fixed, "MIMO: use the fixed 16-QAM 2x2 benchmark instance");
  cmd->add_option("--code", opts.code, "Syndrome: built-in parity matrix")
      ->check(CLI::IsMember({"hamming74", "hamming84"}));
  cmd->add_option("--syndrome", opts.syndrome_bits, "Syndrome: target syndrome bits, e.g. 010");
  cmd->add_option("--instance", opts.instance_file, "Load a JSON instance file");
  cmd->add_option("--objective", opts.objective_file, "Load an objective in the poly text format");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  json j;
  in >> j;
  return j;
}

ResolvedProblem resolve_problem(const ProblemOptions& opts, std::uint64_t seed) {
  ResolvedProblem resolved;
  if (opts.problem == "file" || !opts.objective_file.empty()) {
    std::ifstream in(opts.objective_file);
    if (!in) throw std::invalid_argument("cannot open objective file: " + opts.objective_file);
    const gas::Polynomial p = gas::parse_polynomial(in);
    resolved.name = fs::path(opts.objective_file).stem().string();
    resolved.n = p.variable_count();
    if (p.kind() == gas::VariableKind::Binary) {
      resolved.binary = p;
      resolved.spin = gas::binary_to_spin(p);
    } else {
      resolved.spin = p;
      resolved.binary = gas::spin_to_binary(p);
    }
    resolved.description = {{"type", "file"}, {"path", opts.objective_file}};
    resolved.description["objective"] = gas::format_polynomial(p);
    return resolved;
  }
  if (opts.problem == "mimo") {
    gas::MimoInstance inst;
    if (!opts.instance_file.empty()) {
      inst = gas::mimo_from_json(load_json_file(opts.instance_file));
      resolved.name = "mimo-instance";
    } else if (opts.fixed) {
      gas::Rng rng(seed);
      inst = gas::fixed_mimo_instance(rng);
      resolved.name = "mimo-fixed-16qam-2x2";
    } else {
      gas::Rng rng(seed);
      inst = gas::make_random_mimo_instance(opts.mod_bits, opts.n_tx, opts.n_rx, opts.sigma, rng);
      resolved.name = "mimo-M" + std::to_string(opts.mod_bits) + "-nt" + std::to_string(opts.n_tx);
    }
    resolved.n = inst.variable_count();
    resolved.binary = gas::mimo_objective(inst, gas::VariableKind::Binary);
    resolved.spin = gas::mimo_objective(inst, gas::VariableKind::Spin);
    resolved.description = gas::mimo_to_json(inst);
    return resolved;
  }
  // syndrome
  gas::SyndromeInstance inst;
  if (!opts.instance_file.empty()) {
    inst = gas::syndrome_from_json(load_json_file(opts.instance_file));
    resolved.name = "syndrome-instance";
  } else {
    inst = opts.code == "hamming84" ? gas::extended_hamming84_instance()
                                    : gas::hamming74_instance();
    resolved.name = opts.code;
  }
  if (!opts.syndrome_bits.empty()) {
    if (static_cast<int>(opts.syndrome_bits.size()) != inst.rows())
      throw std::invalid_argument("--syndrome length must match the parity row count");
    for (int j = 0; j < inst.rows(); ++j) {
      const char c = opts.syndrome_bits[static_cast<std::size_t>(j)];
      if (c != '0' && c != '1') throw std::invalid_argument("--syndrome must be a 0/1 string");
      inst.syndrome[static_cast<std::size_t>(j)] = c - '0';
    }
  }
  resolved.n = inst.columns();
  resolved.binary = gas::syndrome_objective(inst, gas::VariableKind::Binary);
  resolved.spin = gas::syndrome_objective(inst, gas::VariableKind::Spin);
  resolved.census_counts_constant = true;
  resolved.description = gas::syndrome_to_json(inst);
  return resolved;
}

std::string problem_hash(const ResolvedProblem& problem) {
  return gas::content_hash(problem.description.dump() + gas::format_polynomial(problem.binary));
}

std::ofstream open_output(const fs::path& dir, const std::string& name,
                          gas::ExperimentManifest& manifest) {
  std::ofstream out(dir / name);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  out << gas::manifest_reference_line(manifest);
  manifest.outputs.push_back(name);
  return out;
}

// --- count-terms ------------------------------------------------------------------

int run_count_terms(const ResolvedProblem& problem, const std::string& out_dir,
                    std::uint64_t seed) {
  const gas::DegreeCensus binary = gas::degree_census(problem.binary);
  const gas::DegreeCensus spin = gas::degree_census(problem.spin);
  const long long conventional =
      problem.census_counts_constant ? binary.total : binary.nonconstant_total();
  const long long proposed =
      problem.census_counts_constant ? spin.total : spin.nonconstant_total();

  std::cout << "problem: " << problem.name << "\n";
  std::cout << "degree,conventional_terms,proposed_terms\n";
  int max_degree = std::max(problem.binary.degree(), problem.spin.degree());
  for (int k = 0; k <= max_degree; ++k)
    std::cout << k << ',' << binary.at(k) << ',' << spin.at(k) << "\n";
  std::cout << "total_terms conventional=" << conventional << " proposed=" << proposed << "\n";

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    gas::ExperimentManifest manifest;
    manifest.command = "count-terms";
    manifest.config = {{"problem", problem.name}};
    manifest.master_seed = seed;
    manifest.inputs_hash = problem_hash(problem);
    auto csv = open_output(out_dir, "term_counts.csv", manifest);
    csv << "degree,conventional_terms,proposed_terms\n";
    for (int k = 0; k <= max_degree; ++k)
      csv << k << ',' << binary.at(k) << ',' << spin.at(k) << "\n";
    gas::write_manifest(out_dir, manifest);
  }
  return 0;
}

// --- count-gates ------------------------------------------------------------------

int run_count_gates(const ResolvedProblem& problem, int m, int sweep_max,
                    const ProblemOptions& opts, const std::string& out_dir,
                    std::uint64_t seed) {
  const gas::CostReport conv =
      gas::cost_report(problem.binary, gas::DictionaryDesign::Conventional, m);
  const gas::CostReport prop = gas::cost_report(problem.spin, gas::DictionaryDesign::Proposed, m);

  std::cout << "problem: " << problem.name << " m: " << m << "\n";
  std::cout << "degree,conventional_terms,conventional_cnots,proposed_terms,proposed_cnots\n";
  int max_degree = std::max(problem.binary.degree(), problem.spin.degree());
  for (int k = 1; k <= max_degree; ++k) {
    const auto cit = conv.per_degree.find(k);
    const auto pit = prop.per_degree.find(k);
    std::cout << k << ',' << (cit == conv.per_degree.end() ? 0 : cit->second.terms) << ','
              << (cit == conv.per_degree.end() ? 0 : cit->second.cnots) << ','
              << (pit == prop.per_degree.end() ? 0 : pit->second.terms) << ','
              << (pit == prop.per_degree.end() ? 0 : pit->second.cnots) << "\n";
  }
  std::cout << "cnot_per_value_qubit conventional=" << conv.cnot_per_value_qubit
            << " proposed=" << prop.cnot_per_value_qubit << "\n";
  std::cout << "rz_per_value_qubit conventional=" << conv.rz_per_value_qubit
            << " proposed=" << prop.rz_per_value_qubit << "\n";
  std::cout << "cnot_total conventional=" << conv.cnot_total
            << " proposed=" << prop.cnot_total << "\n";

  // closed-form sweep over constellation sizes (per value qubit)
  std::vector<std::array<long long, 3>> sweep;
  if (sweep_max > 0) {
    for (int mm = 1; mm <= sweep_max; ++mm) {
      long long conv_cnots = 0, prop_cnots = 0;
      for (int k = 1; k <= 2 * mm; ++k) {
        conv_cnots += gas::term_count_binary(mm, opts.n_tx, k) * gas::conventional_cnot_cost(k);
        prop_cnots += gas::term_count_spin(mm, opts.n_tx, k) * gas::proposed_cnot_cost(k);
      }
      sweep.push_back({mm, conv_cnots, prop_cnots});
    }
    std::cout << "sweep_m,conventional_cnots_per_value_qubit,proposed_cnots_per_value_qubit\n";
    for (const auto& row : sweep)
      std::cout << row[0] << ',' << row[1] << ',' << row[2] << "\n";
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    gas::ExperimentManifest manifest;
    manifest.command = "count-gates";
    manifest.config = {{"problem", problem.name}, {"m", m}, {"sweep", sweep_max}};
    manifest.master_seed = seed;
    manifest.inputs_hash = problem_hash(problem);
    auto csv = open_output(out_dir, "gate_counts.csv", manifest);
    csv << "degree,conventional_terms,conventional_cnots,proposed_terms,proposed_cnots\n";
    for (int k = 1; k <= max_degree; ++k) {
      const auto cit = conv.per_degree.find(k);
      const auto pit = prop.per_degree.find(k);
      csv << k << ',' << (cit == conv.per_degree.end() ? 0 : cit->second.terms) << ','
          << (cit == conv.per_degree.end() ? 0 : cit->second.cnots) << ','
          << (pit == prop.per_degree.end() ? 0 : pit->second.terms) << ','
          << (pit == prop.per_degree.end() ? 0 : pit->second.cnots) << "\n";
    }
    if (!sweep.empty()) {
      auto sweep_csv = open_output(out_dir, "gate_count_sweep.csv", manifest);
      sweep_csv << "m,conventional_cnots_per_value_qubit,proposed_cnots_per_value_qubit\n";
      for (const auto& row : sweep)
        sweep_csv << row[0] << ',' << row[1] << ',' << row[2] << "\n";
    }
    gas::write_manifest(out_dir, manifest);
  }
  return 0;
}

// --- gas --------------------------------------------------------------------------

struct GasCliOptions {
  std::string design = "proposed";
  std::string backend = "ideal";
  int m = 0;
  long long trials = 1000;
  std::uint64_t seed = 1;
  long long max_queries = 10000;
  long long max_iters = 1000000;
  unsigned threads = 0;
  std::string out_dir = "gas_out";
};

int run_gas(const ResolvedProblem& problem, const GasCliOptions& opts) {
  const gas::DictionaryDesign design = opts.design == "conventional"
                                           ? gas::DictionaryDesign::Conventional
                                           : gas::DictionaryDesign::Proposed;
  const gas::Polynomial& objective =
      design == gas::DictionaryDesign::Conventional ? problem.binary : problem.spin;

  gas::GasConfig cfg;
  cfg.seed = opts.seed;
  cfg.design = design;
  cfg.backend = opts.backend == "statevector" ? gas::GasBackend::Statevector
                                              : gas::GasBackend::Ideal;
  cfg.max_queries = opts.max_queries;
  cfg.max_iterations = opts.max_iters;
  cfg.m_override = opts.m;

  const std::vector<gas::GasTrace> traces =
      gas::run_gas_trials(objective, cfg, opts.trials, opts.threads);

  // optimum for the CDF-of-queries outputs (n <= 24 by construction here)
  const gas::ExhaustiveResult opt = gas::exhaustive_search(objective);
  std::vector<std::optional<long long>> to_opt_qd, to_opt_cd;
  long long reached = 0;
  for (const auto& trace : traces) {
    to_opt_qd.push_back(trace.queries_to_reach(opt.best_value));
    to_opt_cd.push_back(trace.measurements_to_reach(opt.best_value));
    if (to_opt_qd.back()) ++reached;
  }

  // classical random-order baseline with one stream per trial
  std::vector<std::optional<long long>> baseline;
  for (long long trial = 0; trial < opts.trials; ++trial) {
    gas::Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(trial));
    baseline.emplace_back(gas::random_order_queries_to_optimum(objective, rng));
  }

  fs::create_directories(opts.out_dir);
  gas::ExperimentManifest manifest;
  manifest.command = "gas";
  manifest.config = {{"problem", problem.name},
                     {"design", opts.design},
                     {"backend", opts.backend},
                     {"m_override", opts.m},
                     {"lambda", cfg.lambda},
                     {"max_queries", opts.max_queries},
                     {"max_iters", opts.max_iters}};
  manifest.config["instance"] = problem.description;
  manifest.master_seed = opts.seed;
  manifest.trials = opts.trials;
  manifest.inputs_hash = problem_hash(problem);

  {
    auto csv = open_output(opts.out_dir, "trace.csv", manifest);
    gas::write_trace_csv(csv, traces);
  }
  {
    auto csv = open_output(opts.out_dir, "objective_vs_qd.csv", manifest);
    gas::write_curve_csv(csv, gas::objective_vs_queries(traces, opts.max_queries), "cum_qd");
  }
  {
    long long max_cd = 0;
    for (const auto& trace : traces) max_cd = std::max(max_cd, trace.total_measurements());
    auto csv = open_output(opts.out_dir, "objective_vs_cd.csv", manifest);
    gas::write_curve_csv(csv, gas::objective_vs_measurements(traces, max_cd), "cum_cd");
  }
  {
    auto csv = open_output(opts.out_dir, "cdf_qd.csv", manifest);
    gas::write_cdf_csv(csv, gas::cdf_points(to_opt_qd), "queries");
  }
  {
    auto csv = open_output(opts.out_dir, "cdf_cd.csv", manifest);
    gas::write_cdf_csv(csv, gas::cdf_points(to_opt_cd), "measurements");
  }
  {
    auto csv = open_output(opts.out_dir, "exhaustive_cdf.csv", manifest);
    gas::write_cdf_csv(csv, gas::cdf_points(baseline), "evaluations");
  }
  gas::write_manifest(opts.out_dir, manifest);

  std::cout << "problem: " << problem.name << " design: " << opts.design
            << " backend: " << opts.backend << "\n";
  std::cout << "trials: " << opts.trials << " reached_optimum: " << reached << "\n";
  std::cout << "optimum: " << gas::format_double(opt.best_value) << " at "
            << gas::bits_to_string(opt.best_bits, problem.n) << "\n";
  std::cout << "outputs: " << opts.out_dir << "\n";
  return 0;
}

// --- verify-dictionary --------------------------------------------------------------

int run_verify_dictionary(const ResolvedProblem& problem, const std::string& design_name,
                          int m_override, const std::string& out_dir, std::uint64_t seed) {
  const gas::DictionaryDesign design = design_name == "conventional"
                                           ? gas::DictionaryDesign::Conventional
                                           : gas::DictionaryDesign::Proposed;
  const gas::Polynomial& objective =
      design == gas::DictionaryDesign::Conventional ? problem.binary : problem.spin;
  const int m = m_override > 0 ? m_override : gas::value_bits_required(objective);
  if (problem.n + m > gas::kMaxSimQubits)
    throw gas::resource_error("verify-dictionary: n + m exceeds the simulator limit");

  const gas::StateVector state = gas::run(gas::lower_dictionary(objective, m, design));
  const gas::MeasurementDistribution dist = gas::measure_distribution(state, problem.n, m);

  const std::uint64_t n_keys = std::uint64_t{1} << problem.n;
  const double uniform = 1.0 / static_cast<double>(n_keys);
  int exact = 0;
  bool integral = true;
  std::cout << "problem: " << problem.name << " design: " << design_name << " m: " << m << "\n";
  for (std::uint64_t key = 0; key < n_keys; ++key) {
    const double value = objective.evaluate_bits(key);
    const long long rounded = std::llround(value);
    const bool is_integral = std::abs(value - static_cast<double>(rounded)) < 1e-9;
    integral = integral && is_integral;
    const std::uint64_t encoded =
        static_cast<std::uint64_t>(rounded) & ((std::uint64_t{1} << m) - 1);
    const double p = dist.probability(key, encoded);
    const bool ok = is_integral && std::abs(p - uniform) < 1e-9;
    if (ok) ++exact;
    std::cout << "key=" << gas::bits_to_string(key, problem.n)
              << " E=" << gas::format_double(value)
              << " p_encoded=" << gas::format_double(p) << (ok ? " ok" : "") << "\n";
  }
  if (integral)
    std::cout << "verify-dictionary: " << exact << "/" << n_keys << " keys exact\n";
  else
    std::cout << "verify-dictionary: objective has non-integral values; the value register "
                 "spreads around each E(x) and classical re-evaluation covers the gap\n";

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    gas::ExperimentManifest manifest;
    manifest.command = "verify-dictionary";
    manifest.config = {{"problem", problem.name}, {"design", design_name}, {"m", m}};
    manifest.master_seed = seed;
    manifest.inputs_hash = problem_hash(problem);
    auto csv = open_output(out_dir, "distribution.csv", manifest);
    gas::write_distribution_csv(csv, dist);
    gas::write_manifest(out_dir, manifest);
  }
  return 0;
}

// --- dump-circuit ------------------------------------------------------------------

int run_dump_circuit(const ResolvedProblem& problem, const std::string& design_name,
                     int m_override, bool grover) {
  const gas::DictionaryDesign design = design_name == "conventional"
                                           ? gas::DictionaryDesign::Conventional
                                           : gas::DictionaryDesign::Proposed;
  const gas::Polynomial& objective =
      design == gas::DictionaryDesign::Conventional ? problem.binary : problem.spin;
  const int m = m_override > 0 ? m_override : gas::value_bits_required(objective);
  const gas::Circuit a_y = gas::lower_dictionary(objective, m, design);
  std::cout << gas::dump_circuit(grover ? gas::assemble_grover(a_y) : a_y);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover adaptive search toolkit for binary/spin multilinear objectives"};
  app.require_subcommand(1);

  ProblemOptions problem_opts;
  GasCliOptions gas_opts;
  std::string design = "proposed";
  std::string out_dir;
  std::uint64_t seed = 1;
  int m_override = 0;
  int sweep_max = 0;
  bool grover = false;

  CLI::App* count_terms = app.add_subcommand("count-terms", "Objective term-count comparison");
  add_problem_options(count_terms, problem_opts);
  count_terms->add_option("--seed", seed, "Master seed for randomized instances");
  count_terms->add_option("--out", out_dir, "Output directory for CSV + manifest");

  CLI::App* count_gates =
      app.add_subcommand("count-gates", "CNOT/Rz cost comparison per value qubit");
  add_problem_options(count_gates, problem_opts);
  count_gates->add_option("--seed", seed, "Master seed for randomized instances");
  count_gates->add_option("--m", m_override, "Value-register width (default 1)");
  count_gates->add_option("--sweep", sweep_max,
                          "Also sweep constellations M=1..K via the closed forms");
  count_gates->add_option("--out", out_dir, "Output directory for CSV + manifest");

  CLI::App* gas_cmd = app.add_subcommand("gas", "Run seeded GAS trials and emit CSV bundle");
  add_problem_options(gas_cmd, problem_opts);
  gas_cmd->add_option("--design", gas_opts.design, "Dictionary design")
      ->check(CLI::IsMember({"conventional", "proposed"}));
  gas_cmd->add_option("--backend", gas_opts.backend, "Sampling backend")
      ->check(CLI::IsMember({"statevector", "ideal"}));
  gas_cmd->add_option("--m", gas_opts.m, "Value-register width override");
  gas_cmd->add_option("--trials", gas_opts.trials, "Number of independent trials");
  gas_cmd->add_option("--seed", gas_opts.seed, "Master seed");
  gas_cmd->add_option("--max-queries", gas_opts.max_queries, "QD budget per trial");
  gas_cmd->add_option("--max-iters", gas_opts.max_iters, "CD budget per trial");
  gas_cmd->add_option("--threads", gas_opts.threads, "Worker threads (0 = auto)");
  gas_cmd->add_option("--out", gas_opts.out_dir, "Output directory");

  CLI::App* verify = app.add_subcommand("verify-dictionary",
                                        "Simulate a dictionary circuit and check encoded values");
  add_problem_options(verify, problem_opts);
  verify->add_option("--design", design, "Dictionary design")
      ->check(CLI::IsMember({"conventional", "proposed"}));
  verify->add_option("--m", m_override, "Value-register width override");
  verify->add_option("--seed", seed, "Master seed for randomized instances");
  verify->add_option("--out", out_dir, "Output directory for the distribution CSV");

  CLI::App* dump = app.add_subcommand("dump-circuit", "Print the lowered gate listing");
  add_problem_options(dump, problem_opts);
  dump->add_option("--design", design, "Dictionary design")
      ->check(CLI::IsMember({"conventional", "proposed"}));
  dump->add_option("--m", m_override, "Value-register width override");
  dump->add_option("--seed", seed, "Master seed for randomized instances");
  dump->add_flag("--grover", grover, "Dump one Grover iteration instead of the dictionary");

  CLI::App* exhaustive = app.add_subcommand("exhaustive", "Classical exhaustive search");
  add_problem_options(exhaustive, problem_opts);
  exhaustive->add_option("--seed", seed, "Master seed for randomized instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count_terms->parsed()) {
      return run_count_terms(resolve_problem(problem_opts, seed), out_dir, seed);
    }
    if (count_gates->parsed()) {
      const ResolvedProblem problem = resolve_problem(problem_opts, seed);
      return run_count_gates(problem, m_override > 0 ? m_override : 1, sweep_max,
                             problem_opts, out_dir, seed);
    }
    if (gas_cmd->parsed()) {
      return run_gas(resolve_problem(problem_opts, gas_opts.seed), gas_opts);
    }
    if (verify->parsed()) {
      return run_verify_dictionary(resolve_problem(problem_opts, seed), design, m_override,
                                   out_dir, seed);
    }
    if (dump->parsed()) {
      return run_dump_circuit(resolve_problem(problem_opts, seed), design, m_override, grover);
    }
    if (exhaustive->parsed()) {
      const ResolvedProblem problem = resolve_problem(problem_opts, seed);
      const gas::ExhaustiveResult r = gas::exhaustive_search(problem.binary);
      std::cout << "problem: " << problem.name << "\n";
      std::cout << "best_bits: " << gas::bits_to_string(r.best_bits, problem.n) << "\n";
      std::cout << "best_value: " << gas::format_double(r.best_value) << "\n";
      std::cout << "evaluations: " << r.evaluations << "\n";
      return 0;
    }
  } catch (const gas::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
