#pragma once
//
// Grover adaptive search: threshold-driven minimization of a multilinear
// objective. Each iteration samples a candidate below the current threshold
// (through either an exact statevector run of the dictionary circuit or the
// analytic ideal-outcome law), re-evaluates it classically, and tightens the
// threshold on improvement. Complexity is tracked in both domains: measured
// states (CD) and applied Grover operators (QD).
//

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gas/circuit.hpp"
#include "gas/polynomial.hpp"
#include "gas/rng.hpp"
#include "gas/statevector.hpp"

namespace gas {

enum class GasBackend { Statevector, Ideal };

inline const char* to_string(GasBackend b) {
  return b == GasBackend::Statevector ? "statevector" : "ideal";
}

struct GasConfig {
  double lambda = 8.0 / 7.0;        // growth ratio of the rotation-count cap
  long long max_queries = 100000;   // QD budget: total Grover operator count
  long long max_iterations = 100000;  // CD budget: number of measurements
  std::uint64_t seed = 1;
  std::uint64_t rng_stream = 0;     // trial index; independent stream per trial
  GasBackend backend = GasBackend::Ideal;
  DictionaryDesign design = DictionaryDesign::Conventional;
  int m_override = 0;  // value-register width; 0 derives it per iteration
};

struct GasIteration {
  long long iteration = 0;        // c
  double threshold = 0.0;         // y_c entering the iteration
  long long rotation_count = 0;   // L_c
  double rotation_cap = 1.0;      // d entering the iteration
  std::uint64_t measured_bits = 0;
  double measured_value = 0.0;
  long long cumulative_queries = 0;       // sum of L_0..L_c
  long long cumulative_measurements = 0;  // c + 1
  bool improved = false;
};

enum class GasTermination { QueryBudget, IterationBudget };

struct GasTrace {
  std::uint64_t initial_bits = 0;
  double initial_value = 0.0;
  std::vector<GasIteration> iterations;
  std::uint64_t best_bits = 0;
  double best_value = 0.0;
  GasTermination terminated_by = GasTermination::QueryBudget;

  long long total_queries() const {
    return iterations.empty() ? 0 : iterations.back().cumulative_queries;
  }
  long long total_measurements() const {
    return static_cast<long long>(iterations.size());
  }

  // Cumulative query count at which the best-so-far value first drops to
  // `target` (within `tol`); 0 if the initial draw already achieves it.
  std::optional<long long> queries_to_reach(double target, double tol = 1e-9) const {
    if (initial_value <= target + tol) return 0;
    for (const auto& it : iterations)
      if (it.measured_value <= target + tol) return it.cumulative_queries;
    return std::nullopt;
  }
  std::optional<long long> measurements_to_reach(double target, double tol = 1e-9) const {
    if (initial_value <= target + tol) return 0;
    for (const auto& it : iterations)
      if (it.measured_value <= target + tol) return it.cumulative_measurements;
    return std::nullopt;
  }
};

// --- ideal backend ------------------------------------------------------------

// Exact Grover outcome law over an exhaustively enumerated objective: with
// t = |{x : E(x) < y}| and theta = asin(sqrt(t/N)), L rotations return a
// marked state with probability sin^2((2L+1) theta), uniform within each of
// the marked and unmarked sets. Used when the value register needed for an
// exact circuit would be impractically wide.
class IdealOutcomeModel {
 public:
  explicit IdealOutcomeModel(const Polynomial& p) {
    const int n = p.variable_count();
    if (n > 24) throw resource_error("IdealOutcomeModel: needs 2^n enumeration, n > 24");
    const std::uint64_t count = std::uint64_t{1} << n;
    order_.resize(count);
    std::iota(order_.begin(), order_.end(), std::uint64_t{0});
    std::vector<double> values(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) values[bits] = p.evaluate_bits(bits);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return values[a] < values[b]; });
    sorted_values_.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) sorted_values_[i] = values[order_[i]];
  }

  std::uint64_t size() const { return order_.size(); }
  double minimum() const { return sorted_values_.front(); }
  std::uint64_t minimizer() const { return order_.front(); }

  std::uint64_t marked_count(double threshold) const {
    return static_cast<std::uint64_t>(
        std::lower_bound(sorted_values_.begin(), sorted_values_.end(), threshold) -
        sorted_values_.begin());
  }

  static double marked_probability(std::uint64_t t, std::uint64_t n_total, long long L) {
    if (t == 0) return 0.0;
    if (t >= n_total) return 1.0;
    const double theta = std::asin(std::sqrt(static_cast<double>(t) /
                                             static_cast<double>(n_total)));
    const double s = std::sin(static_cast<double>(2 * L + 1) * theta);
    return s * s;
  }

  std::uint64_t sample(double threshold, long long rotations, Rng& rng) const {
    const std::uint64_t n_total = size();
    const std::uint64_t t = marked_count(threshold);
    if (t == 0) return rng.next_below(n_total);
    if (t == n_total) return order_[rng.next_below(n_total)];
    const double p_marked = marked_probability(t, n_total, rotations);
    if (rng.next_double() < p_marked) return order_[rng.next_below(t)];
    return order_[t + rng.next_below(n_total - t)];
  }

 private:
  std::vector<std::uint64_t> order_;   // assignments sorted by objective value
  std::vector<double> sorted_values_;  // values in the same order
};

inline std::uint64_t ideal_sample(const Polynomial& p, double threshold, long long rotations,
                                  Rng& rng) {
  return IdealOutcomeModel(p).sample(threshold, rotations, rng);
}

// --- statevector backend --------------------------------------------------------

// E(x) - y: the threshold folds into the constant term.
inline Polynomial fold_threshold(const Polynomial& p, double threshold) {
  Polynomial folded = p;
  folded.add_term(0, -threshold);
  return folded;
}

inline void require_design_kind(const Polynomial& p, DictionaryDesign design) {
  if (design == DictionaryDesign::Conventional && p.kind() != VariableKind::Binary)
    throw std::invalid_argument("conventional design needs a binary polynomial");
  if (design == DictionaryDesign::Proposed && p.kind() != VariableKind::Spin)
    throw std::invalid_argument("proposed design needs a spin polynomial");
}

// G^L A_y |0>, with A_y the dictionary circuit of E(x) - y.
inline StateVector prepare_gas_state(const Polynomial& p, double threshold,
                                     long long rotations, int m, DictionaryDesign design) {
  require_design_kind(p, design);
  const Polynomial folded = fold_threshold(p, threshold);
  const Circuit a_y = lower_dictionary(folded, m, design);
  StateVector state = run(a_y);
  if (rotations > 0) {
    const Circuit grover = assemble_grover(a_y);
    for (long long i = 0; i < rotations; ++i) state = run(grover, std::move(state));
  }
  return state;
}

inline std::uint64_t statevector_sample(const Polynomial& p, double threshold,
                                        long long rotations, int m,
                                        DictionaryDesign design, Rng& rng) {
  const StateVector state = prepare_gas_state(p, threshold, rotations, m, design);
  return sample(state, p.variable_count(), m, rng).key_bits;
}

// --- the GAS loop ------------------------------------------------------------

inline GasTrace gas_minimize(const Polynomial& p, const GasConfig& cfg) {
  if (!(cfg.lambda > 1.0 && cfg.lambda < 4.0 / 3.0))
    throw std::invalid_argument("gas_minimize: lambda must lie in (1, 4/3)");
  if (cfg.max_queries <= 0 || cfg.max_iterations <= 0)
    throw std::invalid_argument("gas_minimize: budgets must be positive");
  const int n = p.variable_count();
  if (n < 1) throw std::invalid_argument("gas_minimize: objective has no variables");
  if (cfg.backend == GasBackend::Statevector) require_design_kind(p, cfg.design);

  Rng rng(cfg.seed, cfg.rng_stream);
  const std::uint64_t n_states = std::uint64_t{1} << n;
  const double cap_limit = std::sqrt(static_cast<double>(n_states));

  std::optional<IdealOutcomeModel> model;
  if (cfg.backend == GasBackend::Ideal) model.emplace(p);

  GasTrace trace;
  trace.initial_bits = rng.next_below(n_states);
  trace.initial_value = p.evaluate_bits(trace.initial_bits);
  trace.best_bits = trace.initial_bits;
  trace.best_value = trace.initial_value;

  double threshold = trace.initial_value;
  double cap = 1.0;  // d
  long long cumulative_queries = 0;

  for (long long c = 0;; ++c) {
    const long long max_rotations =
        static_cast<long long>(std::ceil(cap - 1.0));  // L_c in {0..ceil(d-1)}
    const long long rotations =
        static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(max_rotations) + 1));

    std::uint64_t measured;
    if (cfg.backend == GasBackend::Ideal) {
      measured = model->sample(threshold, rotations, rng);
    } else {
      const Polynomial folded = fold_threshold(p, threshold);
      const int m = cfg.m_override > 0 ? cfg.m_override : value_bits_required(folded);
      measured = statevector_sample(p, threshold, rotations, m, cfg.design, rng);
    }
    const double value = p.evaluate_bits(measured);  // classical re-evaluation
    cumulative_queries += rotations;

    GasIteration it;
    it.iteration = c;
    it.threshold = threshold;
    it.rotation_count = rotations;
    it.rotation_cap = cap;
    it.measured_bits = measured;
    it.measured_value = value;
    it.cumulative_queries = cumulative_queries;
    it.cumulative_measurements = c + 1;
    it.improved = value < threshold;
    trace.iterations.push_back(it);

    if (it.improved) {
      threshold = value;
      trace.best_bits = measured;
      trace.best_value = value;
      cap = 1.0;
    } else {
      cap = std::min(cfg.lambda * cap, cap_limit);
    }

    if (cumulative_queries >= cfg.max_queries) {
      trace.terminated_by = GasTermination::QueryBudget;
      break;
    }
    if (c + 1 >= cfg.max_iterations) {
      trace.terminated_by = GasTermination::IterationBudget;
      break;
    }
  }
  return trace;
}

// --- classical baselines -------------------------------------------------------

struct ExhaustiveResult {
  std::uint64_t best_bits = 0;
  double best_value = 0.0;
  long long evaluations = 0;
};

inline ExhaustiveResult exhaustive_search(const Polynomial& p) {
  const int n = p.variable_count();
  if (n > 24) throw resource_error("exhaustive_search: n > 24");
  const std::uint64_t count = std::uint64_t{1} << n;
  ExhaustiveResult result;
  result.best_bits = 0;
  result.best_value = p.evaluate_bits(0);
  result.evaluations = static_cast<long long>(count);
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const double v = p.evaluate_bits(bits);
    if (v < result.best_value) {
      result.best_value = v;
      result.best_bits = bits;
    }
  }
  return result;
}

// Evaluations a sequential random search needs before it first hits an
// optimal assignment; the classical analogue of the CD complexity.
inline long long random_order_queries_to_optimum(const Polynomial& p, Rng& rng,
                                                 double tol = 1e-9) {
  const int n = p.variable_count();
  if (n > 24) throw resource_error("random_order_queries_to_optimum: n > 24");
  const std::uint64_t count = std::uint64_t{1} << n;
  const double optimum = exhaustive_search(p).best_value;
  std::vector<std::uint64_t> order(count);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  for (std::uint64_t i = count - 1; i > 0; --i)
    std::swap(order[i], order[rng.next_below(i + 1)]);
  for (std::uint64_t i = 0; i < count; ++i)
    if (p.evaluate_bits(order[i]) <= optimum + tol) return static_cast<long long>(i) + 1;
  return static_cast<long long>(count);
}

}  // namespace gas
