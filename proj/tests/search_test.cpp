#include "gas/search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "gas/problems.hpp"
#include "gas/rng.hpp"

namespace gas {
namespace {

Polynomial fig_objective_binary() {
  return Polynomial(VariableKind::Binary, 3, {{0b011, 2.0}, {0b100, 1.0}, {0, -1.0}});
}

Polynomial random_integer_polynomial(int n, int terms, Rng& rng) {
  Polynomial p(VariableKind::Binary, n);
  for (int t = 0; t < terms; ++t) {
    const double coeff = static_cast<double>(static_cast<long long>(rng.next_below(9)) - 4);
    if (coeff != 0.0) p.add_term(rng.next_below(std::uint64_t{1} << n), coeff);
  }
  return p;
}

TEST(IdealModel, MarkedCountIsStrictlyLess) {
  const IdealOutcomeModel model(fig_objective_binary());
  EXPECT_EQ(model.marked_count(-1.0), 0u);  // nothing below the minimum
  EXPECT_EQ(model.marked_count(0.0), 3u);   // three keys at -1
  EXPECT_EQ(model.marked_count(0.5), 6u);
  EXPECT_EQ(model.marked_count(100.0), 8u);
  EXPECT_DOUBLE_EQ(model.minimum(), -1.0);
}

TEST(IdealModel, QuarterFractionOneRotationIsCertain) {
  // t/N = 1/4: sin^2(3 asin(1/2)) = 1, every draw must be marked
  Polynomial p(VariableKind::Binary, 2, {{0, 1.0}, {0b11, -2.0}});  // only 11 below 1
  const IdealOutcomeModel model(p);
  ASSERT_EQ(model.marked_count(1.0), 1u);
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(model.sample(1.0, 1, rng), 0b11u);
}

TEST(IdealModel, ZeroRotationsSamplesAtBaseRate) {
  const Polynomial p = fig_objective_binary();
  const IdealOutcomeModel model(p);
  Rng rng(8);
  const int draws = 100000;
  int marked = 0;
  for (int i = 0; i < draws; ++i)
    if (p.evaluate_bits(model.sample(0.0, 0, rng)) < 0.0) ++marked;
  const double expect = 3.0 / 8.0;
  const double sigma = std::sqrt(expect * (1 - expect) / draws);
  EXPECT_NEAR(marked / static_cast<double>(draws), expect, 3 * sigma);
}

TEST(IdealModel, EmptyMarkedSetIsUniform) {
  const Polynomial p = fig_objective_binary();
  const IdealOutcomeModel model(p);
  Rng rng(9);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t x = model.sample(-1.0, 3, rng);  // threshold at the minimum
    EXPECT_GE(p.evaluate_bits(x), -1.0);  // no improvement possible
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 8u);  // every key reachable
}

TEST(IdealModel, TooManyVariablesRejected) {
  EXPECT_THROW(IdealOutcomeModel(Polynomial(VariableKind::Binary, 25)), resource_error);
}

TEST(GasLoop, FindsFigureObjectiveMinimum) {
  GasConfig cfg;
  cfg.seed = 3;
  cfg.max_queries = 1000;
  cfg.max_iterations = 1000;
  const GasTrace trace = gas_minimize(fig_objective_binary(), cfg);
  EXPECT_DOUBLE_EQ(trace.best_value, -1.0);  // exhaustive minimum over 8 keys
  EXPECT_LT(trace.best_bits, 3u);            // keys 0,1,2 attain it
}

TEST(GasLoop, ConstantObjectiveNeverImproves) {
  const Polynomial p = Polynomial::constant(VariableKind::Binary, 4, 2.5);
  GasConfig cfg;
  cfg.seed = 5;
  cfg.max_queries = 200;
  cfg.max_iterations = 40;
  const GasTrace trace = gas_minimize(p, cfg);
  const double sqrt_n = std::sqrt(16.0);
  double expected_cap = 1.0;
  for (const auto& it : trace.iterations) {
    EXPECT_DOUBLE_EQ(it.threshold, 2.5);
    EXPECT_FALSE(it.improved);
    EXPECT_NEAR(it.rotation_cap, expected_cap, 1e-12);
    expected_cap = std::min(cfg.lambda * expected_cap, sqrt_n);  // d = min(lambda d, sqrt(N))
  }
}

TEST(GasLoop, TraceInvariants) {
  Rng seed_rng(77);
  for (int rep = 0; rep < 10; ++rep) {
    const Polynomial p = random_integer_polynomial(6, 8, seed_rng);
    GasConfig cfg;
    cfg.seed = seed_rng.next_u64();
    cfg.max_queries = 500;
    cfg.max_iterations = 500;
    const GasTrace trace = gas_minimize(p, cfg);
    double threshold = trace.initial_value;
    long long queries = 0;
    long long measurements = 0;
    for (const auto& it : trace.iterations) {
      EXPECT_LE(it.threshold, threshold + 1e-12);  // y_c never increases
      threshold = it.threshold;
      EXPECT_LE(it.rotation_count,
                static_cast<long long>(std::ceil(it.rotation_cap - 1.0)));
      EXPECT_GE(it.rotation_count, 0);
      queries += it.rotation_count;
      measurements += 1;
      EXPECT_EQ(it.cumulative_queries, queries);            // QD = sum of L_c
      EXPECT_EQ(it.cumulative_measurements, measurements);  // CD = c + 1
    }
    EXPECT_EQ(trace.total_queries(), queries);
    EXPECT_DOUBLE_EQ(trace.best_value, std::min(threshold, trace.iterations.back().improved
                                                               ? trace.iterations.back().measured_value
                                                               : threshold));
  }
}

TEST(GasLoop, DResetAfterImprovement) {
  Rng seed_rng(123);
  const Polynomial p = random_integer_polynomial(6, 10, seed_rng);
  GasConfig cfg;
  cfg.seed = 9;
  cfg.max_queries = 2000;
  cfg.max_iterations = 2000;
  const GasTrace trace = gas_minimize(p, cfg);
  bool saw_improvement = false;
  for (std::size_t i = 0; i + 1 < trace.iterations.size(); ++i)
    if (trace.iterations[i].improved) {
      saw_improvement = true;
      EXPECT_DOUBLE_EQ(trace.iterations[i + 1].rotation_cap, 1.0);
    }
  EXPECT_TRUE(saw_improvement);
}

TEST(GasLoop, BudgetsTerminate) {
  const Polynomial p = fig_objective_binary();
  GasConfig cfg;
  cfg.seed = 1;
  cfg.max_queries = 10;
  cfg.max_iterations = 1000000;
  const GasTrace qd = gas_minimize(p, cfg);
  EXPECT_EQ(qd.terminated_by, GasTermination::QueryBudget);
  EXPECT_GE(qd.total_queries(), 10);

  cfg.max_queries = 1000000;
  cfg.max_iterations = 7;
  const GasTrace cd = gas_minimize(p, cfg);
  EXPECT_EQ(cd.terminated_by, GasTermination::IterationBudget);
  EXPECT_EQ(cd.total_measurements(), 7);
}

TEST(GasLoop, InvalidConfigThrows) {
  GasConfig cfg;
  cfg.max_queries = 0;
  EXPECT_THROW(gas_minimize(fig_objective_binary(), cfg), std::invalid_argument);
  cfg.max_queries = 10;
  cfg.lambda = 1.5;  // outside (1, 4/3)
  EXPECT_THROW(gas_minimize(fig_objective_binary(), cfg), std::invalid_argument);
}

TEST(GasLoop, SeededTracesReproduce) {
  GasConfig cfg;
  cfg.seed = 42;
  cfg.max_queries = 300;
  const GasTrace a = gas_minimize(fig_objective_binary(), cfg);
  const GasTrace b = gas_minimize(fig_objective_binary(), cfg);
  ASSERT_EQ(a.iterations.size(), b.iterations.size());
  for (std::size_t i = 0; i < a.iterations.size(); ++i) {
    EXPECT_EQ(a.iterations[i].measured_bits, b.iterations[i].measured_bits);
    EXPECT_EQ(a.iterations[i].rotation_count, b.iterations[i].rotation_count);
  }
}

TEST(GasLoop, ProbabilisticCompleteness) {
  // unique-minimum objectives over up to 10 variables: every seeded trial
  // reaches the optimum given slack budget
  Rng gen(20240101);
  int checked = 0;
  while (checked < 3) {
    const int n = 8 + static_cast<int>(gen.next_below(3));
    const Polynomial p = random_integer_polynomial(n, 3 * n, gen);
    const ExhaustiveResult opt = exhaustive_search(p);
    long long ties = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
      if (p.evaluate_bits(bits) <= opt.best_value + 1e-12) ++ties;
    if (ties != 1) continue;  // want a unique minimum
    ++checked;
    for (int trial = 0; trial < 100; ++trial) {
      GasConfig cfg;
      cfg.seed = 555;
      cfg.rng_stream = static_cast<std::uint64_t>(trial);
      cfg.max_queries = 1 << 20;
      cfg.max_iterations = 1 << 20;
      const GasTrace trace = gas_minimize(p, cfg);
      ASSERT_DOUBLE_EQ(trace.best_value, opt.best_value);
      ASSERT_EQ(trace.best_bits, opt.best_bits);
    }
  }
}

TEST(StatevectorBackend, ZeroRotationsUniformKeyMarginal) {
  const Polynomial p = fig_objective_binary();
  const StateVector s = prepare_gas_state(p, 0.0, 0, 3, DictionaryDesign::Conventional);
  const MeasurementDistribution dist = measure_distribution(s, 3, 3);
  for (std::uint64_t key = 0; key < 8; ++key)
    EXPECT_NEAR(dist.key_probability(key), 0.125, 1e-10);
}

TEST(StatevectorBackend, DesignsSampleIdentically) {
  // equivalent integer objectives, either design: same key distribution
  Rng rng(31337);
  for (int rep = 0; rep < 5; ++rep) {
    Polynomial spin(VariableKind::Spin, 3);
    for (int t = 0; t < 4; ++t) {
      const double coeff = static_cast<double>(static_cast<long long>(rng.next_below(7)) - 3);
      if (coeff != 0.0) spin.add_term(rng.next_below(8), coeff);
    }
    const Polynomial binary = spin_to_binary(spin);
    const double y = spin.evaluate_bits(rng.next_below(8));
    const int m = std::max(value_bits_required(fold_threshold(spin, y)),
                           value_bits_required(fold_threshold(binary, y)));
    for (long long rotations : {0LL, 1LL, 2LL}) {
      const StateVector a =
          prepare_gas_state(binary, y, rotations, m, DictionaryDesign::Conventional);
      const StateVector b =
          prepare_gas_state(spin, y, rotations, m, DictionaryDesign::Proposed);
      const MeasurementDistribution da = measure_distribution(a, 3, m);
      const MeasurementDistribution db = measure_distribution(b, 3, m);
      for (std::uint64_t key = 0; key < 8; ++key)
        ASSERT_NEAR(da.key_probability(key), db.key_probability(key), 1e-9);
    }
  }
}

TEST(StatevectorBackend, AgreesWithIdealLaw) {
  // exact key distribution of the circuit vs the analytic outcome law, then
  // an empirical cross-check of both samplers
  Rng rng(616);
  const int n = 4;
  const Polynomial p = random_integer_polynomial(n, 6, rng);
  const IdealOutcomeModel model(p);
  const std::uint64_t n_states = std::uint64_t{1} << n;
  const double y = p.evaluate_bits(rng.next_below(n_states));
  const std::uint64_t t = model.marked_count(y);
  const Polynomial folded = fold_threshold(p, y);
  const int m = value_bits_required(folded);
  for (long long rotations : {0LL, 1LL, 2LL}) {
    const StateVector s =
        prepare_gas_state(p, y, rotations, m, DictionaryDesign::Conventional);
    const MeasurementDistribution dist = measure_distribution(s, n, m);
    const double p_marked = IdealOutcomeModel::marked_probability(t, n_states, rotations);
    double measured_marked = 0.0;
    for (std::uint64_t key = 0; key < n_states; ++key)
      if (p.evaluate_bits(key) < y) measured_marked += dist.key_probability(key);
    ASSERT_NEAR(measured_marked, p_marked, 1e-9);

    // empirical agreement over 1e5 draws, three-sigma band per key
    const DistributionSampler sampler(s, n);
    Rng draw_rng(999 + static_cast<std::uint64_t>(rotations));
    Rng ideal_rng(1999 + static_cast<std::uint64_t>(rotations));
    const int draws = 100000;
    std::vector<int> sv_counts(n_states, 0);
    std::vector<int> ideal_counts(n_states, 0);
    for (int i = 0; i < draws; ++i) {
      ++sv_counts[sampler.draw(draw_rng).key_bits];
      ++ideal_counts[model.sample(y, rotations, ideal_rng)];
    }
    for (std::uint64_t key = 0; key < n_states; ++key) {
      const bool marked = p.evaluate_bits(key) < y;
      const double expect = marked ? p_marked / static_cast<double>(t)
                                   : (1.0 - p_marked) / static_cast<double>(n_states - t);
      const double sigma = std::sqrt(std::max(expect * (1 - expect), 1e-12) / draws);
      EXPECT_NEAR(sv_counts[key] / static_cast<double>(draws), expect, 3 * sigma + 1e-4);
      EXPECT_NEAR(ideal_counts[key] / static_cast<double>(draws), expect, 3 * sigma + 1e-4);
    }
  }
}

TEST(StatevectorBackend, GasLoopMatchesExhaustive) {
  Rng rng(2718);
  const Polynomial p = random_integer_polynomial(3, 5, rng);
  GasConfig cfg;
  cfg.backend = GasBackend::Statevector;
  cfg.design = DictionaryDesign::Conventional;
  cfg.seed = 10;
  cfg.max_queries = 200;
  cfg.max_iterations = 200;
  const GasTrace trace = gas_minimize(p, cfg);
  EXPECT_DOUBLE_EQ(trace.best_value, exhaustive_search(p).best_value);
}

TEST(StatevectorBackend, KindMismatchThrows) {
  GasConfig cfg;
  cfg.backend = GasBackend::Statevector;
  cfg.design = DictionaryDesign::Proposed;
  EXPECT_THROW(gas_minimize(fig_objective_binary(), cfg), std::invalid_argument);
}

TEST(Exhaustive, FigureObjective) {
  const ExhaustiveResult r = exhaustive_search(fig_objective_binary());
  EXPECT_DOUBLE_EQ(r.best_value, -1.0);
  EXPECT_EQ(r.evaluations, 8);
}

TEST(Exhaustive, ConstantCountsAllAssignments) {
  const ExhaustiveResult r =
      exhaustive_search(Polynomial::constant(VariableKind::Binary, 4, 3.0));
  EXPECT_DOUBLE_EQ(r.best_value, 3.0);
  EXPECT_EQ(r.evaluations, 16);
}

TEST(Exhaustive, ExtendedHammingSpinMinimum) {
  // zero syndrome: minimum -M attained by the all +1 assignment
  const Polynomial p = syndrome_objective(extended_hamming84_instance(), VariableKind::Spin);
  const ExhaustiveResult r = exhaustive_search(p);
  EXPECT_DOUBLE_EQ(r.best_value, -4.0);
  EXPECT_EQ(r.best_bits, 0u);
  EXPECT_DOUBLE_EQ(p.evaluate_bits(0), -4.0);
}

TEST(GasLoop, OneVariableProblemFoundImmediatelyHalfTheTime) {
  // the uniform initial draw alone hits the optimum with probability 1/2
  Polynomial p(VariableKind::Binary, 1, {{0b1, -1.0}});
  int found_by_first_measurement = 0;
  const int trials = 400;
  for (int trial = 0; trial < trials; ++trial) {
    GasConfig cfg;
    cfg.seed = 8080;
    cfg.rng_stream = static_cast<std::uint64_t>(trial);
    cfg.max_queries = 50;
    const GasTrace trace = gas_minimize(p, cfg);
    const auto cd = trace.measurements_to_reach(-1.0);
    if (cd && *cd <= 1) ++found_by_first_measurement;
  }
  const double sigma = std::sqrt(0.5 * 0.5 / trials);
  EXPECT_GE(found_by_first_measurement / static_cast<double>(trials), 0.5 - 3 * sigma);
}

TEST(RandomOrderBaseline, HitsOptimumWithinBudget) {
  const Polynomial p = fig_objective_binary();
  Rng rng(55);
  for (int rep = 0; rep < 50; ++rep) {
    const long long k = random_order_queries_to_optimum(p, rng);
    EXPECT_GE(k, 1);
    EXPECT_LE(k, 8);
  }
}

}  // namespace
}  // namespace gas
