#pragma once
//
// Experiment machinery shared by the CLI and the test suites: seeded
// multi-trial GAS runs, CSV emission for the convergence/CDF plots, the
// classical random-order baseline, a two-sample Kolmogorov-Smirnov test, and
// the experiment manifest that makes every CSV reproducible.
//

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gas/polynomial.hpp"
#include "gas/search.hpp"

namespace gas {

// Fixed-format floating point for byte-stable CSV output.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string bits_to_string(std::uint64_t bits, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (bits & (std::uint64_t{1} << i)) s[i] = '1';
  return s;
}

// --- multi-trial runner ---------------------------------------------------------

// Runs `trials` independent GAS trials; trial i uses rng stream i derived from
// the master seed, so results do not depend on scheduling. Traces land in
// trial order regardless of completion order.
inline std::vector<GasTrace> run_gas_trials(const Polynomial& p, const GasConfig& base,
                                            long long trials, unsigned workers = 0) {
  if (trials <= 0) throw std::invalid_argument("run_gas_trials: trials must be positive");
  std::vector<GasTrace> traces(static_cast<std::size_t>(trials));
  if (workers == 0)
    workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                    static_cast<unsigned>(trials)));
  std::atomic<long long> next{0};
  auto work = [&]() {
    for (long long i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
      GasConfig cfg = base;
      cfg.rng_stream = static_cast<std::uint64_t>(i);
      traces[static_cast<std::size_t>(i)] = gas_minimize(p, cfg);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return traces;
}

// --- CSV emission ---------------------------------------------------------------

inline void write_trace_csv(std::ostream& os, const std::vector<GasTrace>& traces) {
  os << "trial,iter,y_c,L_c,d,cum_qd,cum_cd,best_value\n";
  double best = 0.0;
  for (std::size_t trial = 0; trial < traces.size(); ++trial) {
    best = traces[trial].initial_value;
    for (const auto& it : traces[trial].iterations) {
      best = std::min(best, it.measured_value);
      os << trial << ',' << it.iteration << ',' << format_double(it.threshold) << ','
         << it.rotation_count << ',' << format_double(it.rotation_cap) << ','
         << it.cumulative_queries << ',' << it.cumulative_measurements << ','
         << format_double(best) << "\n";
    }
  }
}

struct ObjectiveCurvePoint {
  long long x = 0;          // query count or measurement count
  double mean_best = 0.0;       // mean best-so-far objective value
  double mean_measured = 0.0;   // mean of the latest measured value
};

namespace detail {

template <typename XOf>
std::vector<ObjectiveCurvePoint> objective_curve(const std::vector<GasTrace>& traces,
                                                 long long max_x, XOf x_of) {
  std::vector<double> best_sum(static_cast<std::size_t>(max_x) + 1, 0.0);
  std::vector<double> measured_sum(static_cast<std::size_t>(max_x) + 1, 0.0);
  for (const auto& trace : traces) {
    double best = trace.initial_value;
    double measured = trace.initial_value;
    long long x = 0;
    for (const auto& it : trace.iterations) {
      const long long next_x = x_of(it);
      if (next_x > max_x) break;  // iteration completes beyond the grid
      for (; x < next_x; ++x) {
        best_sum[static_cast<std::size_t>(x)] += best;
        measured_sum[static_cast<std::size_t>(x)] += measured;
      }
      best = std::min(best, it.measured_value);
      measured = it.measured_value;
    }
    for (; x <= max_x; ++x) {
      best_sum[static_cast<std::size_t>(x)] += best;
      measured_sum[static_cast<std::size_t>(x)] += measured;
    }
  }
  std::vector<ObjectiveCurvePoint> points(static_cast<std::size_t>(max_x) + 1);
  const double inv = 1.0 / static_cast<double>(traces.size());
  for (long long x = 0; x <= max_x; ++x) {
    points[static_cast<std::size_t>(x)] = {x,
                                           best_sum[static_cast<std::size_t>(x)] * inv,
                                           measured_sum[static_cast<std::size_t>(x)] * inv};
  }
  return points;
}

}  // namespace detail

// Mean objective value across trials as a function of cumulative query count
// (QD). Both averaging bases are emitted: best-so-far and latest measured.
inline std::vector<ObjectiveCurvePoint> objective_vs_queries(
    const std::vector<GasTrace>& traces, long long max_queries) {
  return detail::objective_curve(traces, max_queries,
                                 [](const GasIteration& it) { return it.cumulative_queries; });
}

inline std::vector<ObjectiveCurvePoint> objective_vs_measurements(
    const std::vector<GasTrace>& traces, long long max_measurements) {
  return detail::objective_curve(
      traces, max_measurements,
      [](const GasIteration& it) { return it.cumulative_measurements; });
}

inline void write_curve_csv(std::ostream& os, const std::vector<ObjectiveCurvePoint>& curve,
                            std::string_view x_name) {
  os << x_name << ",mean_best,mean_measured\n";
  for (const auto& pt : curve)
    os << pt.x << ',' << format_double(pt.mean_best) << ','
       << format_double(pt.mean_measured) << "\n";
}

struct CdfPoint {
  long long x = 0;
  double fraction = 0.0;
};

// Empirical CDF of the given per-trial counts; entries without a value (trial
// never reached the target) only enter the denominator.
inline std::vector<CdfPoint> cdf_points(const std::vector<std::optional<long long>>& samples) {
  std::vector<long long> reached;
  for (const auto& s : samples)
    if (s) reached.push_back(*s);
  std::sort(reached.begin(), reached.end());
  std::vector<CdfPoint> cdf;
  const double denom = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < reached.size(); ++i) {
    if (!cdf.empty() && cdf.back().x == reached[i])
      cdf.back().fraction = static_cast<double>(i + 1) / denom;
    else
      cdf.push_back({reached[i], static_cast<double>(i + 1) / denom});
  }
  return cdf;
}

inline void write_cdf_csv(std::ostream& os, const std::vector<CdfPoint>& cdf,
                          std::string_view x_name) {
  os << x_name << ",cdf\n";
  for (const auto& pt : cdf) os << pt.x << ',' << format_double(pt.fraction) << "\n";
}

inline void write_distribution_csv(std::ostream& os, const MeasurementDistribution& dist) {
  os << "key_bits,value_int,probability\n";
  for (const auto& [kv, p] : dist.probabilities)
    os << bits_to_string(kv.first, dist.n_key) << ','
       << decode_twos_complement(kv.second, dist.m_value) << ',' << format_double(p) << "\n";
}

// --- two-sample Kolmogorov-Smirnov ------------------------------------------------

inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

// Asymptotic two-sided p-value for the two-sample KS statistic.
inline double ks_p_value(double d, std::size_t n1, std::size_t n2) {
  const double ne = static_cast<double>(n1) * static_cast<double>(n2) /
                    static_cast<double>(n1 + n2);
  const double sqrt_ne = std::sqrt(ne);
  const double lambda = (sqrt_ne + 0.12 + 0.11 / sqrt_ne) * d;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k & 1) ? term : -term;
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

// --- manifest ---------------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string content_hash(std::string_view bytes) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

// Every emitted CSV references the manifest of the command that produced it,
// so a run can be reproduced byte-for-byte from the manifest alone.
struct ExperimentManifest {
  std::string command;
  nlohmann::json config;
  std::uint64_t master_seed = 0;
  long long trials = 0;
  std::string inputs_hash;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["config"] = config;
    j["master_seed"] = master_seed;
    j["trials"] = trials;
    j["inputs_hash"] = inputs_hash;
    j["outputs"] = outputs;
    return j;
  }
};

inline void write_manifest(const std::filesystem::path& dir, const ExperimentManifest& m) {
  std::ofstream out(dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest to " + dir.string());
  out << m.to_json().dump(2) << "\n";
}

inline std::string manifest_reference_line(const ExperimentManifest& m) {
  return "# manifest: manifest.json inputs_hash=" + m.inputs_hash + "\n";
}

}  // namespace gas
