#pragma once
//
// Dense statevector execution of circuits and exact measurement statistics.
//
// Amplitude indexing is little-endian: qubit 0 is the least significant bit
// of the amplitude index. With the circuit layout (keys first, then value
// qubits), amplitude index = key_bits | (value_bits << n_key).
//

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gas/circuit.hpp"
#include "gas/rng.hpp"

namespace gas {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 2^26 complex doubles is ~1 GiB; past that this is no longer a desk tool.
inline constexpr int kMaxSimQubits = 26;

struct StateVector {
  int n_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  static StateVector zero_state(int n) {
    if (n < 0 || n > kMaxSimQubits)
      throw resource_error("StateVector: qubit count exceeds simulator limit");
    StateVector s;
    s.n_qubits = n;
    s.amplitudes.assign(std::size_t{1} << n, {0.0, 0.0});
    s.amplitudes[0] = {1.0, 0.0};
    return s;
  }

  std::size_t dimension() const { return amplitudes.size(); }

  double norm_squared() const {
    double total = 0.0;
    for (const auto& a : amplitudes) total += std::norm(a);
    return total;
  }
};

namespace detail {

// In-place radix-2 transform with kernel e^{sign * 2*pi*i * jk / N}; no
// normalization (callers scale by 1/sqrt(N)).
inline void fourier_core(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> w_len(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= w_len;
      }
    }
  }
}

// Fourier transform of the sub-register `targets` (least significant first),
// for every configuration of the remaining qubits. sign = +1 realizes the QFT
// kernel e^{+2*pi*i*vw/2^m}; sign = -1 its inverse.
inline void apply_fourier(StateVector& s, const std::vector<int>& targets, int sign) {
  const int m = static_cast<int>(targets.size());
  if (m == 0) return;
  const std::size_t sub_dim = std::size_t{1} << m;
  std::vector<std::size_t> target_offset(sub_dim);
  target_offset[0] = 0;
  for (std::size_t v = 1; v < sub_dim; ++v)
    target_offset[v] =
        target_offset[v & (v - 1)] | (std::size_t{1} << targets[std::countr_zero(v)]);

  std::vector<int> rest;
  std::uint64_t target_mask = 0;
  for (int t : targets) target_mask |= std::uint64_t{1} << t;
  for (int q = 0; q < s.n_qubits; ++q)
    if (!(target_mask & (std::uint64_t{1} << q))) rest.push_back(q);

  const double scale = 1.0 / std::sqrt(static_cast<double>(sub_dim));
  const std::size_t rest_dim = std::size_t{1} << rest.size();
  std::vector<std::complex<double>> buf(sub_dim);
  for (std::size_t r = 0; r < rest_dim; ++r) {
    std::size_t base = 0;
    for (std::size_t b = 0; b < rest.size(); ++b)
      if (r & (std::size_t{1} << b)) base |= std::size_t{1} << rest[b];
    for (std::size_t v = 0; v < sub_dim; ++v) buf[v] = s.amplitudes[base | target_offset[v]];
    fourier_core(buf, sign);
    for (std::size_t v = 0; v < sub_dim; ++v)
      s.amplitudes[base | target_offset[v]] = buf[v] * scale;
  }
}

}  // namespace detail

inline void apply_gate(StateVector& s, const Gate& g) {
  const std::size_t dim = s.dimension();
  auto check_qubit = [&](int q) {
    if (q < 0 || q >= s.n_qubits)
      throw std::invalid_argument("apply_gate: qubit index out of range");
  };
  switch (g.kind) {
    case GateKind::Hadamard: {
      check_qubit(g.target);
      const std::size_t half = std::size_t{1} << g.target;
      const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
      for (std::size_t base = 0; base < dim; base += 2 * half)
        for (std::size_t i = base; i < base + half; ++i) {
          const auto a = s.amplitudes[i];
          const auto b = s.amplitudes[i + half];
          s.amplitudes[i] = (a + b) * inv_sqrt2;
          s.amplitudes[i + half] = (a - b) * inv_sqrt2;
        }
      break;
    }
    case GateKind::PauliX: {
      check_qubit(g.target);
      const std::size_t mask = std::size_t{1} << g.target;
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & mask)) std::swap(s.amplitudes[i], s.amplitudes[i | mask]);
      break;
    }
    case GateKind::PauliZ: {
      check_qubit(g.target);
      const std::size_t mask = std::size_t{1} << g.target;
      for (std::size_t i = 0; i < dim; ++i)
        if (i & mask) s.amplitudes[i] = -s.amplitudes[i];
      break;
    }
    case GateKind::Phase: {
      check_qubit(g.target);
      const std::size_t mask = std::size_t{1} << g.target;
      const std::complex<double> w(std::cos(g.angle), std::sin(g.angle));
      for (std::size_t i = 0; i < dim; ++i)
        if (i & mask) s.amplitudes[i] *= w;
      break;
    }
    case GateKind::RotZ: {
      check_qubit(g.target);
      const std::size_t mask = std::size_t{1} << g.target;
      const std::complex<double> w0(std::cos(g.angle / 2), -std::sin(g.angle / 2));
      const std::complex<double> w1 = std::conj(w0);
      for (std::size_t i = 0; i < dim; ++i) s.amplitudes[i] *= (i & mask) ? w1 : w0;
      break;
    }
    case GateKind::CNot: {
      check_qubit(g.control);
      check_qubit(g.target);
      if (g.control == g.target)
        throw std::invalid_argument("apply_gate: CNot control equals target");
      const std::size_t cmask = std::size_t{1} << g.control;
      const std::size_t tmask = std::size_t{1} << g.target;
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(s.amplitudes[i], s.amplitudes[i | tmask]);
      break;
    }
    case GateKind::MultiControlledPhase: {
      check_qubit(g.target);
      std::size_t mask = std::size_t{1} << g.target;
      for (int c : g.controls) {
        check_qubit(c);
        if (c == g.target)
          throw std::invalid_argument("apply_gate: phase control equals target");
        mask |= std::size_t{1} << c;
      }
      const std::complex<double> w(std::cos(g.angle), std::sin(g.angle));
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) s.amplitudes[i] *= w;
      break;
    }
    case GateKind::InverseQft:
    case GateKind::Qft: {
      for (int t : g.targets) check_qubit(t);
      detail::apply_fourier(s, g.targets, g.kind == GateKind::Qft ? +1 : -1);
      break;
    }
  }
}

inline StateVector run(const Circuit& c, StateVector state) {
  if (c.qubit_count() > kMaxSimQubits)
    throw resource_error("run: circuit exceeds simulator qubit limit");
  if (state.n_qubits != c.qubit_count())
    throw std::invalid_argument("run: initial state size mismatch");
  for (const Gate& g : c.gates) apply_gate(state, g);
  return state;
}

inline StateVector run(const Circuit& c) {
  return run(c, StateVector::zero_state(c.qubit_count()));
}

// --- measurement -------------------------------------------------------------

inline long long decode_twos_complement(std::uint64_t value_bits, int m) {
  const std::uint64_t half = std::uint64_t{1} << (m - 1);
  return value_bits >= half ? static_cast<long long>(value_bits) - (1LL << m)
                            : static_cast<long long>(value_bits);
}

struct MeasurementDistribution {
  int n_key = 0;
  int m_value = 0;
  // (key bits, value bits) -> probability; value bits decode as two's complement
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> probabilities;

  double probability(std::uint64_t key, std::uint64_t value) const {
    auto it = probabilities.find({key, value});
    return it == probabilities.end() ? 0.0 : it->second;
  }

  double key_probability(std::uint64_t key) const {
    double total = 0.0;
    for (const auto& [kv, p] : probabilities)
      if (kv.first == key) total += p;
    return total;
  }

  double total() const {
    double t = 0.0;
    for (const auto& [kv, p] : probabilities) t += p;
    return t;
  }
};

inline MeasurementDistribution measure_distribution(const StateVector& s, int n_key,
                                                    int m_value) {
  if (n_key < 0 || m_value < 0 || n_key + m_value != s.n_qubits)
    throw std::invalid_argument("measure_distribution: register split mismatch");
  MeasurementDistribution dist;
  dist.n_key = n_key;
  dist.m_value = m_value;
  const std::uint64_t key_mask = (n_key == 64) ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << n_key) - 1;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const double p = std::norm(s.amplitudes[i]);
    if (p > 1e-30) dist.probabilities[{i & key_mask, i >> n_key}] += p;
  }
  return dist;
}

struct MeasurementOutcome {
  std::uint64_t key_bits = 0;
  std::uint64_t value_bits = 0;
};

inline std::size_t sample_index(const StateVector& s, Rng& rng) {
  const double u = rng.next_double();
  double acc = 0.0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    acc += std::norm(s.amplitudes[i]);
    if (u < acc) return i;
  }
  return s.dimension() - 1;  // guard against rounding at the top of the CDF
}

inline MeasurementOutcome sample(const StateVector& s, int n_key, int m_value, Rng& rng) {
  if (n_key + m_value != s.n_qubits)
    throw std::invalid_argument("sample: register split mismatch");
  const std::size_t i = sample_index(s, rng);
  const std::uint64_t key_mask = (n_key == 64) ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << n_key) - 1;
  return {static_cast<std::uint64_t>(i) & key_mask, static_cast<std::uint64_t>(i) >> n_key};
}

// Cumulative table for repeated draws from one state.
class DistributionSampler {
 public:
  DistributionSampler(const StateVector& s, int n_key) : n_key_(n_key) {
    cumulative_.resize(s.dimension());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      acc += std::norm(s.amplitudes[i]);
      cumulative_[i] = acc;
    }
  }

  MeasurementOutcome draw(Rng& rng) const {
    const double u = rng.next_double() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
    if (i >= cumulative_.size()) i = cumulative_.size() - 1;
    const std::uint64_t key_mask = (std::uint64_t{1} << n_key_) - 1;
    return {static_cast<std::uint64_t>(i) & key_mask,
            static_cast<std::uint64_t>(i) >> n_key_};
  }

 private:
  int n_key_;
  std::vector<double> cumulative_;
};

}  // namespace gas
