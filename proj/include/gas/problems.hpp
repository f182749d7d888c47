#pragma once
//
// Problem generators for the two use cases:
//
//  * MIMO maximum-likelihood detection: the squared distance between the
//    received vector and a Gray-labeled 2^(2M)-QAM candidate, expanded into a
//    multilinear objective over 2*M*N_t bits (binary form) or the same number
//    of spin variables (one monomial per Gray bracket). Closed-form
//    per-degree term counts are provided alongside the symbolic expansion so
//    each can check the other.
//
//  * Syndrome decoding: parity-row products as +/-1 indicators, either
//    expanded over (1-2x) brackets (binary) or kept as one spin monomial per
//    parity row.
//

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gas/polynomial.hpp"
#include "gas/rng.hpp"

namespace gas {

using Complex = std::complex<double>;
using ComplexMatrix = std::vector<std::vector<Complex>>;

// --- QAM constellation ---------------------------------------------------------

// Normalization factor A giving the 2^(2M)-QAM constellation unit average
// energy: A = 2^(1-M) * sum_{k=0}^{2^M-1} (2k - 2^M + 1)^2.
inline double qam_normalization(int half_bits) {
  if (half_bits < 1) throw std::invalid_argument("qam_normalization: M must be >= 1");
  double sum = 0.0;
  const long long levels = 1LL << half_bits;
  for (long long k = 0; k < levels; ++k) {
    const double amp = static_cast<double>(2 * k - levels + 1);
    sum += amp * amp;
  }
  return std::ldexp(sum, 1 - half_bits);
}

// Gray-labeled QAM symbol for the v-th transmit antenna. Symbol v consumes
// bits 2Mv..2Mv+2M-1: even offsets drive the real axis, odd the imaginary,
// each axis a sum of nested (1-2x) bracket products.
inline Complex qam_symbol_binary(std::span<const int> assignment, int v, int half_bits) {
  const int base = 2 * half_bits * v;
  if (base + 2 * half_bits > static_cast<int>(assignment.size()))
    throw std::invalid_argument("qam_symbol_binary: assignment too short for symbol index");
  const double inv_sqrt_a = 1.0 / std::sqrt(qam_normalization(half_bits));
  double re = 0.0, im = 0.0;
  double re_prod = 1.0, im_prod = 1.0;
  for (int k = 0; k < half_bits; ++k) {
    re_prod *= 1.0 - 2.0 * assignment[base + 2 * k];
    im_prod *= 1.0 - 2.0 * assignment[base + 2 * k + 1];
    const double weight = ((k & 1) ? -1.0 : 1.0) * std::ldexp(1.0, half_bits - 1 - k);
    re += weight * re_prod;
    im += weight * im_prod;
  }
  return {re * inv_sqrt_a, im * inv_sqrt_a};
}

namespace detail {

// Product of (1-2x_i) brackets (binary) or the single monomial s_{i0}...s_{ik}
// (spin) over the given indices.
inline Polynomial bracket_product(VariableKind kind, int n, std::span<const int> indices) {
  if (kind == VariableKind::Spin) {
    VarMask vars = 0;
    for (int i : indices) vars |= std::uint64_t{1} << i;
    Polynomial p(kind, n);
    p.add_term(vars, 1.0);
    return p;
  }
  Polynomial p = Polynomial::constant(kind, n, 1.0);
  for (int i : indices) {
    Polynomial bracket(kind, n, {{0, 1.0}, {std::uint64_t{1} << i, -2.0}});
    p = multiply(p, bracket);
  }
  return p;
}

}  // namespace detail

// One axis (real: parity = 0, imaginary: parity = 1) of symbol v as a
// polynomial over all 2*M*N_t variables.
inline Polynomial qam_symbol_axis_poly(VariableKind kind, int half_bits, int n_tx, int v,
                                       int parity) {
  const int n = 2 * half_bits * n_tx;
  const int base = 2 * half_bits * v;
  const double inv_sqrt_a = 1.0 / std::sqrt(qam_normalization(half_bits));
  Polynomial axis(kind, n);
  std::vector<int> indices;
  for (int k = 0; k < half_bits; ++k) {
    indices.push_back(base + 2 * k + parity);
    const double weight = ((k & 1) ? -1.0 : 1.0) * std::ldexp(1.0, half_bits - 1 - k);
    axis += detail::bracket_product(kind, n, indices) * (weight * inv_sqrt_a);
  }
  return axis;
}

// --- MIMO instance --------------------------------------------------------------

struct MimoInstance {
  int n_tx = 2;
  int n_rx = 2;
  int half_bits = 1;  // M: the constellation is 2^(2M)-QAM
  ComplexMatrix channel;            // N_r x N_t
  std::vector<Complex> transmitted;  // N_t
  double sigma = 0.0;
  std::vector<Complex> received;  // N_r
  double normalization = 2.0;     // A

  int variable_count() const { return 2 * half_bits * n_tx; }
};

// i.i.d. entries of the standard complex Gaussian CN(0,1): real and imaginary
// parts each N(0, 1/2).
inline ComplexMatrix random_channel(int n_rx, int n_tx, Rng& rng) {
  const double scale = 1.0 / std::numbers::sqrt2;
  ComplexMatrix h(n_rx, std::vector<Complex>(n_tx));
  for (int u = 0; u < n_rx; ++u)
    for (int v = 0; v < n_tx; ++v)
      h[u][v] = {rng.next_gaussian() * scale, rng.next_gaussian() * scale};
  return h;
}

// r = H t / sqrt(N_t) + sigma * noise, with CN(0,1) noise drawn from `rng`.
inline void fill_received(MimoInstance& inst, Rng& rng) {
  const double inv_sqrt_nt = 1.0 / std::sqrt(static_cast<double>(inst.n_tx));
  const double noise_scale = 1.0 / std::numbers::sqrt2;
  inst.received.assign(inst.n_rx, {0.0, 0.0});
  for (int u = 0; u < inst.n_rx; ++u) {
    for (int v = 0; v < inst.n_tx; ++v)
      inst.received[u] += inst.channel[u][v] * inst.transmitted[v];
    inst.received[u] *= inv_sqrt_nt;
    inst.received[u] += inst.sigma * Complex{rng.next_gaussian() * noise_scale,
                                             rng.next_gaussian() * noise_scale};
  }
}

inline MimoInstance make_mimo_instance(int half_bits, int n_tx, int n_rx, double sigma,
                                       std::span<const int> transmitted_bits, Rng& rng) {
  MimoInstance inst;
  inst.half_bits = half_bits;
  inst.n_tx = n_tx;
  inst.n_rx = n_rx;
  inst.sigma = sigma;
  inst.normalization = qam_normalization(half_bits);
  inst.channel = random_channel(n_rx, n_tx, rng);
  inst.transmitted.resize(n_tx);
  for (int v = 0; v < n_tx; ++v)
    inst.transmitted[v] = qam_symbol_binary(transmitted_bits, v, half_bits);
  fill_received(inst, rng);
  return inst;
}

inline MimoInstance make_random_mimo_instance(int half_bits, int n_tx, int n_rx,
                                              double sigma, Rng& rng) {
  const int n = 2 * half_bits * n_tx;
  std::vector<int> bits(n);
  for (int i = 0; i < n; ++i) bits[i] = static_cast<int>(rng.next_below(2));
  return make_mimo_instance(half_bits, n_tx, n_rx, sigma, bits, rng);
}

// The benchmark 16-QAM 2x2 instance: a fixed channel, the transmitted vector
// for bits 00001111, and sigma = 0.1 (20 dB SNR). The additive noise is not
// pinned by the benchmark description, so it is drawn from `rng` and belongs
// in the experiment manifest.
inline MimoInstance fixed_mimo_instance(Rng& rng) {
  MimoInstance inst;
  inst.half_bits = 2;
  inst.n_tx = 2;
  inst.n_rx = 2;
  inst.sigma = 0.1;
  inst.normalization = qam_normalization(2);
  inst.channel = {{{0.749, -0.0149}, {1.32, 0.0630}},
                  {{0.637, -0.143}, {-0.389, -0.152}}};
  const double inv_sqrt10 = 1.0 / std::sqrt(10.0);
  inst.transmitted = {Complex{1.0, 1.0} * inv_sqrt10, Complex{-3.0, -3.0} * inv_sqrt10};
  fill_received(inst, rng);
  return inst;
}

inline const std::vector<int>& fixed_mimo_transmitted_bits() {
  static const std::vector<int> bits{0, 0, 0, 0, 1, 1, 1, 1};
  return bits;
}

// || r - H t(x) / sqrt(N_t) ||^2 expanded into a multilinear polynomial. The
// spin form replaces every (1-2x) bracket with one spin variable before
// expansion, which is what collapses the term count.
inline Polynomial mimo_objective(const MimoInstance& inst, VariableKind kind) {
  const int n = inst.variable_count();
  const double inv_sqrt_nt = 1.0 / std::sqrt(static_cast<double>(inst.n_tx));
  Polynomial objective(kind, n);
  std::vector<Polynomial> axis_re, axis_im;
  for (int v = 0; v < inst.n_tx; ++v) {
    axis_re.push_back(qam_symbol_axis_poly(kind, inst.half_bits, inst.n_tx, v, 0));
    axis_im.push_back(qam_symbol_axis_poly(kind, inst.half_bits, inst.n_tx, v, 1));
  }
  for (int u = 0; u < inst.n_rx; ++u) {
    Polynomial residual_re = Polynomial::constant(kind, n, inst.received[u].real());
    Polynomial residual_im = Polynomial::constant(kind, n, inst.received[u].imag());
    for (int v = 0; v < inst.n_tx; ++v) {
      const Complex g = inst.channel[u][v] * inv_sqrt_nt;
      residual_re -= axis_re[v] * g.real();
      residual_re += axis_im[v] * g.imag();
      residual_im -= axis_re[v] * g.imag();
      residual_im -= axis_im[v] * g.real();
    }
    objective += multiply(residual_re, residual_re);
    objective += multiply(residual_im, residual_im);
  }
  return objective;
}

// --- closed-form term counts -----------------------------------------------------

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

inline void check_term_count_args(int half_bits, int n_tx, int k) {
  if (n_tx < 2) throw std::invalid_argument("term count: N_t must be >= 2");
  if (k < 1 || k > 2 * half_bits)
    throw std::invalid_argument("term count: degree k out of range [1, 2M]");
}

// Number of degree-k terms in the binary-variable MIMO objective.
inline long long term_count_binary(int half_bits, int n_tx, int k) {
  check_term_count_args(half_bits, n_tx, k);
  const long long pair_weight = 2LL * n_tx * (n_tx - 1);
  long long count = binomial(2 * half_bits, k) * pair_weight;
  if (k <= half_bits) count -= binomial(half_bits, k) * 2LL * n_tx * (2 * n_tx - 3);
  return count;
}

// Number of degree-k terms in the spin-variable MIMO objective.
inline long long term_count_spin(int half_bits, int n_tx, int k) {
  check_term_count_args(half_bits, n_tx, k);
  const long long pair_weight = 2LL * n_tx * (n_tx - 1);
  if (k <= half_bits)
    return (k - 1) * pair_weight + (half_bits - k + 1) * 2LL * n_tx;
  return (2LL * half_bits - k + 1) * pair_weight;
}

inline long long term_total_binary(int half_bits, int n_tx) {
  return ((1LL << (2 * half_bits)) - 1) * 2LL * n_tx * (n_tx - 1) -
         ((1LL << half_bits) - 1) * 2LL * n_tx * (2 * n_tx - 3);
}

inline long long term_total_spin(int half_bits, int n_tx) {
  return static_cast<long long>(half_bits) * half_bits * 2 * n_tx * (n_tx - 1) +
         static_cast<long long>(half_bits) * (half_bits + 1) * n_tx;
}

// --- syndrome decoding -----------------------------------------------------------

struct SyndromeInstance {
  std::vector<std::vector<int>> parity;  // M x N, entries in {0,1}
  std::vector<int> syndrome;             // length M
  int weight_bound = 0;  // informational; the experiments use w = N

  int rows() const { return static_cast<int>(parity.size()); }
  int columns() const { return parity.empty() ? 0 : static_cast<int>(parity[0].size()); }
};

inline SyndromeInstance make_syndrome_instance(std::vector<std::vector<int>> parity,
                                               std::vector<int> syndrome = {}) {
  SyndromeInstance inst;
  inst.parity = std::move(parity);
  const int rows = inst.rows();
  for (const auto& row : inst.parity) {
    if (static_cast<int>(row.size()) != inst.columns())
      throw std::invalid_argument("syndrome: ragged parity matrix");
    for (int e : row)
      if (e != 0 && e != 1) throw std::invalid_argument("syndrome: parity entries must be 0/1");
  }
  if (syndrome.empty()) syndrome.assign(rows, 0);
  if (static_cast<int>(syndrome.size()) != rows)
    throw std::invalid_argument("syndrome: syndrome length mismatch");
  inst.syndrome = std::move(syndrome);
  inst.weight_bound = inst.columns();
  return inst;
}

// Parity check matrix of the (7,4) Hamming code.
inline SyndromeInstance hamming74_instance() {
  return make_syndrome_instance({{1, 0, 0, 1, 1, 1, 0},
                                 {0, 1, 0, 0, 1, 1, 1},
                                 {0, 0, 1, 1, 1, 0, 1}});
}

// Its extension: one more column and an all-ones bottom row.
inline SyndromeInstance extended_hamming84_instance() {
  return make_syndrome_instance({{1, 0, 0, 1, 1, 1, 0, 0},
                                 {0, 1, 0, 0, 1, 1, 1, 0},
                                 {0, 0, 1, 1, 1, 0, 1, 0},
                                 {1, 1, 1, 1, 1, 1, 1, 1}});
}

// E = -sum_j (-1)^{y_j} * prod_{i: h_ji = 1} v_i with v_i = (1-2x_i) in the
// binary form (fully expanded) and v_i = s_i in the spin form (one monomial
// per parity row). Rows match the syndrome exactly when every product equals
// (-1)^{y_j}, which is where the minimum -M is attained.
inline Polynomial syndrome_objective(const SyndromeInstance& inst, VariableKind kind) {
  const int n = inst.columns();
  if (n > kMaxVariables) throw std::invalid_argument("syndrome_objective: too many columns");
  Polynomial objective(kind, n);
  for (int j = 0; j < inst.rows(); ++j) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (inst.parity[j][i]) support.push_back(i);
    const double sign = inst.syndrome[j] ? 1.0 : -1.0;  // -(-1)^{y_j}
    objective += detail::bracket_product(kind, n, support) * sign;
  }
  return objective;
}

// --- instance files --------------------------------------------------------------
//
// JSON with complex numbers as [re, im] pairs; parity matrices as arrays of
// 0/1 rows.

inline nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

inline Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("instance json: complex values must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json mimo_to_json(const MimoInstance& inst) {
  nlohmann::json j;
  j["type"] = "mimo";
  j["n_tx"] = inst.n_tx;
  j["n_rx"] = inst.n_rx;
  j["half_bits"] = inst.half_bits;
  j["sigma"] = inst.sigma;
  j["normalization"] = inst.normalization;
  auto channel = nlohmann::json::array();
  for (const auto& row : inst.channel) {
    auto jrow = nlohmann::json::array();
    for (const auto& z : row) jrow.push_back(complex_to_json(z));
    channel.push_back(jrow);
  }
  j["channel"] = channel;
  auto transmitted = nlohmann::json::array();
  for (const auto& z : inst.transmitted) transmitted.push_back(complex_to_json(z));
  j["transmitted"] = transmitted;
  auto received = nlohmann::json::array();
  for (const auto& z : inst.received) received.push_back(complex_to_json(z));
  j["received"] = received;
  return j;
}

inline MimoInstance mimo_from_json(const nlohmann::json& j) {
  MimoInstance inst;
  inst.n_tx = j.at("n_tx").get<int>();
  inst.n_rx = j.at("n_rx").get<int>();
  inst.half_bits = j.at("half_bits").get<int>();
  inst.sigma = j.at("sigma").get<double>();
  inst.normalization = j.contains("normalization") ? j["normalization"].get<double>()
                                                   : qam_normalization(inst.half_bits);
  for (const auto& jrow : j.at("channel")) {
    std::vector<Complex> row;
    for (const auto& jz : jrow) row.push_back(complex_from_json(jz));
    inst.channel.push_back(std::move(row));
  }
  for (const auto& jz : j.at("transmitted")) inst.transmitted.push_back(complex_from_json(jz));
  for (const auto& jz : j.at("received")) inst.received.push_back(complex_from_json(jz));
  if (static_cast<int>(inst.channel.size()) != inst.n_rx ||
      static_cast<int>(inst.received.size()) != inst.n_rx ||
      static_cast<int>(inst.transmitted.size()) != inst.n_tx)
    throw std::invalid_argument("instance json: mimo dimensions inconsistent");
  return inst;
}

inline nlohmann::json syndrome_to_json(const SyndromeInstance& inst) {
  nlohmann::json j;
  j["type"] = "syndrome";
  j["parity"] = inst.parity;
  j["syndrome"] = inst.syndrome;
  j["weight_bound"] = inst.weight_bound;
  return j;
}

inline SyndromeInstance syndrome_from_json(const nlohmann::json& j) {
  auto inst = make_syndrome_instance(j.at("parity").get<std::vector<std::vector<int>>>(),
                                     j.contains("syndrome")
                                         ? j["syndrome"].get<std::vector<int>>()
                                         : std::vector<int>{});
  if (j.contains("weight_bound")) inst.weight_bound = j["weight_bound"].get<int>();
  return inst;
}

}  // namespace gas
