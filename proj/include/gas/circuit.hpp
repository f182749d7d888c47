#pragma once
//
// Gate-level IR for quantum-dictionary circuits, the two lowering passes
// (conventional multi-controlled-phase and the CNOT+Rz spin design), Grover
// operator assembly, and the CNOT/Rz cost model.
//
// Qubit layout: key qubits are indices 0..n-1, value qubits n..n+m-1. Value
// qubit n+j carries significance 2^j of the two's-complement objective value,
// so the most significant (sign) value qubit is index n+m-1.
//

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gas/polynomial.hpp"

namespace gas {

enum class GateKind {
  Hadamard,
  PauliX,
  PauliZ,
  Phase,                 // diag(1, e^{i theta})
  RotZ,                  // diag(e^{-i theta/2}, e^{+i theta/2})
  CNot,
  MultiControlledPhase,  // phase e^{i theta} when all controls and target are 1
  InverseQft,
  Qft,
};

struct Gate {
  GateKind kind;
  int target = -1;
  int control = -1;           // CNot only
  double angle = 0.0;         // Phase / RotZ / MultiControlledPhase
  std::vector<int> controls;  // MultiControlledPhase; empty = plain phase
  std::vector<int> targets;   // InverseQft / Qft, least significant first

  static Gate hadamard(int t) { return {GateKind::Hadamard, t}; }
  static Gate pauli_x(int t) { return {GateKind::PauliX, t}; }
  static Gate pauli_z(int t) { return {GateKind::PauliZ, t}; }
  static Gate phase(int t, double theta) { return {GateKind::Phase, t, -1, theta}; }
  static Gate rot_z(int t, double theta) { return {GateKind::RotZ, t, -1, theta}; }
  static Gate cnot(int c, int t) { return {GateKind::CNot, t, c}; }
  static Gate multi_controlled_phase(std::vector<int> cs, int t, double theta) {
    Gate g{GateKind::MultiControlledPhase, t, -1, theta};
    g.controls = std::move(cs);
    return g;
  }
  static Gate inverse_qft(std::vector<int> ts) {
    Gate g{GateKind::InverseQft};
    g.targets = std::move(ts);
    return g;
  }
  static Gate qft(std::vector<int> ts) {
    Gate g{GateKind::Qft};
    g.targets = std::move(ts);
    return g;
  }
};

struct Circuit {
  int n_key = 0;
  int m_value = 0;
  std::vector<Gate> gates;

  int qubit_count() const { return n_key + m_value; }
};

inline Gate adjoint(const Gate& g) {
  Gate inv = g;
  switch (g.kind) {
    case GateKind::Hadamard:
    case GateKind::PauliX:
    case GateKind::PauliZ:
    case GateKind::CNot:
      break;  // self-inverse
    case GateKind::Phase:
    case GateKind::RotZ:
    case GateKind::MultiControlledPhase:
      inv.angle = -g.angle;
      break;
    case GateKind::InverseQft:
      inv.kind = GateKind::Qft;
      break;
    case GateKind::Qft:
      inv.kind = GateKind::InverseQft;
      break;
  }
  return inv;
}

inline Circuit adjoint(const Circuit& c) {
  Circuit inv;
  inv.n_key = c.n_key;
  inv.m_value = c.m_value;
  inv.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    inv.gates.push_back(adjoint(*it));
  return inv;
}

enum class DictionaryDesign { Conventional, Proposed };

inline const char* to_string(DictionaryDesign d) {
  return d == DictionaryDesign::Conventional ? "conventional" : "proposed";
}

namespace detail {

inline std::vector<int> mask_indices(VarMask vars) {
  std::vector<int> idx;
  for (int i = 0; i < kMaxVariables; ++i)
    if (vars & (std::uint64_t{1} << i)) idx.push_back(i);
  return idx;
}

inline std::vector<int> value_register(int n, int m) {
  std::vector<int> t(m);
  std::iota(t.begin(), t.end(), n);
  return t;
}

}  // namespace detail

// Conventional dictionary: H on every qubit, one multi-controlled phase per
// (term, value qubit) with base angle 2*pi*a / 2^m scaled by the qubit's
// significance, then inverse QFT on the value part. Values land in the value
// register in two's complement, wrapping mod 2^m when m is chosen too small.
inline Circuit lower_binary_dictionary(const Polynomial& p, int m) {
  if (p.kind() != VariableKind::Binary)
    throw std::invalid_argument("lower_binary_dictionary: polynomial is not binary");
  if (m <= 0) throw std::invalid_argument("lower_binary_dictionary: m must be positive");
  const int n = p.variable_count();
  Circuit c;
  c.n_key = n;
  c.m_value = m;
  for (int q = 0; q < n + m; ++q) c.gates.push_back(Gate::hadamard(q));
  for (const auto& [vars, coeff] : p.terms()) {
    const double theta = 2.0 * std::numbers::pi * coeff / std::ldexp(1.0, m);
    const auto controls = detail::mask_indices(vars);
    for (int j = 0; j < m; ++j) {
      const double angle = std::ldexp(theta, j);
      if (controls.empty())
        c.gates.push_back(Gate::phase(n + j, angle));
      else
        c.gates.push_back(Gate::multi_controlled_phase(controls, n + j, angle));
    }
  }
  c.gates.push_back(Gate::inverse_qft(detail::value_register(n, m)));
  return c;
}

// Spin dictionary: every monomial of degree d becomes, per value qubit, a
// rotation-Z enclosed by d CNOTs on each side (2*m*d CNOTs and m rotations per
// term). The CNOT sandwich flips the rotation axis exactly when an odd number
// of the term's spin variables are -1, turning the phase advance into the
// matching delay. Constant terms have no enclosing CNOTs and use plain phase
// gates, as in the conventional design.
inline Circuit lower_spin_dictionary(const Polynomial& p, int m) {
  if (p.kind() != VariableKind::Spin)
    throw std::invalid_argument("lower_spin_dictionary: polynomial is not spin");
  if (m <= 0) throw std::invalid_argument("lower_spin_dictionary: m must be positive");
  const int n = p.variable_count();
  Circuit c;
  c.n_key = n;
  c.m_value = m;
  for (int q = 0; q < n + m; ++q) c.gates.push_back(Gate::hadamard(q));
  for (const auto& [vars, coeff] : p.terms()) {
    const double theta = 2.0 * std::numbers::pi * coeff / std::ldexp(1.0, m);
    const auto key_qubits = detail::mask_indices(vars);
    for (int j = 0; j < m; ++j) {
      const double angle = std::ldexp(theta, j);
      if (key_qubits.empty()) {
        c.gates.push_back(Gate::phase(n + j, angle));
        continue;
      }
      for (int k : key_qubits) c.gates.push_back(Gate::cnot(k, n + j));
      c.gates.push_back(Gate::rot_z(n + j, angle));
      for (int k : key_qubits) c.gates.push_back(Gate::cnot(k, n + j));
    }
  }
  c.gates.push_back(Gate::inverse_qft(detail::value_register(n, m)));
  return c;
}

inline Circuit lower_dictionary(const Polynomial& p, int m, DictionaryDesign design) {
  return design == DictionaryDesign::Conventional ? lower_binary_dictionary(p, m)
                                                  : lower_spin_dictionary(p, m);
}

// One Grover iteration G = A_y D A_y^dag O for a dictionary circuit a_y built
// from E(x) - y. The oracle is a Z gate on the sign qubit of the value part,
// flipping states with E(x) - y < 0. The reflection between A_y^dag and A_y
// acts on the key part only and is the phase flip about |0..0> (X, (n-1)-
// controlled Z, X). A_y itself opens with Hadamards on every qubit, which is
// what turns this zero reflection into the reflection about the prepared
// superposition; wrapping it in another Hadamard layer here would cancel
// those and break the amplification.
inline Circuit assemble_grover(const Circuit& a_y) {
  const int n = a_y.n_key;
  const int m = a_y.m_value;
  if (n <= 0 || m <= 0)
    throw std::invalid_argument("assemble_grover: dictionary circuit has empty register");
  Circuit g;
  g.n_key = n;
  g.m_value = m;
  g.gates.push_back(Gate::pauli_z(n + m - 1));  // oracle on the sign qubit
  const Circuit a_adj = adjoint(a_y);
  g.gates.insert(g.gates.end(), a_adj.gates.begin(), a_adj.gates.end());
  for (int q = 0; q < n; ++q) g.gates.push_back(Gate::pauli_x(q));
  std::vector<int> controls(n - 1);
  std::iota(controls.begin(), controls.end(), 0);
  g.gates.push_back(
      Gate::multi_controlled_phase(std::move(controls), n - 1, std::numbers::pi));
  for (int q = 0; q < n; ++q) g.gates.push_back(Gate::pauli_x(q));
  g.gates.insert(g.gates.end(), a_y.gates.begin(), a_y.gates.end());
  return g;
}

// --- CNOT/Rz cost model ------------------------------------------------------

// Ancilla-free decomposition of a k-controlled U(2) phase gate.
inline long long conventional_cnot_cost(int degree) {
  if (degree <= 0) return 0;
  return 4LL * degree * degree - 4LL * degree + 2;
}

// CNOT sandwich of the spin design: d CNOTs on each side of the rotation.
inline long long proposed_cnot_cost(int degree) {
  return degree <= 0 ? 0 : 2LL * degree;
}

struct CostReport {
  struct DegreeEntry {
    long long terms = 0;
    long long cnots = 0;  // per value qubit
  };
  std::map<int, DegreeEntry> per_degree;  // degree >= 1 only
  long long cnot_per_value_qubit = 0;
  long long rz_per_value_qubit = 0;
  int value_qubits = 1;
  long long cnot_total = 0;  // value_qubits * cnot_per_value_qubit
};

// Closed-form gate census for lowering `p` with the given design; the inverse
// QFT is excluded. Conventional circuits are costed without being emitted
// gate-by-gate (the multi-controlled phases stay atomic in the IR); proposed
// counts match the emitted circuit exactly.
inline CostReport cost_report(const Polynomial& p, DictionaryDesign design, int m) {
  if (design == DictionaryDesign::Conventional && p.kind() != VariableKind::Binary)
    throw std::invalid_argument("cost_report: conventional design needs a binary polynomial");
  if (design == DictionaryDesign::Proposed && p.kind() != VariableKind::Spin)
    throw std::invalid_argument("cost_report: proposed design needs a spin polynomial");
  if (m <= 0) throw std::invalid_argument("cost_report: m must be positive");
  CostReport report;
  report.value_qubits = m;
  for (const auto& [vars, coeff] : p.terms()) {
    const int degree = std::popcount(vars);
    if (degree == 0) continue;
    const long long cnots = design == DictionaryDesign::Conventional
                                ? conventional_cnot_cost(degree)
                                : proposed_cnot_cost(degree);
    auto& entry = report.per_degree[degree];
    entry.terms += 1;
    entry.cnots += cnots;
    report.cnot_per_value_qubit += cnots;
    if (design == DictionaryDesign::Proposed) report.rz_per_value_qubit += 1;
  }
  report.cnot_total = report.cnot_per_value_qubit * m;
  return report;
}

// --- plain-text dump ---------------------------------------------------------

namespace detail {

inline std::string join_indices(const std::vector<int>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i]);
  }
  return out;
}

inline std::string format_angle(double angle) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", angle);
  return buf;
}

}  // namespace detail

// One gate per line: `H 3`, `CX 0 5`, `RZ 5 0.785398163`,
// `MCP 0,1 5 1.570796327`, `IQFT 3,4,5`.
inline std::string dump_circuit(const Circuit& c) {
  std::ostringstream os;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Hadamard:
        os << "H " << g.target;
        break;
      case GateKind::PauliX:
        os << "X " << g.target;
        break;
      case GateKind::PauliZ:
        os << "Z " << g.target;
        break;
      case GateKind::Phase:
        os << "P " << g.target << ' ' << detail::format_angle(g.angle);
        break;
      case GateKind::RotZ:
        os << "RZ " << g.target << ' ' << detail::format_angle(g.angle);
        break;
      case GateKind::CNot:
        os << "CX " << g.control << ' ' << g.target;
        break;
      case GateKind::MultiControlledPhase:
        if (g.controls.empty())
          os << "P " << g.target << ' ' << detail::format_angle(g.angle);
        else
          os << "MCP " << detail::join_indices(g.controls) << ' ' << g.target << ' '
             << detail::format_angle(g.angle);
        break;
      case GateKind::InverseQft:
        os << "IQFT " << detail::join_indices(g.targets);
        break;
      case GateKind::Qft:
        os << "QFT " << detail::join_indices(g.targets);
        break;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gas
