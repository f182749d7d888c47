#pragma once
//
// Multilinear polynomials over binary {0,1} or spin {+1,-1} variables.
//
// A monomial is a duplicate-free set of variable indices stored as a 64-bit
// mask, which caps a polynomial at 64 variables. Reduction is implicit in the
// representation and in the product rules: x*x = x for binary variables (mask
// union) and s*s = 1 for spin variables (mask symmetric difference).
// Coefficients are real; terms whose merged coefficient falls below
// kCoefficientTolerance are dropped so float dust never inflates term counts.
//
// Assignments are bit vectors. For spin polynomials, bit 0 maps to s = +1 and
// bit 1 to s = -1.
//

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gas {

enum class VariableKind { Binary, Spin };

inline const char* to_string(VariableKind kind) {
  return kind == VariableKind::Binary ? "binary" : "spin";
}

// Monomial: set of variable indices, bit i <=> variable i.
using VarMask = std::uint64_t;

inline constexpr int kMaxVariables = 64;
inline constexpr double kCoefficientTolerance = 1e-12;

class Polynomial {
 public:
  using TermMap = std::map<VarMask, double>;

  Polynomial(VariableKind kind, int variable_count)
      : kind_(kind), n_(variable_count) {
    if (variable_count < 0 || variable_count > kMaxVariables)
      throw std::invalid_argument("Polynomial: variable count must be in [0, 64]");
  }

  Polynomial(VariableKind kind, int variable_count,
             std::initializer_list<std::pair<VarMask, double>> terms)
      : Polynomial(kind, variable_count) {
    for (const auto& [vars, coeff] : terms) add_term(vars, coeff);
  }

  static Polynomial constant(VariableKind kind, int variable_count, double value) {
    Polynomial p(kind, variable_count);
    p.add_term(0, value);
    return p;
  }

  VariableKind kind() const { return kind_; }
  int variable_count() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  double coefficient(VarMask vars) const {
    auto it = terms_.find(vars);
    return it == terms_.end() ? 0.0 : it->second;
  }
  double constant_term() const { return coefficient(0); }

  int degree() const {
    int d = 0;
    for (const auto& [vars, coeff] : terms_) d = std::max(d, std::popcount(vars));
    return d;
  }

  // Merges `coeff` into the monomial `vars`; drops the term if the merged
  // coefficient is below tolerance.
  void add_term(VarMask vars, double coeff) {
    if (n_ < kMaxVariables && (vars >> n_) != 0)
      throw std::invalid_argument("Polynomial::add_term: variable index out of range");
    auto [it, inserted] = terms_.try_emplace(vars, 0.0);
    it->second += coeff;
    if (std::abs(it->second) <= kCoefficientTolerance) terms_.erase(it);
  }

  // Exact value of the polynomial at the packed assignment (bit i = x_i).
  double evaluate_bits(std::uint64_t bits) const {
    double total = 0.0;
    if (kind_ == VariableKind::Binary) {
      for (const auto& [vars, coeff] : terms_)
        if ((bits & vars) == vars) total += coeff;
    } else {
      for (const auto& [vars, coeff] : terms_)
        total += (std::popcount(bits & vars) & 1) ? -coeff : coeff;
    }
    return total;
  }

  double evaluate(std::span<const int> assignment) const {
    if (static_cast<int>(assignment.size()) != n_)
      throw std::invalid_argument("Polynomial::evaluate: assignment length mismatch");
    std::uint64_t bits = 0;
    for (int i = 0; i < n_; ++i)
      if (assignment[i] != 0) bits |= std::uint64_t{1} << i;
    return evaluate_bits(bits);
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    require_compatible(rhs);
    for (const auto& [vars, coeff] : rhs.terms_) add_term(vars, coeff);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    require_compatible(rhs);
    for (const auto& [vars, coeff] : rhs.terms_) add_term(vars, -coeff);
    return *this;
  }
  Polynomial& operator*=(double scale) {
    TermMap scaled;
    for (const auto& [vars, coeff] : terms_) {
      const double c = coeff * scale;
      if (std::abs(c) > kCoefficientTolerance) scaled.emplace(vars, c);
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, double scale) { return lhs *= scale; }
  friend Polynomial operator*(double scale, Polynomial rhs) { return rhs *= scale; }

  void require_compatible(const Polynomial& other) const {
    if (kind_ != other.kind_ || n_ != other.n_)
      throw std::invalid_argument("Polynomial: kind or variable count mismatch");
  }

 private:
  VariableKind kind_;
  int n_;
  TermMap terms_;
};

// Product with kind-appropriate reduction (x^2 = x, s^2 = 1) and merging.
inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial out(a.kind(), a.variable_count());
  const bool binary = a.kind() == VariableKind::Binary;
  for (const auto& [va, ca] : a.terms())
    for (const auto& [vb, cb] : b.terms())
      out.add_term(binary ? (va | vb) : (va ^ vb), ca * cb);
  return out;
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return multiply(a, b);
}

// Substitutes x_i = (1 - s_i) / 2 and expands. The returned spin polynomial
// evaluates identically under the bit<->spin map (bit 0 <-> s = +1).
inline Polynomial binary_to_spin(const Polynomial& p) {
  if (p.kind() != VariableKind::Binary)
    throw std::invalid_argument("binary_to_spin: polynomial is not binary");
  Polynomial out(VariableKind::Spin, p.variable_count());
  for (const auto& [vars, coeff] : p.terms()) {
    const double scale = std::ldexp(coeff, -std::popcount(vars));
    VarMask sub = vars;
    while (true) {
      out.add_term(sub, (std::popcount(sub) & 1) ? -scale : scale);
      if (sub == 0) break;
      sub = (sub - 1) & vars;
    }
  }
  return out;
}

// Substitutes s_i = 1 - 2 x_i and expands; exact inverse of binary_to_spin.
inline Polynomial spin_to_binary(const Polynomial& p) {
  if (p.kind() != VariableKind::Spin)
    throw std::invalid_argument("spin_to_binary: polynomial is not spin");
  Polynomial out(VariableKind::Binary, p.variable_count());
  for (const auto& [vars, coeff] : p.terms()) {
    VarMask sub = vars;
    while (true) {
      const int k = std::popcount(sub);
      out.add_term(sub, std::ldexp((k & 1) ? -coeff : coeff, k));
      if (sub == 0) break;
      sub = (sub - 1) & vars;
    }
  }
  return out;
}

struct DegreeCensus {
  std::map<int, long long> counts;  // degree -> number of stored monomials
  long long total = 0;

  long long at(int degree) const {
    auto it = counts.find(degree);
    return it == counts.end() ? 0 : it->second;
  }
  // Count with the constant term excluded (the convention used for the
  // MIMO term-count comparisons; syndrome tables count the constant too).
  long long nonconstant_total() const { return total - at(0); }
};

inline DegreeCensus degree_census(const Polynomial& p) {
  DegreeCensus census;
  for (const auto& [vars, coeff] : p.terms()) {
    ++census.counts[std::popcount(vars)];
    ++census.total;
  }
  return census;
}

// Smallest m such that every objective value fits a signed m-bit integer
// range [-2^(m-1), 2^(m-1)). Exact extrema are enumerated for up to 24
// variables; beyond that the conservative bound |E| <= sum |a| is used.
inline int value_bits_required(const Polynomial& p) {
  double lo = 0.0, hi = 0.0;
  if (p.variable_count() <= 24) {
    const std::uint64_t n_assignments = std::uint64_t{1} << p.variable_count();
    lo = hi = p.evaluate_bits(0);
    for (std::uint64_t bits = 1; bits < n_assignments; ++bits) {
      const double v = p.evaluate_bits(bits);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  } else {
    double bound = 0.0;
    for (const auto& [vars, coeff] : p.terms()) bound += std::abs(coeff);
    lo = -bound;
    hi = bound;
  }
  for (int m = 1; m < kMaxVariables; ++m) {
    const double half = std::ldexp(1.0, m - 1);
    if (-half <= lo && hi < half) return m;
  }
  throw std::invalid_argument("value_bits_required: value range too wide");
}

inline bool approx_equal(const Polynomial& a, const Polynomial& b, double tol = 1e-9) {
  if (a.kind() != b.kind() || a.variable_count() != b.variable_count()) return false;
  for (const auto& [vars, coeff] : a.terms())
    if (std::abs(coeff - b.coefficient(vars)) > tol) return false;
  for (const auto& [vars, coeff] : b.terms())
    if (std::abs(coeff - a.coefficient(vars)) > tol) return false;
  return true;
}

// --- text format ------------------------------------------------------------
//
// Header line `kind=binary|spin n=<int>`, then one term per line:
// `<coeff> <idx> <idx> ...` (no indices for the constant term). `#` starts a
// comment. Duplicate indices within a line are reduced silently per kind:
// repeated binary variables collapse, spin pairs cancel.

inline void write_polynomial(std::ostream& os, const Polynomial& p) {
  os << "kind=" << to_string(p.kind()) << " n=" << p.variable_count() << "\n";
  char buf[40];
  for (const auto& [vars, coeff] : p.terms()) {
    std::snprintf(buf, sizeof buf, "%.17g", coeff);
    os << buf;
    for (int i = 0; i < kMaxVariables; ++i)
      if (vars & (std::uint64_t{1} << i)) os << ' ' << i;
    os << "\n";
  }
}

inline std::string format_polynomial(const Polynomial& p) {
  std::ostringstream os;
  write_polynomial(os, p);
  return os.str();
}

inline Polynomial parse_polynomial(std::istream& is) {
  std::string line;
  bool have_header = false;
  VariableKind kind = VariableKind::Binary;
  int n = 0;
  Polynomial p(kind, 0);
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    if (!have_header) {
      std::string kind_field, n_field;
      if (!(tokens >> kind_field)) continue;  // blank line before header
      if (!(tokens >> n_field) || kind_field.rfind("kind=", 0) != 0 ||
          n_field.rfind("n=", 0) != 0)
        throw std::invalid_argument("polynomial parse: missing `kind=... n=...` header");
      const std::string kind_name = kind_field.substr(5);
      if (kind_name == "binary")
        kind = VariableKind::Binary;
      else if (kind_name == "spin")
        kind = VariableKind::Spin;
      else
        throw std::invalid_argument("polynomial parse: unknown kind `" + kind_name + "`");
      n = std::stoi(n_field.substr(2));
      p = Polynomial(kind, n);
      have_header = true;
      continue;
    }
    double coeff;
    if (!(tokens >> coeff)) continue;  // blank or comment-only line
    VarMask vars = 0;
    long long idx;
    while (tokens >> idx) {
      if (idx < 0 || idx >= n)
        throw std::invalid_argument("polynomial parse: variable index out of range at line " +
                                    std::to_string(line_no));
      const VarMask bit = std::uint64_t{1} << idx;
      if (kind == VariableKind::Spin)
        vars ^= bit;  // s^2 = 1
      else
        vars |= bit;  // x^2 = x
    }
    if (!tokens.eof())
      throw std::invalid_argument("polynomial parse: malformed term at line " +
                                  std::to_string(line_no));
    p.add_term(vars, coeff);
  }
  if (!have_header)
    throw std::invalid_argument("polynomial parse: empty input");
  return p;
}

inline Polynomial parse_polynomial_text(const std::string& text) {
  std::istringstream is(text);
  return parse_polynomial(is);
}

}  // namespace gas
