#include "gas/polynomial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "gas/rng.hpp"

namespace gas {
namespace {

Polynomial fig_objective_binary() {
  // 2*x0*x1 + x2 - 1
  return Polynomial(VariableKind::Binary, 3, {{0b011, 2.0}, {0b100, 1.0}, {0, -1.0}});
}

Polynomial fig_objective_spin() {
  // 2*s0*s1 + s2 - 1
  return Polynomial(VariableKind::Spin, 3, {{0b011, 2.0}, {0b100, 1.0}, {0, -1.0}});
}

Polynomial random_polynomial(VariableKind kind, int n, int terms, Rng& rng,
                             bool integer_coeffs = false) {
  Polynomial p(kind, n);
  for (int t = 0; t < terms; ++t) {
    const VarMask vars = rng.next_below(std::uint64_t{1} << n);
    double coeff;
    if (integer_coeffs) {
      coeff = static_cast<double>(static_cast<long long>(rng.next_below(17)) - 8);
      if (coeff == 0.0) coeff = 1.0;
    } else {
      coeff = rng.next_double() * 8.0 - 4.0;
    }
    p.add_term(vars, coeff);
  }
  return p;
}

TEST(Evaluate, FigureObjectiveAtZero) {
  const std::vector<int> zeros{0, 0, 0};
  EXPECT_DOUBLE_EQ(fig_objective_binary().evaluate(zeros), -1.0);
}

TEST(Evaluate, SpinAllPlusOne) {
  // assignment 000 means s = (+1,+1,+1): 2*1*1 + 1 - 1 = 2
  const std::vector<int> zeros{0, 0, 0};
  EXPECT_DOUBLE_EQ(fig_objective_spin().evaluate(zeros), 2.0);
}

TEST(Evaluate, EmptyPolynomialIsZero) {
  Polynomial p(VariableKind::Binary, 4);
  EXPECT_DOUBLE_EQ(p.evaluate_bits(0b1010), 0.0);
}

TEST(Evaluate, LengthMismatchThrows) {
  const std::vector<int> two_bits{0, 1};
  EXPECT_THROW(fig_objective_binary().evaluate(two_bits), std::invalid_argument);
}

TEST(Evaluate, SpinSignConvention) {
  // bit 1 maps to s = -1
  Polynomial p(VariableKind::Spin, 1, {{0b1, 3.0}});
  EXPECT_DOUBLE_EQ(p.evaluate_bits(0b0), 3.0);
  EXPECT_DOUBLE_EQ(p.evaluate_bits(0b1), -3.0);
}

TEST(BinaryToSpin, SingleVariable) {
  // x0 -> (1 - s0) / 2
  Polynomial p(VariableKind::Binary, 1, {{0b1, 1.0}});
  const Polynomial s = binary_to_spin(p);
  EXPECT_DOUBLE_EQ(s.coefficient(0), 0.5);
  EXPECT_DOUBLE_EQ(s.coefficient(0b1), -0.5);
  EXPECT_EQ(s.term_count(), 2u);
}

TEST(BinaryToSpin, FigureObjective) {
  // expand 2*(1-s0)(1-s1)/4 + (1-s2)/2 - 1 and merge:
  // 0.5*s0*s1 - 0.5*s0 - 0.5*s1 - 0.5*s2 + 0
  const Polynomial s = binary_to_spin(fig_objective_binary());
  EXPECT_NEAR(s.coefficient(0b011), 0.5, 1e-12);
  EXPECT_NEAR(s.coefficient(0b001), -0.5, 1e-12);
  EXPECT_NEAR(s.coefficient(0b010), -0.5, 1e-12);
  EXPECT_NEAR(s.coefficient(0b100), -0.5, 1e-12);
  EXPECT_NEAR(s.coefficient(0), 0.0, 1e-12);
  EXPECT_EQ(s.term_count(), 4u);  // zero constant dropped
}

TEST(BinaryToSpin, ConstantPassesThrough) {
  const Polynomial c = Polynomial::constant(VariableKind::Binary, 2, 3.25);
  const Polynomial s = binary_to_spin(c);
  EXPECT_EQ(s.term_count(), 1u);
  EXPECT_DOUBLE_EQ(s.coefficient(0), 3.25);
}

TEST(BinaryToSpin, WrongKindThrows) {
  EXPECT_THROW(binary_to_spin(fig_objective_spin()), std::invalid_argument);
  EXPECT_THROW(spin_to_binary(fig_objective_binary()), std::invalid_argument);
}

TEST(SpinToBinary, SingleVariable) {
  // s0 -> 1 - 2*x0
  Polynomial p(VariableKind::Spin, 1, {{0b1, 1.0}});
  const Polynomial b = spin_to_binary(p);
  EXPECT_DOUBLE_EQ(b.coefficient(0), 1.0);
  EXPECT_DOUBLE_EQ(b.coefficient(0b1), -2.0);
}

TEST(SpinToBinary, PairExpansion) {
  // s0*s1 -> 1 - 2x0 - 2x1 + 4x0x1
  Polynomial p(VariableKind::Spin, 2, {{0b11, 1.0}});
  const Polynomial b = spin_to_binary(p);
  EXPECT_DOUBLE_EQ(b.coefficient(0), 1.0);
  EXPECT_DOUBLE_EQ(b.coefficient(0b01), -2.0);
  EXPECT_DOUBLE_EQ(b.coefficient(0b10), -2.0);
  EXPECT_DOUBLE_EQ(b.coefficient(0b11), 4.0);
}

TEST(SpinToBinary, RoundTripOfFigureObjective) {
  const Polynomial p = fig_objective_spin();
  EXPECT_TRUE(approx_equal(binary_to_spin(spin_to_binary(p)), p, 1e-12));
}

TEST(Conversions, RoundTripRandom) {
  Rng rng(20240613);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 1 + static_cast<int>(rng.next_below(10));
    const Polynomial p =
        random_polynomial(VariableKind::Binary, n, 1 + static_cast<int>(rng.next_below(12)), rng);
    EXPECT_TRUE(approx_equal(spin_to_binary(binary_to_spin(p)), p, 1e-9));
  }
}

TEST(Conversions, EvaluationEquivalenceExhaustive) {
  Rng rng(7);
  for (int n : {1, 3, 6, 9, 12}) {
    const Polynomial p = random_polynomial(VariableKind::Binary, n, 2 * n + 3, rng);
    const Polynomial s = binary_to_spin(p);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
      ASSERT_NEAR(p.evaluate_bits(bits), s.evaluate_bits(bits), 1e-9);
  }
}

TEST(Multiply, BinaryBracketSquareCollapses) {
  // (1-2x0)^2 = 1 - 4x0 + 4x0^2 = 1 for x0 in {0,1}
  Polynomial bracket(VariableKind::Binary, 1, {{0, 1.0}, {0b1, -2.0}});
  const Polynomial sq = multiply(bracket, bracket);
  EXPECT_EQ(sq.term_count(), 1u);
  EXPECT_DOUBLE_EQ(sq.coefficient(0), 1.0);
}

TEST(Multiply, SpinSquareIsOne) {
  Polynomial s0(VariableKind::Spin, 2, {{0b01, 1.0}});
  const Polynomial sq = multiply(s0, s0);
  EXPECT_EQ(sq.term_count(), 1u);
  EXPECT_DOUBLE_EQ(sq.coefficient(0), 1.0);
}

TEST(Multiply, SpinDisjointVariables) {
  Polynomial s0(VariableKind::Spin, 2, {{0b01, 1.0}});
  Polynomial s1(VariableKind::Spin, 2, {{0b10, 1.0}});
  const Polynomial prod = multiply(s0, s1);
  EXPECT_EQ(prod.term_count(), 1u);
  EXPECT_DOUBLE_EQ(prod.coefficient(0b11), 1.0);
}

TEST(Multiply, MismatchThrows) {
  Polynomial a(VariableKind::Binary, 2);
  Polynomial b(VariableKind::Binary, 3);
  Polynomial c(VariableKind::Spin, 2);
  EXPECT_THROW(multiply(a, b), std::invalid_argument);
  EXPECT_THROW(multiply(a, c), std::invalid_argument);
}

TEST(Multiply, CommutativeAndAssociative) {
  Rng rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    const VariableKind kind = rep % 2 ? VariableKind::Spin : VariableKind::Binary;
    const int n = 2 + static_cast<int>(rng.next_below(6));
    const Polynomial a = random_polynomial(kind, n, 4, rng);
    const Polynomial b = random_polynomial(kind, n, 4, rng);
    const Polynomial c = random_polynomial(kind, n, 4, rng);
    EXPECT_TRUE(approx_equal(multiply(a, b), multiply(b, a), 1e-9));
    EXPECT_TRUE(approx_equal(multiply(multiply(a, b), c), multiply(a, multiply(b, c)), 1e-9));
  }
}

TEST(Census, FigureObjective) {
  const DegreeCensus census = degree_census(fig_objective_binary());
  EXPECT_EQ(census.at(0), 1);
  EXPECT_EQ(census.at(1), 1);
  EXPECT_EQ(census.at(2), 1);
  EXPECT_EQ(census.total, 3);
}

TEST(Census, TotalsMatchTermCount) {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const Polynomial p = random_polynomial(VariableKind::Binary, 8, 12, rng);
    const DegreeCensus census = degree_census(p);
    long long sum = 0;
    for (const auto& [k, c] : census.counts) sum += c;
    EXPECT_EQ(sum, census.total);
    EXPECT_EQ(static_cast<std::size_t>(census.total), p.term_count());
  }
}

TEST(Census, ProductBoundedByTermCountProduct) {
  Rng rng(6);
  for (int rep = 0; rep < 30; ++rep) {
    const VariableKind kind = rep % 2 ? VariableKind::Spin : VariableKind::Binary;
    const Polynomial a = random_polynomial(kind, 7, 5, rng);
    const Polynomial b = random_polynomial(kind, 7, 5, rng);
    if (a.empty() || b.empty()) continue;
    EXPECT_LE(multiply(a, b).term_count(), a.term_count() * b.term_count());
  }
}

TEST(ValueBits, FigureObjectiveNeedsThree) {
  // range [-1, 2] fits the signed 3-bit window [-4, 4)
  EXPECT_EQ(value_bits_required(fig_objective_binary()), 3);
}

TEST(ValueBits, ZeroConstantNeedsOne) {
  EXPECT_EQ(value_bits_required(Polynomial(VariableKind::Binary, 2)), 1);
}

TEST(ValueBits, SignedFourBitRange) {
  // max 7 at x0=1, min -8 at x1=1
  Polynomial p(VariableKind::Binary, 2, {{0b01, 7.0}, {0b10, -8.0}});
  EXPECT_EQ(value_bits_required(p), 4);
}

TEST(ValueBits, WideFallbackUsesCoefficientBound) {
  // 30 variables forces the sum-of-|a| bound: 5 + 3 = 8 -> m = 5
  Polynomial p(VariableKind::Binary, 30);
  p.add_term(std::uint64_t{1} << 28, 5.0);
  p.add_term(std::uint64_t{1} << 3, -3.0);
  EXPECT_EQ(value_bits_required(p), 5);
}

TEST(AddTerm, MergesAndDropsDust) {
  Polynomial p(VariableKind::Binary, 2);
  p.add_term(0b01, 1.0);
  p.add_term(0b01, -1.0 + 1e-14);
  EXPECT_TRUE(p.empty());
}

TEST(AddTerm, OutOfRangeIndexThrows) {
  Polynomial p(VariableKind::Binary, 2);
  EXPECT_THROW(p.add_term(0b100, 1.0), std::invalid_argument);
}

TEST(TextFormat, RoundTrip) {
  Rng rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    const VariableKind kind = rep % 2 ? VariableKind::Spin : VariableKind::Binary;
    const int n = 1 + static_cast<int>(rng.next_below(12));
    const Polynomial p = random_polynomial(kind, n, 6, rng);
    const Polynomial q = parse_polynomial_text(format_polynomial(p));
    EXPECT_EQ(q.kind(), p.kind());
    EXPECT_EQ(q.variable_count(), p.variable_count());
    EXPECT_TRUE(approx_equal(p, q, 1e-12));
  }
}

TEST(TextFormat, ParsesCommentsAndConstant) {
  const Polynomial p = parse_polynomial_text(
      "# objective\n"
      "kind=binary n=3\n"
      "2 0 1   # quadratic term\n"
      "1 2\n"
      "\n"
      "-1\n");
  EXPECT_TRUE(approx_equal(p, fig_objective_binary(), 1e-12));
}

TEST(TextFormat, ReducesDuplicateIndices) {
  // spin: s0*s0*s1 = s1; binary: x0*x0*x1 = x0*x1
  const Polynomial s = parse_polynomial_text("kind=spin n=2\n1 0 0 1\n");
  EXPECT_DOUBLE_EQ(s.coefficient(0b10), 1.0);
  EXPECT_EQ(s.term_count(), 1u);
  const Polynomial b = parse_polynomial_text("kind=binary n=2\n1 0 0 1\n");
  EXPECT_DOUBLE_EQ(b.coefficient(0b11), 1.0);
}

TEST(TextFormat, RejectsBadInput) {
  EXPECT_THROW(parse_polynomial_text(""), std::invalid_argument);
  EXPECT_THROW(parse_polynomial_text("n=3 kind=binary\n"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial_text("kind=binary n=2\n1 5\n"), std::invalid_argument);
  EXPECT_THROW(parse_polynomial_text("kind=ternary n=2\n"), std::invalid_argument);
}

}  // namespace
}  // namespace gas
