#include <gtest/gtest.h>

#include <random>

#include "cyclic_weights/mu_chain.hpp"
#include "cyclic_weights/tuple_algebra.hpp"
#include "cyclic_weights/weights.hpp"

using namespace cyclic_weights;

namespace {

SignedLinear L(int s, Int c) { return SignedLinear::make(s, c); }

PolyTuple random_tuple(std::mt19937_64& rng, std::size_t f) {
  std::vector<SignedLinear> e;
  for (std::size_t j = 0; j < f; ++j) e.push_back(L(rng() % 2 ? 1 : -1, static_cast<Int>(rng() % 21) - 10));
  return PolyTuple(e);
}

}  // namespace

TEST(SignedLinear, ComposeFormula) {
  // (p-2-x) o (x-1) = p-1-x at p = 5
  EXPECT_EQ(compose(L(-1, 3), L(1, -1)), L(-1, 4));
  EXPECT_EQ(compose(L(1, -1), L(-1, 3)), L(-1, 2));
  EXPECT_EQ(compose(L(-1, 4), L(-1, 4)), SignedLinear::identity());
}

TEST(SignedLinear, RejectsBadSign) {
  EXPECT_THROW(SignedLinear::make(0, 1), std::domain_error);
  EXPECT_THROW(SignedLinear::make(2, 1), std::domain_error);
}

TEST(SignedLinear, Evaluate) {
  EXPECT_EQ(L(-1, 3)(1), 2);
  EXPECT_EQ(L(1, -1)(0), -1);
}

TEST(PolyTuple, EmptyRejected) { EXPECT_THROW(PolyTuple(std::vector<SignedLinear>{}), std::invalid_argument); }

TEST(PolyTuple, ComposeDimensionMismatch) {
  EXPECT_THROW(compose(PolyTuple::identity(2), PolyTuple::identity(3)), std::invalid_argument);
  const std::vector<Int> r{1, 2, 3};
  EXPECT_THROW(eval_tuple(PolyTuple::identity(2), r), std::invalid_argument);
}

TEST(PolyTuple, RotateF3) {
  const PolyTuple mu = mu_base(Params(7, 3));
  EXPECT_EQ(to_string(mu), "(x-1, 5-x, 6-x)");
  // g.mu = (p-2-x, p-1-x, x-1): entry 0 of g.mu is mu_1
  const PolyTuple gmu = rotate(mu, 1);
  EXPECT_EQ(gmu[0], mu[1]);
  EXPECT_EQ(gmu[2], mu[0]);
  EXPECT_EQ(gmu, PolyTuple({L(-1, 5), L(-1, 6), L(1, -1)}));
  EXPECT_EQ(rotate(mu, 3), mu);
  EXPECT_EQ(rotate(mu, -1), rotate(mu, 2));
}

TEST(PolyTuple, EvalMuAtOneOne) {
  const std::vector<Int> r{1, 1};
  EXPECT_EQ(eval_tuple(mu_base(Params(5, 2)), r), (std::vector<Int>{0, 2}));
}

TEST(PolyTuple, ToString) {
  EXPECT_EQ(to_string(L(1, 0)), "x");
  EXPECT_EQ(to_string(L(1, 1)), "x+1");
  EXPECT_EQ(to_string(L(-1, 3)), "3-x");
  EXPECT_EQ(to_string(L(-1, 0), "r0"), "-r0");
}

TEST(PolyTupleProperty, ComposeAssociative) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t f = 1 + rng() % 5;
    const auto a = random_tuple(rng, f), b = random_tuple(rng, f), c = random_tuple(rng, f);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(PolyTupleProperty, RotateIsHomomorphism) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t f = 1 + rng() % 5;
    const auto a = random_tuple(rng, f), b = random_tuple(rng, f);
    const Int k = static_cast<Int>(rng() % 13) - 6;
    ASSERT_EQ(rotate(compose(a, b), k), compose(rotate(a, k), rotate(b, k)));
    ASSERT_EQ(rotate(rotate(a, k), 3), rotate(a, k + 3));
  }
}

TEST(PolyTupleProperty, SignVectorIsAdditive) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t f = 1 + rng() % 5;
    const auto a = random_tuple(rng, f), b = random_tuple(rng, f);
    ASSERT_EQ(sign_vector(compose(a, b)), sign_vector(a) + sign_vector(b));
    ASSERT_EQ(sign_vector(rotate(a, 2)), rotate(sign_vector(a), 2));
  }
}

TEST(PolyTupleProperty, EvalOfComposition) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t f = 1 + rng() % 4;
    const auto a = random_tuple(rng, f), b = random_tuple(rng, f);
    std::vector<Int> x;
    for (std::size_t j = 0; j < f; ++j) x.push_back(static_cast<Int>(rng() % 30));
    ASSERT_EQ(eval_tuple(compose(a, b), x), eval_tuple(a, eval_tuple(b, x)));
  }
}

TEST(CheckedArithmetic, Overflow) {
  EXPECT_THROW(checked_mul(Int{1} << 62, 4), std::overflow_error);
  EXPECT_THROW(checked_add(std::numeric_limits<Int>::max(), 1), std::overflow_error);
  EXPECT_EQ(checked_mul(-3, 7), -21);
}

TEST(FloorMod, Negative) {
  EXPECT_EQ(floor_mod(-1, 5), 4);
  EXPECT_EQ(floor_mod(10, 5), 0);
}
