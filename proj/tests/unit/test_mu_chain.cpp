#include <gtest/gtest.h>

#include "cyclic_weights/errors.hpp"
#include "cyclic_weights/mu_chain.hpp"

using namespace cyclic_weights;

namespace {

SignedLinear L(int s, Int c) { return SignedLinear::make(s, c); }

std::vector<Int> digits_of(const Weight& w) { return {w.digits().begin(), w.digits().end()}; }

struct Expected {
  std::vector<Int> digits;
  Int twist;
};

void expect_chain(const ChainResult& c, const std::vector<Expected>& sigmas, const std::vector<Int>& e_values) {
  ASSERT_EQ(c.sigmas.size(), sigmas.size());
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    EXPECT_EQ(digits_of(c.sigmas[k]), sigmas[k].digits) << "k=" << k;
    EXPECT_EQ(c.sigmas[k].twist(), sigmas[k].twist) << "k=" << k;
  }
  EXPECT_EQ(c.e_values, e_values);
}

}  // namespace

TEST(Mu, BaseTuple) {
  EXPECT_EQ(mu_base(Params(5, 2)), PolyTuple({L(1, -1), L(-1, 3)}));
  EXPECT_EQ(mu_base(Params(7, 4)), PolyTuple({L(1, -1), L(-1, 5), L(-1, 6), L(-1, 6)}));
  EXPECT_THROW(mu_base(Params(5, 1)), UnsupportedDegreeError);
}

TEST(Mu, SecondPower) {
  EXPECT_EQ(mu_power(Params(5, 2), 2), PolyTuple({L(-1, 4), L(-1, 2)}));
  EXPECT_EQ(mu_power(Params(7, 3), 2), PolyTuple({L(-1, 6), L(1, 1), L(-1, 5)}));
  EXPECT_TRUE(mu_power(Params(5, 2), 0).is_identity());
  EXPECT_THROW(mu_power(Params(5, 2), 5), DomainError);
}

TEST(Mu, PeriodIsChainLength) {
  for (Int p : {5, 7, 11}) {
    for (Int f = 2; f <= 6; ++f) {
      const Params params(p, f);
      const auto powers = mu_powers(params);
      ASSERT_EQ(static_cast<Int>(powers.size()), params.chain_length() + 1);
      EXPECT_TRUE(powers.back().is_identity()) << p << "," << f;
      for (std::size_t k = 1; k + 1 < powers.size(); ++k) EXPECT_FALSE(powers[k].is_identity());
    }
  }
}

TEST(Mu, RecurrenceMatchesComposition) {
  for (Int f = 2; f <= 6; ++f) {
    const Params params(11, f);
    for (Int s = 0; s < f; ++s)
      for (Int k = 0; k <= params.chain_length(); ++k)
        ASSERT_EQ(mu_power(params, k, s), mu_power_by_composition(params, k, s)) << f << "," << s << "," << k;
  }
}

TEST(EValue, FrozenValues) {
  const Params params(5, 2);
  const PolyTuple mu = mu_base(params);
  const std::vector<Int> r11{1, 1}, r02{0, 2};
  EXPECT_EQ(e_value(mu, r11, params), 10);
  EXPECT_EQ(e_value(rotate(mu, 1), r02, params), 1);
  EXPECT_EQ(e_value(rotate(mu, 1), r11, params), 2);
}

TEST(EValue, OddSumRejected) {
  const Params params(5, 2);
  const PolyTuple t({L(1, -1), L(1, 0)});
  const std::vector<Int> x{1, 1};
  EXPECT_THROW(e_value(t, x, params), IntegralityError);
}

TEST(Chain, WorkedExample) {
  const std::vector<Int> r{1, 1};
  const ChainResult c = build_chain(Params(5, 2), r, 0);
  EXPECT_EQ(c.l, 4);
  expect_chain(c, {{{1, 1}, 0}, {{0, 2}, 10}, {{3, 1}, 11}, {{2, 2}, 21}, {{1, 1}, 0}}, {0, 10, 11, 21, 24});
}

TEST(Chain, SeedRotationOne) {
  const std::vector<Int> r{1, 1};
  const ChainResult c = build_chain(Params(5, 2), r, 0, 1);
  expect_chain(c, {{{1, 1}, 0}, {{2, 0}, 2}, {{1, 3}, 7}, {{2, 2}, 9}, {{1, 1}, 0}}, {0, 2, 7, 9, 24});
}

TEST(Chain, OddDegree) {
  const std::vector<Int> r{1, 1, 1};
  const Params params(7, 3);
  expect_chain(build_chain(params, r, 0), {{{1, 1, 1}, 0}, {{0, 4, 5}, 63}, {{5, 2, 4}, 92}, {{1, 1, 1}, 0}},
               {0, 63, 92, 342});
  const auto s1 = build_chain(params, r, 0, 1);
  EXPECT_EQ(digits_of(s1.sigmas[1]), (std::vector<Int>{4, 5, 0}));
  EXPECT_EQ(s1.sigmas[1].twist(), 9);
  EXPECT_EQ(digits_of(s1.sigmas[2]), (std::vector<Int>{2, 4, 5}));
  EXPECT_EQ(s1.sigmas[2].twist(), 62);
  const auto s2 = build_chain(params, r, 0, 2);
  EXPECT_EQ(s2.sigmas[1].twist(), 99);
  EXPECT_EQ(s2.sigmas[2].twist(), 302);
}

TEST(Chain, TwistShiftsEverything) {
  const std::vector<Int> r{1, 2};
  const Params params(7, 2);
  const auto a = build_chain(params, r, 0), b = build_chain(params, r, 5);
  for (std::size_t k = 0; k < a.sigmas.size(); ++k) {
    EXPECT_EQ(digits_of(a.sigmas[k]), digits_of(b.sigmas[k]));
    EXPECT_EQ(floor_mod(a.sigmas[k].twist() + 5, params.q_minus_1()), b.sigmas[k].twist());
  }
}

TEST(Chain, ELConstants) {
  // e_l / (p^f - 1) is 1 for f = 2, 3, then 3 for f = 4 and 2 for f = 5
  const std::vector<std::pair<Int, std::vector<Int>>> table{
      {5, {24, 124, 1872, 6248}}, {7, {48, 342, 7200, 33612}}, {11, {120, 1330, 43920, 322100}},
      {13, {168, 2196, 85680, 742584}}};
  for (const auto& [p, values] : table) {
    for (Int f = 2; f <= 5; ++f) {
      const std::vector<Int> r(f, 1);
      EXPECT_EQ(build_chain(Params(p, f), r, 0).e_values.back(), values[f - 2]) << p << "," << f;
    }
  }
}

TEST(Chain, InputErrors) {
  const Params params(5, 2);
  const std::vector<Int> short_r{1}, low{0, 1}, high{1, 3};
  EXPECT_THROW(build_chain(params, short_r, 0), DimensionError);
  EXPECT_THROW(build_chain(params, low, 0), DomainError);
  EXPECT_THROW(build_chain(params, high, 0), DomainError);
  const std::vector<Int> r1{1};
  EXPECT_THROW(build_chain(Params(5, 1), r1, 0), UnsupportedDegreeError);
}

TEST(Lemma, SmallSweep) {
  for (Int f = 2; f <= 4; ++f) {
    const Params params(7, f);
    const auto set = default_r_set(params);
    EXPECT_EQ(set.size(), box_size(params));
    const auto rep = verify_mu_lemma(params, set);
    EXPECT_TRUE(rep.all_ok()) << f;
    EXPECT_TRUE(rep.intermediate_identities_ok()) << f;
    EXPECT_TRUE(rep.witnesses.empty());
  }
}

TEST(Lemma, ColumnSumsAndConstant) {
  const std::vector<std::pair<Int, Int>> c_twice{{2, 24}, {3, 62}, {4, 624}, {5, 1562}};
  for (const auto& [f, twice] : c_twice) {
    const Params params(5, f);
    const auto set = default_r_set(params);
    const auto rep = verify_mu_lemma(params, set);
    EXPECT_EQ(rep.constant_c_twice, twice) << f;
  }
  const Params params(5, 4);
  const auto set = default_r_set(params);
  EXPECT_EQ(verify_mu_lemma(params, set).column_sums, (std::vector<Int>{10, 10, 10, 10}));
}

TEST(Lemma, WorkerCountDoesNotMatter) {
  const Params params(11, 3);
  const auto set = default_r_set(params);
  EXPECT_EQ(verify_mu_lemma(params, set, 1), verify_mu_lemma(params, set, 4));
  EXPECT_EQ(verify_mu_lemma(params, set, 3), verify_mu_lemma(params, set, 8));
}

TEST(Lemma, SampledBoxIsDeterministic) {
  const Params params(13, 7);  // 10^7 points
  const auto a = default_r_set(params), b = default_r_set(params);
  EXPECT_EQ(a, b);
  EXPECT_LE(a.size(), kSampleSize + 64);
  EXPECT_GT(a.size(), kSampleSize / 2);
  EXPECT_NE(default_r_set(params, 1), a);
  const std::vector<Int> lo(7, 1), hi(7, 10);
  EXPECT_TRUE(std::binary_search(a.begin(), a.end(), lo));
  EXPECT_TRUE(std::binary_search(a.begin(), a.end(), hi));
}

TEST(Lemma, RejectsOutOfBox) {
  const Params params(5, 2);
  const std::vector<std::vector<Int>> set{{0, 1}};
  EXPECT_THROW(verify_mu_lemma(params, set), DomainError);
}
