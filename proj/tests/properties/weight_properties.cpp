// Exhaustive over every generic weight at p = 5, f <= 3 (all digit tuples,
// all twists mod p^f - 1).
#include <gtest/gtest.h>

#include "cyclic_weights/weights.hpp"

using namespace cyclic_weights;

namespace {

template <class Fn>
std::size_t for_each_generic(const Params& params, Fn fn) {
  std::size_t n = 0;
  std::vector<Int> d(params.f(), 0);
  for (;;) {
    for (Int m = 0; m < params.q_minus_1(); ++m) {
      const Weight w = make_weight(d, m, params);
      if (is_generic(w)) {
        fn(w);
        ++n;
      }
    }
    std::size_t j = 0;
    while (j < d.size() && ++d[j] == params.p()) d[j++] = 0;
    if (j == d.size()) break;
  }
  return n;
}

class WeightProperties : public ::testing::TestWithParam<Int> {};

}  // namespace

TEST_P(WeightProperties, CharRoundTrip) {
  const Params params(5, GetParam());
  std::size_t bad = 0;
  const auto n = for_each_generic(params, [&](const Weight& w) { bad += weight_from_char(chi(w)) != w; });
  EXPECT_EQ(bad, 0u);
  EXPECT_EQ(n, static_cast<std::size_t>((params.q_minus_1() - 1) * params.q_minus_1()));
}

TEST_P(WeightProperties, SDualInvolution) {
  const Params params(5, GetParam());
  std::size_t bad = 0;
  for_each_generic(params, [&](const Weight& w) {
    const Weight d = s_dual(w);
    bad += !is_generic(d) || s_dual(d) != w;
  });
  EXPECT_EQ(bad, 0u);
}

TEST_P(WeightProperties, ChiOfDualIsConjugate) {
  const Params params(5, GetParam());
  std::size_t bad = 0;
  for_each_generic(params, [&](const Weight& w) {
    bad += chi(s_dual(w)) != s_conjugate(chi(w));
    bad += s_conjugate(s_conjugate(chi(w))) != chi(w);
  });
  EXPECT_EQ(bad, 0u);
}

INSTANTIATE_TEST_SUITE_P(P5, WeightProperties, ::testing::Values(1, 2, 3),
                         [](const auto& info) { return "f" + std::to_string(info.param); });
