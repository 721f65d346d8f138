#include <gtest/gtest.h>

#include "cyclic_weights/mu_chain.hpp"
#include "cyclic_weights/symbolic.hpp"

using namespace cyclic_weights;

TEST(Symbolic, DigitStrings) {
  EXPECT_EQ(to_string(SymbolicDigit{-1, 1, -2}, 1), "p-2-r1");
  EXPECT_EQ(to_string(SymbolicDigit{1, 0, -1}, 0), "r0-1");
  EXPECT_EQ(to_string(SymbolicDigit{1, 0, 0}, 2), "r2");
  EXPECT_EQ(to_string(SymbolicDigit{-1, 1, 0}, 0), "p-r0");
  EXPECT_EQ(to_string(SymbolicDigit{-1, 1, 1}, 2), "p+1-r2");
}

TEST(Symbolic, ChainF2) {
  const auto chain = symbolic_chain(2);
  ASSERT_EQ(chain.size(), 4u);
  EXPECT_EQ(to_string(chain[0]), "(r0-1,p-2-r1)");
  EXPECT_EQ(to_string(chain[3]), "(r0,r1)");
  EXPECT_EQ(to_string(symbolic_dual(chain[0])), "(p-r0,r1+1)");
}

TEST(Symbolic, ModuleF3) {
  const auto pairs = symbolic_module(3);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(to_string(pairs[0].sub), "(r0-1,p-2-r1,p-1-r2)");
  EXPECT_EQ(to_string(pairs[0].quotient), "(p-1-r0,p-1-r1,p-1-r2)");
}

TEST(Symbolic, EvaluatesToNumericChain) {
  for (Int p : {5, 7, 11}) {
    for (Int f = 2; f <= 5; ++f) {
      const Params params(p, f);
      std::vector<Int> r;
      for (Int j = 0; j < f; ++j) r.push_back(1 + (j % (p - 3)));
      for (Int s = 0; s < f; ++s) {
        const auto sym = symbolic_chain(f, s);
        const auto num = build_chain(params, r, 0, s);
        ASSERT_EQ(sym.size(), static_cast<std::size_t>(num.l));
        for (std::size_t k = 0; k < sym.size(); ++k)
          for (Int j = 0; j < f; ++j)
            ASSERT_EQ(sym[k][j].evaluate(p, r[j]), num.sigmas[k + 1].digit(j)) << p << f << s << k << j;
      }
    }
  }
}

TEST(Symbolic, RejectsDegreeOne) { EXPECT_THROW(symbolic_chain(1), std::domain_error); }
