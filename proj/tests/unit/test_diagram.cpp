#include <gtest/gtest.h>

#include "cyclic_weights/diagram.hpp"
#include "cyclic_weights/errors.hpp"
#include "cyclic_weights/mu_chain.hpp"

using namespace cyclic_weights;

namespace {

const Params P52(5, 2);

CyclicModule worked_module() {
  const std::vector<Int> r{1, 1};
  return build_cyclic_module(build_chain(P52, r, 0));
}

std::vector<FieldElement> scalars(const FieldHandle& f, std::vector<Int> v) {
  std::vector<FieldElement> out;
  for (Int x : v) out.push_back(FieldElement::make(f, {x}));
  return out;
}

}  // namespace

TEST(Diagram, Validation) {
  const auto f = field_make(5, 1);
  EXPECT_THROW(make_diagram(worked_module(), scalars(f, {1, 2, 3})), DimensionError);
  EXPECT_THROW(make_diagram(worked_module(), scalars(f, {1, 0, 3, 4})), DomainError);
}

TEST(Diagram, WorkedClassification) {
  const auto f = field_make(5, 1);
  const auto d = make_diagram(worked_module(), scalars(f, {2, 3, 4, 2}));
  const auto dp = make_diagram(worked_module(), scalars(f, {1, 1, 1, 3}));
  EXPECT_EQ(t_invariant(d), FieldElement::make(f, {3}));
  const auto c = classify_isomorphic(d, dp);
  EXPECT_TRUE(c.isomorphic);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(*c.witness, scalars(f, {1, 3, 1, 4}));
  EXPECT_TRUE(witness_is_valid(normalized(d), normalized(dp), *c.witness));
  EXPECT_FALSE(witness_is_valid(normalized(d), normalized(dp), scalars(f, {1, 3, 1, 3})));
}

TEST(Diagram, DifferentInvariantNotIsomorphic) {
  const auto f = field_make(5, 1);
  const auto d = make_diagram(worked_module(), scalars(f, {1, 1, 1, 1}));
  const auto dp = make_diagram(worked_module(), scalars(f, {1, 1, 1, 2}));
  const auto c = classify_isomorphic(d, dp);
  EXPECT_FALSE(c.isomorphic);
  EXPECT_FALSE(c.witness);
}

TEST(Diagram, RotatedPresentationIsSameDiagram) {
  const auto f = field_make(5, 1);
  const auto d = make_diagram(worked_module(), scalars(f, {2, 3, 4, 2}));
  const auto r = make_diagram(rotate_pairs(worked_module(), 1), scalars(f, {3, 4, 2, 2}));
  EXPECT_EQ(normalized(d), normalized(r));
  const auto c = classify_isomorphic(d, r);
  EXPECT_TRUE(c.isomorphic);
  EXPECT_EQ(*c.witness, scalars(f, {1, 1, 1, 1}));
}

TEST(Diagram, DifferentModulesRejected) {
  const auto f = field_make(5, 1);
  const std::vector<Int> r{1, 1};
  const auto other = build_cyclic_module(build_chain(P52, r, 0, 1));
  EXPECT_THROW(classify_isomorphic(make_diagram(worked_module(), scalars(f, {1, 1, 1, 1})),
                                   make_diagram(other, scalars(f, {1, 1, 1, 1}))),
               DomainError);
}

TEST(Diagram, ExtensionFieldScalars) {
  const auto f = field_make(5, 2);
  const auto x = FieldElement::make(f, {0, 1});
  const auto one = FieldElement::one(f);
  const auto d = make_diagram(worked_module(), {x, x, one, one});
  const auto dp = make_diagram(worked_module(), {one, one, FieldElement::make(f, {3}), one});
  EXPECT_EQ(t_invariant(d), FieldElement::make(f, {3}));
  const auto c = classify_isomorphic(d, dp);
  ASSERT_TRUE(c.isomorphic);
  EXPECT_TRUE(witness_is_valid(normalized(d), normalized(dp), *c.witness));
}

TEST(Diagram, EquivalenceRelation) {
  const auto f = field_make(5, 1);
  const auto m = worked_module();
  const auto elems = field_nonzero_elements(f);
  std::vector<CyclicDiagram> ds;
  for (Int i = 0; i < 24; ++i)
    ds.push_back(make_diagram(m, {elems[i % 4], elems[(i / 4) % 4], elems[(i * 7) % 4], elems[(i / 2) % 4]}));
  for (const auto& a : ds) {
    EXPECT_TRUE(classify_isomorphic(a, a).isomorphic);
    for (const auto& b : ds) {
      const bool ab = classify_isomorphic(a, b).isomorphic;
      ASSERT_EQ(ab, classify_isomorphic(b, a).isomorphic);
      for (const auto& c : ds)
        if (ab && classify_isomorphic(b, c).isomorphic) ASSERT_TRUE(classify_isomorphic(a, c).isomorphic);
    }
  }
}
