#include <gtest/gtest.h>

#include "hallforge/derived.hpp"
#include "hallforge/errors.hpp"

using namespace hallforge;

namespace {

// Source and reflected target stacks for A2 (0 -> 1) at vertex 0.
struct A2Reflection : ::testing::Test {
  Quiver qs = Quiver::linear_a(2);
  Quiver qt = qs.reflected_at(0);
  Category src{qs, 2};
  Category tgt{qt, 2};
  HallAlgebra hs{src};
  HallAlgebra ht{tgt};
  DoubleAlgebra ds{hs};
  DoubleAlgebra dt{ht};
  DerivedGrading grading = build_grading(src, tgt, 0, 3);
  DerivedGrading inverse = build_grading(tgt, src, 0, 3);
  ClassId s1() { return src.simple(0); }
  ClassId s2() { return src.simple(1); }
  ClassId p() { return src.enumerate_classes(K0Element{1, 1})[1]; }
  ClassId sum() { return src.enumerate_classes(K0Element{1, 1})[0]; }
};

}  // namespace

TEST_F(A2Reflection, ReflectObject) {
  const DerivedObjectClass a = reflect_object(src, tgt, 0, src.representative(s1()));
  ASSERT_EQ(a.parts.size(), 1u);
  EXPECT_EQ(a.parts.begin()->first, 1);
  EXPECT_EQ(a.parts.begin()->second, tgt.simple(0));

  const DerivedObjectClass b = reflect_object(src, tgt, 0, src.representative(s2()));
  ASSERT_EQ(b.parts.size(), 1u);
  EXPECT_EQ(b.parts.at(0).dim, (K0Element{1, 1}));
  EXPECT_TRUE(tgt.is_indecomposable(b.parts.at(0)));

  const DerivedObjectClass c = reflect_object(src, tgt, 0, src.representative(p()));
  EXPECT_EQ(c.parts.at(0), tgt.simple(1));
}

TEST_F(A2Reflection, InverseReflectionRoundTrip) {
  for (const ClassId& m : src.indecomposables_up_to(2)) {
    const DerivedObjectClass f = reflect(src, tgt, 0, src.representative(m));
    ASSERT_EQ(f.parts.size(), 1u);
    const auto [shift, image] = *f.parts.begin();
    const DerivedObjectClass g = reflect(tgt, src, 0, tgt.representative(image));
    ASSERT_EQ(g.parts.size(), 1u);
    EXPECT_EQ(g.parts.begin()->first + shift, 0);
    EXPECT_EQ(g.parts.begin()->second, m);
  }
  EXPECT_THROW(reflect_object_inverse(src, tgt, 0, src.representative(s1())), NotASink);
}

TEST_F(A2Reflection, Grading) {
  EXPECT_EQ(grading.indecomposables.at(s1()).shift, 1);
  EXPECT_EQ(grading.indecomposables.at(s2()).shift, 0);
  EXPECT_EQ(grading.indecomposables.at(p()).image, tgt.simple(1));
  EXPECT_EQ(grading.shift_of(src, s2()), 0);
  EXPECT_THROW(grading.shift_of(src, sum()), UngradedClass);
  EXPECT_EQ(grading.k0_map, (IntMatrix{{-1, 1}, {0, 1}}));
}

TEST(Grading, A3Shifts) {
  const Quiver q = Quiver::linear_a(3);
  Category src(q, 2), tgt(q.reflected_at(0), 2);
  const DerivedGrading g = build_grading(src, tgt, 0, 3);
  EXPECT_EQ(g.indecomposables.size(), 6u);
  for (const auto& [m, img] : g.indecomposables) EXPECT_EQ(img.shift, m == src.simple(0) ? 1 : 0) << m;
}

TEST_F(A2Reflection, NormalForm) {
  const NormalForm nf = normal_form(hs, grading, Basis{K0Element{0, 0}, sum()});
  EXPECT_EQ(nf.scalar, Scalar::v(2).inverse());
  EXPECT_EQ(nf.factors, (std::vector<std::pair<int, ClassId>>{{0, s2()}, {1, s1()}}));
  for (const ClassId& c : src.classes_up_to(3)) {
    const Basis b{K0Element{1, -1}, c};
    EXPECT_EQ(expand(hs, normal_form(hs, grading, b)), HallElement(b)) << c;
  }
}

TEST_F(A2Reflection, SumFactorization) {
  EXPECT_TRUE(check_sum_factorization(hs, grading, s2(), s1()).pass);
  EXPECT_THROW(check_sum_factorization(hs, grading, s1(), s2()), InternalInconsistency);
}

TEST_F(A2Reflection, HomExtPattern) {
  for (const Report& r : check_hom_ext_pattern(src, grading)) EXPECT_TRUE(r.pass) << r.to_json().dump();
}

TEST_F(A2Reflection, FStarGenerators) {
  FStar f(ds, dt, grading);
  const ClassId t1 = tgt.simple(0);
  const Scalar vinv = Scalar::v(2).inverse();
  // Shift 1 sends a left generator to the right line.
  EXPECT_EQ(f.left_generator(s1()), vinv * dt.basis(K0Element{-1, 0}, tgt.zero_class(), t1));
  EXPECT_EQ(f.right_generator(s1()), vinv * dt.basis(K0Element{1, 0}, t1, tgt.zero_class()));
  EXPECT_EQ(f.left_generator(s2()), dt.basis(K0Element{0, 0}, grading.indecomposables.at(s2()).image,
                                             tgt.zero_class()));
  EXPECT_EQ(f.k_left(K0Element{1, 0}), dt.basis(K0Element{-1, 0}, tgt.zero_class(), tgt.zero_class()));
  EXPECT_EQ(f.k_left(K0Element{0, 1}), dt.basis(K0Element{1, 1}, tgt.zero_class(), tgt.zero_class()));
}

TEST_F(A2Reflection, FStarIsAnInvertibleHomomorphism) {
  FStar f(ds, dt, grading);
  FStar g(dt, ds, inverse);
  const auto keys = double_generators(ds, 2);
  for (const DoubleKey& x : keys) {
    const Report r = check_inverse(f, g, x);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    for (const DoubleKey& y : keys) {
      if (x.left.dim.total() + y.left.dim.total() > 2 || x.right.dim.total() + y.right.dim.total() > 2) continue;
      const Report h = check_homomorphism(f, x, y);
      EXPECT_TRUE(h.pass) << h.to_json().dump();
    }
  }
}

TEST_F(A2Reflection, RelationsPreserved) {
  FStar f(ds, dt, grading);
  for (const ClassId& a : src.classes_up_to(1))
    for (const ClassId& b : src.classes_up_to(1)) {
      if (a.is_zero() || b.is_zero()) continue;
      for (const Report& r : check_relations_preserved(f, a, b)) EXPECT_TRUE(r.pass) << r.to_json().dump();
    }
}

TEST(K0Reflection, MatchesCartanAndIsAnInvolution) {
  for (int n : {2, 3}) {
    const Quiver q = Quiver::linear_a(n);
    for (int alpha = 0; alpha < n; ++alpha) {
      if (!q.is_source(alpha) && !q.is_sink(alpha)) continue;
      Category src(q, 2), tgt(q.reflected_at(alpha), 2);
      const IntMatrix m = k0_reflection_matrix(src, tgt, alpha);
      EXPECT_EQ(m, cartan_reflection(q, alpha)) << n << " " << alpha;
      const IntMatrix back = k0_reflection_matrix(tgt, src, alpha);
      IntMatrix id(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int i = 0; i < n; ++i) id[i][i] = 1;
      EXPECT_EQ(matrix_product(back, m), id);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const K0Element ei = K0Element::unit(n, i), ej = K0Element::unit(n, j);
          EXPECT_EQ(symmetric_form_additive(q, ei, ej),
                    symmetric_form_additive(q.reflected_at(alpha), apply_matrix(m, ei), apply_matrix(m, ej)));
        }
    }
  }
}

TEST(K0Reflection, CartanMatrixA2) {
  EXPECT_EQ(cartan_reflection(Quiver::linear_a(2), 0), (IntMatrix{{-1, 1}, {0, 1}}));
  EXPECT_EQ(apply_matrix(cartan_reflection(Quiver::linear_a(2), 0), K0Element{0, 1}), (K0Element{1, 1}));
}

TEST(Reflection, Errors) {
  const Quiver a3 = Quiver::linear_a(3);
  Category src(a3, 2), tgt(a3, 2);
  EXPECT_THROW(reflect(src, tgt, 1, src.representative(src.simple(1))), NotASource);
  Category kr(Quiver::kronecker(), 2), kt(Quiver::kronecker().reflected_at(0), 2);
  EXPECT_THROW(build_grading(kr, kt, 0, 2), MultipleEdges);
}
