#include <gtest/gtest.h>

#include <filesystem>

#include "hallforge/category.hpp"
#include "hallforge/errors.hpp"

using namespace hallforge;

namespace {

Rep a2_rep(int map, int q = 2) {
  Rep r = Rep::zero(Quiver::linear_a(2), K0Element{1, 1}, q);
  r.maps[0].set(0, 0, map);
  return r;
}

struct A2 : ::testing::Test {
  Category cat{Quiver::linear_a(2), 2};
  ClassId s1() { return cat.simple(0); }
  ClassId s2() { return cat.simple(1); }
  ClassId sum() { return cat.iso_class_of(a2_rep(0)); }
  ClassId p() { return cat.iso_class_of(a2_rep(1)); }
};

}  // namespace

TEST(Quiver, RejectsCyclesAndLoops) {
  EXPECT_THROW(Quiver(2, {{0, 1}, {1, 0}}), ConfigError);
  EXPECT_THROW(Quiver(1, {{0, 0}}), ConfigError);
  EXPECT_THROW(Quiver(2, {{0, 2}}), ConfigError);
}

TEST(Quiver, SourcesSinksAndReflection) {
  const Quiver q = Quiver::linear_a(3);
  EXPECT_TRUE(q.is_source(0));
  EXPECT_TRUE(q.is_sink(2));
  EXPECT_FALSE(q.is_source(1) || q.is_sink(1));
  const Quiver r = q.reflected_at(0);
  EXPECT_TRUE(r.is_sink(0));
  EXPECT_EQ(r.reflected_at(0), q);
  EXPECT_TRUE(Quiver::kronecker().has_multiple_edges());
}

TEST(EulerForm, Examples) {
  EXPECT_EQ(euler_form_additive(Quiver::linear_a(2), K0Element{1, 0}, K0Element{0, 1}), -1);
  EXPECT_EQ(euler_form_additive(Quiver::linear_a(2), K0Element{1, 1}, K0Element{0, 0}), 0);
  EXPECT_EQ(euler_form_additive(Quiver::kronecker(), K0Element{1, 0}, K0Element{0, 1}), -2);
}

TEST(Encoding, RoundTrip) {
  const Quiver q = Quiver::kronecker();
  for (std::uint64_t code = 0; code < 81; ++code) {
    const Rep r = decode_rep(q, K0Element{1, 2}, 3, code % 81);
    EXPECT_EQ(encode_rep(r), code);
  }
}

TEST_F(A2, ClassCounts) {
  EXPECT_EQ(cat.enumerate_classes(K0Element{1, 1}).size(), 2u);
  EXPECT_EQ(cat.enumerate_classes(K0Element{0, 0}).size(), 1u);
  EXPECT_NE(sum(), p());
  EXPECT_EQ(cat.iso_class_of(Rep::zero(cat.quiver(), K0Element{0, 0}, 2)), cat.zero_class());
}

TEST_F(A2, ClassesAreOrbitInvariant) {
  Category c3(Quiver::linear_a(2), 3);
  EXPECT_EQ(c3.iso_class_of(a2_rep(1, 3)), c3.iso_class_of(a2_rep(2, 3)));
}

TEST_F(A2, HomExtAut) {
  const Rep& S1 = cat.representative(s1());
  const Rep& S2 = cat.representative(s2());
  const Rep& P = cat.representative(p());
  const Rep& A = cat.representative(sum());
  EXPECT_EQ(cat.hom_count(S1, S2), 1);
  EXPECT_EQ(cat.hom_count(P, P), 2);
  EXPECT_EQ(cat.hom_count(A, A), 4);
  EXPECT_EQ(cat.ext1_count(S1, S2), 2);
  EXPECT_EQ(cat.ext1_count(S2, S1), 1);
  EXPECT_EQ(cat.ext1_count(P, P), 1);
  EXPECT_EQ(cat.aut_order(cat.zero_class()), 1);
  EXPECT_EQ(cat.aut_order(s1()), 1);
  EXPECT_EQ(cat.aut_order(sum()), 1);
  Category c3(Quiver::linear_a(2), 3);
  EXPECT_EQ(c3.aut_order(c3.simple(0)), 2);
  EXPECT_EQ(c3.aut_order(c3.iso_class_of(a2_rep(0, 3))), 4);
}

TEST_F(A2, AutTimesOrbitIsGroupOrder) {
  // |Aut M| * |orbit| = |GL(dim)| and the orbits partition the rep space.
  for (const K0Element& d : cat.dimension_vectors(4)) {
    Integer points = 0;
    const Integer group = gl_order(d[0], 2) * gl_order(d[1], 2);
    for (const ClassId& c : cat.enumerate_classes(d)) points += group / cat.aut_order(c);
    EXPECT_EQ(points, int_pow(2, static_cast<unsigned>(d[0] * d[1])));
  }
}

TEST_F(A2, Subobjects) {
  EXPECT_EQ(cat.subobjects(cat.representative(cat.zero_class())).size(), 1u);
  EXPECT_EQ(cat.subobjects(cat.representative(p())).size(), 3u);
  EXPECT_EQ(cat.subobjects(cat.representative(sum())).size(), 4u);
  for (const SubobjectWitness& w : cat.subobjects(cat.representative(p()))) {
    const auto [sub, quot] = cat.sub_quotient_classes(w);
    EXPECT_EQ(sub.dim + quot.dim, p().dim);
    if (sub == s2()) EXPECT_EQ(quot, s1());
  }
}

TEST_F(A2, HallNumbers) {
  EXPECT_EQ(cat.hall_number(s1(), s2(), p()), 1);
  EXPECT_EQ(cat.hall_number(s2(), s1(), sum()), 1);
  EXPECT_EQ(cat.hall_number(s2(), s1(), p()), 0);
  EXPECT_EQ(cat.hall_number(p(), cat.zero_class(), p()), 1);
  EXPECT_EQ(cat.hall_number(sum(), cat.zero_class(), p()), 0);
}

TEST_F(A2, StrictFiltrations) {
  const Rep& S1 = cat.representative(s1());
  EXPECT_EQ(cat.strict_filtrations(S1, 1).size(), 1u);
  EXPECT_TRUE(cat.strict_filtrations(S1, 2).empty());
  const auto chains = cat.strict_filtrations(cat.representative(p()), 2);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0], (std::vector<ClassId>{s1(), s2()}));
}

TEST_F(A2, FiltrationCensusAgreesWithChains) {
  for (const ClassId& c : cat.classes_up_to(3)) {
    if (c.is_zero()) continue;
    FiltrationCensus direct;
    const Rep& r = cat.representative(c);
    for (int n = 1; n <= c.dim.total(); ++n)
      for (const auto& seq : cat.strict_filtrations(r, n)) direct[seq] += 1;
    EXPECT_EQ(direct, cat.filtration_census(c));
  }
}

TEST_F(A2, KernelCokernelCounts) {
  const Rep& S = cat.representative(s1());
  const ClassId z = cat.zero_class();
  EXPECT_EQ(cat.hom_with_ker_coker_count(S, S, z, z), 1);  // q - 1 = 1
  EXPECT_EQ(cat.hom_with_ker_coker_count(S, S, s1(), s1()), 1);
  const Rep& Z = cat.representative(z);
  EXPECT_EQ(cat.hom_with_ker_coker_count(Z, Z, z, z), 1);
  EXPECT_EQ(cat.hom_with_ker_coker_count(Z, Z, s1(), z), 0);
  Category c3(Quiver::single_vertex(), 3);
  const Rep& T = c3.representative(c3.simple(0));
  EXPECT_EQ(c3.hom_with_ker_coker_count(T, T, c3.zero_class(), c3.zero_class()), 2);
}

TEST_F(A2, Decomposition) {
  EXPECT_TRUE(cat.decompose(cat.zero_class()).empty());
  EXPECT_EQ(cat.decompose(sum()), (std::vector<ClassId>{s2(), s1()}));
  EXPECT_EQ(cat.decompose(p()), (std::vector<ClassId>{p()}));
  EXPECT_TRUE(cat.is_indecomposable(p()));
  EXPECT_EQ(cat.direct_sum_class(s1(), s2()), sum());
}

TEST(Category, IndecomposableCensus) {
  // A2 and A3 have 3 and 6 indecomposables (positive roots).
  Category a2(Quiver::linear_a(2), 2);
  EXPECT_EQ(a2.indecomposables_up_to(2).size(), 3u);
  Category a3(Quiver::linear_a(3), 3);
  EXPECT_EQ(a3.indecomposables_up_to(3).size(), 6u);
}

TEST(Category, KroneckerRegulars) {
  for (int q : {2, 3}) {
    Category k(Quiver::kronecker(), q);
    EXPECT_EQ(k.enumerate_classes(K0Element{1, 1}).size(), static_cast<std::size_t>(q + 2));
  }
}

TEST(Category, CapsAreEnforced) {
  Category cat(Quiver::linear_a(2), 2, Caps{2, 3});
  EXPECT_THROW(cat.enumerate_classes(K0Element{3, 0}), CapExceeded);
  EXPECT_THROW(cat.enumerate_classes(K0Element{2, 2}), CapExceeded);
  EXPECT_NO_THROW(cat.enumerate_classes(K0Element{2, 1}));
  EXPECT_THROW(Category(Quiver::linear_a(2), 4), ConfigError);
}

TEST(Category, DiskCacheIsTransparent) {
  const auto dir = std::filesystem::temp_directory_path() / "hallforge_test_cache";
  std::filesystem::remove_all(dir);
  std::vector<std::pair<ClassId, std::string>> cold, warm;
  {
    Category cat(Quiver::kronecker(), 3, {}, dir);
    for (const ClassId& c : cat.classes_up_to(3)) cold.emplace_back(c, cat.aut_order(c).get_str());
    EXPECT_GT(cat.cache_stores(), 0u);
  }
  {
    Category cat(Quiver::kronecker(), 3, {}, dir);
    for (const ClassId& c : cat.classes_up_to(3)) warm.emplace_back(c, cat.aut_order(c).get_str());
    EXPECT_GT(cat.cache_loads(), 0u);
    EXPECT_EQ(cat.cache_stores(), 0u);
  }
  EXPECT_EQ(cold, warm);
  std::filesystem::remove_all(dir);
}
