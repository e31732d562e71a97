#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "hallforge/arith.hpp"
#include "hallforge/memo.hpp"
#include "hallforge/quiver.hpp"

namespace hallforge {

// Isomorphism class handle: (dimension vector, index into that dimension's
// registry). Indices follow the ascending order of canonical encodings.
struct ClassId {
  K0Element dim;
  std::uint32_t index = 0;

  bool is_zero() const { return dim.is_zero(); }
  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

std::ostream& operator<<(std::ostream& os, const ClassId& c);

struct ClassInfo {
  Rep rep;  // canonical representative: lexicographically smallest in its orbit
  std::uint64_t code = 0;
  Integer aut;
  bool indecomposable = false;
  // Krull-Schmidt summands, sorted; {self} for an indecomposable, {} for zero.
  std::vector<ClassId> decomposition;
};

struct Caps {
  int vertex = 4;
  int total = 6;
  std::uint64_t hom_budget = std::uint64_t{1} << 20;
  // Largest representation space enumerated when classifying one dimension vector.
  std::uint64_t rep_space_budget = std::uint64_t{1} << 22;
};

// Arrow-stable tuple of subspaces, one reduced echelon basis per vertex.
struct SubobjectWitness {
  std::shared_ptr<const Rep> parent;
  std::vector<FqMatrix> bases;
};

// (quotient class, sub class) -> number of subobjects realising the pair.
using SubquotientCensus = std::map<std::pair<ClassId, ClassId>, Integer>;
// Subquotient sequence (L_1/L_2, ..., L_n) of strict chains -> number of chains.
using FiltrationCensus = std::map<std::vector<ClassId>, Integer>;
// (kernel class, cokernel class) -> number of homomorphisms.
using KerCokerCensus = std::map<std::pair<ClassId, ClassId>, Integer>;

using Homomorphism = std::vector<FqMatrix>;  // one (dim_target[i] x dim_source[i]) per vertex

// Representations of an acyclic quiver over F_q with a memoised registry of
// isomorphism classes. Every structure constant the algebra layers use is
// computed here from explicit linear algebra.
class Category {
 public:
  Category(Quiver quiver, int q, Caps caps = {},
           std::optional<std::filesystem::path> cache_dir = std::nullopt);
  ~Category();
  Category(const Category&) = delete;
  Category& operator=(const Category&) = delete;

  const Quiver& quiver() const { return quiver_; }
  int q() const { return q_; }
  const Caps& caps() const { return caps_; }
  std::size_t rank() const { return static_cast<std::size_t>(quiver_.vertex_count()); }

  void check_caps(const K0Element& dim) const;
  bool within_caps(const K0Element& dim) const;

  // --- classification -----------------------------------------------------
  std::vector<ClassId> enumerate_classes(const K0Element& dim);
  ClassId iso_class_of(const Rep& rep);
  const ClassInfo& info(const ClassId& c);
  const Rep& representative(const ClassId& c) { return info(c).rep; }
  ClassId zero_class() const;
  ClassId simple(int vertex);
  Integer aut_order(const ClassId& c) { return info(c).aut; }
  bool is_indecomposable(const ClassId& c) { return info(c).indecomposable; }
  const std::vector<ClassId>& decompose(const ClassId& c) { return info(c).decomposition; }
  ClassId direct_sum_class(const ClassId& a, const ClassId& b);
  ClassId direct_sum_class(const std::vector<ClassId>& parts);

  // Nonnegative dimension vectors within caps with total <= max_total.
  std::vector<K0Element> dimension_vectors(int max_total) const;
  // Every class (including zero) with total dimension <= max_total.
  std::vector<ClassId> classes_up_to(int max_total);
  std::vector<ClassId> indecomposables_up_to(int max_total);

  // --- morphisms ------------------------------------------------------------
  // Basis of Hom(a, b): solutions of b_arrow f_s = f_t a_arrow.
  std::vector<Homomorphism> hom_basis(const Rep& a, const Rep& b) const;
  Integer hom_count(const Rep& a, const Rep& b) const;
  // |Ext^1(a,b)| = |Hom(a,b)| q^(-<dim a, dim b>).
  Integer ext1_count(const Rep& a, const Rep& b) const;
  // Visits every homomorphism a -> b; throws CapExceeded above the budget.
  void for_each_hom(const Rep& a, const Rep& b,
                    const std::function<void(const Homomorphism&)>& visit) const;

  // --- subobjects and filtrations ------------------------------------------
  void for_each_subobject(const Rep& c, const std::function<void(const SubobjectWitness&)>& visit);
  std::vector<SubobjectWitness> subobjects(const Rep& c);
  std::pair<ClassId, ClassId> sub_quotient_classes(const SubobjectWitness& w);
  Rep sub_rep(const SubobjectWitness& w) const;
  Rep quotient_rep(const SubobjectWitness& w) const;

  const SubquotientCensus& subobject_census(const ClassId& c);
  // g_{A,B}^C: subobjects M of C with M ~ B and C/M ~ A.
  Integer hall_number(const ClassId& a, const ClassId& b, const ClassId& c);

  // Concrete enumeration: one entry per strict n-step chain, holding its
  // subquotient classes (L_1/L_2, ..., L_n).
  std::vector<std::vector<ClassId>> strict_filtrations(const Rep& a, int n);
  // Same data aggregated over all n by class sequence, via the subobject census.
  const FiltrationCensus& filtration_census(const ClassId& a);

  // |{phi: b -> a | Ker phi ~ kernel, Coker phi ~ cokernel}|.
  Integer hom_with_ker_coker_count(const Rep& b, const Rep& a, const ClassId& kernel,
                                   const ClassId& cokernel);
  const KerCokerCensus& ker_coker_census(const ClassId& b, const ClassId& a);

  // Number of dimension tables loaded from / written to the on-disk cache.
  std::size_t cache_loads() const { return cache_loads_; }
  std::size_t cache_stores() const { return cache_stores_; }

 private:
  struct DimTable;
  const DimTable& table(const K0Element& dim);
  DimTable build_table(const K0Element& dim);
  void fill_decompositions(DimTable& t);
  std::optional<DimTable> load_cached(const K0Element& dim);
  void store_cached(const DimTable& t);
  std::filesystem::path cache_file(const K0Element& dim) const;

  Quiver quiver_;
  int q_;
  Caps caps_;
  std::optional<std::filesystem::path> cache_dir_;
  std::atomic<std::size_t> cache_loads_{0};
  std::atomic<std::size_t> cache_stores_{0};

  std::unique_ptr<ConcurrentMemo<K0Element, DimTable>> tables_;
  ConcurrentMemo<ClassId, SubquotientCensus> census_;
  ConcurrentMemo<ClassId, FiltrationCensus> filtrations_;
  ConcurrentMemo<std::pair<ClassId, ClassId>, KerCokerCensus> ker_coker_;
};

}  // namespace hallforge
