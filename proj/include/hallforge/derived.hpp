#pragma once

#include <map>
#include <vector>

#include "hallforge/double.hpp"

namespace hallforge {

// Object of the derived category split as a sum of stalks X[shift].
struct DerivedObjectClass {
  std::map<int, ClassId> parts;  // shift -> nonzero class
  friend bool operator==(const DerivedObjectClass&, const DerivedObjectClass&) = default;
};

Json to_json(const DerivedObjectClass& d);

using IntMatrix = std::vector<std::vector<int>>;  // row-major

// BGP reflection at a source alpha of source.quiver(); `target` must be the
// category of the reflected quiver. Coker of M_alpha -> (+)M_beta lands in
// shift 0, the kernel (a sum of copies of the simple at alpha) in shift 1.
DerivedObjectClass reflect_object(Category& source, Category& target, int alpha, const Rep& m);
// Dual construction at a sink: kernel of (+)N_beta -> N_alpha in shift 0,
// cokernel in shift -1.
DerivedObjectClass reflect_object_inverse(Category& source, Category& target, int alpha, const Rep& n);
// Dispatches on whether alpha is a source or a sink.
DerivedObjectClass reflect(Category& source, Category& target, int alpha, const Rep& m);

// Matrix of [M] -> sum_i (-1)^i [parts_i] on K0; column j is the image of e_j.
IntMatrix k0_reflection_matrix(Category& source, Category& target, int alpha);
// s_alpha: e_alpha -> -e_alpha, e_beta -> e_beta + (edges alpha-beta) e_alpha.
IntMatrix cartan_reflection(const Quiver& quiver, int alpha);
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);
K0Element apply_matrix(const IntMatrix& m, const K0Element& x);

struct GradedImage {
  int shift = 0;
  ClassId image;  // N with F(M) = N[shift]
};

// Shift and image for every indecomposable of the source category within
// range, plus the induced map on K0.
struct DerivedGrading {
  int alpha = 0;
  std::map<ClassId, GradedImage> indecomposables;
  IntMatrix k0_map;

  // Shift of a nonzero class whose summands all share one shift; throws
  // UngradedClass otherwise.
  int shift_of(Category& source, const ClassId& c) const;
  // N = F(M)[-n] for M in one graded piece: the sum of the summands' images.
  ClassId image_of(Category& source, Category& target, const ClassId& c) const;
  Json to_json() const;
};

DerivedGrading build_grading(Category& source, Category& target, int alpha, int max_total);

// k_alpha [A] = scalar * k_alpha * prod_i [A_i] with A_i the part of A of
// shift i, ascending in i.
struct NormalForm {
  K0Element k;
  Scalar scalar;
  std::vector<std::pair<int, ClassId>> factors;
};

NormalForm normal_form(HallAlgebra& hall, const DerivedGrading& grading, const Basis& x);
HallElement expand(HallAlgebra& hall, const NormalForm& nf);

// The generator-level map between reduced doubles induced by a derived
// equivalence, extended through normal forms.
class FStar {
 public:
  FStar(DoubleAlgebra& source, DoubleAlgebra& target, DerivedGrading grading);

  const DerivedGrading& grading() const { return grading_; }
  DoubleAlgebra& source() const { return source_; }
  DoubleAlgebra& target() const { return target_; }

  DoubleElement k_left(const K0Element& alpha);      // F*(k_alpha (x) 1)
  DoubleElement left_generator(const ClassId& m);   // F*([M] (x) 1), M in one graded piece
  DoubleElement right_generator(const ClassId& m);  // F*(1 (x) [M])
  DoubleElement apply(const DoubleKey& x);
  DoubleElement apply(const DoubleElement& x);

 private:
  DoubleElement twisted_image(const ClassId& m, bool left_line);

  DoubleAlgebra& source_;
  DoubleAlgebra& target_;
  DerivedGrading grading_;
  ConcurrentMemo<DoubleKey, DoubleElement> images_;
};

// Double-basis generators k_{+-e_i} (x) 1, [A] (x) 1 and 1 (x) [A] with A
// nonzero of total dimension <= max_total.
std::vector<DoubleKey> double_generators(DoubleAlgebra& dbl, int max_total);

// F*(xy) = F*(x)F*(y) for one pair.
Report check_homomorphism(FStar& f, const DoubleKey& x, const DoubleKey& y);
// G*(F*(x)) = x.
Report check_inverse(FStar& f, FStar& g, const DoubleKey& x);
// Each listed relation for (A, B), evaluated on F*-images of its factors.
std::vector<Report> check_relations_preserved(FStar& f, const ClassId& a, const ClassId& b);
// Hom(M,M') = 0 unless j in {i, i+1}, Ext^1(M,M') = 0 unless j in {i, i-1}.
std::vector<Report> check_hom_ext_pattern(Category& source, const DerivedGrading& grading);
// [A_i (+) A_j] = <A_j, A_i> [A_i]*[A_j] for shifts i < j.
Report check_sum_factorization(HallAlgebra& hall, const DerivedGrading& grading, const ClassId& a_i,
                               const ClassId& a_j);

}  // namespace hallforge
