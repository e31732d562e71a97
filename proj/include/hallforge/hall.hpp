#pragma once

#include <compare>
#include <ostream>
#include <utility>

#include "hallforge/category.hpp"
#include "hallforge/lincomb.hpp"
#include "hallforge/memo.hpp"

namespace hallforge {

// Basis symbol k_alpha [A].
struct Basis {
  K0Element k;
  ClassId cls;
  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;
};

struct TensorKey {
  Basis left;
  Basis right;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
  friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
};

struct TripleKey {
  Basis first;
  Basis second;
  Basis third;
  friend bool operator==(const TripleKey&, const TripleKey&) = default;
  friend auto operator<=>(const TripleKey&, const TripleKey&) = default;
};

using HallElement = LinearCombination<Basis>;
using TensorElement = LinearCombination<TensorKey>;
using TripleElement = LinearCombination<TripleKey>;

std::ostream& operator<<(std::ostream& os, const Basis& b);
std::ostream& operator<<(std::ostream& os, const HallElement& x);

// Multiplication order of the subquotient classes in the antipode; the
// inverse antipode uses the opposite one.
enum class AntipodeOrder { ascending, descending };

// Extended Hall algebra of a Category: basis k_alpha [A], alpha in K0.
class HallAlgebra {
 public:
  explicit HallAlgebra(Category& category, AntipodeOrder order = AntipodeOrder::ascending);

  Category& category() const { return category_; }
  const Quiver& quiver() const { return category_.quiver(); }
  int q() const { return category_.q(); }
  AntipodeOrder antipode_order() const { return order_; }

  // <m,n> = v^<m,n>_add and (m|n).
  Scalar euler(const K0Element& m, const K0Element& n) const;
  Scalar sym(const K0Element& m, const K0Element& n) const;
  Scalar aut(const ClassId& c) const { return to_scalar(category_.aut_order(c)); }

  K0Element zero_k() const { return K0Element(category_.rank()); }
  Basis unit_basis() const { return {zero_k(), category_.zero_class()}; }
  HallElement unit() const { return HallElement(unit_basis()); }
  HallElement k(const K0Element& alpha) const { return HallElement(Basis{alpha, category_.zero_class()}); }
  HallElement cls(const ClassId& c) const { return HallElement(Basis{zero_k(), c}); }
  HallElement basis(const K0Element& alpha, const ClassId& c) const { return HallElement(Basis{alpha, c}); }

  // [A]*[B] = <B,A>^{-1} sum_C g_{A,B}^C [C].
  const HallElement& class_product(const ClassId& a, const ClassId& b);
  HallElement mul(const Basis& x, const Basis& y);
  HallElement mul(const HallElement& x, const HallElement& y);

  TensorElement coproduct(const Basis& x);
  TensorElement coproduct(const HallElement& x);
  Scalar counit(const HallElement& x) const;

  HallElement antipode(const Basis& x);
  HallElement antipode(const HallElement& x);
  HallElement inverse_antipode(const Basis& x);
  HallElement inverse_antipode(const HallElement& x);

  // phi(k_a[M], k_b[M']) = (a|M)(M|M)(M|b)(a|b) delta_{M,M'} / |Aut M|.
  Scalar pairing(const Basis& x, const Basis& y);
  Scalar pairing(const HallElement& x, const HallElement& y);
  // phi(x (x) x', y (x) y') = phi(x,y) phi(x',y').
  Scalar pairing(const TensorElement& x, const TensorElement& y);

  // Tensor helpers: componentwise product, m, flip, and Delta on one leg.
  static TensorElement tensor(const HallElement& x, const HallElement& y);
  TensorElement tensor_mul(const TensorElement& x, const TensorElement& y);
  HallElement multiply(const TensorElement& x);
  static TensorElement flip(const TensorElement& x);
  TripleElement coproduct_left(const TensorElement& x);   // (Delta (x) id)
  TripleElement coproduct_right(const TensorElement& x);  // (id (x) Delta)

 private:
  const TensorElement& class_coproduct(const ClassId& a);
  const HallElement& class_antipode(const ClassId& a);
  const HallElement& class_inverse_antipode(const ClassId& a);
  HallElement ordered_product(const std::vector<ClassId>& factors);

  Category& category_;
  AntipodeOrder order_;
  ConcurrentMemo<std::pair<ClassId, ClassId>, HallElement> products_;
  ConcurrentMemo<ClassId, TensorElement> coproducts_;
  ConcurrentMemo<ClassId, HallElement> antipodes_;
  ConcurrentMemo<ClassId, HallElement> inverse_antipodes_;
};

}  // namespace hallforge
