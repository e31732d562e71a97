#pragma once

#include <compare>
#include <vector>

#include "hallforge/hall.hpp"
#include "hallforge/serialize.hpp"

namespace hallforge {

// Normal-form basis symbol k_alpha [A] (x) [B] of the reduced double.
struct DoubleKey {
  K0Element k;
  ClassId left;
  ClassId right;
  friend bool operator==(const DoubleKey&, const DoubleKey&) = default;
  friend auto operator<=>(const DoubleKey&, const DoubleKey&) = default;
};

using DoubleElement = LinearCombination<DoubleKey>;

Json to_json(const DoubleElement& x);

// Which Sweedler legs of a and b meet under the pairing in the
// straightening rule: (1,1)/(3,3), or the crossed (1,3)/(3,1).
enum class LegPairing { standard, swapped };

// Reduced Drinfeld double of the extended Hall algebra with its co-opposite.
// Elements are kept in the normal form sum c k_alpha[A] (x) [B].
class DoubleAlgebra {
 public:
  explicit DoubleAlgebra(HallAlgebra& hall, LegPairing legs = LegPairing::standard);

  HallAlgebra& hall() const { return hall_; }
  Category& category() const { return hall_.category(); }
  LegPairing legs() const { return legs_; }

  DoubleElement unit() const;
  DoubleElement basis(const K0Element& k, const ClassId& left, const ClassId& right) const;
  DoubleElement inject_left(const HallElement& x);   // x (x) 1
  DoubleElement inject_right(const HallElement& y);  // 1 (x) y
  // k_mu[C] (x) k_nu[D] = (nu|C) k_{mu-nu}[C] (x) [D]
  DoubleElement fold(const TensorElement& t);

  TripleElement delta2(const HallElement& x);

  // (1 (x) b)(a (x) 1) in normal form.
  DoubleElement straighten(const Basis& b, const Basis& a);
  DoubleElement straighten(const HallElement& b, const HallElement& a);

  DoubleElement mul(const DoubleKey& x, const DoubleKey& y);
  DoubleElement mul(const DoubleElement& x, const DoubleElement& y);

  // Both sides of sum phi(a2,b2) a1 (x) b1 = sum phi(a1,b1) (1 (x) b2)(a2 (x) 1).
  std::pair<DoubleElement, DoubleElement> d5_sides(const Basis& a, const Basis& b);
  Report verify_d5(const Basis& a, const Basis& b);

  // #{phi: B -> A | Ker ~ N, Coker ~ L} |Aut N||Aut L| / (|Aut A||Aut B|).
  Scalar four_term(const ClassId& b, const ClassId& a, const ClassId& n, const ClassId& l);
  // g_{B[1],A}^{N[1]+L} = |Ext^1(L,N)| * four_term.
  Scalar triangle_hall_number(const ClassId& b, const ClassId& a, const ClassId& n, const ClassId& l);
  // sum_M |Delta^A_{M,L}||Delta^B_{N,M}| / (|Aut A||Aut B||Aut M|), from Hall numbers.
  Scalar lemma3_lhs(const ClassId& b, const ClassId& a, const ClassId& n, const ClassId& l);

  // Each side of the straightening identity for (A, B) as a list of
  // coeff * first * second products.
  struct ProductTerm {
    Scalar coeff;
    DoubleElement first;
    DoubleElement second;
  };
  std::vector<ProductTerm> eq3_terms(const ClassId& a, const ClassId& b);
  std::vector<ProductTerm> eq4_terms(const ClassId& a, const ClassId& b);
  DoubleElement eq3(const ClassId& a, const ClassId& b);
  DoubleElement eq4(const ClassId& a, const ClassId& b);
  // eq3 = eq4, plus agreement of each side with the matching side of d5.
  std::vector<Report> verify_eq34(const ClassId& a, const ClassId& b);

  // The defining relation list for a pair (A, B), each instance evaluated
  // with the double product.
  std::vector<Report> verify_prop3_relations(const ClassId& a, const ClassId& b);

 private:
  HallAlgebra& hall_;
  LegPairing legs_;
  ConcurrentMemo<std::pair<Basis, Basis>, DoubleElement> straightened_;
};

Json instance_json(const Basis& b);

}  // namespace hallforge
