#include "hallforge/hall.hpp"

#include <algorithm>

namespace hallforge {

std::ostream& operator<<(std::ostream& os, const Basis& b) {
  if (!b.k.is_zero()) os << "k" << b.k;
  return os << '[' << b.cls << ']';
}

std::ostream& operator<<(std::ostream& os, const HallElement& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [key, coeff] : x) {
    os << (first ? "" : " + ") << '(' << coeff << ")*" << key;
    first = false;
  }
  return os;
}

HallAlgebra::HallAlgebra(Category& category, AntipodeOrder order) : category_(category), order_(order) {}

Scalar HallAlgebra::euler(const K0Element& m, const K0Element& n) const {
  return Scalar::v_power(q(), euler_form_additive(quiver(), m, n));
}

Scalar HallAlgebra::sym(const K0Element& m, const K0Element& n) const {
  return Scalar::v_power(q(), symmetric_form_additive(quiver(), m, n));
}

const HallElement& HallAlgebra::class_product(const ClassId& a, const ClassId& b) {
  return products_.get({a, b}, [&] {
    if (a.is_zero()) return cls(b);
    if (b.is_zero()) return cls(a);
    HallElement out;
    const Scalar twist = euler(b.dim, a.dim).inverse();
    for (const ClassId& c : category_.enumerate_classes(a.dim + b.dim)) {
      const Integer g = category_.hall_number(a, b, c);
      if (g != 0) out.add(Basis{zero_k(), c}, twist * to_scalar(g));
    }
    return out;
  });
}

HallElement HallAlgebra::mul(const Basis& x, const Basis& y) {
  // k_a[A] k_b[B] = (b|A)^{-1} k_{a+b} ([A]*[B])
  const Scalar factor = sym(y.k, x.cls.dim).inverse();
  const K0Element k = x.k + y.k;
  HallElement out;
  for (const auto& [term, coeff] : class_product(x.cls, y.cls)) out.add(Basis{k, term.cls}, coeff * factor);
  return out;
}

HallElement HallAlgebra::mul(const HallElement& x, const HallElement& y) {
  HallElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(mul(a, b), ca * cb);
  return out;
}

const TensorElement& HallAlgebra::class_coproduct(const ClassId& a) {
  return coproducts_.get(a, [&] {
    TensorElement out;
    const Scalar aut_a = aut(a);
    for (const auto& [key, count] : category_.subobject_census(a)) {
      const auto& [quot, sub] = key;
      const Scalar coeff = euler(quot.dim, sub.dim) * to_scalar(count) * aut(quot) * aut(sub) / aut_a;
      out.add(TensorKey{Basis{sub.dim, quot}, Basis{zero_k(), sub}}, coeff);
    }
    return out;
  });
}

TensorElement HallAlgebra::coproduct(const Basis& x) {
  TensorElement out;
  for (const auto& [key, coeff] : class_coproduct(x.cls)) {
    out.add(TensorKey{Basis{key.left.k + x.k, key.left.cls}, Basis{key.right.k + x.k, key.right.cls}}, coeff);
  }
  return out;
}

TensorElement HallAlgebra::coproduct(const HallElement& x) {
  TensorElement out;
  for (const auto& [b, c] : x) out.add(coproduct(b), c);
  return out;
}

Scalar HallAlgebra::counit(const HallElement& x) const {
  Scalar out;
  for (const auto& [b, c] : x)
    if (b.cls.is_zero()) out += c;
  return out;
}

HallElement HallAlgebra::ordered_product(const std::vector<ClassId>& factors) {
  HallElement out = unit();
  for (const ClassId& f : factors) out = mul(out, cls(f));
  return out;
}

const HallElement& HallAlgebra::class_antipode(const ClassId& a) {
  return antipodes_.get(a, [&] {
    if (a.is_zero()) return unit();
    HallElement sum;
    for (const auto& [seq, count] : category_.filtration_census(a)) {
      const std::size_t n = seq.size();
      Scalar weight = to_scalar(count);
      if (n % 2 == 1) weight = -weight;
      K0Element below = zero_k();  // class of L_{i+1}
      for (std::size_t i = n; i-- > 0;) {
        weight *= euler(seq[i].dim, below) * sym(seq[i].dim, below) * aut(seq[i]);
        below += seq[i].dim;
      }
      std::vector<ClassId> factors = seq;
      if (order_ == AntipodeOrder::descending) std::reverse(factors.begin(), factors.end());
      sum.add(ordered_product(factors), weight);
    }
    HallElement out = mul(k(-a.dim), sum);
    out *= aut(a).inverse();
    return out;
  });
}

const HallElement& HallAlgebra::class_inverse_antipode(const ClassId& a) {
  return inverse_antipodes_.get(a, [&] {
    if (a.is_zero()) return unit();
    HallElement sum;
    for (const auto& [seq, count] : category_.filtration_census(a)) {
      const std::size_t n = seq.size();
      Scalar weight = to_scalar(count);
      if (n % 2 == 1) weight = -weight;
      K0Element below = zero_k();
      for (std::size_t i = n; i-- > 0;) {
        weight *= euler(seq[i].dim, below) * aut(seq[i]);
        below += seq[i].dim;
      }
      std::vector<ClassId> factors = seq;
      if (order_ == AntipodeOrder::ascending) std::reverse(factors.begin(), factors.end());
      sum.add(ordered_product(factors), weight);
    }
    HallElement out = mul(sum, k(-a.dim));
    out *= aut(a).inverse();
    return out;
  });
}

HallElement HallAlgebra::antipode(const Basis& x) { return mul(class_antipode(x.cls), k(-x.k)); }

HallElement HallAlgebra::antipode(const HallElement& x) {
  HallElement out;
  for (const auto& [b, c] : x) out.add(antipode(b), c);
  return out;
}

HallElement HallAlgebra::inverse_antipode(const Basis& x) {
  return mul(class_inverse_antipode(x.cls), k(-x.k));
}

HallElement HallAlgebra::inverse_antipode(const HallElement& x) {
  HallElement out;
  for (const auto& [b, c] : x) out.add(inverse_antipode(b), c);
  return out;
}

Scalar HallAlgebra::pairing(const Basis& x, const Basis& y) {
  if (x.cls != y.cls) return Scalar();
  const K0Element& m = x.cls.dim;
  return sym(x.k, m) * sym(m, m) * sym(m, y.k) * sym(x.k, y.k) / aut(x.cls);
}

Scalar HallAlgebra::pairing(const HallElement& x, const HallElement& y) {
  Scalar out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      if (a.cls != b.cls) continue;
      out += ca * cb * pairing(a, b);
    }
  return out;
}

Scalar HallAlgebra::pairing(const TensorElement& x, const TensorElement& y) {
  Scalar out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      if (a.left.cls != b.left.cls || a.right.cls != b.right.cls) continue;
      out += ca * cb * pairing(a.left, b.left) * pairing(a.right, b.right);
    }
  return out;
}

TensorElement HallAlgebra::tensor(const HallElement& x, const HallElement& y) {
  TensorElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(TensorKey{a, b}, ca * cb);
  return out;
}

TensorElement HallAlgebra::tensor_mul(const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(tensor(mul(a.left, b.left), mul(a.right, b.right)), ca * cb);
  return out;
}

HallElement HallAlgebra::multiply(const TensorElement& x) {
  HallElement out;
  for (const auto& [t, c] : x) out.add(mul(t.left, t.right), c);
  return out;
}

TensorElement HallAlgebra::flip(const TensorElement& x) {
  TensorElement out;
  for (const auto& [t, c] : x) out.add(TensorKey{t.right, t.left}, c);
  return out;
}

TripleElement HallAlgebra::coproduct_left(const TensorElement& x) {
  TripleElement out;
  for (const auto& [t, c] : x)
    for (const auto& [s, d] : coproduct(t.left)) out.add(TripleKey{s.left, s.right, t.right}, c * d);
  return out;
}

TripleElement HallAlgebra::coproduct_right(const TensorElement& x) {
  TripleElement out;
  for (const auto& [t, c] : x)
    for (const auto& [s, d] : coproduct(t.right)) out.add(TripleKey{t.left, s.left, s.right}, c * d);
  return out;
}

}  // namespace hallforge
