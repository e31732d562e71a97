#include "hallforge/double.hpp"

namespace hallforge {

Json to_json(const DoubleElement& x) {
  Json terms = Json::array();
  for (const auto& [t, c] : x) {
    terms.push_back(
        Json{{"k", to_json(t.k)}, {"left", to_json(t.left)}, {"right", to_json(t.right)}, {"coeff", to_json(c)}});
  }
  return Json{{"terms", std::move(terms)}};
}

Json instance_json(const Basis& b) { return Json{{"k", to_json(b.k)}, {"class", to_json(b.cls)}}; }

DoubleAlgebra::DoubleAlgebra(HallAlgebra& hall, LegPairing legs) : hall_(hall), legs_(legs) {}

DoubleElement DoubleAlgebra::unit() const {
  const ClassId zero = category().zero_class();
  return DoubleElement(DoubleKey{hall_.zero_k(), zero, zero});
}

DoubleElement DoubleAlgebra::basis(const K0Element& k, const ClassId& left, const ClassId& right) const {
  return DoubleElement(DoubleKey{k, left, right});
}

DoubleElement DoubleAlgebra::fold(const TensorElement& t) {
  DoubleElement out;
  for (const auto& [key, c] : t) {
    const Scalar twist = hall_.sym(key.right.k, key.left.cls.dim);
    out.add(DoubleKey{key.left.k - key.right.k, key.left.cls, key.right.cls}, c * twist);
  }
  return out;
}

DoubleElement DoubleAlgebra::inject_left(const HallElement& x) { return fold(HallAlgebra::tensor(x, hall_.unit())); }

DoubleElement DoubleAlgebra::inject_right(const HallElement& y) { return fold(HallAlgebra::tensor(hall_.unit(), y)); }

TripleElement DoubleAlgebra::delta2(const HallElement& x) { return hall_.coproduct_left(hall_.coproduct(x)); }

DoubleElement DoubleAlgebra::straighten(const Basis& b, const Basis& a) {
  return straightened_.get({b, a}, [&] {
    const TripleElement da = delta2(HallElement(a));
    // Sweedler legs of b in the co-opposite algebra: the triple read backwards.
    const TripleElement db = delta2(HallElement(b));
    TensorElement middle;
    for (const auto& [ta, ca] : da) {
      for (const auto& [tb, cb] : db) {
        const Basis& b1 = tb.third;
        const Basis& b2 = tb.second;
        const Basis& b3 = tb.first;
        const Basis& inner = legs_ == LegPairing::standard ? b1 : b3;
        const Basis& outer = legs_ == LegPairing::standard ? b3 : b1;
        if (ta.third.cls != outer.cls || ta.first.cls.dim != inner.cls.dim) continue;
        const Scalar right = hall_.pairing(ta.third, outer);
        if (right.is_zero()) continue;
        const Scalar left = hall_.pairing(HallElement(ta.first), hall_.inverse_antipode(inner));
        if (left.is_zero()) continue;
        middle.add(TensorKey{ta.second, b2}, ca * cb * left * right);
      }
    }
    return fold(middle);
  });
}

DoubleElement DoubleAlgebra::straighten(const HallElement& b, const HallElement& a) {
  DoubleElement out;
  for (const auto& [y, cy] : b)
    for (const auto& [x, cx] : a) out.add(straighten(y, x), cy * cx);
  return out;
}

DoubleElement DoubleAlgebra::mul(const DoubleKey& x, const DoubleKey& y) {
  const K0Element zero = hall_.zero_k();
  DoubleElement out;
  for (const auto& [s, cs] : straighten(Basis{zero, x.right}, Basis{y.k, y.left})) {
    const HallElement left = hall_.mul(Basis{x.k, x.left}, Basis{s.k, s.left});
    const HallElement right = hall_.mul(Basis{zero, s.right}, Basis{zero, y.right});
    out.add(fold(HallAlgebra::tensor(left, right)), cs);
  }
  return out;
}

DoubleElement DoubleAlgebra::mul(const DoubleElement& x, const DoubleElement& y) {
  DoubleElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add(mul(a, b), ca * cb);
  return out;
}

std::pair<DoubleElement, DoubleElement> DoubleAlgebra::d5_sides(const Basis& a, const Basis& b) {
  const TensorElement da = hall_.coproduct(a);
  // Coproduct of b in the co-opposite algebra: b1 (x) b2 = flip of Delta(b).
  const TensorElement db = HallAlgebra::flip(hall_.coproduct(b));
  DoubleElement lhs;
  DoubleElement rhs;
  for (const auto& [ta, ca] : da) {
    for (const auto& [tb, cb] : db) {
      const Scalar l = hall_.pairing(ta.right, tb.right);
      if (!l.is_zero()) lhs.add(fold(HallAlgebra::tensor(HallElement(ta.left), HallElement(tb.left))), ca * cb * l);
      const Scalar r = hall_.pairing(ta.left, tb.left);
      if (!r.is_zero()) rhs.add(straighten(tb.right, ta.right), ca * cb * r);
    }
  }
  return {lhs, rhs};
}

Report DoubleAlgebra::verify_d5(const Basis& a, const Basis& b) {
  auto [lhs, rhs] = d5_sides(a, b);
  return make_report("d5", Json{{"a", instance_json(a)}, {"b", instance_json(b)}}, lhs, rhs);
}

Scalar DoubleAlgebra::four_term(const ClassId& b, const ClassId& a, const ClassId& n, const ClassId& l) {
  Category& cat = category();
  const Integer count = cat.hom_with_ker_coker_count(cat.representative(b), cat.representative(a), n, l);
  if (count == 0) return Scalar();
  return to_scalar(count) * hall_.aut(n) * hall_.aut(l) / (hall_.aut(a) * hall_.aut(b));
}

Scalar DoubleAlgebra::triangle_hall_number(const ClassId& b, const ClassId& a, const ClassId& n, const ClassId& l) {
  Category& cat = category();
  const Integer ext = cat.ext1_count(cat.representative(l), cat.representative(n));
  return to_scalar(ext) * four_term(b, a, n, l);
}

Scalar DoubleAlgebra::lemma3_lhs(const ClassId& b, const ClassId& a, const ClassId& n, const ClassId& l) {
  Category& cat = category();
  if (!(l.dim.fits_in(a.dim) && n.dim.fits_in(b.dim))) return Scalar();
  const K0Element m_dim = a.dim - l.dim;
  if (m_dim != b.dim - n.dim) return Scalar();
  Scalar sum;
  for (const ClassId& m : cat.enumerate_classes(m_dim)) {
    // |Delta^A_{M,L}| = g^A_{L,M} |Aut M||Aut L|: M sub, L quotient
    const Integer g_a = cat.hall_number(l, m, a);
    if (g_a == 0) continue;
    const Integer g_b = cat.hall_number(m, n, b);
    if (g_b == 0) continue;
    const Scalar delta_a = to_scalar(g_a) * hall_.aut(m) * hall_.aut(l);
    const Scalar delta_b = to_scalar(g_b) * hall_.aut(n) * hall_.aut(m);
    sum += delta_a * delta_b / (hall_.aut(a) * hall_.aut(b) * hall_.aut(m));
  }
  return sum;
}

std::vector<DoubleAlgebra::ProductTerm> DoubleAlgebra::eq3_terms(const ClassId& a, const ClassId& b) {
  Category& cat = category();
  std::vector<ProductTerm> out;
  for (const auto& [key, count] : cat.ker_coker_census(b, a)) {
    const auto& [n, l] = key;
    const Scalar g = triangle_hall_number(b, a, n, l);
    const Integer ext = cat.ext1_count(cat.representative(l), cat.representative(n));
    const Scalar coeff = hall_.euler(a.dim, b.dim) * hall_.euler(b.dim, b.dim) /
                         (hall_.euler(l.dim, n.dim) * hall_.euler(n.dim, n.dim)) * g / to_scalar(ext);
    out.push_back({coeff, inject_left(hall_.basis(a.dim - l.dim, l)), inject_right(hall_.cls(n))});
  }
  return out;
}

std::vector<DoubleAlgebra::ProductTerm> DoubleAlgebra::eq4_terms(const ClassId& a, const ClassId& b) {
  Category& cat = category();
  std::vector<ProductTerm> out;
  for (const auto& [key, count] : cat.ker_coker_census(a, b)) {
    const auto& [l, n] = key;
    const Scalar g = triangle_hall_number(a, b, l, n);
    const Integer ext = cat.ext1_count(cat.representative(n), cat.representative(l));
    const Scalar coeff = hall_.euler(b.dim, a.dim) * hall_.euler(a.dim, a.dim) /
                         (hall_.euler(n.dim, l.dim) * hall_.euler(l.dim, l.dim)) * g / to_scalar(ext);
    out.push_back({coeff, inject_right(hall_.basis(a.dim - l.dim, n)), inject_left(hall_.cls(l))});
  }
  return out;
}

DoubleElement DoubleAlgebra::eq3(const ClassId& a, const ClassId& b) {
  DoubleElement out;
  for (const ProductTerm& t : eq3_terms(a, b)) out.add(mul(t.first, t.second), t.coeff);
  return out;
}

DoubleElement DoubleAlgebra::eq4(const ClassId& a, const ClassId& b) {
  DoubleElement out;
  for (const ProductTerm& t : eq4_terms(a, b)) out.add(mul(t.first, t.second), t.coeff);
  return out;
}

std::vector<Report> DoubleAlgebra::verify_eq34(const ClassId& a, const ClassId& b) {
  const Json instance{{"A", to_json(a)}, {"B", to_json(b)}};
  const DoubleElement lhs = eq3(a, b);
  const DoubleElement rhs = eq4(a, b);
  const K0Element zero = hall_.zero_k();
  auto [d5_lhs, d5_rhs] = d5_sides(Basis{zero, a}, Basis{zero, b});
  std::vector<Report> out;
  out.push_back(make_report("eq3=eq4", instance, lhs, rhs));
  out.push_back(make_report("eq3=d5.lhs", instance, lhs, d5_lhs));
  out.push_back(make_report("eq4=d5.rhs", instance, rhs, d5_rhs));
  return out;
}

std::vector<Report> DoubleAlgebra::verify_prop3_relations(const ClassId& a, const ClassId& b) {
  const Json instance{{"A", to_json(a)}, {"B", to_json(b)}};
  const HallElement ha = hall_.cls(a);
  const HallElement hb = hall_.cls(b);
  const HallElement ka = hall_.k(a.dim);
  const HallElement kb = hall_.k(b.dim);
  std::vector<Report> out;
  auto check = [&](const char* name, const DoubleElement& lhs, const DoubleElement& rhs) {
    out.push_back(make_report(name, instance, lhs, rhs));
  };
  check("5.2", mul(inject_left(ha), inject_left(hb)), inject_left(hall_.mul(ha, hb)));
  check("5.3", mul(inject_left(ka), inject_left(kb)), inject_left(hall_.k(a.dim + b.dim)));
  check("5.4", mul(inject_left(ka), inject_left(hb)),
        hall_.sym(a.dim, b.dim) * mul(inject_left(hb), inject_left(ka)));
  check("5.5", mul(inject_right(ha), inject_right(hb)), inject_right(hall_.mul(ha, hb)));
  check("5.6", mul(inject_right(ka), inject_right(kb)), inject_right(hall_.k(a.dim + b.dim)));
  check("5.7", mul(inject_right(ha), inject_right(kb)),
        hall_.sym(b.dim, a.dim).inverse() * mul(inject_right(kb), inject_right(ha)));
  check("5.8", mul(inject_left(ha), inject_right(hb)), basis(hall_.zero_k(), a, b));
  check("5.9", inject_left(ka), inject_right(hall_.k(-a.dim)));
  check("5.10-5.11", eq3(a, b), eq4(a, b));
  return out;
}

}  // namespace hallforge
