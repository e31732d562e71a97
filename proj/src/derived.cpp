#include "hallforge/derived.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "hallforge/errors.hpp"

namespace hallforge {

namespace {

std::string class_label(const ClassId& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

Json key_json(const DoubleKey& k) {
  return Json{{"k", to_json(k.k)}, {"left", to_json(k.left)}, {"right", to_json(k.right)}};
}

std::vector<std::size_t> arrows_at(const Quiver& quiver, int alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < quiver.arrows().size(); ++i) {
    const Arrow& a = quiver.arrows()[i];
    if (a.source == alpha || a.target == alpha) out.push_back(i);
  }
  return out;
}

int other_end(const Arrow& a, int alpha) { return a.source == alpha ? a.target : a.source; }

void check_reflection_target(const Category& source, const Category& target, int alpha) {
  if (source.q() != target.q()) throw ConfigError("reflection between categories over different fields");
  if (!(target.quiver() == source.quiver().reflected_at(alpha)))
    throw ConfigError("target quiver is not the reflection of the source quiver");
}

Rep stalk_at(const Quiver& quiver, int alpha, int multiplicity, int q) {
  K0Element dim(static_cast<std::size_t>(quiver.vertex_count()));
  dim[alpha] = multiplicity;
  return Rep::zero(quiver, dim, q);
}

}  // namespace

Json to_json(const DerivedObjectClass& d) {
  Json parts = Json::array();
  for (const auto& [shift, c] : d.parts) parts.push_back(Json{{"shift", shift}, {"class", to_json(c)}});
  return Json{{"parts", std::move(parts)}};
}

DerivedObjectClass reflect_object(Category& source, Category& target, int alpha, const Rep& m) {
  const Quiver& quiver = source.quiver();
  if (alpha < 0 || alpha >= quiver.vertex_count() || !quiver.is_source(alpha))
    throw NotASource("vertex " + std::to_string(alpha) + " is not a source");
  if (quiver.has_multiple_edges()) throw MultipleEdges("reflection needs a quiver without multiple edges");
  check_reflection_target(source, target, alpha);
  const int q = source.q();
  const std::vector<std::size_t> at = arrows_at(quiver, alpha);

  std::vector<int> offset;
  int total = 0;
  for (std::size_t i : at) {
    offset.push_back(total);
    total += m.dim[other_end(quiver.arrows()[i], alpha)];
  }
  // f: M_alpha -> (+) M_beta, stacked arrow matrices
  FqMatrix f(total, m.dim[alpha], q);
  for (std::size_t s = 0; s < at.size(); ++s) {
    const FqMatrix& block = m.maps[at[s]];
    for (int r = 0; r < block.rows(); ++r)
      for (int c = 0; c < block.cols(); ++c) f.set(offset[s] + r, c, block(r, c));
  }
  const FqMatrix image = row_space_basis(f.transposed());
  const std::vector<int> pivots = pivot_columns(image);
  std::vector<int> complement;
  for (int c = 0; c < total; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) complement.push_back(c);

  K0Element dim = m.dim;
  dim[alpha] = static_cast<int>(complement.size());
  Rep coker = Rep::zero(target.quiver(), dim, q);
  for (std::size_t i = 0; i < quiver.arrows().size(); ++i) {
    const auto pos = std::find(at.begin(), at.end(), i);
    if (pos == at.end()) {
      coker.maps[i] = m.maps[i];
      continue;
    }
    const auto s = static_cast<std::size_t>(pos - at.begin());
    const int beta_dim = m.dim[other_end(quiver.arrows()[i], alpha)];
    for (int j = 0; j < beta_dim; ++j) {
      std::vector<int> w(total, 0);
      w[offset[s] + j] = 1;
      reduce_modulo(w, image, pivots);
      for (std::size_t r = 0; r < complement.size(); ++r) coker.maps[i].set(static_cast<int>(r), j, w[complement[r]]);
    }
  }
  DerivedObjectClass out;
  if (!coker.dim.is_zero()) out.parts[0] = target.iso_class_of(coker);
  const int kernel = m.dim[alpha] - image.rows();
  if (kernel > 0) out.parts[1] = target.iso_class_of(stalk_at(target.quiver(), alpha, kernel, q));
  return out;
}

DerivedObjectClass reflect_object_inverse(Category& source, Category& target, int alpha, const Rep& n) {
  const Quiver& quiver = source.quiver();
  if (alpha < 0 || alpha >= quiver.vertex_count() || !quiver.is_sink(alpha))
    throw NotASink("vertex " + std::to_string(alpha) + " is not a sink");
  if (quiver.has_multiple_edges()) throw MultipleEdges("reflection needs a quiver without multiple edges");
  check_reflection_target(source, target, alpha);
  const int q = source.q();
  const std::vector<std::size_t> at = arrows_at(quiver, alpha);

  std::vector<int> offset;
  int total = 0;
  for (std::size_t i : at) {
    offset.push_back(total);
    total += n.dim[other_end(quiver.arrows()[i], alpha)];
  }
  // g: (+) N_beta -> N_alpha, arrow matrices side by side
  FqMatrix g(n.dim[alpha], total, q);
  for (std::size_t s = 0; s < at.size(); ++s) {
    const FqMatrix& block = n.maps[at[s]];
    for (int r = 0; r < block.rows(); ++r)
      for (int c = 0; c < block.cols(); ++c) g.set(r, offset[s] + c, block(r, c));
  }
  const FqMatrix kernel = row_space_basis(nullspace_basis(g));

  K0Element dim = n.dim;
  dim[alpha] = kernel.rows();
  Rep ker = Rep::zero(target.quiver(), dim, q);
  for (std::size_t i = 0; i < quiver.arrows().size(); ++i) {
    const auto pos = std::find(at.begin(), at.end(), i);
    if (pos == at.end()) {
      ker.maps[i] = n.maps[i];
      continue;
    }
    const auto s = static_cast<std::size_t>(pos - at.begin());
    const int beta_dim = n.dim[other_end(quiver.arrows()[i], alpha)];
    for (int j = 0; j < kernel.rows(); ++j)
      for (int r = 0; r < beta_dim; ++r) ker.maps[i].set(r, j, kernel(j, offset[s] + r));
  }
  DerivedObjectClass out;
  if (!ker.dim.is_zero()) out.parts[0] = target.iso_class_of(ker);
  const int cokernel = n.dim[alpha] - mat_rank(g);
  if (cokernel > 0) out.parts[-1] = target.iso_class_of(stalk_at(target.quiver(), alpha, cokernel, q));
  return out;
}

DerivedObjectClass reflect(Category& source, Category& target, int alpha, const Rep& m) {
  if (alpha >= 0 && alpha < source.quiver().vertex_count() && source.quiver().is_sink(alpha) &&
      !source.quiver().is_source(alpha)) {
    return reflect_object_inverse(source, target, alpha, m);
  }
  return reflect_object(source, target, alpha, m);
}

IntMatrix k0_reflection_matrix(Category& source, Category& target, int alpha) {
  const auto n = static_cast<std::size_t>(source.quiver().vertex_count());
  IntMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const DerivedObjectClass d =
        reflect(source, target, alpha, simple_rep(source.quiver(), static_cast<int>(j), source.q()));
    for (const auto& [shift, c] : d.parts) {
      const int sign = shift % 2 == 0 ? 1 : -1;
      for (std::size_t i = 0; i < n; ++i) m[i][j] += sign * c.dim[i];
    }
  }
  return m;
}

IntMatrix cartan_reflection(const Quiver& quiver, int alpha) {
  const auto n = static_cast<std::size_t>(quiver.vertex_count());
  IntMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  m[alpha][alpha] = -1;
  for (const Arrow& a : quiver.arrows()) {
    if (a.source == alpha) m[alpha][a.target] += 1;
    if (a.target == alpha) m[alpha][a.source] += 1;
  }
  return m;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), std::vector<int>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

K0Element apply_matrix(const IntMatrix& m, const K0Element& x) {
  K0Element out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  return out;
}

int DerivedGrading::shift_of(Category& source, const ClassId& c) const {
  if (c.is_zero()) throw UngradedClass("the zero class has no shift");
  std::optional<int> shift;
  for (const ClassId& part : source.decompose(c)) {
    auto it = indecomposables.find(part);
    if (it == indecomposables.end()) throw UngradedClass("no grading recorded for " + class_label(part));
    if (shift && *shift != it->second.shift)
      throw UngradedClass(class_label(c) + " has summands in different graded pieces");
    shift = it->second.shift;
  }
  return *shift;
}

ClassId DerivedGrading::image_of(Category& source, Category& target, const ClassId& c) const {
  shift_of(source, c);
  std::vector<ClassId> images;
  for (const ClassId& part : source.decompose(c)) images.push_back(indecomposables.at(part).image);
  return target.direct_sum_class(images);
}

Json DerivedGrading::to_json() const {
  Json classes = Json::object();
  for (const auto& [c, g] : indecomposables) {
    classes[class_label(c)] = Json{{"class", hallforge::to_json(c)}, {"shift", g.shift}, {"image", hallforge::to_json(g.image)}};
  }
  return Json{{"vertex", alpha}, {"k0_map", k0_map}, {"classes", std::move(classes)}};
}

DerivedGrading build_grading(Category& source, Category& target, int alpha, int max_total) {
  DerivedGrading grading;
  grading.alpha = alpha;
  grading.k0_map = k0_reflection_matrix(source, target, alpha);
  for (const ClassId& m : source.indecomposables_up_to(max_total)) {
    DerivedObjectClass d;
    try {
      d = reflect(source, target, alpha, source.representative(m));
    } catch (const CapExceeded&) {
      continue;
    }
    if (d.parts.size() != 1) throw MixedShift("indecomposable " + class_label(m) + " reflects to several shifts");
    const auto& [shift, image] = *d.parts.begin();
    grading.indecomposables[m] = GradedImage{shift, image};
  }
  return grading;
}

NormalForm normal_form(HallAlgebra& hall, const DerivedGrading& grading, const Basis& x) {
  Category& cat = hall.category();
  NormalForm nf{x.k, Scalar(1), {}};
  if (x.cls.is_zero()) return nf;
  std::map<int, std::vector<ClassId>> pieces;
  for (const ClassId& part : cat.decompose(x.cls)) pieces[grading.shift_of(cat, part)].push_back(part);
  for (const auto& [shift, parts] : pieces) nf.factors.emplace_back(shift, cat.direct_sum_class(parts));
  for (std::size_t i = 0; i < nf.factors.size(); ++i)
    for (std::size_t j = i + 1; j < nf.factors.size(); ++j)
      nf.scalar *= hall.euler(nf.factors[j].second.dim, nf.factors[i].second.dim);
  return nf;
}

HallElement expand(HallAlgebra& hall, const NormalForm& nf) {
  HallElement out = hall.k(nf.k);
  for (const auto& [shift, c] : nf.factors) out = hall.mul(out, hall.cls(c));
  out *= nf.scalar;
  return out;
}

FStar::FStar(DoubleAlgebra& source, DoubleAlgebra& target, DerivedGrading grading)
    : source_(source), target_(target), grading_(std::move(grading)) {}

DoubleElement FStar::k_left(const K0Element& alpha) {
  return target_.inject_left(target_.hall().k(apply_matrix(grading_.k0_map, alpha)));
}

DoubleElement FStar::twisted_image(const ClassId& m, bool left_line) {
  HallAlgebra& th = target_.hall();
  const int n = grading_.shift_of(source_.category(), m);
  const ClassId image = grading_.image_of(source_.category(), target_.category(), m);
  const K0Element& dim = image.dim;
  // <N,N>^n [N] k_N^n, with [N] k_b = (b|N)^{-1} k_b [N]
  const Scalar coeff = Scalar::v_power(th.q(), static_cast<long>(n) * euler_form_additive(th.quiver(), dim, dim)) *
                       th.sym(n * dim, dim).inverse();
  const HallElement x = coeff * th.basis(n * dim, image);
  const bool odd = n % 2 != 0;
  return left_line != odd ? target_.inject_left(x) : target_.inject_right(x);
}

DoubleElement FStar::left_generator(const ClassId& m) { return twisted_image(m, true); }

DoubleElement FStar::right_generator(const ClassId& m) { return twisted_image(m, false); }

DoubleElement FStar::apply(const DoubleKey& x) {
  return images_.get(x, [&] {
    HallAlgebra& sh = source_.hall();
    DoubleElement out = k_left(x.k);
    const NormalForm left = normal_form(sh, grading_, Basis{sh.zero_k(), x.left});
    for (const auto& [shift, c] : left.factors) out = target_.mul(out, left_generator(c));
    const NormalForm right = normal_form(sh, grading_, Basis{sh.zero_k(), x.right});
    for (const auto& [shift, c] : right.factors) out = target_.mul(out, right_generator(c));
    out *= left.scalar * right.scalar;
    return out;
  });
}

DoubleElement FStar::apply(const DoubleElement& x) {
  DoubleElement out;
  for (const auto& [key, c] : x) out.add(apply(key), c);
  return out;
}

std::vector<DoubleKey> double_generators(DoubleAlgebra& dbl, int max_total) {
  Category& cat = dbl.category();
  const K0Element zero = dbl.hall().zero_k();
  const ClassId zc = cat.zero_class();
  std::vector<DoubleKey> out;
  for (std::size_t i = 0; i < cat.rank(); ++i) {
    const K0Element e = K0Element::unit(cat.rank(), i);
    out.push_back({e, zc, zc});
    out.push_back({-e, zc, zc});
  }
  for (const ClassId& c : cat.classes_up_to(max_total)) {
    if (c.is_zero()) continue;
    out.push_back({zero, c, zc});
    out.push_back({zero, zc, c});
  }
  return out;
}

Report check_homomorphism(FStar& f, const DoubleKey& x, const DoubleKey& y) {
  const DoubleElement lhs = f.apply(f.source().mul(x, y));
  const DoubleElement rhs = f.target().mul(f.apply(x), f.apply(y));
  return make_report("fstar-hom", Json{{"x", key_json(x)}, {"y", key_json(y)}}, lhs, rhs);
}

Report check_inverse(FStar& f, FStar& g, const DoubleKey& x) {
  const DoubleElement lhs = g.apply(f.apply(x));
  return make_report("gstar-fstar", Json{{"x", key_json(x)}}, lhs, DoubleElement(x));
}

std::vector<Report> check_relations_preserved(FStar& f, const ClassId& a, const ClassId& b) {
  DoubleAlgebra& s = f.source();
  DoubleAlgebra& t = f.target();
  HallAlgebra& h = s.hall();
  const Json instance{{"A", to_json(a)}, {"B", to_json(b)}};
  auto F = [&](const DoubleElement& x) { return f.apply(x); };
  auto T = [&](const DoubleElement& x, const DoubleElement& y) { return t.mul(F(x), F(y)); };
  const DoubleElement la = s.inject_left(h.cls(a)), lb = s.inject_left(h.cls(b));
  const DoubleElement ra = s.inject_right(h.cls(a)), rb = s.inject_right(h.cls(b));
  const DoubleElement lka = s.inject_left(h.k(a.dim)), lkb = s.inject_left(h.k(b.dim));
  const DoubleElement rka = s.inject_right(h.k(a.dim)), rkb = s.inject_right(h.k(b.dim));
  std::vector<Report> out;
  auto check = [&](const char* name, const DoubleElement& lhs, const DoubleElement& rhs) {
    out.push_back(make_report(std::string("F*") + name, instance, lhs, rhs));
  };
  check("5.2", T(la, lb), F(s.inject_left(h.mul(h.cls(a), h.cls(b)))));
  check("5.3", T(lka, lkb), F(s.inject_left(h.k(a.dim + b.dim))));
  check("5.4", T(lka, lb), h.sym(a.dim, b.dim) * T(lb, lka));
  check("5.5", T(ra, rb), F(s.inject_right(h.mul(h.cls(a), h.cls(b)))));
  check("5.6", T(rka, rkb), F(s.inject_right(h.k(a.dim + b.dim))));
  check("5.7", T(ra, rkb), h.sym(b.dim, a.dim).inverse() * T(rkb, ra));
  check("5.8", T(la, rb), F(s.basis(h.zero_k(), a, b)));
  check("5.9", F(lka), F(s.inject_right(h.k(-a.dim))));
  DoubleElement lhs, rhs;
  for (const auto& term : s.eq3_terms(a, b)) lhs.add(T(term.first, term.second), term.coeff);
  for (const auto& term : s.eq4_terms(a, b)) rhs.add(T(term.first, term.second), term.coeff);
  check("5.10-5.11", lhs, rhs);
  return out;
}

std::vector<Report> check_hom_ext_pattern(Category& source, const DerivedGrading& grading) {
  std::vector<Report> out;
  for (const auto& [m, gm] : grading.indecomposables) {
    for (const auto& [m2, gm2] : grading.indecomposables) {
      const int i = gm.shift, j = gm2.shift;
      const Integer hom = source.hom_count(source.representative(m), source.representative(m2));
      const Integer ext = source.ext1_count(source.representative(m), source.representative(m2));
      const bool hom_ok = hom == 1 || j == i || j == i + 1;
      const bool ext_ok = ext == 1 || j == i || j == i - 1;
      out.push_back(Report{"hom-ext-pattern",
                           Json{{"M", to_json(m)}, {"M2", to_json(m2)}},
                           hom_ok && ext_ok,
                           Json{{"hom", hom.get_str()}, {"ext", ext.get_str()}},
                           Json{{"i", i}, {"j", j}}});
    }
  }
  return out;
}

Report check_sum_factorization(HallAlgebra& hall, const DerivedGrading& grading, const ClassId& a_i,
                               const ClassId& a_j) {
  Category& cat = hall.category();
  if (grading.shift_of(cat, a_i) >= grading.shift_of(cat, a_j))
    throw InternalInconsistency("sum factorization needs the first class in a lower graded piece");
  const HallElement lhs = hall.cls(cat.direct_sum_class(a_i, a_j));
  const HallElement rhs = hall.euler(a_j.dim, a_i.dim) * hall.mul(hall.cls(a_i), hall.cls(a_j));
  return make_report("sum-factorization", Json{{"Ai", to_json(a_i)}, {"Aj", to_json(a_j)}}, lhs, rhs);
}

}  // namespace hallforge
