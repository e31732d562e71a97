#include "hallforge/category.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "hallforge/errors.hpp"
#include "json.hpp"

namespace hallforge {

using nlohmann::json;

struct Category::DimTable {
  K0Element dim;
  std::vector<ClassInfo> classes;
  std::vector<std::uint32_t> point_class;  // encoded point -> class index
};

namespace {

constexpr std::uint32_t kUnseen = 0xffffffffu;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Where each arrow's matrix sits inside the flat digit vector of a point.
struct Layout {
  struct Block {
    int source, target, rows, cols;
    std::size_t offset;
  };
  std::vector<Block> blocks;
  std::size_t size = 0;

  Layout(const Quiver& quiver, const K0Element& dim) {
    for (const Arrow& a : quiver.arrows()) {
      blocks.push_back({a.source, a.target, dim[a.target], dim[a.source], size});
      size += static_cast<std::size_t>(dim[a.target]) * dim[a.source];
    }
  }
};

// Generators of prod_i GL(d_i): elementary transvections and one diagonal
// generator of the multiplicative group per vertex.
struct Generator {
  int vertex;
  int j, k;        // transvection row_j += row_k (j != k), or scaling of row j when j == k
  int factor = 1;  // scaling factor when j == k
};

std::vector<Generator> gl_generators(const K0Element& dim, int q) {
  std::vector<Generator> gens;
  const int omega = fq::primitive_root(q);
  for (std::size_t v = 0; v < dim.size(); ++v) {
    const int d = dim[v];
    if (d == 0) continue;
    if (omega != 1) gens.push_back({static_cast<int>(v), 0, 0, omega});
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (j != k) gens.push_back({static_cast<int>(v), j, k, 1});
  }
  return gens;
}

// Applies g at its vertex: target blocks get g*M, source blocks get M*g
// (the latter is the action of g^{-1}, which generates the same orbits).
void apply_generator(const Layout& layout, const Generator& g, int q, std::vector<int>& x) {
  for (const auto& b : layout.blocks) {
    if (b.target == g.vertex) {
      int* m = x.data() + b.offset;
      if (g.j == g.k) {
        for (int c = 0; c < b.cols; ++c) m[g.j * b.cols + c] = fq::mul(m[g.j * b.cols + c], g.factor, q);
      } else {
        for (int c = 0; c < b.cols; ++c)
          m[g.j * b.cols + c] = fq::add(m[g.j * b.cols + c], m[g.k * b.cols + c], q);
      }
    }
    if (b.source == g.vertex) {
      int* m = x.data() + b.offset;
      if (g.j == g.k) {
        for (int r = 0; r < b.rows; ++r) m[r * b.cols + g.j] = fq::mul(m[r * b.cols + g.j], g.factor, q);
      } else {
        // M (I + E_jk): column k += column j
        for (int r = 0; r < b.rows; ++r)
          m[r * b.cols + g.k] = fq::add(m[r * b.cols + g.k], m[r * b.cols + g.j], q);
      }
    }
  }
}

std::uint64_t encode_digits(const std::vector<int>& x, int q) {
  std::uint64_t code = 0;
  for (int d : x) code = code * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(d);
  return code;
}

void decode_digits(std::uint64_t code, int q, std::vector<int>& x) {
  for (std::size_t i = x.size(); i-- > 0;) {
    x[i] = static_cast<int>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
}

const std::vector<FqMatrix>& cached_subspaces(int n, int q) {
  static ConcurrentMemo<std::pair<int, int>, std::vector<FqMatrix>> memo;
  return memo.get({n, q}, [&] { return all_subspaces(n, q); });
}

bool maps_into(const FqMatrix& map, const FqMatrix& source_basis, const FqMatrix& target_basis) {
  const std::vector<int> pivots = pivot_columns(target_basis);
  for (int r = 0; r < source_basis.rows(); ++r) {
    std::vector<int> u = source_basis.row(r);
    std::vector<int> w = map.apply(u);
    if (!in_row_space(std::move(w), target_basis, pivots)) return false;
  }
  return true;
}

json class_ref(const ClassId& c) { return json::array({c.dim.coords(), c.index}); }

ClassId parse_class_ref(const json& j) {
  return ClassId{K0Element(j.at(0).get<std::vector<int>>()), j.at(1).get<std::uint32_t>()};
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const ClassId& c) { return os << c.dim << '#' << c.index; }

Category::Category(Quiver quiver, int q, Caps caps, std::optional<std::filesystem::path> cache_dir)
    : quiver_(std::move(quiver)),
      q_(q),
      caps_(caps),
      cache_dir_(std::move(cache_dir)),
      tables_(std::make_unique<ConcurrentMemo<K0Element, DimTable>>()) {
  if (!is_prime(q_) || q_ >= 256) throw ConfigError("q must be a prime below 256");
  if (caps_.vertex <= 0 || caps_.total <= 0) throw ConfigError("caps must be positive");
}

Category::~Category() = default;

bool Category::within_caps(const K0Element& dim) const {
  if (dim.size() != rank() || !dim.is_nonnegative()) return false;
  for (std::size_t i = 0; i < dim.size(); ++i)
    if (dim[i] > caps_.vertex) return false;
  return dim.total() <= caps_.total;
}

void Category::check_caps(const K0Element& dim) const {
  if (dim.size() != rank()) throw InternalInconsistency("dimension vector has wrong rank");
  if (!dim.is_nonnegative()) throw InternalInconsistency("negative dimension vector");
  if (!within_caps(dim)) {
    std::ostringstream os;
    os << "dimension vector " << dim << " exceeds caps (vertex " << caps_.vertex << ", total "
       << caps_.total << ")";
    throw CapExceeded(os.str());
  }
}

std::filesystem::path Category::cache_file(const K0Element& dim) const {
  std::ostringstream os;
  os << std::hex << fnv1a(quiver_.fingerprint()) << std::dec << "_q" << q_ << "_d";
  for (std::size_t i = 0; i < dim.size(); ++i) os << (i ? "-" : "") << dim[i];
  os << ".json";
  return *cache_dir_ / os.str();
}

const Category::DimTable& Category::table(const K0Element& dim) {
  check_caps(dim);
  return tables_->get(dim, [&] {
    if (auto cached = load_cached(dim)) return std::move(*cached);
    DimTable t = build_table(dim);
    fill_decompositions(t);
    store_cached(t);
    return t;
  });
}

Category::DimTable Category::build_table(const K0Element& dim) {
  const Layout layout(quiver_, dim);
  long double space = 1;
  for (std::size_t i = 0; i < layout.size; ++i) space *= q_;
  if (space > static_cast<long double>(caps_.rep_space_budget)) {
    std::ostringstream os;
    os << "representation space for " << dim << " has " << static_cast<double>(space)
       << " points, above the budget " << caps_.rep_space_budget;
    throw CapExceeded(os.str());
  }
  const auto points = static_cast<std::uint64_t>(space);
  const std::vector<Generator> gens = gl_generators(dim, q_);

  Integer group = 1;
  for (std::size_t i = 0; i < dim.size(); ++i) group *= gl_order(dim[i], q_);

  DimTable t;
  t.dim = dim;
  t.point_class.assign(points, kUnseen);
  std::vector<int> x(layout.size);
  std::vector<std::uint64_t> frontier;
  for (std::uint64_t start = 0; start < points; ++start) {
    if (t.point_class[start] != kUnseen) continue;
    const auto index = static_cast<std::uint32_t>(t.classes.size());
    t.point_class[start] = index;
    frontier.assign(1, start);
    std::uint64_t orbit = 1;
    while (!frontier.empty()) {
      const std::uint64_t p = frontier.back();
      frontier.pop_back();
      for (const Generator& g : gens) {
        decode_digits(p, q_, x);
        apply_generator(layout, g, q_, x);
        const std::uint64_t next = encode_digits(x, q_);
        if (t.point_class[next] == kUnseen) {
          t.point_class[next] = index;
          ++orbit;
          frontier.push_back(next);
        } else if (t.point_class[next] != index) {
          throw InternalInconsistency("orbit enumeration met a foreign orbit");
        }
      }
    }
    ClassInfo info;
    info.rep = decode_rep(quiver_, dim, q_, start);
    info.code = start;
    Integer orbit_size = static_cast<unsigned long>(orbit);
    if (group % orbit_size != 0) throw InternalInconsistency("orbit size does not divide group order");
    info.aut = group / orbit_size;
    t.classes.push_back(std::move(info));
  }
  return t;
}

void Category::fill_decompositions(DimTable& t) {
  const K0Element& dim = t.dim;
  if (dim.is_zero()) return;
  std::vector<bool> found(t.classes.size(), false);
  // Every decomposable class is X (+) Y with X indecomposable of a proper
  // nonzero dimension.
  std::vector<K0Element> sub_dims;
  K0Element d(dim.size());
  for (;;) {
    if (!d.is_zero() && d != dim) sub_dims.push_back(d);
    std::size_t i = 0;
    while (i < d.size() && d[i] == dim[i]) d[i++] = 0;
    if (i == d.size()) break;
    ++d[i];
  }
  for (const K0Element& d1 : sub_dims) {
    const DimTable& small = table(d1);
    const DimTable& rest = table(dim - d1);
    for (std::uint32_t xi = 0; xi < small.classes.size(); ++xi) {
      if (!small.classes[xi].indecomposable) continue;
      for (std::uint32_t yi = 0; yi < rest.classes.size(); ++yi) {
        const Rep sum = direct_sum(quiver_, small.classes[xi].rep, rest.classes[yi].rep);
        const std::uint32_t c = t.point_class[encode_rep(sum)];
        if (found[c]) continue;
        found[c] = true;
        std::vector<ClassId> parts = rest.classes[yi].decomposition;
        parts.push_back(ClassId{d1, xi});
        std::sort(parts.begin(), parts.end());
        t.classes[c].decomposition = std::move(parts);
      }
    }
  }
  for (std::uint32_t c = 0; c < t.classes.size(); ++c) {
    if (!found[c]) {
      t.classes[c].indecomposable = true;
      t.classes[c].decomposition = {ClassId{dim, c}};
    }
  }
}

std::optional<Category::DimTable> Category::load_cached(const K0Element& dim) {
  if (!cache_dir_) return std::nullopt;
  const auto path = cache_file(dim);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("fingerprint").get<std::string>() != quiver_.fingerprint() || j.at("q").get<int>() != q_ ||
        j.at("dim").get<std::vector<int>>() != dim.coords()) {
      return std::nullopt;
    }
    DimTable t;
    t.dim = dim;
    for (const json& c : j.at("classes")) {
      ClassInfo info;
      info.code = c.at("code").get<std::uint64_t>();
      info.rep = decode_rep(quiver_, dim, q_, info.code);
      info.aut = Integer(c.at("aut").get<std::string>());
      info.indecomposable = c.at("indecomposable").get<bool>();
      for (const json& part : c.at("decomposition")) info.decomposition.push_back(parse_class_ref(part));
      t.classes.push_back(std::move(info));
    }
    t.point_class = j.at("point_class").get<std::vector<std::uint32_t>>();
    const std::size_t n = quiver_.rep_space_dimension(dim);
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(q_);
    if (t.point_class.size() != expected) return std::nullopt;
    ++cache_loads_;
    return t;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void Category::store_cached(const DimTable& t) {
  if (!cache_dir_) return;
  json j;
  j["fingerprint"] = quiver_.fingerprint();
  j["q"] = q_;
  j["dim"] = t.dim.coords();
  json classes = json::array();
  for (const ClassInfo& c : t.classes) {
    json parts = json::array();
    for (const ClassId& p : c.decomposition) parts.push_back(class_ref(p));
    classes.push_back({{"code", c.code},
                       {"aut", c.aut.get_str()},
                       {"indecomposable", c.indecomposable},
                       {"decomposition", parts}});
  }
  j["classes"] = std::move(classes);
  j["point_class"] = t.point_class;

  std::error_code ec;
  std::filesystem::create_directories(*cache_dir_, ec);
  const auto path = cache_file(t.dim);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(fnv1a(std::to_string(reinterpret_cast<std::uintptr_t>(&t))));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return;
  }
  ++cache_stores_;
}

std::vector<ClassId> Category::enumerate_classes(const K0Element& dim) {
  const DimTable& t = table(dim);
  std::vector<ClassId> out;
  out.reserve(t.classes.size());
  for (std::uint32_t i = 0; i < t.classes.size(); ++i) out.push_back(ClassId{dim, i});
  return out;
}

ClassId Category::iso_class_of(const Rep& rep) {
  if (!rep.shapes_match(quiver_)) throw InternalInconsistency("representation shape mismatch");
  const DimTable& t = table(rep.dim);
  return ClassId{rep.dim, t.point_class[encode_rep(rep)]};
}

const ClassInfo& Category::info(const ClassId& c) {
  const DimTable& t = table(c.dim);
  if (c.index >= t.classes.size()) throw InternalInconsistency("unknown class index");
  return t.classes[c.index];
}

ClassId Category::zero_class() const { return ClassId{K0Element(rank()), 0}; }

ClassId Category::simple(int vertex) { return iso_class_of(simple_rep(quiver_, vertex, q_)); }

ClassId Category::direct_sum_class(const ClassId& a, const ClassId& b) {
  return iso_class_of(direct_sum(quiver_, representative(a), representative(b)));
}

ClassId Category::direct_sum_class(const std::vector<ClassId>& parts) {
  ClassId out = zero_class();
  for (const ClassId& p : parts) out = direct_sum_class(out, p);
  return out;
}

std::vector<K0Element> Category::dimension_vectors(int max_total) const {
  std::vector<K0Element> out;
  const int limit = std::min(max_total, caps_.total);
  K0Element d(rank());
  for (;;) {
    if (d.total() <= limit) out.push_back(d);
    std::size_t i = 0;
    while (i < d.size() && d[i] == std::min(caps_.vertex, limit)) d[i++] = 0;
    if (i == d.size()) break;
    ++d[i];
  }
  std::stable_sort(out.begin(), out.end(), [](const K0Element& a, const K0Element& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

std::vector<ClassId> Category::classes_up_to(int max_total) {
  std::vector<ClassId> out;
  for (const K0Element& d : dimension_vectors(max_total)) {
    auto cs = enumerate_classes(d);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

std::vector<ClassId> Category::indecomposables_up_to(int max_total) {
  std::vector<ClassId> out;
  for (const ClassId& c : classes_up_to(max_total))
    if (!c.is_zero() && is_indecomposable(c)) out.push_back(c);
  return out;
}

std::vector<Homomorphism> Category::hom_basis(const Rep& a, const Rep& b) const {
  const std::size_t n = rank();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(b.dim[i]) * a.dim[i];
  const int unknowns = static_cast<int>(offset[n]);

  std::vector<std::vector<int>> rows;
  for (std::size_t ai = 0; ai < quiver_.arrows().size(); ++ai) {
    const Arrow& arrow = quiver_.arrows()[ai];
    const int s = arrow.source, t = arrow.target;
    const FqMatrix& ma = a.maps[ai];  // dA_t x dA_s
    const FqMatrix& mb = b.maps[ai];  // dB_t x dB_s
    // (B_a f_s - f_t A_a)[r][c] = 0 for r < dB_t, c < dA_s
    for (int r = 0; r < b.dim[t]; ++r) {
      for (int c = 0; c < a.dim[s]; ++c) {
        std::vector<int> eq(unknowns, 0);
        for (int k = 0; k < b.dim[s]; ++k) {
          const std::size_t var = offset[s] + static_cast<std::size_t>(k) * a.dim[s] + c;
          eq[var] = fq::add(eq[var], mb(r, k), q_);
        }
        for (int k = 0; k < a.dim[t]; ++k) {
          const std::size_t var = offset[t] + static_cast<std::size_t>(r) * a.dim[t] + k;
          eq[var] = fq::sub(eq[var], ma(k, c), q_);
        }
        rows.push_back(std::move(eq));
      }
    }
  }
  FqMatrix system(static_cast<int>(rows.size()), unknowns, q_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) system.set(static_cast<int>(r), c, rows[r][c]);
  const FqMatrix basis = solve_linear_space(system);

  std::vector<Homomorphism> out;
  for (int r = 0; r < basis.rows(); ++r) {
    Homomorphism f;
    for (std::size_t i = 0; i < n; ++i) {
      FqMatrix m(b.dim[i], a.dim[i], q_);
      for (int x = 0; x < b.dim[i]; ++x)
        for (int y = 0; y < a.dim[i]; ++y)
          m.set(x, y, basis(r, static_cast<int>(offset[i] + static_cast<std::size_t>(x) * a.dim[i] + y)));
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Integer Category::hom_count(const Rep& a, const Rep& b) const {
  return int_pow(q_, static_cast<unsigned>(hom_basis(a, b).size()));
}

Integer Category::ext1_count(const Rep& a, const Rep& b) const {
  const long exponent = static_cast<long>(hom_basis(a, b).size()) - euler_form_additive(quiver_, a.dim, b.dim);
  if (exponent < 0) throw InternalInconsistency("negative Ext exponent");
  return int_pow(q_, static_cast<unsigned>(exponent));
}

void Category::for_each_hom(const Rep& a, const Rep& b,
                            const std::function<void(const Homomorphism&)>& visit) const {
  const std::vector<Homomorphism> basis = hom_basis(a, b);
  const Integer total = int_pow(q_, static_cast<unsigned>(basis.size()));
  if (total > Integer(static_cast<unsigned long>(caps_.hom_budget))) {
    throw CapExceeded("Hom space of size " + total.get_str() + " exceeds the enumeration budget");
  }
  std::vector<int> coeff(basis.size(), 0);
  const std::size_t n = rank();
  for (;;) {
    Homomorphism f;
    for (std::size_t i = 0; i < n; ++i) f.emplace_back(b.dim[i], a.dim[i], q_);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (coeff[k] == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (int x = 0; x < b.dim[i]; ++x)
          for (int y = 0; y < a.dim[i]; ++y)
            f[i].set(x, y, fq::add(f[i](x, y), fq::mul(coeff[k], basis[k][i](x, y), q_), q_));
    }
    visit(f);
    std::size_t k = 0;
    while (k < coeff.size() && coeff[k] == q_ - 1) coeff[k++] = 0;
    if (k == coeff.size()) break;
    ++coeff[k];
  }
}

void Category::for_each_subobject(const Rep& c,
                                  const std::function<void(const SubobjectWitness&)>& visit) {
  check_caps(c.dim);
  const std::size_t n = rank();
  SubobjectWitness w;
  w.parent = std::make_shared<const Rep>(c);
  w.bases.resize(n);
  std::vector<const std::vector<FqMatrix>*> choices(n);
  for (std::size_t i = 0; i < n; ++i) choices[i] = &cached_subspaces(c.dim[i], q_);

  std::function<void(std::size_t)> recurse = [&](std::size_t v) {
    if (v == n) {
      visit(w);
      return;
    }
    for (const FqMatrix& u : *choices[v]) {
      w.bases[v] = u;
      bool stable = true;
      for (std::size_t ai = 0; ai < quiver_.arrows().size() && stable; ++ai) {
        const Arrow& a = quiver_.arrows()[ai];
        const auto s = static_cast<std::size_t>(a.source), t = static_cast<std::size_t>(a.target);
        if (std::max(s, t) != v) continue;
        stable = maps_into(c.maps[ai], w.bases[s], w.bases[t]);
      }
      if (stable) recurse(v + 1);
    }
  };
  recurse(0);
}

std::vector<SubobjectWitness> Category::subobjects(const Rep& c) {
  std::vector<SubobjectWitness> out;
  for_each_subobject(c, [&](const SubobjectWitness& w) { out.push_back(w); });
  return out;
}

Rep Category::sub_rep(const SubobjectWitness& w) const {
  const Rep& c = *w.parent;
  K0Element dim(rank());
  for (std::size_t i = 0; i < rank(); ++i) dim[i] = w.bases[i].rows();
  Rep out = Rep::zero(quiver_, dim, q_);
  for (std::size_t ai = 0; ai < quiver_.arrows().size(); ++ai) {
    const Arrow& a = quiver_.arrows()[ai];
    const FqMatrix& us = w.bases[a.source];
    const FqMatrix& ut = w.bases[a.target];
    const std::vector<int> pivots = pivot_columns(ut);
    for (int j = 0; j < us.rows(); ++j) {
      const std::vector<int> image = c.maps[ai].apply(us.row(j));
      // echelon basis: coordinates are the entries at the pivot columns
      for (int r = 0; r < ut.rows(); ++r) out.maps[ai].set(r, j, image[pivots[r]]);
    }
  }
  return out;
}

Rep Category::quotient_rep(const SubobjectWitness& w) const {
  const Rep& c = *w.parent;
  const std::size_t n = rank();
  std::vector<std::vector<int>> complement(n);
  std::vector<std::vector<int>> pivots(n);
  K0Element dim(n);
  for (std::size_t i = 0; i < n; ++i) {
    pivots[i] = pivot_columns(w.bases[i]);
    for (int col = 0; col < c.dim[i]; ++col)
      if (std::find(pivots[i].begin(), pivots[i].end(), col) == pivots[i].end()) complement[i].push_back(col);
    dim[i] = static_cast<int>(complement[i].size());
  }
  Rep out = Rep::zero(quiver_, dim, q_);
  for (std::size_t ai = 0; ai < quiver_.arrows().size(); ++ai) {
    const Arrow& a = quiver_.arrows()[ai];
    const auto& src = complement[a.source];
    const auto& tgt = complement[a.target];
    for (std::size_t j = 0; j < src.size(); ++j) {
      std::vector<int> image = c.maps[ai].column(src[j]);
      reduce_modulo(image, w.bases[a.target], pivots[a.target]);
      for (std::size_t r = 0; r < tgt.size(); ++r)
        out.maps[ai].set(static_cast<int>(r), static_cast<int>(j), image[tgt[r]]);
    }
  }
  return out;
}

std::pair<ClassId, ClassId> Category::sub_quotient_classes(const SubobjectWitness& w) {
  return {iso_class_of(sub_rep(w)), iso_class_of(quotient_rep(w))};
}

const SubquotientCensus& Category::subobject_census(const ClassId& c) {
  const Rep& rep = representative(c);
  return census_.get(c, [&] {
    SubquotientCensus census;
    for_each_subobject(rep, [&](const SubobjectWitness& w) {
      auto [sub, quot] = sub_quotient_classes(w);
      census[{quot, sub}] += 1;
    });
    return census;
  });
}

Integer Category::hall_number(const ClassId& a, const ClassId& b, const ClassId& c) {
  if (a.dim + b.dim != c.dim) return 0;
  const auto& census = subobject_census(c);
  auto it = census.find({a, b});
  return it == census.end() ? Integer(0) : it->second;
}

std::vector<std::vector<ClassId>> Category::strict_filtrations(const Rep& a, int n) {
  std::vector<std::vector<ClassId>> out;
  if (n < 1 || a.dim.is_zero()) return out;
  if (n == 1) {
    out.push_back({iso_class_of(a)});
    return out;
  }
  for (const SubobjectWitness& w : subobjects(a)) {
    const Rep sub = sub_rep(w);
    if (sub.dim.is_zero() || sub.dim == a.dim) continue;
    const ClassId top = iso_class_of(quotient_rep(w));
    for (auto& tail : strict_filtrations(sub, n - 1)) {
      std::vector<ClassId> chain{top};
      chain.insert(chain.end(), tail.begin(), tail.end());
      out.push_back(std::move(chain));
    }
  }
  return out;
}

const FiltrationCensus& Category::filtration_census(const ClassId& a) {
  return filtrations_.get(a, [&] {
    FiltrationCensus census;
    if (a.is_zero()) return census;
    census[{a}] = 1;
    for (const auto& [key, count] : subobject_census(a)) {
      const auto& [quot, sub] = key;
      if (quot.is_zero() || sub.is_zero()) continue;
      for (const auto& [tail, tail_count] : filtration_census(sub)) {
        std::vector<ClassId> seq{quot};
        seq.insert(seq.end(), tail.begin(), tail.end());
        census[seq] += count * tail_count;
      }
    }
    return census;
  });
}

const KerCokerCensus& Category::ker_coker_census(const ClassId& b, const ClassId& a) {
  const Rep& rb = representative(b);
  const Rep& ra = representative(a);
  return ker_coker_.get({b, a}, [&] {
    KerCokerCensus census;
    const std::size_t n = rank();
    auto parent_b = std::make_shared<const Rep>(rb);
    auto parent_a = std::make_shared<const Rep>(ra);
    for_each_hom(rb, ra, [&](const Homomorphism& phi) {
      SubobjectWitness ker{parent_b, {}};
      SubobjectWitness img{parent_a, {}};
      for (std::size_t i = 0; i < n; ++i) {
        ker.bases.push_back(row_space_basis(nullspace_basis(phi[i])));
        img.bases.push_back(row_space_basis(phi[i].transposed()));
      }
      census[{iso_class_of(sub_rep(ker)), iso_class_of(quotient_rep(img))}] += 1;
    });
    return census;
  });
}

Integer Category::hom_with_ker_coker_count(const Rep& b, const Rep& a, const ClassId& kernel,
                                           const ClassId& cokernel) {
  const auto& census = ker_coker_census(iso_class_of(b), iso_class_of(a));
  auto it = census.find({kernel, cokernel});
  return it == census.end() ? Integer(0) : it->second;
}

}  // namespace hallforge
