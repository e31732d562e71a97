#include "hallforge/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hallforge/errors.hpp"

namespace hallforge {

bool K0Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool K0Element::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

int K0Element::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

bool K0Element::fits_in(const K0Element& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

K0Element& K0Element::operator+=(const K0Element& rhs) {
  if (rhs.size() != size()) throw InternalInconsistency("K0 rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

K0Element& K0Element::operator-=(const K0Element& rhs) {
  if (rhs.size() != size()) throw InternalInconsistency("K0 rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

K0Element K0Element::operator-() const {
  K0Element out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::ostream& operator<<(std::ostream& os, const K0Element& x) {
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  return os << ')';
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ <= 0) throw ConfigError("quiver needs at least one vertex");
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 || a.target >= vertex_count_) {
      throw ConfigError("arrow endpoint out of range");
    }
    if (a.source == a.target) throw ConfigError("loops are not allowed");
  }
  // Kahn's algorithm: a topological order exists iff there is no oriented cycle.
  std::vector<int> indegree(vertex_count_, 0);
  for (const Arrow& a : arrows_) ++indegree[a.target];
  std::vector<int> ready;
  for (int v = 0; v < vertex_count_; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (const Arrow& a : arrows_) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  if (seen != vertex_count_) throw ConfigError("quiver has an oriented cycle");
}

Quiver Quiver::linear_a(int n) {
  std::vector<Arrow> arrows;
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(n, std::move(arrows));
}

Quiver Quiver::kronecker() { return Quiver(2, {{0, 1}, {0, 1}}); }

Quiver Quiver::single_vertex() { return Quiver(1, {}); }

bool Quiver::is_source(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.target == v; });
}

bool Quiver::is_sink(int v) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v; });
}

bool Quiver::has_multiple_edges() const {
  std::set<std::pair<int, int>> seen;
  for (const Arrow& a : arrows_) {
    auto key = std::minmax(a.source, a.target);
    if (!seen.insert(key).second) return true;
  }
  return false;
}

Quiver Quiver::reflected_at(int v) const {
  std::vector<Arrow> arrows = arrows_;
  for (Arrow& a : arrows) {
    if (a.source == v || a.target == v) std::swap(a.source, a.target);
  }
  return Quiver(vertex_count_, std::move(arrows));
}

std::vector<int> Quiver::neighbours(int v) const {
  std::vector<int> out;
  for (const Arrow& a : arrows_) {
    if (a.source == v) out.push_back(a.target);
    if (a.target == v) out.push_back(a.source);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Quiver::rep_space_dimension(const K0Element& dim) const {
  std::size_t n = 0;
  for (const Arrow& a : arrows_) n += static_cast<std::size_t>(dim[a.source]) * dim[a.target];
  return n;
}

std::string Quiver::fingerprint() const {
  std::ostringstream os;
  os << "v" << vertex_count_;
  for (const Arrow& a : arrows_) os << "_" << a.source << "-" << a.target;
  return os.str();
}

int euler_form_additive(const Quiver& quiver, const K0Element& m, const K0Element& n) {
  int value = 0;
  for (int i = 0; i < quiver.vertex_count(); ++i) value += m[i] * n[i];
  for (const Arrow& a : quiver.arrows()) value -= m[a.source] * n[a.target];
  return value;
}

int symmetric_form_additive(const Quiver& quiver, const K0Element& m, const K0Element& n) {
  return euler_form_additive(quiver, m, n) + euler_form_additive(quiver, n, m);
}

Rep Rep::zero(const Quiver& quiver, const K0Element& dim, int q) {
  Rep r{dim, {}, q};
  for (const Arrow& a : quiver.arrows()) r.maps.emplace_back(dim[a.target], dim[a.source], q);
  return r;
}

bool Rep::shapes_match(const Quiver& quiver) const {
  if (static_cast<int>(dim.size()) != quiver.vertex_count()) return false;
  if (maps.size() != quiver.arrows().size()) return false;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Arrow& a = quiver.arrows()[i];
    if (maps[i].rows() != dim[a.target] || maps[i].cols() != dim[a.source]) return false;
  }
  return true;
}

Rep direct_sum(const Quiver& quiver, const Rep& x, const Rep& y) {
  Rep out = Rep::zero(quiver, x.dim + y.dim, x.q);
  for (std::size_t i = 0; i < quiver.arrows().size(); ++i) {
    const FqMatrix& mx = x.maps[i];
    const FqMatrix& my = y.maps[i];
    FqMatrix& m = out.maps[i];
    for (int r = 0; r < mx.rows(); ++r)
      for (int c = 0; c < mx.cols(); ++c) m.set(r, c, mx(r, c));
    for (int r = 0; r < my.rows(); ++r)
      for (int c = 0; c < my.cols(); ++c) m.set(mx.rows() + r, mx.cols() + c, my(r, c));
  }
  return out;
}

Rep simple_rep(const Quiver& quiver, int v, int q) {
  return Rep::zero(quiver, K0Element::unit(static_cast<std::size_t>(quiver.vertex_count()), v), q);
}

std::uint64_t encode_rep(const Rep& rep) {
  std::uint64_t code = 0;
  for (const FqMatrix& m : rep.maps)
    for (std::uint8_t e : m.entries()) code = code * static_cast<std::uint64_t>(rep.q) + e;
  return code;
}

Rep decode_rep(const Quiver& quiver, const K0Element& dim, int q, std::uint64_t code) {
  Rep r = Rep::zero(quiver, dim, q);
  const std::size_t n = quiver.rep_space_dimension(dim);
  std::vector<std::uint8_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  std::size_t pos = 0;
  for (FqMatrix& m : r.maps) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.set(i, j, digits[pos++]);
  }
  return r;
}

}  // namespace hallforge
