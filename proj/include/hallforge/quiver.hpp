#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hallforge/arith.hpp"

namespace hallforge {

// Element of the Grothendieck group Z^n of a quiver with n vertices. The
// class of a representation is its dimension vector; on K0 the finitary
// witness is the identity, so only the zero vector has zero image.
class K0Element {
 public:
  K0Element() = default;
  explicit K0Element(std::size_t n) : coords_(n, 0) {}
  explicit K0Element(std::vector<int> coords) : coords_(std::move(coords)) {}
  K0Element(std::initializer_list<int> coords) : coords_(coords) {}

  static K0Element unit(std::size_t n, std::size_t i) {
    K0Element e(n);
    e.coords_[i] = 1;
    return e;
  }

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  int total() const;
  // Componentwise <=.
  bool fits_in(const K0Element& other) const;

  K0Element& operator+=(const K0Element& rhs);
  K0Element& operator-=(const K0Element& rhs);
  K0Element operator-() const;
  friend K0Element operator+(K0Element lhs, const K0Element& rhs) { return lhs += rhs; }
  friend K0Element operator-(K0Element lhs, const K0Element& rhs) { return lhs -= rhs; }
  friend K0Element operator*(int s, K0Element x) {
    for (auto& c : x.coords_) c *= s;
    return x;
  }

  friend bool operator==(const K0Element&, const K0Element&) = default;
  friend auto operator<=>(const K0Element&, const K0Element&) = default;

  // d(x): the finitary witness K0 -> Z^n.
  const std::vector<int>& witness() const { return coords_; }

 private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const K0Element& x);

struct Arrow {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// Finite acyclic quiver. Parallel arrows are allowed; loops and oriented
// cycles are rejected at construction.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  static Quiver linear_a(int n);       // 0 -> 1 -> ... -> n-1
  static Quiver kronecker();           // two arrows 0 -> 1
  static Quiver single_vertex();

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool is_source(int v) const;
  bool is_sink(int v) const;
  bool has_multiple_edges() const;
  // Reverses every arrow incident to v.
  Quiver reflected_at(int v) const;
  std::vector<int> neighbours(int v) const;

  // Number of rep-space coordinates for a dimension vector.
  std::size_t rep_space_dimension(const K0Element& dim) const;

  // Stable identifier of the quiver used to key on-disk caches.
  std::string fingerprint() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

// <m, n> = sum_i m_i n_i - sum_{a: i -> j} m_i n_j.
int euler_form_additive(const Quiver& quiver, const K0Element& m, const K0Element& n);
// Exponent of v in (m|n) = <m,n><n,m>.
int symmetric_form_additive(const Quiver& quiver, const K0Element& m, const K0Element& n);

// Representation over F_q: one (dim[target] x dim[source]) matrix per arrow.
struct Rep {
  K0Element dim;
  std::vector<FqMatrix> maps;
  int q = 2;

  static Rep zero(const Quiver& quiver, const K0Element& dim, int q);
  bool shapes_match(const Quiver& quiver) const;

  friend bool operator==(const Rep&, const Rep&) = default;
};

Rep direct_sum(const Quiver& quiver, const Rep& x, const Rep& y);
// Simple representation at vertex v.
Rep simple_rep(const Quiver& quiver, int v, int q);

// Row-major concatenation of all arrow matrices read as a base-q numeral;
// numeric order equals lexicographic order of the concatenated encoding.
std::uint64_t encode_rep(const Rep& rep);
Rep decode_rep(const Quiver& quiver, const K0Element& dim, int q, std::uint64_t code);

}  // namespace hallforge
