#pragma once

#include <map>
#include <utility>

#include "hallforge/arith.hpp"

namespace hallforge {

// Finite formal linear combination of basis keys with Scalar coefficients.
// Zero coefficients are never stored, so structural equality is equality.
template <class Key>
class LinearCombination {
 public:
  using key_type = Key;
  using container = std::map<Key, Scalar>;
  using const_iterator = typename container::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Scalar coeff = Scalar(1)) { add(std::move(key), coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Scalar& scale = Scalar(1)) {
    if (scale.is_zero()) return;
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * scale);
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& rhs) {
    add(rhs);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& rhs) {
    add(rhs, Scalar(-1));
    return *this;
  }
  LinearCombination& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination lhs, const LinearCombination& rhs) {
    return lhs += rhs;
  }
  friend LinearCombination operator-(LinearCombination lhs, const LinearCombination& rhs) {
    return lhs -= rhs;
  }
  friend LinearCombination operator*(const Scalar& s, LinearCombination x) { return x *= s; }
  friend LinearCombination operator*(LinearCombination x, const Scalar& s) { return x *= s; }
  friend bool operator==(const LinearCombination& lhs, const LinearCombination& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  // Applies a linear map given on basis keys.
  template <class F>
  auto map_linear(F&& on_basis) const {
    using Result = decltype(on_basis(std::declval<const Key&>()));
    Result out;
    for (const auto& [key, coeff] : terms_) out.add(on_basis(key), coeff);
    return out;
  }

 private:
  container terms_;
};

}  // namespace hallforge
