#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hallforge {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(int n);

// Arithmetic in the prime field F_q on residues stored as small integers.
namespace fq {

inline int add(int a, int b, int q) { return (a + b) % q; }
inline int sub(int a, int b, int q) { return (a - b + q) % q; }
inline int mul(int a, int b, int q) { return (a * b) % q; }
inline int neg(int a, int q) { return (q - a) % q; }
int inv(int a, int q);
// Smallest generator of the multiplicative group.
int primitive_root(int q);

}  // namespace fq

// Dense matrix over F_q, row-major. q < 256.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols, int q);
  FqMatrix(int rows, int cols, int q, std::vector<std::uint8_t> entries);

  static FqMatrix identity(int n, int q);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int q() const { return q_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, int value) {
    data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(value);
  }
  std::span<const std::uint8_t> entries() const { return data_; }
  std::vector<int> row(int r) const;
  std::vector<int> column(int c) const;

  FqMatrix operator*(const FqMatrix& rhs) const;
  std::vector<int> apply(std::span<const int> x) const;
  FqMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int q_ = 2;
  std::vector<std::uint8_t> data_;
};

std::ostream& operator<<(std::ostream& os, const FqMatrix& m);

struct EchelonForm {
  FqMatrix reduced;         // same shape as the input
  std::vector<int> pivots;  // pivot column of each nonzero row, ascending
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Reduced row echelon form: leftmost pivot first, pivot row taken as the
// smallest row index carrying a nonzero entry in that column.
EchelonForm rref(const FqMatrix& m);
int mat_rank(const FqMatrix& m);

// Rows form the reduced echelon basis of the row space (zero rows dropped).
FqMatrix row_space_basis(const FqMatrix& m);
// Rows form a basis of {x : m x = 0}; one basis vector per free column.
FqMatrix nullspace_basis(const FqMatrix& m);
// Homogeneous system: each row of `constraints` is one equation in
// constraints.cols() unknowns. Returns the solution basis as rows.
FqMatrix solve_linear_space(const FqMatrix& constraints);

// Subtracts the echelon rows from x so that x vanishes on every pivot column.
void reduce_modulo(std::vector<int>& x, const FqMatrix& echelon_rows, std::span<const int> pivots);
bool in_row_space(std::vector<int> x, const FqMatrix& echelon_rows, std::span<const int> pivots);
std::vector<int> pivot_columns(const FqMatrix& echelon_rows);

Integer gl_order(int n, int q);
Integer gaussian_binomial(int n, int k, int q);
Integer int_pow(int base, unsigned exponent);

// All k-dimensional subspaces of F_q^n as k x n reduced echelon bases.
// Order: pivot sets lexicographically, then free entries lexicographically.
std::vector<FqMatrix> subspaces(int n, int k, int q);
// Every subspace of F_q^n, by ascending dimension.
std::vector<FqMatrix> all_subspaces(int n, int q);

std::string rational_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Element a + b v of Q(v), v = +sqrt(q). The q tag is 0 for scalars that
// are plain rationals (b == 0) and carry no field information yet; mixing
// two nonzero, different tags is an error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }
  Scalar(int q, Rational a, Rational b);

  // v^n for any integer n.
  static Scalar v_power(int q, long n);
  static Scalar v(int q) { return v_power(q, 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int q() const { return q_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

 private:
  static int merge_q(int lhs, int rhs);

  int q_ = 0;
  Rational a_{0};
  Rational b_{0};
};

Scalar to_scalar(const Integer& n);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hallforge
