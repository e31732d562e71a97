#include "hallforge/arith.hpp"

#include <algorithm>
#include <numeric>

#include "hallforge/errors.hpp"

namespace hallforge {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace fq {

int inv(int a, int q) {
  if (a % q == 0) throw InternalInconsistency("inverse of zero in F_q");
  // Fermat: a^(q-2).
  int result = 1;
  int base = a % q;
  int e = q - 2;
  while (e > 0) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return result;
}

int primitive_root(int q) {
  if (q == 2) return 1;
  for (int g = 2; g < q; ++g) {
    int x = 1;
    int order = 0;
    do {
      x = x * g % q;
      ++order;
    } while (x != 1);
    if (order == q - 1) return g;
  }
  throw InternalInconsistency("no primitive root");
}

}  // namespace fq

FqMatrix::FqMatrix(int rows, int cols, int q)
    : rows_(rows), cols_(cols), q_(q), data_(static_cast<std::size_t>(rows) * cols, 0) {}

FqMatrix::FqMatrix(int rows, int cols, int q, std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), q_(q), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw InternalInconsistency("matrix entry count does not match shape");
  }
}

FqMatrix FqMatrix::identity(int n, int q) {
  FqMatrix m(n, n, q);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::vector<int> FqMatrix::row(int r) const {
  std::vector<int> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

std::vector<int> FqMatrix::column(int c) const {
  std::vector<int> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalInconsistency("matrix shape mismatch in product");
  FqMatrix out(rows_, rhs.cols_, q_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < rhs.cols_; ++j) {
      int acc = 0;
      for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * rhs(k, j);
      out.set(i, j, acc % q_);
    }
  }
  return out;
}

std::vector<int> FqMatrix::apply(std::span<const int> x) const {
  std::vector<int> out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    int acc = 0;
    for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * x[k];
    out[i] = acc % q_;
  }
  return out;
}

FqMatrix FqMatrix::transposed() const {
  FqMatrix out(cols_, rows_, q_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

bool FqMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

std::ostream& operator<<(std::ostream& os, const FqMatrix& m) {
  os << '[';
  for (int r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

EchelonForm rref(const FqMatrix& m) {
  const int q = m.q();
  FqMatrix a = m;
  std::vector<int> pivots;
  int lead_row = 0;
  for (int col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    int found = -1;
    for (int r = lead_row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != lead_row) {
      for (int c = 0; c < a.cols(); ++c) {
        int tmp = a(found, c);
        a.set(found, c, a(lead_row, c));
        a.set(lead_row, c, tmp);
      }
    }
    const int scale = fq::inv(a(lead_row, col), q);
    for (int c = 0; c < a.cols(); ++c) a.set(lead_row, c, fq::mul(a(lead_row, c), scale, q));
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, col) == 0) continue;
      const int factor = a(r, col);
      for (int c = 0; c < a.cols(); ++c) {
        a.set(r, c, fq::sub(a(r, c), fq::mul(factor, a(lead_row, c), q), q));
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(a), std::move(pivots)};
}

int mat_rank(const FqMatrix& m) { return rref(m).rank(); }

FqMatrix row_space_basis(const FqMatrix& m) {
  EchelonForm e = rref(m);
  FqMatrix out(e.rank(), m.cols(), m.q());
  for (int r = 0; r < e.rank(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.set(r, c, e.reduced(r, c));
  return out;
}

FqMatrix nullspace_basis(const FqMatrix& m) {
  const int q = m.q();
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FqMatrix out(static_cast<int>(free_cols.size()), m.cols(), q);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const int f = free_cols[i];
    out.set(static_cast<int>(i), f, 1);
    for (int r = 0; r < e.rank(); ++r) {
      out.set(static_cast<int>(i), e.pivots[r], fq::neg(e.reduced(r, f), q));
    }
  }
  return out;
}

FqMatrix solve_linear_space(const FqMatrix& constraints) { return nullspace_basis(constraints); }

void reduce_modulo(std::vector<int>& x, const FqMatrix& echelon_rows, std::span<const int> pivots) {
  const int q = echelon_rows.q();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const int factor = x[pivots[r]];
    if (factor == 0) continue;
    for (int c = 0; c < echelon_rows.cols(); ++c) {
      x[c] = fq::sub(x[c], fq::mul(factor, echelon_rows(static_cast<int>(r), c), q), q);
    }
  }
}

bool in_row_space(std::vector<int> x, const FqMatrix& echelon_rows, std::span<const int> pivots) {
  reduce_modulo(x, echelon_rows, pivots);
  return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
}

std::vector<int> pivot_columns(const FqMatrix& echelon_rows) {
  std::vector<int> pivots;
  for (int r = 0; r < echelon_rows.rows(); ++r) {
    for (int c = 0; c < echelon_rows.cols(); ++c) {
      if (echelon_rows(r, c) != 0) {
        pivots.push_back(c);
        break;
      }
    }
  }
  return pivots;
}

Integer int_pow(int base, unsigned exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return out;
}

Integer gl_order(int n, int q) {
  Integer out = 1;
  const Integer qn = int_pow(q, static_cast<unsigned>(n));
  for (int i = 0; i < n; ++i) out *= qn - int_pow(q, static_cast<unsigned>(i));
  return out;
}

Integer gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < k; ++i) {
    num *= int_pow(q, static_cast<unsigned>(n - i)) - 1;
    den *= int_pow(q, static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

namespace {

void next_combination_all(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  if (k > n) return;
  while (true) {
    out.push_back(comb);
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace

std::vector<FqMatrix> subspaces(int n, int k, int q) {
  std::vector<FqMatrix> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.emplace_back(0, n, q);
    return out;
  }
  std::vector<std::vector<int>> pivot_sets;
  next_combination_all(n, k, pivot_sets);
  for (const auto& pivots : pivot_sets) {
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    // Free positions in row-major order: right of the row's pivot, not a pivot column.
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      FqMatrix m(k, n, q);
      for (int r = 0; r < k; ++r) m.set(r, pivots[r], 1);
      for (std::size_t i = 0; i < free.size(); ++i) m.set(free[i].first, free[i].second, digits[i]);
      out.push_back(std::move(m));
      int i = static_cast<int>(digits.size()) - 1;
      while (i >= 0 && digits[i] == q - 1) {
        digits[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++digits[i];
    }
  }
  return out;
}

std::vector<FqMatrix> all_subspaces(int n, int q) {
  std::vector<FqMatrix> out;
  for (int k = 0; k <= n; ++k) {
    auto part = subspaces(n, k, q);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::string rational_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(int q, Rational a, Rational b) : q_(q), a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ != 0 && q_ == 0) throw InternalInconsistency("irrational scalar without a field tag");
}

int Scalar::merge_q(int lhs, int rhs) {
  if (lhs == 0) return rhs;
  if (rhs == 0 || rhs == lhs) return lhs;
  throw InternalInconsistency("scalars from different base fields (q=" + std::to_string(lhs) +
                              " vs q=" + std::to_string(rhs) + ")");
}

Scalar Scalar::v_power(int q, long n) {
  if (q < 2) throw InternalInconsistency("v^n needs a field size");
  const unsigned long half = static_cast<unsigned long>(n >= 0 ? n : -n) / 2;
  Rational base(int_pow(q, static_cast<unsigned>(half)));
  const bool odd = (n % 2) != 0;
  if (n >= 0) {
    return odd ? Scalar(q, 0, base) : Scalar(q, base, 0);
  }
  // v^(-2h) = 1/q^h ; v^(-2h-1) = v / q^(h+1)
  if (!odd) return Scalar(q, Rational(1) / base, 0);
  return Scalar(q, 0, Rational(1) / (base * q));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  q_ = merge_q(q_, rhs.q_);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  q_ = merge_q(q_, rhs.q_);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  q_ = merge_q(q_, rhs.q_);
  if (b_ == 0 && rhs.b_ == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  Rational na = a_ * rhs.a_ + b_ * rhs.b_ * q_;
  Rational nb = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InternalInconsistency("division by zero scalar");
  if (b_ == 0) return Scalar(q_, Rational(1) / a_, 0);
  // (a + b v)^-1 = (a - b v) / (a^2 - q b^2); q is not a square so the norm is nonzero.
  Rational norm = a_ * a_ - b_ * b_ * q_;
  return Scalar(q_, a_ / norm, -b_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.q_ != 0 && rhs.q_ != 0 && lhs.q_ != rhs.q_) {
    throw InternalInconsistency("comparing scalars from different base fields");
  }
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

Scalar to_scalar(const Integer& n) { return Scalar(Rational(n)); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  if (s.b() == 0) return os << s.a().get_str();
  if (s.a() != 0) os << s.a().get_str() << '+';
  return os << '(' << s.b().get_str() << ")v";
}

}  // namespace hallforge
