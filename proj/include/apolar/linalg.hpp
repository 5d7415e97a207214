#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace apolar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                           std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void append_row(std::span<const Rational> values);
  QMatrix transpose() const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<Rational> apply(const QMatrix& m, std::span<const Rational> v);

struct RowEchelon {
  QMatrix reduced;                  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Pivot rows are normalized to a leading 1, so the
/// result is the unique reduced row-echelon form of the row space.
RowEchelon rref(QMatrix m);

/// A linear subspace of Q^n held as the reduced row-echelon basis of its rows.
/// Equal subspaces compare equal structurally.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  /// Row space of `generators`.
  static Subspace span(QMatrix generators);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  bool is_full() const noexcept { return basis_.rows() == ambient_; }

  const QMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Rational> v) const;

  /// Orthogonal complement for the standard dot product.
  Subspace complement() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}.
Subspace kernel_basis(const QMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// True iff b is a subspace of a.
bool subspace_contains(const Subspace& a, const Subspace& b);

/// Determinant of a square matrix by elimination.
Rational determinant(QMatrix m);

std::string to_string(const Rational& q);

}  // namespace apolar
