#include "apolar/linalg.hpp"

#include <algorithm>
#include <utility>

#include "apolar/errors.hpp"

namespace apolar {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                           std::size_t cols) {
  QMatrix m(0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void QMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw DimensionMismatch("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
  QMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> apply(const QMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector shape");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(v[c]) != 0) out[r] += m(r, c) * v[c];
  return out;
}

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  // Nonzero columns of the current pivot row; elimination only touches these.
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t j = c; j < cols; ++j) swap(m(p, j), m(lead, j));

    const Rational inv = 1 / m(lead, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(lead, j)) == 0) continue;
      m(lead, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t j : support) m(r, j) -= factor * m(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(QMatrix generators) {
  Subspace s(generators.cols());
  if (generators.rows() == 0) return s;
  RowEchelon e = rref(std::move(generators));
  QMatrix basis(e.rank, s.ambient_);
  for (std::size_t r = 0; r < e.rank; ++r) {
    auto src = e.reduced.row(r);
    std::copy(src.begin(), src.end(), basis.row(r).begin());
  }
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = QMatrix::identity(ambient_dim);
  s.pivots_.resize(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_[i] = i;
  return s;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length mismatch");
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const std::size_t p = pivots_[r];
    if (sgn(w[p]) == 0) continue;
    const Rational factor = w[p];
    auto row = basis_.row(r);
    for (std::size_t j = p; j < ambient_; ++j)
      if (sgn(row[j]) != 0) w[j] -= factor * row[j];
  }
  return std::all_of(w.begin(), w.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

Subspace Subspace::complement() const {
  QMatrix m = basis_;
  if (m.rows() == 0) return full(ambient_);
  return kernel_basis(m);
}

Subspace kernel_basis(const QMatrix& m) {
  const std::size_t cols = m.cols();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  QMatrix gens(0, cols);
  std::vector<Rational> v(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, f);
    gens.append_row(v);
  }
  return Subspace::span(std::move(gens));
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient spaces");
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  QMatrix stacked = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.basis().row(r));
  return Subspace::span(std::move(stacked));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(n);
  if (a.is_full()) return b;
  if (b.is_full()) return a;

  // (lambda, mu) with lambda A + mu B = 0 gives lambda A in both spaces; the
  // bases are independent so this map onto a ∩ b is injective.
  const std::size_t ka = a.dim();
  const std::size_t kb = b.dim();
  QMatrix system(n, ka + kb);
  for (std::size_t r = 0; r < ka; ++r)
    for (std::size_t j = 0; j < n; ++j) system(j, r) = a.basis()(r, j);
  for (std::size_t r = 0; r < kb; ++r)
    for (std::size_t j = 0; j < n; ++j) system(j, ka + r) = b.basis()(r, j);

  const Subspace relations = kernel_basis(system);
  QMatrix gens(relations.dim(), n);
  for (std::size_t i = 0; i < relations.dim(); ++i) {
    auto lambda = relations.basis().row(i);
    for (std::size_t r = 0; r < ka; ++r) {
      if (sgn(lambda[r]) == 0) continue;
      auto arow = a.basis().row(r);
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(arow[j]) != 0) gens(i, j) += lambda[r] * arow[j];
    }
  }
  return Subspace::span(std::move(gens));
}

bool subspace_contains(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (b.dim() > a.dim()) return false;
  for (std::size_t r = 0; r < b.dim(); ++r)
    if (!a.contains(b.basis().row(r))) return false;
  return true;
}

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace apolar
