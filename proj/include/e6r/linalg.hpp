/**
 * @file linalg.hpp
 * @brief Exact dense and sparse linear algebra over Q and Q(i).
 *
 * Everything here is deterministic: reduced row echelon forms pick the
 * leftmost available pivot column and, within it, the topmost row.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "e6r/scalar.hpp"

namespace e6r {

template <class S>
using Vec = std::vector<S>;

/// Sparse vector as (index, value) pairs sorted by index, no explicit zeros.
template <class S>
using Terms = std::vector<std::pair<uint32_t, S>>;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
Vec<S> zeros(size_t n) {
  return Vec<S>(n);
}

template <class S>
Vec<S> unit_vector(size_t n, size_t k) {
  Vec<S> v(n);
  v[k] = S(1);
  return v;
}

template <class S>
bool is_zero_vec(const Vec<S>& v) {
  return std::all_of(v.begin(), v.end(), [](const S& x) { return is_zero(x); });
}

template <class S>
Vec<S>& axpy(Vec<S>& y, const S& a, const Vec<S>& x) {
  if (is_zero(a)) return y;
  for (size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
  return y;
}

template <class S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class S>
Vec<S> scaled(const S& a, Vec<S> v) {
  for (auto& x : v) x *= a;
  return v;
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  S s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

template <class S>
Terms<S> to_terms(const Vec<S>& v) {
  Terms<S> t;
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) t.emplace_back(static_cast<uint32_t>(i), v[i]);
  return t;
}

template <class S>
Vec<S> to_dense(const Terms<S>& t, size_t n) {
  Vec<S> v(n);
  for (const auto& [i, x] : t) v[i] = x;
  return v;
}

inline Vec<GaussRational> lift(const Vec<Rational>& v) {
  Vec<GaussRational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(lift(x));
  return out;
}

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec<S>>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
      for (size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<S>>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  /// Unflattens a row-major vector of length n*n.
  static Matrix from_flat(const Vec<S>& flat, size_t n) {
    Matrix m(n, n);
    m.data_ = flat;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  S& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  const Vec<S>& flat() const { return data_; }

  Vec<S> row(size_t r) const { return Vec<S>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vec<S> col(size_t c) const {
    Vec<S> v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return e6r::is_zero(x); });
  }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  S trace() const {
    S t;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vec<S> apply(const Vec<S>& v) const {
    Vec<S> out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
      S s;
      for (size_t c = 0; c < cols_; ++c) {
        const S& a = (*this)(r, c);
        if (!e6r::is_zero(a) && !e6r::is_zero(v[c])) s += a * v[c];
      }
      out[r] = std::move(s);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw LinalgError("matrix product: dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (e6r::is_zero(x)) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const S& y = b(k, j);
          if (!e6r::is_zero(y)) m(i, j) += x * y;
        }
      }
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  Vec<S> data_;
};

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

inline Matrix<GaussRational> lift(const Matrix<Rational>& m) {
  Matrix<GaussRational> out(m.rows(), m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out(r, c) = lift(m(r, c));
  return out;
}

template <class S>
Matrix<S> conj(const Matrix<S>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out(r, c) = conj(m(r, c));
  return out;
}

/// In-place reduced row echelon form; returns the pivot columns. When
/// `transform` is given it is updated by the same row operations.
template <class S>
std::vector<size_t> rref_inplace(Matrix<S>& m, Matrix<S>* transform = nullptr) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    auto swap_rows = [](Matrix<S>& x, size_t a, size_t b) {
      if (a == b) return;
      for (size_t j = 0; j < x.cols(); ++j) std::swap(x(a, j), x(b, j));
    };
    swap_rows(m, r, p);
    if (transform) swap_rows(*transform, r, p);
    const S inv = S(1) / m(r, c);
    if (!(is_zero(inv - S(1)))) {
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(r, j) *= inv;
      if (transform)
        for (size_t j = 0; j < transform->cols(); ++j)
          if (!is_zero((*transform)(r, j))) (*transform)(r, j) *= inv;
    }
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
      if (transform)
        for (size_t j = 0; j < transform->cols(); ++j)
          if (!is_zero((*transform)(r, j))) (*transform)(i, j) -= f * (*transform)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
size_t rank(Matrix<S> m) {
  return rref_inplace(m).size();
}

template <class S>
size_t rank_of(const std::vector<Vec<S>>& vectors, size_t n) {
  if (vectors.empty()) return 0;
  return rank(Matrix<S>::from_rows(vectors, n));
}

/// Basis of {x : m x = 0}, returned as the rows of a reduced echelon matrix.
template <class S>
std::vector<Vec<S>> kernel_basis(const Matrix<S>& m) {
  Matrix<S> r = m;
  const auto pivots = rref_inplace(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<S>> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(m.cols());
    v[f] = S(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      if (!is_zero(r(i, f))) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  Matrix<S> k = Matrix<S>::from_rows(basis, m.cols());
  const size_t rk = rref_inplace(k).size();
  basis.clear();
  for (size_t i = 0; i < rk; ++i) basis.push_back(k.row(i));
  return basis;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (!m.is_square()) throw LinalgError("inverse of a non-square matrix");
  Matrix<S> a = m;
  Matrix<S> t = Matrix<S>::identity(m.rows());
  const auto pivots = rref_inplace(a, &t);
  if (pivots.size() != m.rows()) throw LinalgError("inverse of a singular matrix");
  return t;
}

/// A subspace of S^n stored by its reduced echelon basis. Coordinates
/// relative to that basis are the entries of a vector at the pivot columns.
template <class S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : ambient_(ambient) {}

  static Subspace span(const std::vector<Vec<S>>& vectors, size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix<S> m = Matrix<S>::from_rows(vectors, ambient);
    s.pivots_ = rref_inplace(m);
    for (size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(m.row(i));
    return s;
  }

  static Subspace whole(size_t ambient) {
    std::vector<Vec<S>> b;
    for (size_t i = 0; i < ambient; ++i) b.push_back(unit_vector<S>(ambient, i));
    return span(b, ambient);
  }

  /// Adopts vectors already known to form a reduced echelon basis.
  static Subspace from_rref(std::vector<Vec<S>> rows, size_t ambient) {
    Subspace s(ambient);
    for (const auto& r : rows) {
      size_t p = 0;
      while (p < ambient && is_zero(r[p])) ++p;
      if (p == ambient || r[p] != S(1)) throw LinalgError("from_rref: rows are not in echelon form");
      s.pivots_.push_back(p);
    }
    s.basis_ = std::move(rows);
    return s;
  }

  size_t dim() const { return basis_.size(); }
  size_t ambient() const { return ambient_; }
  const std::vector<Vec<S>>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  /// v minus its combination on the basis read off at pivot columns.
  Vec<S> residual(const Vec<S>& v) const {
    Vec<S> r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
      const S c = r[pivots_[i]];
      if (!is_zero(c)) axpy(r, -c, basis_[i]);
    }
    return r;
  }

  bool contains(const Vec<S>& v) const { return is_zero_vec(residual(v)); }

  std::optional<Vec<S>> try_coords(const Vec<S>& v) const {
    Vec<S> c(basis_.size());
    Vec<S> r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
      c[i] = r[pivots_[i]];
      if (!is_zero(c[i])) axpy(r, -c[i], basis_[i]);
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return c;
  }

  Vec<S> coords(const Vec<S>& v) const {
    auto c = try_coords(v);
    if (!c) throw LinalgError("coords: vector outside the subspace");
    return std::move(*c);
  }

  Vec<S> from_coords(const Vec<S>& c) const {
    Vec<S> v(ambient_);
    for (size_t i = 0; i < basis_.size(); ++i) axpy(v, c[i], basis_[i]);
    return v;
  }

  bool contains(const Subspace& o) const {
    return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec<S>& v) { return contains(v); });
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    std::vector<Vec<S>> all = a.basis_;
    all.insert(all.end(), b.basis_.begin(), b.basis_.end());
    return span(all, a.ambient_);
  }

  /// Annihilator {c : c . v = 0 for all v in the subspace} (plain bilinear dot).
  Subspace annihilator() const {
    if (basis_.empty()) return whole(ambient_);
    return span(kernel_basis(Matrix<S>::from_rows(basis_, ambient_)), ambient_);
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
    const Subspace ann = b.annihilator();
    if (ann.dim() == 0) return a;
    Matrix<S> m(ann.dim(), a.dim());
    for (size_t k = 0; k < ann.dim(); ++k)
      for (size_t i = 0; i < a.dim(); ++i) m(k, i) = dot(ann.basis_[k], a.basis_[i]);
    std::vector<Vec<S>> vs;
    for (const auto& c : kernel_basis(m)) vs.push_back(a.from_coords(c));
    return span(vs, a.ambient_);
  }

 private:
  size_t ambient_ = 0;
  std::vector<Vec<S>> basis_;
  std::vector<size_t> pivots_;
};

/// Coordinates relative to an arbitrary list of independent vectors.
template <class S>
class Frame {
 public:
  Frame() = default;
  Frame(std::vector<Vec<S>> vectors, size_t ambient) : vectors_(std::move(vectors)), ambient_(ambient) {
    const size_t k = vectors_.size();
    if (k == 0) return;
    Matrix<S> m = Matrix<S>::from_rows(vectors_, ambient);
    transform_ = Matrix<S>::identity(k);
    pivots_ = rref_inplace(m, &transform_);
    if (pivots_.size() != k) throw LinalgError("Frame: vectors are linearly dependent");
    for (size_t i = 0; i < k; ++i) rows_.push_back(m.row(i));
  }

  size_t size() const { return vectors_.size(); }
  size_t ambient() const { return ambient_; }
  const std::vector<Vec<S>>& vectors() const { return vectors_; }
  const Vec<S>& operator[](size_t i) const { return vectors_[i]; }

  std::optional<Vec<S>> try_coords(const Vec<S>& v) const {
    const size_t k = vectors_.size();
    Vec<S> r = v;
    Vec<S> rc(k);
    for (size_t i = 0; i < k; ++i) {
      rc[i] = r[pivots_[i]];
      if (!is_zero(rc[i])) axpy(r, -rc[i], rows_[i]);
    }
    if (!is_zero_vec(r)) return std::nullopt;
    // rows_ = transform_ * vectors_, so v = rc^T rows_ = (transform_^T rc)^T vectors_.
    Vec<S> c(k);
    for (size_t i = 0; i < k; ++i) {
      if (is_zero(rc[i])) continue;
      for (size_t j = 0; j < k; ++j)
        if (!is_zero(transform_(i, j))) c[j] += rc[i] * transform_(i, j);
    }
    return c;
  }

  Vec<S> coords(const Vec<S>& v) const {
    auto c = try_coords(v);
    if (!c) throw LinalgError("Frame::coords: vector outside the span");
    return std::move(*c);
  }

  Vec<S> combine(const Vec<S>& c) const {
    Vec<S> v(ambient_);
    for (size_t i = 0; i < vectors_.size(); ++i) axpy(v, c[i], vectors_[i]);
    return v;
  }

 private:
  std::vector<Vec<S>> vectors_;
  size_t ambient_ = 0;
  std::vector<Vec<S>> rows_;
  std::vector<size_t> pivots_;
  Matrix<S> transform_;
};

/// Incremental row-echelon reduction of a large sparse homogeneous system.
/// Rows are reduced on arrival against the stored pivots, so memory stays
/// bounded by the rank rather than the number of equations.
template <class S>
class SparseEchelon {
 public:
  explicit SparseEchelon(size_t cols) : cols_(cols), pivot_row_(cols, -1), acc_(cols), queued_(cols, 0) {}

  size_t cols() const { return cols_; }
  size_t rank() const { return rows_.size(); }

  /// Adds an equation; returns true when it was independent of the previous ones.
  bool add_row(const Terms<S>& row) {
    std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> heap;
    for (const auto& [c, v] : row) {
      if (is_zero(v)) continue;
      acc_[c] += v;
      if (!queued_[c]) {
        queued_[c] = 1;
        heap.push(c);
      }
    }
    Terms<S> out;
    bool leading_found = false;
    while (!heap.empty()) {
      const uint32_t c = heap.top();
      heap.pop();
      queued_[c] = 0;
      if (is_zero(acc_[c])) continue;
      if (!leading_found && pivot_row_[c] >= 0) {
        const S f = acc_[c];
        acc_[c] = S();
        for (const auto& [j, x] : rows_[pivot_row_[c]]) {
          if (j == c) continue;
          acc_[j] -= f * x;
          if (!queued_[j]) {
            queued_[j] = 1;
            heap.push(j);
          }
        }
        continue;
      }
      leading_found = true;
      out.emplace_back(c, std::move(acc_[c]));
      acc_[c] = S();
    }
    if (out.empty()) return false;
    const S inv = S(1) / out.front().second;
    for (auto& [j, x] : out) x *= inv;
    pivot_row_[out.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(out));
    return true;
  }

  /// Reduced echelon basis of the solution space of all rows added so far.
  std::vector<Vec<S>> kernel() const {
    // Back-substitute to the reduced form, largest pivot first.
    std::vector<std::pair<uint32_t, size_t>> order;
    for (size_t i = 0; i < rows_.size(); ++i) order.emplace_back(rows_[i].front().first, i);
    std::sort(order.begin(), order.end(), std::greater<>());
    std::vector<Terms<S>> reduced(rows_.size());
    std::vector<int> reduced_of_col(cols_, -1);
    Vec<S> acc(cols_);
    for (const auto& [p, i] : order) {
      std::vector<uint32_t> touched;
      for (const auto& [j, x] : rows_[i]) {
        acc[j] += x;
        touched.push_back(j);
      }
      for (const auto& [j, x] : rows_[i]) {
        if (j == p || reduced_of_col[j] < 0 || is_zero(acc[j])) continue;
        const S f = acc[j];
        for (const auto& [k, y] : reduced[reduced_of_col[j]]) {
          acc[k] -= f * y;
          touched.push_back(k);
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      Terms<S> r;
      for (auto k : touched) {
        if (!is_zero(acc[k])) r.emplace_back(k, acc[k]);
        acc[k] = S();
      }
      reduced_of_col[p] = static_cast<int>(i);
      reduced[i] = std::move(r);
    }
    std::vector<Vec<S>> basis;
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [p, i] : order) is_pivot[p] = true;
    std::vector<int> free_slot(cols_, -1);
    for (size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      free_slot[f] = static_cast<int>(basis.size());
      Vec<S> v(cols_);
      v[f] = S(1);
      basis.push_back(std::move(v));
    }
    for (const auto& r : reduced) {
      const uint32_t p = r.front().first;
      for (const auto& [j, x] : r)
        if (j != p && free_slot[j] >= 0) basis[free_slot[j]][p] = -x;
    }
    if (basis.empty()) return basis;
    Matrix<S> k = Matrix<S>::from_rows(basis, cols_);
    const size_t rk = rref_inplace(k).size();
    basis.clear();
    for (size_t i = 0; i < rk; ++i) basis.push_back(k.row(i));
    return basis;
  }

 private:
  size_t cols_;
  std::vector<int> pivot_row_;
  std::vector<Terms<S>> rows_;
  Vec<S> acc_;
  std::vector<char> queued_;
};

/// Inertia of a symmetric form: counts of positive, negative and zero
/// squares in any diagonalizing basis.
struct InertiaResult {
  size_t n_plus = 0;
  size_t n_minus = 0;
  size_t n_zero = 0;
  long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
  size_t size() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const InertiaResult&, const InertiaResult&) = default;
};

/// Exact symmetric congruence diagonalization. A zero diagonal with a
/// nonzero off-diagonal entry a_ij is handled by adding row/column j into i.
inline InertiaResult inertia(const Matrix<Rational>& m) {
  if (!m.is_symmetric()) throw LinalgError("inertia: matrix is not symmetric");
  const size_t n = m.rows();
  Matrix<Rational> a = m;
  InertiaResult res;
  auto swap_rc = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  for (size_t r = 0; r < n; ++r) {
    size_t p = r;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      size_t fi = n, fj = n;
      for (size_t i = r; i < n && fi == n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!a(i, j).is_zero()) {
            fi = i;
            fj = j;
            break;
          }
      if (fi == n) {
        res.n_zero += n - r;
        break;
      }
      for (size_t k = r; k < n; ++k) a(fi, k) += a(fj, k);
      for (size_t k = r; k < n; ++k) a(k, fi) += a(k, fj);
      p = fi;
    }
    swap_rc(r, p);
    const Rational d = a(r, r);
    (d.sign() > 0 ? res.n_plus : res.n_minus) += 1;
    const Rational dinv = d.inv();
    for (size_t s = r + 1; s < n; ++s) {
      if (a(s, r).is_zero()) continue;
      const Rational f = a(s, r) * dinv;
      for (size_t c = r + 1; c < n; ++c)
        if (!a(r, c).is_zero()) a(s, c) -= f * a(r, c);
      a(s, r) = Rational();
    }
    for (size_t c = r + 1; c < n; ++c) a(r, c) = Rational();
  }
  return res;
}

/// Gram matrix B^T M B of a bilinear form restricted to span(basis).
template <class S>
Matrix<S> restrict_form(const Matrix<S>& form, const std::vector<Vec<S>>& basis) {
  const size_t k = basis.size();
  std::vector<Vec<S>> mb;
  mb.reserve(k);
  for (const auto& b : basis) mb.push_back(form.apply(b));
  Matrix<S> g(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) g(i, j) = dot(basis[i], mb[j]);
  return g;
}

/// The c with a = c * b entrywise, if one exists and b is nonzero.
template <class S>
std::optional<S> proportionality(const Matrix<S>& a, const Matrix<S>& b) {
  std::optional<S> c;
  for (size_t i = 0; i < a.flat().size(); ++i) {
    const S& x = a.flat()[i];
    const S& y = b.flat()[i];
    if (is_zero(y)) {
      if (!is_zero(x)) return std::nullopt;
      continue;
    }
    S q = x / y;
    if (c && *c != q) return std::nullopt;
    c = std::move(q);
  }
  return c;
}

}  // namespace e6r
