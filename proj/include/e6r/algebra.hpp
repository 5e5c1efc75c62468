/**
 * @file algebra.hpp
 * @brief Algebras given by sparse structure constants, and the Lie-algebra
 *        services built on them: Jacobi check, ad, Killing form, derivations,
 *        fixed subspaces and Z2 twists.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "e6r/linalg.hpp"
#include "e6r/parallel.hpp"

namespace e6r {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One structure constant: b_i * b_j has coefficient c on b_k.
template <class S>
struct StructEntry {
  uint32_t i, j, k;
  S c;
};

/// Finite-dimensional algebra over S with a labeled basis. The product of
/// basis vectors is stored sparsely as b_i * b_j = sum_k c[i][j][k] b_k.
template <class S>
class StructAlgebra {
 public:
  StructAlgebra() = default;
  explicit StructAlgebra(std::vector<std::string> labels)
      : labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}
  explicit StructAlgebra(size_t dim) : StructAlgebra(default_labels(dim)) {}

  static std::vector<std::string> default_labels(size_t dim) {
    std::vector<std::string> l;
    for (size_t i = 0; i < dim; ++i) l.push_back("b" + std::to_string(i));
    return l;
  }

  size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(size_t i) const { return labels_.at(i); }
  void set_labels(std::vector<std::string> l) {
    if (l.size() != dim()) throw AlgebraError("set_labels: wrong count");
    labels_ = std::move(l);
  }

  /// Provenance annotations (free-form key/value, exported with the model).
  std::map<std::string, std::string>& provenance() { return provenance_; }
  const std::map<std::string, std::string>& provenance() const { return provenance_; }

  const Terms<S>& product(size_t i, size_t j) const { return table_[i * dim() + j]; }

  void set_product(size_t i, size_t j, const Vec<S>& v) { table_[i * dim() + j] = to_terms(v); }
  void set_product(size_t i, size_t j, Terms<S> t) { table_[i * dim() + j] = std::move(t); }

  void add_entry(size_t i, size_t j, size_t k, const S& c) {
    if (i >= dim() || j >= dim() || k >= dim()) throw AlgebraError("add_entry: index out of range");
    auto& t = table_[i * dim() + j];
    auto it = std::lower_bound(t.begin(), t.end(), k, [](const auto& e, size_t key) { return e.first < key; });
    if (it != t.end() && it->first == k) {
      it->second += c;
      if (is_zero(it->second)) t.erase(it);
    } else if (!is_zero(c)) {
      t.insert(it, {static_cast<uint32_t>(k), c});
    }
  }

  S coefficient(size_t i, size_t j, size_t k) const {
    for (const auto& [kk, c] : product(i, j))
      if (kk == k) return c;
    return S();
  }

  std::vector<StructEntry<S>> entries() const {
    std::vector<StructEntry<S>> out;
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = 0; j < dim(); ++j)
        for (const auto& [k, c] : product(i, j))
          out.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), k, c});
    return out;
  }

  size_t nonzero_count() const {
    size_t n = 0;
    for (const auto& t : table_) n += t.size();
    return n;
  }

  Vec<S> multiply(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw AlgebraError("multiply: dimension mismatch");
    Vec<S> out(dim());
    for (size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        const S xy = x[i] * y[j];
        for (const auto& [k, c] : product(i, j)) out[k] += xy * c;
      }
    }
    return out;
  }

  /// Product of sparse vectors.
  Terms<S> multiply_terms(const Terms<S>& x, const Terms<S>& y) const {
    std::map<uint32_t, S> acc;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        const S ab = a * b;
        for (const auto& [k, c] : product(i, j)) acc[k] += ab * c;
      }
    Terms<S> out;
    for (auto& [k, c] : acc)
      if (!is_zero(c)) out.emplace_back(k, std::move(c));
    return out;
  }

  Vec<S> basis_vector(size_t i) const { return unit_vector<S>(dim(), i); }

  /// Matrix of x -> a * x.
  Matrix<S> left_mult(const Vec<S>& a) const {
    Matrix<S> m(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) {
      if (is_zero(a[i])) continue;
      for (size_t j = 0; j < dim(); ++j)
        for (const auto& [k, c] : product(i, j)) m(k, j) += a[i] * c;
    }
    return m;
  }

  /// Matrix of x -> x * a.
  Matrix<S> right_mult(const Vec<S>& a) const {
    Matrix<S> m(dim(), dim());
    for (size_t j = 0; j < dim(); ++j) {
      if (is_zero(a[j])) continue;
      for (size_t i = 0; i < dim(); ++i)
        for (const auto& [k, c] : product(i, j)) m(k, i) += a[j] * c;
    }
    return m;
  }

  bool is_commutative() const {
    for (size_t i = 0; i < dim(); ++i)
      for (size_t j = i + 1; j < dim(); ++j)
        if (product(i, j) != product(j, i)) return false;
    return true;
  }

  bool is_anticommutative() const {
    for (size_t i = 0; i < dim(); ++i) {
      if (!product(i, i).empty()) return false;
      for (size_t j = i + 1; j < dim(); ++j) {
        const auto& a = product(i, j);
        const auto& b = product(j, i);
        if (a.size() != b.size()) return false;
        for (size_t t = 0; t < a.size(); ++t)
          if (a[t].first != b[t].first || a[t].second != -b[t].second) return false;
      }
    }
    return true;
  }

  friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Terms<S>> table_;
  std::map<std::string, std::string> provenance_;
};

/// Anticommutative algebra that is checked against the Jacobi identity on
/// demand. Construction does not verify; call jacobi_defect.
template <class S>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(StructAlgebra<S> alg) : alg_(std::move(alg)) {
    if (!alg_.is_anticommutative()) throw AlgebraError("LieAlgebra: bracket is not anticommutative");
  }

  const StructAlgebra<S>& alg() const { return alg_; }
  StructAlgebra<S>& mutable_alg() { return alg_; }
  size_t dim() const { return alg_.dim(); }
  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const { return alg_.multiply(x, y); }
  const Terms<S>& bracket(size_t i, size_t j) const { return alg_.product(i, j); }

  /// ad x as a dense matrix.
  Matrix<S> ad(const Vec<S>& x) const { return alg_.left_mult(x); }
  Matrix<S> ad(size_t i) const { return alg_.left_mult(alg_.basis_vector(i)); }

 private:
  StructAlgebra<S> alg_;
};

/// Basis triples (i<j<k) on which the Jacobi identity fails.
template <class S>
std::vector<std::array<uint32_t, 3>> jacobi_defect(const StructAlgebra<S>& a, size_t limit = 64) {
  const size_t n = a.dim();
  std::vector<std::array<uint32_t, 3>> bad;
  Vec<S> acc(n);
  std::vector<uint32_t> touched;
  auto add_bracket_of = [&](size_t x, size_t y, size_t z) {
    // acc += [[b_x, b_y], b_z]
    for (const auto& [m, c] : a.product(x, y))
      for (const auto& [k, d] : a.product(m, z)) {
        acc[k] += c * d;
        touched.push_back(k);
      }
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        touched.clear();
        add_bracket_of(i, j, k);
        add_bracket_of(j, k, i);
        add_bracket_of(k, i, j);
        bool ok = true;
        for (auto t : touched) {
          if (!is_zero(acc[t])) ok = false;
          acc[t] = S();
        }
        if (!ok) {
          bad.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), static_cast<uint32_t>(k)});
          if (bad.size() >= limit) return bad;
        }
      }
  return bad;
}

template <class S>
std::vector<std::array<uint32_t, 3>> jacobi_defect(const LieAlgebra<S>& l, size_t limit = 64) {
  return jacobi_defect(l.alg(), limit);
}

/// K[i][j] = tr(ad b_i ad b_j) = sum_{k,l} c[i][l][k] c[j][k][l].
template <class S>
Matrix<S> killing_matrix(const StructAlgebra<S>& a) {
  const size_t n = a.dim();
  // by_kl[k*n+l] lists (j, c[j][k][l]).
  std::vector<Terms<S>> by_kl(n * n);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      for (const auto& [l, c] : a.product(j, k)) by_kl[k * n + l].emplace_back(static_cast<uint32_t>(j), c);
  Matrix<S> K(n, n);
  parallel_for(n, [&](size_t i) {
    Vec<S> row(n);
    for (size_t l = 0; l < n; ++l)
      for (const auto& [k, c1] : a.product(i, l))
        for (const auto& [j, c2] : by_kl[k * n + l]) row[j] += c1 * c2;
    for (size_t j = 0; j < n; ++j) K(i, j) = std::move(row[j]);
  });
  return K;
}

template <class S>
Matrix<S> killing_matrix(const LieAlgebra<S>& l) {
  return killing_matrix(l.alg());
}

inline long killing_signature(const LieAlgebra<Rational>& l) { return inertia(killing_matrix(l)).signature(); }

/// x^T M y.
template <class S>
S bilinear(const Matrix<S>& m, const Vec<S>& x, const Vec<S>& y) {
  return dot(x, m.apply(y));
}

/// d(b_i b_j) = d(b_i) b_j + b_i d(b_j) on all basis pairs.
template <class S>
bool is_derivation(const StructAlgebra<S>& a, const Matrix<S>& d) {
  const size_t n = a.dim();
  std::vector<Vec<S>> img(n);
  for (size_t i = 0; i < n; ++i) img[i] = d.col(i);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec<S> lhs = d.apply(to_dense(a.product(i, j), n));
      Vec<S> rhs = a.multiply(img[i], a.basis_vector(j)) + a.multiply(a.basis_vector(i), img[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

/// phi(b_i b_j) = phi(b_i) phi(b_j) on all basis pairs, and phi invertible.
template <class S>
bool is_automorphism(const StructAlgebra<S>& a, const Matrix<S>& phi) {
  const size_t n = a.dim();
  if (phi.rows() != n || phi.cols() != n || rank(phi) != n) return false;
  std::vector<Vec<S>> img(n);
  for (size_t i = 0; i < n; ++i) img[i] = phi.col(i);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (phi.apply(to_dense(a.product(i, j), n)) != a.multiply(img[i], img[j])) return false;
  return true;
}

/// Reduced-echelon basis of Der(A), each derivation as a dim x dim matrix
/// (column m is the image of b_m).
template <class S>
std::vector<Matrix<S>> derivations(const StructAlgebra<S>& a) {
  const size_t n = a.dim();
  // Unknown D[k][m] sits at k*n+m. Equation for the b_k coefficient of
  // D(b_i b_j) - D(b_i) b_j - b_i D(b_j):
  //   sum_m c_ij^m D[k][m] - sum_m D[m][i] c_mj^k - sum_m D[m][j] c_im^k.
  // Column-indexed views of the structure constants make the last two sums cheap.
  std::vector<Terms<S>> right_k(n * n);  // (j,k) -> list of (m, c_mj^k)
  std::vector<Terms<S>> left_k(n * n);   // (i,k) -> list of (m, c_im^k)
  for (size_t m = 0; m < n; ++m)
    for (size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(m, j)) {
        right_k[j * n + k].emplace_back(static_cast<uint32_t>(m), c);
        left_k[m * n + k].emplace_back(static_cast<uint32_t>(j), c);
      }
  SparseEchelon<S> ech(n * n);
  std::map<uint32_t, S> eq;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        eq.clear();
        for (const auto& [m, c] : a.product(i, j)) eq[static_cast<uint32_t>(k * n + m)] += c;
        for (const auto& [m, c] : right_k[j * n + k]) eq[static_cast<uint32_t>(m * n + i)] -= c;
        for (const auto& [m, c] : left_k[i * n + k]) eq[static_cast<uint32_t>(m * n + j)] -= c;
        Terms<S> row;
        for (const auto& [col, c] : eq)
          if (!is_zero(c)) row.emplace_back(col, c);
        if (!row.empty()) ech.add_row(row);
      }
  std::vector<Matrix<S>> out;
  for (const auto& v : ech.kernel()) out.push_back(Matrix<S>::from_flat(v, n));
  return out;
}

/// Lie algebra spanned by a commutator-closed list of independent matrices.
/// The basis of the result is the given list, in order.
template <class S>
LieAlgebra<S> matrix_lie_algebra(const std::vector<Matrix<S>>& mats, std::vector<std::string> labels = {}) {
  const size_t k = mats.size();
  if (labels.empty()) labels = StructAlgebra<S>::default_labels(k);
  if (k == 0) return LieAlgebra<S>(StructAlgebra<S>(labels));
  const size_t n = mats[0].rows();
  std::vector<Vec<S>> flat;
  for (const auto& m : mats) flat.push_back(m.flat());
  Frame<S> frame(flat, n * n);
  StructAlgebra<S> alg(std::move(labels));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      auto c = frame.try_coords(commutator(mats[i], mats[j]).flat());
      if (!c) throw AlgebraError("matrix_lie_algebra: span is not closed under commutator");
      alg.set_product(i, j, *c);
      alg.set_product(j, i, scaled(S(-1), *c));
    }
  return LieAlgebra<S>(std::move(alg));
}

template <class S>
Subspace<S> eigenspace(const Matrix<S>& m, const S& lambda) {
  Matrix<S> d = m;
  for (size_t i = 0; i < d.rows(); ++i) d(i, i) -= lambda;
  return Subspace<S>::from_rref(kernel_basis(d), m.cols());
}

/// ker(M - id) in reduced echelon form.
template <class S>
Subspace<S> fixed_subspace(const Matrix<S>& m) {
  return eigenspace(m, S(1));
}

inline long signature_from_fix(long dim_s, long dim_fix) {
  if (dim_fix < 0 || dim_fix > dim_s) throw AlgebraError("signature_from_fix: fixed dimension out of range");
  return dim_s - 2 * dim_fix;
}

/// Structure constants of the subalgebra spanned by `basis` (independent and
/// closed under the product) in that basis.
template <class S>
StructAlgebra<S> restrict_to(const StructAlgebra<S>& a, const std::vector<Vec<S>>& basis,
                             std::vector<std::string> labels = {}) {
  const size_t k = basis.size();
  if (labels.empty()) labels = StructAlgebra<S>::default_labels(k);
  Frame<S> frame(basis, a.dim());
  StructAlgebra<S> out(std::move(labels));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      auto c = frame.try_coords(a.multiply(basis[i], basis[j]));
      if (!c) throw AlgebraError("restrict_to: span is not closed under the product");
      out.set_product(i, j, *c);
    }
  return out;
}

/// Z2 split of the basis: even_mask[i] is true for even basis vectors.
using Z2Split = std::vector<bool>;

template <class S>
bool is_z2_grading(const StructAlgebra<S>& a, const Z2Split& even) {
  if (even.size() != a.dim()) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      const bool parity = (even[i] == even[j]);
      for (const auto& [k, c] : a.product(i, j))
        if (even[k] != parity) return false;
    }
  return true;
}

/// Odd x odd brackets scaled by t; everything else kept.
template <class S>
LieAlgebra<S> twist(const LieAlgebra<S>& l, const Z2Split& even, const S& t) {
  if (!is_z2_grading(l.alg(), even)) throw AlgebraError("twist: split is not a Z2-grading");
  StructAlgebra<S> a = l.alg();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      if (even[i] || even[j]) continue;
      Terms<S> p = a.product(i, j);
      for (auto& [k, c] : p) c *= t;
      a.set_product(i, j, std::move(p));
    }
  return LieAlgebra<S>(std::move(a));
}

/// The same algebra written in a new basis (rows of `basis`, in old coordinates).
template <class S>
StructAlgebra<S> change_basis(const StructAlgebra<S>& a, const std::vector<Vec<S>>& basis,
                              std::vector<std::string> labels = {}) {
  if (basis.size() != a.dim()) throw AlgebraError("change_basis: need a full basis");
  return restrict_to(a, basis, std::move(labels));
}

/// Conjugation of a derivation-like operator: phi D phi^{-1}.
template <class S>
Matrix<S> conjugate_by(const Matrix<S>& phi, const Matrix<S>& d) {
  return phi * d * inverse(phi);
}

}  // namespace e6r
