/**
 * @file jordan.hpp
 * @brief Jordan algebras H3(C, gamma) and Mat3(R)+ with normalized trace,
 *        star product, multiplication operators, inner derivations, their
 *        standard gradings and the involution nu of the Albert algebra.
 *
 * H3(C, gamma) is the set of 3x3 matrices over C with x = gamma x^t gamma
 * (^ = conjugation of C, gamma diagonal with entries +-1). Its basis is
 * E1, E2, E3, iota1(b_k), iota2(b_k), iota3(b_k) where
 *   iota1(a) = a E23 + g2 g3 a^ E32,
 *   iota2(a) = a E31 + g3 g1 a^ E13,
 *   iota3(a) = a E12 + g1 g2 a^ E21.
 */
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "e6r/algebra.hpp"
#include "e6r/composition.hpp"
#include "e6r/grading.hpp"

namespace e6r {

using Gamma = std::array<int, 3>;

inline std::string gamma_str(const Gamma& g) {
  return "diag(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
}

class JordanAlgebra {
 public:
  JordanAlgebra() = default;
  JordanAlgebra(std::string name, StructAlgebra<Rational> alg, Vec<Rational> unit, Vec<Rational> trace,
                std::vector<Vec<Rational>> traceless)
      : name_(std::move(name)), alg_(std::move(alg)), unit_(std::move(unit)), trace_(std::move(trace)),
        traceless_(std::move(traceless)) {}

  const std::string& name() const { return name_; }
  const StructAlgebra<Rational>& alg() const { return alg_; }
  size_t dim() const { return alg_.dim(); }
  const Vec<Rational>& unit() const { return unit_; }
  /// t_J as a coordinate row: t_J(x) = trace . x.
  const Vec<Rational>& trace_row() const { return trace_; }
  /// Basis of J0 = ker t_J used by the Tits construction.
  const std::vector<Vec<Rational>>& traceless_basis() const { return traceless_; }

  const std::optional<Gamma>& gamma() const { return gamma_; }
  const std::optional<CompositionAlgebra>& coefficients() const { return coeffs_; }

  Vec<Rational> basis_vector(size_t i) const { return unit_vector<Rational>(dim(), i); }
  Vec<Rational> mul(const Vec<Rational>& x, const Vec<Rational>& y) const { return alg_.multiply(x, y); }
  Rational trace(const Vec<Rational>& x) const { return dot(trace_, x); }

  /// x * y = x.y - t_J(x.y) I.
  Vec<Rational> star(const Vec<Rational>& x, const Vec<Rational>& y) const {
    Vec<Rational> p = mul(x, y);
    return axpy(p, -trace(p), unit_);
  }
  Matrix<Rational> r_op(const Vec<Rational>& x) const { return alg_.right_mult(x); }
  /// [R_x, R_y], an inner derivation.
  Matrix<Rational> inner_der(const Vec<Rational>& x, const Vec<Rational>& y) const {
    return commutator(r_op(x), r_op(y));
  }

  /// Coordinates of E_i (i = 1..3) for H3 algebras.
  Vec<Rational> e(size_t i) const { return basis_vector(i - 1); }
  /// iota_i(a) (i = 1..3) for a in the coefficient algebra.
  Vec<Rational> iota(size_t i, const Vec<Rational>& a) const {
    const size_t n = coeffs_->dim();
    Vec<Rational> v(dim());
    for (size_t k = 0; k < n; ++k) v[3 + (i - 1) * n + k] = a[k];
    return v;
  }
  size_t iota_index(size_t i, size_t k) const { return 3 + (i - 1) * coeffs_->dim() + k; }

 private:
  friend JordanAlgebra h3(const CompositionAlgebra& c, const Gamma& gamma);

  std::string name_;
  StructAlgebra<Rational> alg_;
  Vec<Rational> unit_;
  Vec<Rational> trace_;
  std::vector<Vec<Rational>> traceless_;
  std::optional<Gamma> gamma_;
  std::optional<CompositionAlgebra> coeffs_;
};

namespace detail {

/// 3x3 matrix with entries in a composition algebra.
using CMatrix = std::array<std::array<Vec<Rational>, 3>, 3>;

inline CMatrix cmatrix_zero(size_t n) {
  CMatrix m;
  for (auto& row : m)
    for (auto& x : row) x = Vec<Rational>(n);
  return m;
}

inline CMatrix cmatrix_mul(const CompositionAlgebra& c, const CMatrix& x, const CMatrix& y) {
  CMatrix z = cmatrix_zero(c.dim());
  for (size_t p = 0; p < 3; ++p)
    for (size_t r = 0; r < 3; ++r)
      for (size_t q = 0; q < 3; ++q) {
        if (is_zero_vec(x[p][q]) || is_zero_vec(y[q][r])) continue;
        z[p][r] = z[p][r] + c.mul(x[p][q], y[q][r]);
      }
  return z;
}

}  // namespace detail

/// Hermitian 3x3 matrices over C with the twisted involution given by gamma.
inline JordanAlgebra h3(const CompositionAlgebra& c, const Gamma& gamma) {
  using detail::CMatrix;
  const size_t n = c.dim();
  const size_t dim = 3 + 3 * n;
  // (row, col) of the a entry of iota_i; the conjugate sits at the transpose.
  const std::array<std::pair<size_t, size_t>, 3> pos{{{1, 2}, {2, 0}, {0, 1}}};
  auto sign_of = [&](size_t i) {
    const auto [r, s] = pos[i];
    return Rational(gamma[r] * gamma[s]);
  };
  auto to_matrix = [&](size_t b) {
    CMatrix m = detail::cmatrix_zero(n);
    if (b < 3) {
      m[b][b] = c.unit();
      return m;
    }
    const size_t i = (b - 3) / n, k = (b - 3) % n;
    const auto [r, s] = pos[i];
    m[r][s] = c.basis_vector(k);
    m[s][r] = scaled(sign_of(i), c.conj(c.basis_vector(k)));
    return m;
  };
  auto to_coords = [&](const CMatrix& m) {
    Vec<Rational> v(dim);
    for (size_t i = 0; i < 3; ++i) {
      v[i] = m[i][i][0];
      for (size_t k = 1; k < n; ++k)
        if (!m[i][i][k].is_zero()) throw AlgebraError("h3: non-scalar diagonal entry");
    }
    for (size_t i = 0; i < 3; ++i) {
      const auto [r, s] = pos[i];
      for (size_t k = 0; k < n; ++k) v[3 + i * n + k] = m[r][s][k];
      if (m[s][r] != scaled(sign_of(i), c.conj(m[r][s]))) throw AlgebraError("h3: product left the hermitian space");
    }
    return v;
  };

  std::vector<std::string> labels{"E1", "E2", "E3"};
  for (size_t i = 0; i < 3; ++i)
    for (size_t k = 0; k < n; ++k) labels.push_back("iota" + std::to_string(i + 1) + "(" + c.alg().label(k) + ")");
  StructAlgebra<Rational> alg(labels);
  std::vector<CMatrix> mats;
  for (size_t b = 0; b < dim; ++b) mats.push_back(to_matrix(b));
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = a; b < dim; ++b) {
      CMatrix xy = detail::cmatrix_mul(c, mats[a], mats[b]);
      CMatrix yx = detail::cmatrix_mul(c, mats[b], mats[a]);
      CMatrix s = detail::cmatrix_zero(n);
      for (size_t p = 0; p < 3; ++p)
        for (size_t q = 0; q < 3; ++q) s[p][q] = scaled(Rational(1, 2), xy[p][q] + yx[p][q]);
      const Vec<Rational> v = to_coords(s);
      alg.set_product(a, b, v);
      alg.set_product(b, a, v);
    }

  Vec<Rational> unit(dim), trace(dim);
  for (size_t i = 0; i < 3; ++i) {
    unit[i] = Rational(1);
    trace[i] = Rational(1, 3);
  }
  std::vector<Vec<Rational>> traceless;
  traceless.push_back(unit_vector<Rational>(dim, 0) - unit_vector<Rational>(dim, 1));
  traceless.push_back(unit_vector<Rational>(dim, 1) - unit_vector<Rational>(dim, 2));
  for (size_t b = 3; b < dim; ++b) traceless.push_back(unit_vector<Rational>(dim, b));

  JordanAlgebra j("H3(" + c.name() + "," + gamma_str(gamma) + ")", std::move(alg), unit, trace, traceless);
  j.gamma_ = gamma;
  j.coeffs_ = c;
  return j;
}

/// Mat3(R) with the symmetrized product, basis E_pq in row-major order.
inline JordanAlgebra m3r() {
  std::vector<std::string> labels;
  for (size_t p = 1; p <= 3; ++p)
    for (size_t q = 1; q <= 3; ++q) labels.push_back("E" + std::to_string(p) + std::to_string(q));
  StructAlgebra<Rational> alg(labels);
  auto idx = [](size_t p, size_t q) { return 3 * p + q; };
  for (size_t p = 0; p < 3; ++p)
    for (size_t q = 0; q < 3; ++q)
      for (size_t r = 0; r < 3; ++r)
        for (size_t s = 0; s < 3; ++s) {
          // E_pq E_rs = delta_qr E_ps
          if (q == r) alg.add_entry(idx(p, q), idx(r, s), idx(p, s), Rational(1, 2));
          if (s == p) alg.add_entry(idx(p, q), idx(r, s), idx(r, q), Rational(1, 2));
        }
  Vec<Rational> unit(9), trace(9);
  for (size_t p = 0; p < 3; ++p) {
    unit[idx(p, p)] = Rational(1);
    trace[idx(p, p)] = Rational(1, 3);
  }
  std::vector<Vec<Rational>> traceless;
  traceless.push_back(unit_vector<Rational>(9, idx(0, 0)) - unit_vector<Rational>(9, idx(1, 1)));
  traceless.push_back(unit_vector<Rational>(9, idx(1, 1)) - unit_vector<Rational>(9, idx(2, 2)));
  for (size_t p = 0; p < 3; ++p)
    for (size_t q = 0; q < 3; ++q)
      if (p != q) traceless.push_back(unit_vector<Rational>(9, idx(p, q)));
  return JordanAlgebra("M3(R)+", std::move(alg), unit, trace, traceless);
}

/// The Jordan identity (x^2 y) x = x^2 (y x), checked in its fully
/// linearized form sum_perm ((x1 x2) y) x3 - (x1 x2)(y x3) = 0 on basis
/// vectors (equivalent in characteristic zero).
inline bool satisfies_jordan_identity(const StructAlgebra<Rational>& a) {
  const size_t n = a.dim();
  auto basis = [&](size_t i) { return Terms<Rational>{{static_cast<uint32_t>(i), Rational(1)}}; };
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (size_t y = 0; y < n; ++y)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j)
        for (size_t k = j; k < n; ++k) {
          const std::array<size_t, 3> t{i, j, k};
          std::map<uint32_t, Rational> acc;
          for (const auto& p : perms) {
            const auto x12 = a.product(t[p[0]], t[p[1]]);
            for (const auto& [m, c] : a.multiply_terms(a.multiply_terms(x12, basis(y)), basis(t[p[2]])))
              acc[m] += c;
            for (const auto& [m, c] : a.multiply_terms(x12, a.product(y, t[p[2]]))) acc[m] -= c;
          }
          for (const auto& [m, c] : acc)
            if (!c.is_zero()) return false;
        }
  return true;
}

/// Z2^3 grading of H3(O, gamma) induced from the octonions: E_i and
/// iota_i(1) have degree 0, iota_i(b) has the degree of b.
inline GradedDecomposition<Rational> jordan_z23_grading(const JordanAlgebra& j) {
  GradedDecomposition<Rational> g(FinAbGroup::z2_power(3), j.dim());
  for (size_t i = 0; i < 3; ++i) g.add({0, 0, 0}, j.basis_vector(i));
  for (size_t i = 1; i <= 3; ++i)
    for (size_t k = 0; k < 8; ++k) g.add(octonion_degrees()[k], j.basis_vector(j.iota_index(i, k)));
  return g;
}

/// Z2^2 grading: E_i in (0,0), iota1 in (0,1), iota2 in (1,0), iota3 in (1,1).
inline GradedDecomposition<Rational> jordan_z22_grading(const JordanAlgebra& j) {
  const size_t n = j.coefficients()->dim();
  GradedDecomposition<Rational> g(FinAbGroup::z2_power(2), j.dim());
  const std::array<Degree, 3> deg{{{0, 1}, {1, 0}, {1, 1}}};
  for (size_t i = 0; i < 3; ++i) g.add({0, 0}, j.basis_vector(i));
  for (size_t i = 1; i <= 3; ++i)
    for (size_t k = 0; k < n; ++k) g.add(deg[i - 1], j.basis_vector(j.iota_index(i, k)));
  return g;
}

/// The operator 4 [R_{iota1(1)}, R_{E2}].
inline Matrix<Rational> jordan_z_operator(const JordanAlgebra& j) {
  return Rational(4) * j.inner_der(j.iota(1, j.coefficients()->unit()), j.e(2));
}

/// Z grading by the integer eigenspaces of 4 [R_{iota1(1)}, R_{E2}].
inline GradedDecomposition<Rational> jordan_z_grading(const JordanAlgebra& j) {
  return integer_eigen_grading(jordan_z_operator(j), -2, 2);
}

/// Z^2 grading of Mat3(R)+: deg E_pq = g_q - g_p with g1 = 0, g2 = (1,0), g3 = (0,1).
inline GradedDecomposition<Rational> m3r_z2_grading(const JordanAlgebra& m) {
  const std::array<std::array<int64_t, 2>, 3> gs{{{0, 0}, {1, 0}, {0, 1}}};
  GradedDecomposition<Rational> g(FinAbGroup({0, 0}), 9);
  for (size_t p = 0; p < 3; ++p)
    for (size_t q = 0; q < 3; ++q)
      g.add({gs[q][0] - gs[p][0], gs[q][1] - gs[p][1]}, m.basis_vector(3 * p + q));
  return g;
}

/// nu on H3(O, gamma): identity on H3(H, gamma), -1 on the entries in H l.
inline Matrix<Rational> nu_automorphism(const JordanAlgebra& j) {
  Matrix<Rational> m = Matrix<Rational>::identity(j.dim());
  for (size_t i = 1; i <= 3; ++i)
    for (size_t k = 4; k < 8; ++k) m(j.iota_index(i, k), j.iota_index(i, k)) = Rational(-1);
  return m;
}

/// phi: H3(RR, I) -> Mat3(R)+. With a = alpha (1+u)/2 + beta (1-u)/2,
/// iota1(a) goes to alpha E23 + beta E32 and cyclically.
inline Matrix<Rational> h3rr_to_m3r() {
  Matrix<Rational> phi(9, 9);
  auto idx = [](size_t p, size_t q) { return 3 * p + q; };
  for (size_t i = 0; i < 3; ++i) phi(idx(i, i), i) = Rational(1);
  const std::array<std::pair<size_t, size_t>, 3> pos{{{1, 2}, {2, 0}, {0, 1}}};
  for (size_t i = 0; i < 3; ++i) {
    const auto [r, s] = pos[i];
    // iota_i(1): alpha = beta = 1; iota_i(u): alpha = 1, beta = -1.
    phi(idx(r, s), 3 + 2 * i) = Rational(1);
    phi(idx(s, r), 3 + 2 * i) = Rational(1);
    phi(idx(r, s), 4 + 2 * i) = Rational(1);
    phi(idx(s, r), 4 + 2 * i) = Rational(-1);
  }
  return phi;
}

/// phi(x.y) = phi(x).phi(y) on all basis pairs, phi invertible.
inline bool is_isomorphism(const StructAlgebra<Rational>& a, const StructAlgebra<Rational>& b,
                           const Matrix<Rational>& phi) {
  if (a.dim() != b.dim() || rank(phi) != a.dim()) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t k = 0; k < a.dim(); ++k)
      if (phi.apply(a.multiply(a.basis_vector(i), a.basis_vector(k))) != b.multiply(phi.col(i), phi.col(k)))
        return false;
  return true;
}

}  // namespace e6r
