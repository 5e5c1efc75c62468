/**
 * @file sp8.hpp
 * @brief e6 as sp8 + ker c, with c: Lambda^4 Q^8 -> Lambda^2 Q^8 the
 *        contraction by the symplectic form C, the grading matrices
 *        A1..A4, the Z4 x Z2^4 grading and the conjugated real form.
 *
 * The odd bracket [u, v] is the element X of sp8 with
 *   tr(X x) = lambda * w8(x.u, v)  for all x in sp8,
 * where w8 reads off the v1^...^v8 coefficient of a wedge product.
 */
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <vector>

#include "e6r/algebra.hpp"
#include "e6r/grading.hpp"

namespace e6r {

using QI = GaussRational;

/// C = [[0, I4], [-I4, 0]].
inline Matrix<Rational> symplectic_form() {
  Matrix<Rational> c(8, 8);
  for (size_t i = 0; i < 4; ++i) {
    c(i, i + 4) = Rational(1);
    c(i + 4, i) = Rational(-1);
  }
  return c;
}

/// A1..A4 over Q(i).
inline std::array<Matrix<QI>, 4> grading_matrices() {
  const QI i = QI::i();
  std::array<Matrix<QI>, 4> a{Matrix<QI>(8, 8), Matrix<QI>(8, 8), Matrix<QI>(8, 8), Matrix<QI>(8, 8)};
  // A1 = i [[0,0,I2,0],[0,0,0,s1],[I2,0,0,0],[0,s1,0,0]].
  for (size_t r = 0; r < 2; ++r) {
    a[0](r, r + 4) = i;
    a[0](r + 4, r) = i;
  }
  a[0](2, 7) = i;
  a[0](3, 6) = i;
  a[0](6, 3) = i;
  a[0](7, 2) = i;
  for (size_t r = 0; r < 8; ++r) a[1](r, r) = r < 4 ? i : -i;
  for (size_t b = 0; b < 4; ++b) {
    a[2](2 * b, 2 * b + 1) = QI(1);
    a[2](2 * b + 1, 2 * b) = QI(1);
  }
  const std::array<QI, 8> d{QI(1), QI(-1), -i, i, QI(1), QI(-1), i, -i};
  for (size_t r = 0; r < 8; ++r) a[3](r, r) = d[r];
  return a;
}

namespace wedge {

/// Subsets of {0..7} of size k as bitmasks, in lexicographic order of index tuples.
inline const std::vector<unsigned>& monomials(unsigned k) {
  static std::array<std::vector<unsigned>, 9> cache;
  auto& m = cache.at(k);
  if (m.empty() && k <= 8) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (cur.size() == k) {
        tuples.push_back(cur);
        return;
      }
      for (int v = start; v < 8; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    for (const auto& t : tuples) {
      unsigned mask = 0;
      for (int v : t) mask |= 1u << v;
      m.push_back(mask);
    }
  }
  return m;
}

inline size_t index_of(unsigned mask) {
  static std::array<int, 256> idx = [] {
    std::array<int, 256> a{};
    a.fill(-1);
    for (unsigned k = 0; k <= 8; ++k) {
      const auto& m = monomials(k);
      for (size_t p = 0; p < m.size(); ++p) a[m[p]] = static_cast<int>(p);
    }
    return a;
  }();
  return static_cast<size_t>(idx.at(mask));
}

inline std::vector<int> indices(unsigned mask) {
  std::vector<int> v;
  for (int b = 0; b < 8; ++b)
    if (mask >> b & 1u) v.push_back(b);
  return v;
}

/// Sign of the permutation sorting a sequence of distinct indices.
inline int sort_sign(std::vector<int> s) {
  int sign = 1;
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) sign = -sign;
  return sign;
}

}  // namespace wedge

/// Matrix of A^4 = A (x) A (x) A (x) A on Lambda^4: entry (J, I) = det A[J, I].
template <class S>
Matrix<S> wedge4_action(const Matrix<S>& a) {
  const auto& mon = wedge::monomials(4);
  Matrix<S> out(70, 70);
  static const std::vector<std::pair<std::array<int, 4>, int>> perms = [] {
    std::vector<std::pair<std::array<int, 4>, int>> p;
    std::array<int, 4> q{0, 1, 2, 3};
    do p.push_back({q, wedge::sort_sign({q[0], q[1], q[2], q[3]})});
    while (std::next_permutation(q.begin(), q.end()));
    return p;
  }();
  for (size_t ci = 0; ci < 70; ++ci) {
    const auto cols = wedge::indices(mon[ci]);
    for (size_t ri = 0; ri < 70; ++ri) {
      const auto rows = wedge::indices(mon[ri]);
      S det;
      for (const auto& [q, sg] : perms) {
        S t = a(rows[0], cols[q[0]]);
        if (is_zero(t)) continue;
        for (size_t k = 1; k < 4 && !is_zero(t); ++k) t *= a(rows[k], cols[q[k]]);
        if (is_zero(t)) continue;
        if (sg > 0) det += t;
        else det -= t;
      }
      out(ri, ci) = det;
    }
  }
  return out;
}

/// Matrix of the derivation action of x in gl8 on Lambda^4.
template <class S>
Matrix<S> wedge4_derivation(const Matrix<S>& x) {
  const auto& mon = wedge::monomials(4);
  Matrix<S> out(70, 70);
  for (size_t ci = 0; ci < 70; ++ci) {
    const auto idx = wedge::indices(mon[ci]);
    for (size_t k = 0; k < 4; ++k)
      for (int r = 0; r < 8; ++r) {
        const S& coef = x(r, idx[k]);
        if (is_zero(coef)) continue;
        if (r != idx[k] && (mon[ci] >> r & 1u)) continue;
        std::vector<int> s = idx;
        s[k] = r;
        unsigned mask = 0;
        for (int v : s) mask |= 1u << v;
        const size_t ri = wedge::index_of(mask);
        if (wedge::sort_sign(s) > 0) out(ri, ci) += coef;
        else out(ri, ci) -= coef;
      }
  }
  return out;
}

/// The 28 x 70 matrix of c(v_{i1}^v_{i2}^v_{i3}^v_{i4}) =
///   sum over sigma with s(1)<s(2), s(3)<s(4) of sgn(sigma) (v_s1^t C v_s2) v_s3^v_s4.
inline Matrix<Rational> contraction_matrix() {
  const auto c = symplectic_form();
  const auto& mon = wedge::monomials(4);
  Matrix<Rational> out(28, 70);
  const std::array<std::array<int, 4>, 6> splits{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2},
                                                   {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}}};
  for (size_t ci = 0; ci < 70; ++ci) {
    const auto idx = wedge::indices(mon[ci]);
    for (const auto& s : splits) {
      const Rational& pair = c(idx[s[0]], idx[s[1]]);
      if (pair.is_zero()) continue;
      const int sign = wedge::sort_sign({s[0], s[1], s[2], s[3]});
      const size_t ri = wedge::index_of((1u << idx[s[2]]) | (1u << idx[s[3]]));
      out(ri, ci) += sign > 0 ? pair : -pair;
    }
  }
  return out;
}

/// w8(v_I, v_J): the coefficient of v1^...^v8 in v_I ^ v_J.
inline Matrix<Rational> wedge8_pairing() {
  const auto& mon = wedge::monomials(4);
  Matrix<Rational> w(70, 70);
  for (size_t p = 0; p < 70; ++p)
    for (size_t q = 0; q < 70; ++q) {
      if (mon[p] & mon[q]) continue;
      std::vector<int> s = wedge::indices(mon[p]);
      for (int v : wedge::indices(mon[q])) s.push_back(v);
      w(p, q) = Rational(wedge::sort_sign(s));
    }
  return w;
}

/// Standard basis of sp8 = {x : xC + Cx^t = 0} in echelon form.
inline std::vector<Matrix<Rational>> sp8_standard_basis() {
  const auto c = symplectic_form();
  // Unknown x(r, s) at 8 r + s; equation (r, s) of xC + Cx^t.
  Matrix<Rational> eq(64, 64);
  for (size_t r = 0; r < 8; ++r)
    for (size_t s = 0; s < 8; ++s)
      for (size_t k = 0; k < 8; ++k) {
        if (!c(k, s).is_zero()) eq(8 * r + s, 8 * r + k) += c(k, s);    // x(r,k) C(k,s)
        if (!c(r, k).is_zero()) eq(8 * r + s, 8 * s + k) += c(r, k);    // C(r,k) x(s,k)
      }
  std::vector<Matrix<Rational>> out;
  for (const auto& v : kernel_basis(eq)) out.push_back(Matrix<Rational>::from_flat(v, 8));
  return out;
}

namespace detail {

/// Q(i) eigen-decomposition under A4, A1, A2, A3 (in that coordinate order)
/// of the span of `start` in a space where op[k] represents A_k; every
/// component must have a real echelon basis.
inline GradedDecomposition<Rational> real_eigen_split(const FinAbGroup& group, const std::vector<Matrix<QI>>& ops,
                                                      const std::vector<std::vector<QI>>& evs,
                                                      const std::vector<Vec<Rational>>& start, size_t ambient) {
  std::vector<Vec<QI>> lifted;
  for (const auto& v : start) lifted.push_back(lift(v));
  const auto g = eigen_grading<QI>(group, ops, evs, lifted);
  GradedDecomposition<Rational> out(group, ambient);
  for (const auto& [d, vs] : g.components())
    for (const auto& v : vs) {
      Vec<Rational> r(v.size());
      for (size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_real()) throw GradingError("sp8: eigenspace " + degree_str(d) + " has no rational basis");
        r[k] = v[k].re();
      }
      out.add(d, r);
    }
  return out;
}

inline std::vector<std::vector<QI>> a_spectra(size_t n_ops) {
  const QI i = QI::i();
  std::vector<std::vector<QI>> evs{{QI(1), i, QI(-1), -i}};
  for (size_t k = 1; k < n_ops; ++k) evs.push_back({QI(1), QI(-1)});
  return evs;
}

/// X -> A X A^-1 on flattened 8 x 8 matrices.
inline Matrix<QI> conjugation_operator(const Matrix<QI>& a) {
  const Matrix<QI> inv = inverse(a);
  Matrix<QI> m(64, 64);
  for (size_t s = 0; s < 8; ++s)
    for (size_t t = 0; t < 8; ++t) {
      Matrix<QI> e(8, 8);
      e(s, t) = QI(1);
      const auto img = a * e * inv;
      for (size_t r = 0; r < 64; ++r) m(r, 8 * s + t) = img.flat()[r];
    }
  return m;
}

}  // namespace detail

/// The assembled model. Basis: the 36 sp8 matrices (B0) and then the 42
/// four-forms of ker c (B1), both homogeneous for A1..A4.
struct Sp8Model {
  LieAlgebra<Rational> lie;
  std::vector<Matrix<Rational>> even;  // B0
  std::vector<Vec<Rational>> odd;      // B1, length-70 four-forms
  std::vector<Degree> degrees;         // (A4 in Z4, A1, A2, A3, theta) per basis vector
  Rational lambda;

  size_t dim() const { return lie.dim(); }
  Z2Split split() const {
    Z2Split s(dim(), false);
    for (size_t i = 0; i < even.size(); ++i) s[i] = true;
    return s;
  }
  std::vector<Vec<Rational>> even_basis() const {
    std::vector<Vec<Rational>> b;
    for (size_t i = 0; i < even.size(); ++i) b.push_back(unit_vector<Rational>(dim(), i));
    return b;
  }
};

inline FinAbGroup z4_z2_power(size_t k) {
  std::vector<int64_t> m{4};
  for (size_t i = 0; i < k; ++i) m.push_back(2);
  return FinAbGroup(m);
}

/// Operators A4, A1, A2, A3 in the order used for degree coordinates.
inline std::vector<Matrix<QI>> degree_order_matrices() {
  const auto a = grading_matrices();
  return {a[3], a[0], a[1], a[2]};
}

/// Simultaneous eigenbasis of sp8 under Ad A1..A4, as real matrices.
inline GradedDecomposition<Rational> sp8_eigen_grading() {
  std::vector<Matrix<QI>> ops;
  for (const auto& a : degree_order_matrices()) ops.push_back(detail::conjugation_operator(a));
  std::vector<Vec<Rational>> start;
  for (const auto& m : sp8_standard_basis()) start.push_back(m.flat());
  return detail::real_eigen_split(z4_z2_power(3), ops, detail::a_spectra(4), start, 64);
}

/// Simultaneous eigenbasis of ker c under A1..A4 acting on four-forms.
inline GradedDecomposition<Rational> kernel_eigen_grading() {
  std::vector<Matrix<QI>> ops;
  for (const auto& a : degree_order_matrices()) ops.push_back(wedge4_action(a));
  return detail::real_eigen_split(z4_z2_power(3), ops, detail::a_spectra(4), kernel_basis(contraction_matrix()), 70);
}

inline Sp8Model assemble_e6(const Rational& lambda = Rational(1)) {
  Sp8Model m;
  m.lambda = lambda;
  auto push_theta = [](Degree d, int64_t t) {
    d.push_back(t);
    return d;
  };
  const auto g_even = sp8_eigen_grading();
  const auto g_odd = kernel_eigen_grading();
  for (const auto& [d, vs] : g_even.components())
    for (const auto& v : vs) {
      m.even.push_back(Matrix<Rational>::from_flat(v, 8));
      m.degrees.push_back(push_theta(d, 0));
    }
  for (const auto& [d, vs] : g_odd.components())
    for (const auto& v : vs) {
      m.odd.push_back(v);
      m.degrees.push_back(push_theta(d, 1));
    }
  const size_t ne = m.even.size(), no = m.odd.size(), n = ne + no;
  std::vector<Vec<Rational>> even_flat;
  for (const auto& x : m.even) even_flat.push_back(x.flat());
  const Frame<Rational> fe(even_flat, 64);
  const Frame<Rational> fo(m.odd, 70);

  std::vector<std::string> labels;
  for (size_t i = 0; i < ne; ++i) labels.push_back("x" + std::to_string(i));
  for (size_t i = 0; i < no; ++i) labels.push_back("u" + std::to_string(i));
  StructAlgebra<Rational> alg(labels);
  auto set_pair = [&](size_t p, size_t q, const Vec<Rational>& v) {
    alg.set_product(p, q, v);
    alg.set_product(q, p, scaled(Rational(-1), v));
  };
  for (size_t p = 0; p < ne; ++p)
    for (size_t q = p + 1; q < ne; ++q) {
      const auto c = fe.coords(commutator(m.even[p], m.even[q]).flat());
      Vec<Rational> v(n);
      for (size_t k = 0; k < ne; ++k) v[k] = c[k];
      set_pair(p, q, v);
    }
  std::vector<Matrix<Rational>> rho;
  for (const auto& x : m.even) rho.push_back(wedge4_derivation(x));
  for (size_t p = 0; p < ne; ++p)
    for (size_t i = 0; i < no; ++i) {
      auto c = fo.try_coords(rho[p].apply(m.odd[i]));
      if (!c) throw AlgebraError("assemble_e6: ker c is not sp8-stable");
      Vec<Rational> v(n);
      for (size_t k = 0; k < no; ++k) v[ne + k] = (*c)[k];
      set_pair(p, ne + i, v);
    }
  // Odd bracket by trace-form duality.
  Matrix<Rational> gram(ne, ne);
  for (size_t p = 0; p < ne; ++p)
    for (size_t q = 0; q < ne; ++q) gram(p, q) = (m.even[p] * m.even[q]).trace();
  const Matrix<Rational> ginv = inverse(gram);
  const Matrix<Rational> w = wedge8_pairing();
  std::vector<Vec<Rational>> wodd;  // W u_j
  for (const auto& u : m.odd) wodd.push_back(w.apply(u));
  std::vector<std::vector<Vec<Rational>>> xu(ne);  // rho(x_q) u_i
  for (size_t q = 0; q < ne; ++q)
    for (const auto& u : m.odd) xu[q].push_back(rho[q].apply(u));
  for (size_t i = 0; i < no; ++i)
    for (size_t j = i + 1; j < no; ++j) {
      Vec<Rational> rhs(ne);
      for (size_t q = 0; q < ne; ++q) rhs[q] = lambda * dot(xu[q][i], wodd[j]);
      const auto x = ginv.apply(rhs);
      Vec<Rational> v(n);
      for (size_t k = 0; k < ne; ++k) v[k] = x[k];
      set_pair(ne + i, ne + j, v);
    }
  alg.provenance()["construction"] = "sp8+ker c";
  alg.provenance()["lambda"] = lambda.str();
  m.lie = LieAlgebra<Rational>(std::move(alg));
  return m;
}

/// A^bullet on the model: Ad A on sp8 and A^4 on ker c, in the model basis.
inline Matrix<QI> bullet(const Sp8Model& m, const Matrix<QI>& a) {
  const size_t ne = m.even.size(), no = m.odd.size();
  std::vector<Vec<QI>> ef, of;
  for (const auto& x : m.even) ef.push_back(lift(x.flat()));
  for (const auto& u : m.odd) of.push_back(lift(u));
  const Frame<QI> fe(ef, 64), fo(of, 70);
  const Matrix<QI> inv = inverse(a);
  Matrix<QI> out(ne + no, ne + no);
  for (size_t p = 0; p < ne; ++p) {
    const auto c = fe.coords((a * lift(m.even[p]) * inv).flat());
    for (size_t k = 0; k < ne; ++k) out(k, p) = c[k];
  }
  const auto w4 = wedge4_action(a);
  for (size_t i = 0; i < no; ++i) {
    const auto c = fo.coords(w4.apply(of[i]));
    for (size_t k = 0; k < no; ++k) out(ne + k, ne + i) = c[k];
  }
  return out;
}

/// Z4 x Z2^4 grading of the model: simultaneous eigenspaces over Q(i) of
/// A4., A1., A2., A3. and theta, realized by rational bases.
inline GradedDecomposition<Rational> gamma11_grading(const Sp8Model& m) {
  std::vector<Matrix<QI>> ops;
  for (const auto& a : degree_order_matrices()) ops.push_back(bullet(m, a));
  Matrix<QI> theta = Matrix<QI>::identity(m.dim());
  for (size_t i = m.even.size(); i < m.dim(); ++i) theta(i, i) = QI(-1);
  ops.push_back(theta);
  std::vector<Vec<Rational>> start;
  for (size_t i = 0; i < m.dim(); ++i) start.push_back(unit_vector<Rational>(m.dim(), i));
  return detail::real_eigen_split(z4_z2_power(4), ops, detail::a_spectra(5), start, m.dim());
}

/// Real signed permutation A1 A2 A3.
inline Matrix<Rational> a123() {
  const auto a = grading_matrices();
  const Matrix<QI> p = a[0] * a[1] * a[2];
  Matrix<Rational> r(8, 8);
  for (size_t s = 0; s < 8; ++s)
    for (size_t t = 0; t < 8; ++t) {
      if (!p(s, t).is_real()) throw AlgebraError("a123: product is not real");
      r(s, t) = p(s, t).re();
    }
  return r;
}

struct ConjugatedForm {
  LieAlgebra<Rational> lie;  // L' in the model basis, odd x odd (for phi) brackets negated
  Z2Split phi_even;          // +1 eigenvectors of phi = (A1 A2 A3).
  bool phi_is_automorphism = false;
  long even_signature = 0;    // Killing form of L' restricted to its sp8 part
  long full_signature = 0;    // L'
  long twisted_signature = 0; // L' with [ker c, ker c] negated
  size_t fix_ad_c_a123 = 0;   // dim fix Ad(C A1 A2 A3) on sp8
};

/// L' = {x : sigma phi (x) = x}: the phi-even part plus i times the phi-odd
/// part, written in the model basis (the i factors show up as the sign
/// change of brackets between two phi-odd vectors).
inline ConjugatedForm conjugated_form(const Sp8Model& m) {
  ConjugatedForm out;
  const Matrix<QI> phi = bullet(m, lift(a123()));
  Matrix<Rational> phir(m.dim(), m.dim());
  out.phi_even.assign(m.dim(), false);
  for (size_t r = 0; r < m.dim(); ++r)
    for (size_t c = 0; c < m.dim(); ++c) {
      if (!phi(r, c).is_real()) throw AlgebraError("conjugated_form: phi is not real");
      phir(r, c) = phi(r, c).re();
      if (r != c && !phir(r, c).is_zero()) throw AlgebraError("conjugated_form: basis is not phi-homogeneous");
    }
  for (size_t r = 0; r < m.dim(); ++r) {
    if (phir(r, r) == Rational(1)) out.phi_even[r] = true;
    else if (phir(r, r) != Rational(-1)) throw AlgebraError("conjugated_form: phi is not an involution");
  }
  out.phi_is_automorphism = is_automorphism(m.lie.alg(), phir);
  out.lie = twist(m.lie, out.phi_even, Rational(-1));
  const auto k = killing_matrix(out.lie);
  out.full_signature = inertia(k).signature();
  out.even_signature = inertia(restrict_form(k, m.even_basis())).signature();
  out.twisted_signature = killing_signature(twist(out.lie, m.split(), Rational(-1)));
  // Ad(C A1 A2 A3) on sp8.
  const Matrix<Rational> g = symplectic_form() * a123();
  const Matrix<Rational> ginv = inverse(g);
  std::vector<Vec<Rational>> ef;
  for (const auto& x : m.even) ef.push_back(x.flat());
  const Frame<Rational> fe(ef, 64);
  Matrix<Rational> ad(m.even.size(), m.even.size());
  for (size_t p = 0; p < m.even.size(); ++p) {
    const auto c = fe.coords((g * m.even[p] * ginv).flat());
    for (size_t k2 = 0; k2 < c.size(); ++k2) ad(k2, p) = c[k2];
  }
  out.fix_ad_c_a123 = fixed_subspace(ad).dim();
  return out;
}

}  // namespace e6r
