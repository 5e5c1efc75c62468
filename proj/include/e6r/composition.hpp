/**
 * @file composition.hpp
 * @brief The real Hurwitz algebras RR, C, H, M2R, O and Os, built by
 *        Cayley-Dickson doubling, with norm, trace, conjugation, the
 *        derivations d_{a,b} and the Z2^3 grading of the octonions.
 *
 * Doubling uses (a + b l)(c + d l) = (ac + mu d^ b) + (da + b c^) l, where ^ is
 * the conjugation of the smaller algebra and mu = l^2. For mu = -1 this is
 *   q1 (q2 l) = (q2 q1) l,  (q1 l)(q2 l) = -q2^ q1,  (q2 l) q1 = (q2 q1^) l.
 */
#pragma once

#include <string>
#include <vector>

#include "e6r/algebra.hpp"
#include "e6r/grading.hpp"

namespace e6r {

/// Unital algebra with a multiplicative quadratic form. Every basis element
/// other than the unit (index 0) has trace zero and the basis is orthogonal
/// for the norm, whose Gram diagonal is norm_diag.
class CompositionAlgebra {
 public:
  CompositionAlgebra() = default;
  CompositionAlgebra(std::string name, StructAlgebra<Rational> alg, Vec<Rational> norm_diag)
      : name_(std::move(name)), alg_(std::move(alg)), norm_diag_(std::move(norm_diag)) {}

  const std::string& name() const { return name_; }
  const StructAlgebra<Rational>& alg() const { return alg_; }
  size_t dim() const { return alg_.dim(); }
  const Vec<Rational>& norm_diag() const { return norm_diag_; }
  size_t unit_idx() const { return 0; }
  Vec<Rational> unit() const { return unit_vector<Rational>(dim(), 0); }
  Vec<Rational> basis_vector(size_t i) const { return unit_vector<Rational>(dim(), i); }

  Vec<Rational> mul(const Vec<Rational>& x, const Vec<Rational>& y) const { return alg_.multiply(x, y); }

  /// Polar form n(x, y) with n(x, x) = n(x).
  Rational norm(const Vec<Rational>& x, const Vec<Rational>& y) const {
    Rational s;
    for (size_t i = 0; i < dim(); ++i)
      if (!x[i].is_zero() && !y[i].is_zero()) s += norm_diag_[i] * x[i] * y[i];
    return s;
  }
  Rational norm(const Vec<Rational>& x) const { return norm(x, x); }
  Matrix<Rational> norm_gram() const {
    Matrix<Rational> g(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) g(i, i) = norm_diag_[i];
    return g;
  }

  /// t(x) = 2 n(x, 1).
  Rational trace(const Vec<Rational>& x) const { return Rational(2) * norm(x, unit()); }

  Vec<Rational> conj(const Vec<Rational>& x) const {
    Vec<Rational> c = scaled(Rational(-1), x);
    c[0] += trace(x);
    return c;
  }

  /// Basis of C0 = ker t: the non-unit basis vectors.
  std::vector<Vec<Rational>> traceless_basis() const {
    std::vector<Vec<Rational>> b;
    for (size_t i = 1; i < dim(); ++i) b.push_back(basis_vector(i));
    return b;
  }

  Matrix<Rational> l_op(const Vec<Rational>& a) const { return alg_.left_mult(a); }
  Matrix<Rational> r_op(const Vec<Rational>& a) const { return alg_.right_mult(a); }

  /// d_{a,b} = [l_a, l_b] + [l_a, r_b] + [r_a, r_b].
  Matrix<Rational> d_ab(const Vec<Rational>& a, const Vec<Rational>& b) const {
    const auto la = l_op(a), lb = l_op(b), ra = r_op(a), rb = r_op(b);
    return commutator(la, lb) + commutator(la, rb) + commutator(ra, rb);
  }

 private:
  std::string name_;
  StructAlgebra<Rational> alg_;
  Vec<Rational> norm_diag_;
};

namespace detail {

inline CompositionAlgebra reals() {
  StructAlgebra<Rational> a({"1"});
  a.add_entry(0, 0, 0, Rational(1));
  return CompositionAlgebra("R", a, {Rational(1)});
}

/// Cayley-Dickson double of `base` with l^2 = mu.
inline CompositionAlgebra double_up(const CompositionAlgebra& base, const Rational& mu, std::string name,
                                    std::vector<std::string> labels) {
  const size_t n = base.dim();
  auto conj_sign = [](size_t p) { return p == 0 ? Rational(1) : Rational(-1); };
  StructAlgebra<Rational> a(std::move(labels));
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      // (e_p, 0)(e_q, 0) = (e_p e_q, 0)
      for (const auto& [k, c] : base.alg().product(p, q)) a.add_entry(p, q, k, c);
      // (e_p, 0)(0, e_q) = (0, e_q e_p)
      for (const auto& [k, c] : base.alg().product(q, p)) a.add_entry(p, n + q, n + k, c);
      // (0, e_p)(e_q, 0) = (0, e_p e_q^)
      for (const auto& [k, c] : base.alg().product(p, q)) a.add_entry(n + p, q, n + k, c * conj_sign(q));
      // (0, e_p)(0, e_q) = (mu e_q^ e_p, 0)
      for (const auto& [k, c] : base.alg().product(q, p)) a.add_entry(n + p, n + q, k, mu * c * conj_sign(q));
    }
  Vec<Rational> nd = base.norm_diag();
  for (size_t p = 0; p < n; ++p) nd.push_back(-mu * base.norm_diag()[p]);
  return CompositionAlgebra(std::move(name), std::move(a), std::move(nd));
}

}  // namespace detail

class UnknownAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One of "RR", "C", "H", "M2R", "O", "Os".
inline CompositionAlgebra hurwitz(const std::string& name) {
  using detail::double_up;
  const auto r = detail::reals();
  if (name == "RR") return double_up(r, Rational(1), "RR", {"1", "u"});
  const auto c = double_up(r, Rational(-1), "C", {"1", "i"});
  if (name == "C") return c;
  const auto h = double_up(c, Rational(-1), "H", {"1", "i", "j", "k"});
  if (name == "H") return h;
  if (name == "O") return double_up(h, Rational(-1), "O", {"1", "i", "j", "k", "l", "il", "jl", "kl"});
  const auto m = double_up(c, Rational(1), "M2R", {"1", "i", "j", "k"});
  if (name == "M2R") return m;
  if (name == "Os") return double_up(m, Rational(-1), "Os", {"1", "i", "j", "k", "l", "il", "jl", "kl"});
  throw UnknownAlgebra("unknown Hurwitz algebra: " + name);
}

inline const std::vector<std::string>& hurwitz_names() {
  static const std::vector<std::string> names{"RR", "C", "H", "M2R", "O", "Os"};
  return names;
}

/// The element (a, b) of R+R in the basis {1, u}: (a, b) = a(1+u)/2 + b(1-u)/2.
inline Vec<Rational> rr_element(const Rational& a, const Rational& b) {
  return {(a + b) * Rational(1, 2), (a - b) * Rational(1, 2)};
}

/// Degree of each octonion basis element in Z2^3: i, j, l generate.
inline const std::vector<Degree>& octonion_degrees() {
  static const std::vector<Degree> d{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                     {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  return d;
}

/// Z2^3 grading of O (or Os) with one basis line per degree.
inline GradedDecomposition<Rational> octonion_z23_grading(const CompositionAlgebra& o) {
  if (o.dim() != 8) throw GradingError("octonion_z23_grading: needs an 8-dimensional algebra");
  GradedDecomposition<Rational> g(FinAbGroup::z2_power(3), 8);
  for (size_t i = 0; i < 8; ++i) g.add(octonion_degrees()[i], o.basis_vector(i));
  return g;
}

/// Z2 grading of R+R: 1 even, u odd.
inline GradedDecomposition<Rational> rr_z2_grading(const CompositionAlgebra& rr) {
  GradedDecomposition<Rational> g(FinAbGroup::z2_power(1), 2);
  g.add({0}, rr.basis_vector(0));
  g.add({1}, rr.basis_vector(1));
  return g;
}

/// The trivial grading by the trivial group.
template <class S>
GradedDecomposition<S> trivial_grading(size_t dim) {
  GradedDecomposition<S> g(FinAbGroup(), dim);
  for (size_t i = 0; i < dim; ++i) g.add(Degree{}, unit_vector<S>(dim, i));
  return g;
}

}  // namespace e6r
