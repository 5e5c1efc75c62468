/**
 * @file grading.hpp
 * @brief Finitely generated abelian groups and group gradings of algebras:
 *        verification, type vectors, coarsening, products, gradings induced on
 *        derivation algebras and eigenspace gradings of commuting operators.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "e6r/algebra.hpp"

namespace e6r {

class GradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Degree = std::vector<int64_t>;

/// Z^r x Z_{m1} x ... x Z_{ms}, stored as one modulus per coordinate (0 = Z).
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int64_t> moduli) : moduli_(std::move(moduli)) {
    for (auto m : moduli_)
      if (m < 0 || m == 1) throw GradingError("FinAbGroup: moduli must be 0 (free) or >= 2");
  }
  static FinAbGroup make(size_t free_rank, const std::vector<int64_t>& torsion) {
    std::vector<int64_t> m(free_rank, 0);
    m.insert(m.end(), torsion.begin(), torsion.end());
    return FinAbGroup(m);
  }
  static FinAbGroup z2_power(size_t n) { return FinAbGroup(std::vector<int64_t>(n, 2)); }

  size_t rank() const { return moduli_.size(); }
  const std::vector<int64_t>& moduli() const { return moduli_; }
  size_t free_rank() const { return static_cast<size_t>(std::count(moduli_.begin(), moduli_.end(), 0)); }
  std::vector<int64_t> torsion() const {
    std::vector<int64_t> t;
    for (auto m : moduli_)
      if (m) t.push_back(m);
    return t;
  }
  bool is_finite() const { return free_rank() == 0; }
  /// Product of the torsion moduli (the group order when finite).
  int64_t torsion_order() const {
    int64_t n = 1;
    for (auto m : moduli_)
      if (m) n *= m;
    return n;
  }

  Degree zero() const { return Degree(rank(), 0); }

  Degree normalize(Degree d) const {
    if (d.size() != rank()) throw GradingError("degree has the wrong length");
    for (size_t i = 0; i < d.size(); ++i)
      if (moduli_[i]) d[i] = ((d[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
    return d;
  }
  Degree add(const Degree& a, const Degree& b) const {
    Degree c(rank());
    for (size_t i = 0; i < rank(); ++i) c[i] = a[i] + b[i];
    return normalize(c);
  }
  Degree neg(const Degree& a) const {
    Degree c(rank());
    for (size_t i = 0; i < rank(); ++i) c[i] = -a[i];
    return normalize(c);
  }
  Degree sub(const Degree& a, const Degree& b) const { return add(a, neg(b)); }
  bool is_zero(const Degree& a) const { return a == zero(); }

  /// Order of an element; 0 for elements of infinite order.
  int64_t order(const Degree& a) const {
    int64_t o = 1;
    for (size_t i = 0; i < rank(); ++i) {
      if (a[i] == 0) continue;
      if (!moduli_[i]) return 0;
      const int64_t oi = moduli_[i] / std::gcd(moduli_[i], a[i]);
      o = std::lcm(o, oi);
    }
    return o;
  }
  /// 2g = e, including g = e.
  bool has_order_at_most_two(const Degree& a) const { return is_zero(add(a, a)); }

  /// G x H with coordinates of G first.
  friend FinAbGroup operator*(const FinAbGroup& g, const FinAbGroup& h) {
    std::vector<int64_t> m = g.moduli_;
    m.insert(m.end(), h.moduli_.begin(), h.moduli_.end());
    return FinAbGroup(m);
  }
  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

  /// Permutation putting free coordinates first, then the torsion ones in order.
  std::vector<size_t> canonical_order() const {
    std::vector<size_t> p;
    for (size_t i = 0; i < rank(); ++i)
      if (!moduli_[i]) p.push_back(i);
    for (size_t i = 0; i < rank(); ++i)
      if (moduli_[i]) p.push_back(i);
    return p;
  }

  std::string str() const {
    std::ostringstream os;
    const size_t r = free_rank();
    bool first = true;
    if (r) {
      os << "Z";
      if (r > 1) os << "^" << r;
      first = false;
    }
    std::map<int64_t, int> counts;
    for (auto m : torsion()) counts[m]++;
    for (const auto& [m, c] : counts) {
      if (!first) os << " x ";
      os << "Z" << m;
      if (c > 1) os << "^" << c;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  std::vector<int64_t> moduli_;
};

inline std::string degree_str(const Degree& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

struct ClosureViolation {
  Degree g, h;
  size_t i, j;  // indices of the offending basis vectors within the components
};

struct GradingReport {
  bool direct_sum = false;
  bool closure = false;
  std::vector<ClosureViolation> violations;
  bool ok() const { return direct_sum && closure; }
};

/// A decomposition of S^n into subspaces indexed by group elements. Each
/// component is stored as a list of independent coordinate vectors.
template <class S>
class GradedDecomposition {
 public:
  using Components = std::map<Degree, std::vector<Vec<S>>>;

  GradedDecomposition() = default;
  GradedDecomposition(FinAbGroup group, size_t ambient) : group_(std::move(group)), ambient_(ambient) {}

  const FinAbGroup& group() const { return group_; }
  size_t ambient() const { return ambient_; }
  const Components& components() const { return comps_; }

  void add(const Degree& g, Vec<S> v) {
    if (v.size() != ambient_) throw GradingError("component vector has the wrong length");
    comps_[group_.normalize(g)].push_back(std::move(v));
  }
  void add(const Degree& g, const std::vector<Vec<S>>& vs) {
    for (const auto& v : vs) add(g, v);
  }

  const std::vector<Vec<S>>& component(const Degree& g) const {
    static const std::vector<Vec<S>> empty;
    auto it = comps_.find(group_.normalize(g));
    return it == comps_.end() ? empty : it->second;
  }
  size_t dim(const Degree& g) const { return component(g).size(); }
  size_t e_dim() const { return dim(group_.zero()); }

  std::vector<Degree> support() const {
    std::vector<Degree> s;
    for (const auto& [g, vs] : comps_)
      if (!vs.empty()) s.push_back(g);
    return s;
  }

  size_t total_dim() const {
    size_t n = 0;
    for (const auto& [g, vs] : comps_) n += vs.size();
    return n;
  }

  /// (h1, h2, ...) with hi = number of components of dimension i.
  std::vector<size_t> type_vector() const {
    std::vector<size_t> t;
    for (const auto& [g, vs] : comps_) {
      if (vs.empty()) continue;
      if (t.size() < vs.size()) t.resize(vs.size(), 0);
      t[vs.size() - 1]++;
    }
    return t;
  }

  /// Sum of dims of the components whose degree has order exactly two.
  size_t order_two_dim() const {
    size_t d = 0;
    for (const auto& [g, vs] : comps_)
      if (!group_.is_zero(g) && group_.has_order_at_most_two(g)) d += vs.size();
    return d;
  }

  bool is_direct_sum() const {
    std::vector<Vec<S>> all;
    for (const auto& [g, vs] : comps_) all.insert(all.end(), vs.begin(), vs.end());
    return all.size() == ambient_ && rank_of(all, ambient_) == ambient_;
  }

  /// Direct-sum check plus exhaustive closure A_g A_h in A_{g+h}.
  GradingReport verify(const StructAlgebra<S>& a, size_t max_violations = 32) const {
    GradingReport rep;
    rep.direct_sum = a.dim() == ambient_ && is_direct_sum();
    std::map<Degree, Subspace<S>> spans;
    for (const auto& [g, vs] : comps_) spans.emplace(g, Subspace<S>::span(vs, ambient_));
    for (const auto& [g, xs] : comps_)
      for (const auto& [h, ys] : comps_) {
        const Degree gh = group_.add(g, h);
        auto it = spans.find(gh);
        for (size_t i = 0; i < xs.size(); ++i)
          for (size_t j = 0; j < ys.size(); ++j) {
            Vec<S> p = a.multiply(xs[i], ys[j]);
            const bool inside = (it == spans.end()) ? is_zero_vec(p) : it->second.contains(p);
            if (!inside && rep.violations.size() < max_violations) rep.violations.push_back({g, h, i, j});
          }
      }
    rep.closure = rep.violations.empty();
    return rep;
  }

  /// Image grading under a group homomorphism.
  GradedDecomposition coarsen(const FinAbGroup& target, const std::function<Degree(const Degree&)>& hom) const {
    GradedDecomposition out(target, ambient_);
    for (const auto& [g, vs] : comps_) out.add(hom(g), vs);
    return out;
  }

  /// Reorders degree coordinates: new coordinate k is old coordinate perm[k].
  GradedDecomposition permute_coordinates(const std::vector<size_t>& perm) const {
    std::vector<int64_t> m;
    for (auto p : perm) m.push_back(group_.moduli()[p]);
    auto map = [&](const Degree& g) {
      Degree d;
      for (auto p : perm) d.push_back(g[p]);
      return d;
    };
    return coarsen(FinAbGroup(m), map);
  }

  GradedDecomposition canonical() const { return permute_coordinates(group_.canonical_order()); }

  /// Vectors of all components concatenated in degree order, with the degree of each.
  std::pair<std::vector<Vec<S>>, std::vector<Degree>> adapted_basis() const {
    std::vector<Vec<S>> b;
    std::vector<Degree> d;
    for (const auto& [g, vs] : comps_)
      for (const auto& v : vs) {
        b.push_back(v);
        d.push_back(g);
      }
    return {b, d};
  }

  /// Same grading in another ambient coordinate system: v -> map(v).
  template <class T>
  GradedDecomposition<T> transform(size_t new_ambient, const std::function<Vec<T>(const Vec<S>&)>& map) const {
    GradedDecomposition<T> out(group_, new_ambient);
    for (const auto& [g, vs] : comps_)
      for (const auto& v : vs) out.add(g, map(v));
    return out;
  }

  /// Replaces each component basis by its reduced echelon form.
  GradedDecomposition echelonized() const {
    GradedDecomposition out(group_, ambient_);
    for (const auto& [g, vs] : comps_) out.comps_[g] = Subspace<S>::span(vs, ambient_).basis();
    return out;
  }

 private:
  FinAbGroup group_;
  size_t ambient_ = 0;
  Components comps_;
};

/// Common refinement of two gradings of the same space: degree (g, h) holds
/// A_g intersected with B_h. The pieces must sum to the whole space.
template <class S>
GradedDecomposition<S> intersect_gradings(const GradedDecomposition<S>& a, const GradedDecomposition<S>& b) {
  if (a.ambient() != b.ambient()) throw GradingError("intersect_gradings: ambient mismatch");
  GradedDecomposition<S> out(a.group() * b.group(), a.ambient());
  for (const auto& [g, xs] : a.components()) {
    auto sa = Subspace<S>::span(xs, a.ambient());
    for (const auto& [h, ys] : b.components()) {
      auto c = intersect(sa, Subspace<S>::span(ys, b.ambient()));
      if (c.dim() == 0) continue;
      Degree gh = g;
      gh.insert(gh.end(), h.begin(), h.end());
      out.add(gh, c.basis());
    }
  }
  if (out.total_dim() != a.ambient()) throw GradingError("intersect_gradings: gradings are not compatible");
  return out;
}

/// Simultaneous eigenspace grading of commuting operators. For operator k,
/// eigenvalues[k][v] is the eigenvalue giving coordinate value v of coordinate k.
template <class S>
GradedDecomposition<S> eigen_grading(const FinAbGroup& group, const std::vector<Matrix<S>>& ops,
                                     const std::vector<std::vector<S>>& eigenvalues,
                                     const std::vector<Vec<S>>& start_basis = {}) {
  if (ops.empty()) throw GradingError("eigen_grading: no operators");
  const size_t n = ops[0].rows();
  std::vector<std::pair<Degree, std::vector<Vec<S>>>> pieces;
  {
    std::vector<Vec<S>> b = start_basis;
    if (b.empty())
      for (size_t i = 0; i < n; ++i) b.push_back(unit_vector<S>(n, i));
    pieces.push_back({Degree{}, b});
  }
  for (size_t k = 0; k < ops.size(); ++k) {
    std::vector<std::pair<Degree, std::vector<Vec<S>>>> next;
    for (const auto& [deg, basis] : pieces) {
      size_t found = 0;
      // op applied to the piece basis, expressed in ambient coordinates.
      std::vector<Vec<S>> images;
      for (const auto& v : basis) images.push_back(ops[k].apply(v));
      for (size_t val = 0; val < eigenvalues[k].size(); ++val) {
        const S& lambda = eigenvalues[k][val];
        // columns (op - lambda) b_i; kernel gives coefficient vectors.
        Matrix<S> m(n, basis.size());
        for (size_t i = 0; i < basis.size(); ++i)
          for (size_t r = 0; r < n; ++r) m(r, i) = images[i][r] - lambda * basis[i][r];
        auto ker = kernel_basis(m);
        if (ker.empty()) continue;
        std::vector<Vec<S>> vs;
        for (const auto& c : ker) {
          Vec<S> v(n);
          for (size_t i = 0; i < basis.size(); ++i) axpy(v, c[i], basis[i]);
          vs.push_back(std::move(v));
        }
        found += vs.size();
        Degree d = deg;
        d.push_back(static_cast<int64_t>(val));
        next.push_back({d, Subspace<S>::span(vs, n).basis()});
      }
      if (found != basis.size())
        throw GradingError("eigen_grading: operator " + std::to_string(k) + " is not diagonalizable with the given spectrum");
    }
    pieces = std::move(next);
  }
  GradedDecomposition<S> out(group, n);
  for (auto& [d, vs] : pieces) out.add(d, vs);
  return out;
}

/// Eigenspaces of one operator with integer eigenvalues in [lo, hi], graded by Z.
template <class S>
GradedDecomposition<S> integer_eigen_grading(const Matrix<S>& op, int64_t lo, int64_t hi) {
  std::vector<S> ev;
  for (int64_t v = lo; v <= hi; ++v) ev.push_back(S(v));
  auto g = eigen_grading<S>(FinAbGroup({0}), std::vector<Matrix<S>>{op}, std::vector<std::vector<S>>{ev});
  return g.coarsen(FinAbGroup({0}), [lo](const Degree& d) { return Degree{d[0] + lo}; });
}

/// Grading induced on Der(A): Der(A)_g = {d : d(A_h) in A_{g+h}}. `ders` is a
/// basis of Der(A); the result is in coordinates relative to that basis.
template <class S>
GradedDecomposition<S> induced_on_der(const GradedDecomposition<S>& gamma, const std::vector<Matrix<S>>& ders) {
  const size_t n = gamma.ambient();
  auto [basis, degs] = gamma.adapted_basis();
  if (basis.size() != n) throw GradingError("induced_on_der: grading is not a direct sum");
  const Matrix<S> b = Matrix<S>::from_columns(basis, n);
  const Matrix<S> binv = inverse(b);
  std::vector<Matrix<S>> adapted;
  std::vector<Vec<S>> flat;
  for (const auto& d : ders) {
    adapted.push_back(binv * d * b);
    flat.push_back(adapted.back().flat());
  }
  const Frame<S> frame(flat, n * n);
  // Entry (r, c) of an adapted matrix maps degree degs[c] to degs[r].
  std::map<Degree, std::vector<Vec<S>>> pieces;  // degree -> projected flats
  for (const auto& d : adapted) {
    std::map<Degree, Vec<S>> proj;
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        if (is_zero(d(r, c))) continue;
        const Degree g = gamma.group().sub(degs[r], degs[c]);
        auto& v = proj[g];
        if (v.empty()) v.resize(n * n);
        v[r * n + c] = d(r, c);
      }
    for (auto& [g, v] : proj) pieces[g].push_back(std::move(v));
  }
  GradedDecomposition<S> out(gamma.group(), ders.size());
  for (const auto& [g, vs] : pieces) {
    std::vector<Vec<S>> coords;
    for (const auto& v : vs) {
      auto c = frame.try_coords(v);
      if (!c) throw GradingError("induced_on_der: a homogeneous projection is not a derivation");
      coords.push_back(std::move(*c));
    }
    auto sp = Subspace<S>::span(coords, ders.size());
    if (sp.dim()) out.add(g, sp.basis());
  }
  if (out.total_dim() != ders.size()) throw GradingError("induced_on_der: pieces do not sum to Der(A)");
  return out;
}

/// K(L_g, L_h) = 0 whenever g + h != e. Returns the offending degree pairs.
template <class S>
std::vector<std::pair<Degree, Degree>> orthogonality_violations(const GradedDecomposition<S>& gamma,
                                                                const Matrix<S>& k) {
  std::map<Degree, std::vector<Vec<S>>> kv;
  for (const auto& [g, vs] : gamma.components())
    for (const auto& v : vs) kv[g].push_back(k.apply(v));
  std::vector<std::pair<Degree, Degree>> bad;
  for (const auto& [g, xs] : gamma.components())
    for (const auto& [h, ys] : gamma.components()) {
      if (gamma.group().is_zero(gamma.group().add(g, h))) continue;
      bool ok = true;
      for (const auto& x : xs) {
        for (const auto& y : kv[h])
          if (!is_zero(dot(x, y))) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) bad.push_back({g, h});
    }
  return bad;
}

struct SignatureBound {
  long signature = 0;
  size_t dim_e = 0;
  size_t d = 0;
  bool holds = false;
};

/// |sign - dim L_e| <= sum of dims of the components of order-two degrees.
template <class S>
SignatureBound signature_bound(const GradedDecomposition<S>& gamma, long signature) {
  SignatureBound b;
  b.signature = signature;
  b.dim_e = gamma.e_dim();
  b.d = gamma.order_two_dim();
  b.holds = std::labs(signature - static_cast<long>(b.dim_e)) <= static_cast<long>(b.d);
  return b;
}

/// Orthogonal basis of a symmetric form given by its Gram matrix on a list
/// of vectors; returns combinations (in terms of the list) and their pivots.
inline std::pair<std::vector<Vec<Rational>>, std::vector<Rational>> orthogonalize(const Matrix<Rational>& gram) {
  const size_t k = gram.rows();
  std::vector<Vec<Rational>> vs;
  for (size_t i = 0; i < k; ++i) vs.push_back(unit_vector<Rational>(k, i));
  auto form = [&](const Vec<Rational>& x, const Vec<Rational>& y) { return bilinear(gram, x, y); };
  std::vector<Vec<Rational>> out;
  std::vector<Rational> piv;
  while (!vs.empty()) {
    std::optional<size_t> pick;
    for (size_t i = 0; i < vs.size() && !pick; ++i)
      if (!form(vs[i], vs[i]).is_zero()) pick = i;
    if (!pick) {
      bool merged = false;
      for (size_t i = 0; i < vs.size() && !merged; ++i)
        for (size_t j = i + 1; j < vs.size() && !merged; ++j)
          if (!form(vs[i], vs[j]).is_zero()) {
            vs[i] = vs[i] + vs[j];
            merged = true;
          }
      if (!merged) throw LinalgError("orthogonalize: form is degenerate");
      continue;
    }
    Vec<Rational> w = vs[*pick];
    vs.erase(vs.begin() + static_cast<long>(*pick));
    const Rational ww = form(w, w);
    for (auto& v : vs) {
      const Rational c = form(v, w) / ww;
      if (!c.is_zero()) axpy(v, -c, w);
    }
    out.push_back(std::move(w));
    piv.push_back(ww);
  }
  return {out, piv};
}

struct WittBasis {
  struct Pair {
    Degree g;
    Vec<Rational> u, v;  // K(u, v) = 1
  };
  struct Line {
    Degree g;
    Vec<Rational> z;
    Rational pivot;  // K(z, z)
  };
  std::vector<Pair> pairs;
  std::vector<Line> lines;
  bool gram_ok = false;  // Gram matrix is block diagonal as claimed
  long signature() const {
    long s = 0;
    for (const auto& l : lines) s += l.pivot.sign();
    return s;
  }
};

/// Homogeneous basis adapted to the Killing form: hyperbolic pairs between
/// L_g and L_{-g} for g != -g, and an orthogonal basis of each L_g with 2g = e.
inline WittBasis graded_witt_basis(const GradedDecomposition<Rational>& gamma, const Matrix<Rational>& k) {
  WittBasis w;
  const auto& grp = gamma.group();
  for (const auto& [g, vs] : gamma.components()) {
    const Degree mg = grp.neg(g);
    if (g == mg) {
      auto [cs, piv] = orthogonalize(restrict_form(k, vs));
      for (size_t i = 0; i < cs.size(); ++i) {
        Vec<Rational> z(gamma.ambient());
        for (size_t j = 0; j < vs.size(); ++j) axpy(z, cs[i][j], vs[j]);
        w.lines.push_back({g, std::move(z), piv[i]});
      }
      continue;
    }
    if (mg < g) continue;
    const auto& ws = gamma.component(mg);
    if (ws.size() != vs.size()) throw LinalgError("graded_witt_basis: paired components differ in dimension");
    Matrix<Rational> pair(vs.size(), ws.size());
    for (size_t i = 0; i < vs.size(); ++i) {
      const Vec<Rational> kv = k.apply(vs[i]);
      for (size_t j = 0; j < ws.size(); ++j) pair(i, j) = dot(kv, ws[j]);
    }
    // v_i = sum_j (P^{-1})_{ji} w_j gives K(u_i, v_l) = delta_il.
    const Matrix<Rational> inv = inverse(pair);
    for (size_t i = 0; i < vs.size(); ++i) {
      Vec<Rational> v(gamma.ambient());
      for (size_t j = 0; j < ws.size(); ++j) axpy(v, inv(j, i), ws[j]);
      w.pairs.push_back({g, vs[i], std::move(v)});
    }
  }
  // Certificate: the full Gram matrix in this basis.
  std::vector<Vec<Rational>> all;
  for (const auto& p : w.pairs) {
    all.push_back(p.u);
    all.push_back(p.v);
  }
  for (const auto& l : w.lines) all.push_back(l.z);
  w.gram_ok = all.size() == gamma.ambient();
  if (w.gram_ok) {
    const Matrix<Rational> gram = restrict_form(k, all);
    const size_t np = 2 * w.pairs.size();
    for (size_t i = 0; i < all.size() && w.gram_ok; ++i)
      for (size_t j = 0; j < all.size(); ++j) {
        Rational expect;
        if (i < np && j < np) {
          if (i / 2 == j / 2 && i != j) expect = Rational(1);
        } else if (i == j) {
          expect = w.lines[i - np].pivot;
        }
        if (gram(i, j) != expect) {
          w.gram_ok = false;
          break;
        }
      }
  }
  return w;
}

}  // namespace e6r
