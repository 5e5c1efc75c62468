/**
 * @file tits.hpp
 * @brief Tits' construction T(C, J) = Der(C) + C0 (x) J0 + Der(J), the
 *        Der(J) + J0 model, and the Killing-form data computed on them.
 *
 * The bracket extends the ones on Der(C) and Der(J) by
 *   [d, a(x)x] = d(a) (x) x,   [D, a(x)x] = a (x) D(x),   [Der C, Der J] = 0,
 *   [a(x)x, b(x)y] = t_J(x.y) d_{a,b} + [a,b] (x) (x*y) + 2 t_C(ab) [R_x, R_y].
 * Inside C0 (x) J0 the C0 index is major.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "e6r/algebra.hpp"
#include "e6r/composition.hpp"
#include "e6r/grading.hpp"
#include "e6r/jordan.hpp"

namespace e6r {

/// Index ranges of the three summands inside the Tits algebra basis.
struct TitsLayout {
  size_t der_c_off = 0, der_c_dim = 0;
  size_t mixed_off = 0, c0_dim = 0, j0_dim = 0;
  size_t der_j_off = 0, der_j_dim = 0;
  size_t dim() const { return der_c_dim + c0_dim * j0_dim + der_j_dim; }
  size_t mixed(size_t a, size_t x) const { return mixed_off + a * j0_dim + x; }
};

struct TitsAlgebra {
  LieAlgebra<Rational> lie;
  TitsLayout layout;
  CompositionAlgebra c;
  JordanAlgebra j;
  std::vector<Matrix<Rational>> der_c;  // basis of Der(C), in layout order
  std::vector<Matrix<Rational>> der_j;  // basis of Der(J), in layout order
  std::string name;

  size_t dim() const { return lie.dim(); }

  /// Z2 split with Der(C) + Der(J) even and C0 (x) J0 odd.
  Z2Split der_even_split() const {
    Z2Split s(dim(), true);
    for (size_t i = 0; i < layout.c0_dim * layout.j0_dim; ++i) s[layout.mixed_off + i] = false;
    return s;
  }

  std::vector<Vec<Rational>> block_basis(size_t off, size_t len) const {
    std::vector<Vec<Rational>> b;
    for (size_t i = 0; i < len; ++i) b.push_back(unit_vector<Rational>(dim(), off + i));
    return b;
  }
  std::vector<Vec<Rational>> der_c_basis() const { return block_basis(layout.der_c_off, layout.der_c_dim); }
  std::vector<Vec<Rational>> mixed_basis() const {
    return block_basis(layout.mixed_off, layout.c0_dim * layout.j0_dim);
  }
  std::vector<Vec<Rational>> der_j_basis() const { return block_basis(layout.der_j_off, layout.der_j_dim); }
};

namespace detail {

inline std::vector<Vec<Rational>> flatten(const std::vector<Matrix<Rational>>& ms) {
  std::vector<Vec<Rational>> f;
  for (const auto& m : ms) f.push_back(m.flat());
  return f;
}

inline std::vector<std::string> j0_labels(const JordanAlgebra& j) {
  std::vector<std::string> out;
  for (const auto& v : j.traceless_basis()) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (!s.empty()) s += v[i].sign() > 0 ? "+" : "-";
      else if (v[i].sign() < 0) s += "-";
      s += j.alg().label(i);
    }
    out.push_back(s);
  }
  return out;
}

/// Coordinates of every v in `images` relative to `frame`; throws if one is outside.
inline Vec<Rational> coords_or_throw(const Frame<Rational>& frame, const Vec<Rational>& v, const char* what) {
  auto c = frame.try_coords(v);
  if (!c) throw AlgebraError(std::string("tits: ") + what + " left its summand");
  return std::move(*c);
}

}  // namespace detail

/// T(C, J). `der_c` and `der_j` default to the echelon bases from derivations().
inline TitsAlgebra tits(const CompositionAlgebra& c, const JordanAlgebra& j,
                        std::vector<Matrix<Rational>> der_c = {}, std::vector<Matrix<Rational>> der_j = {}) {
  using detail::coords_or_throw;
  if (der_c.empty()) der_c = derivations(c.alg());
  if (der_j.empty()) der_j = derivations(j.alg());
  const auto c0 = c.traceless_basis();
  const auto& j0 = j.traceless_basis();
  TitsLayout lay;
  lay.der_c_dim = der_c.size();
  lay.c0_dim = c0.size();
  lay.j0_dim = j0.size();
  lay.der_j_dim = der_j.size();
  lay.der_c_off = 0;
  lay.mixed_off = lay.der_c_dim;
  lay.der_j_off = lay.mixed_off + lay.c0_dim * lay.j0_dim;
  const size_t n = lay.dim();

  const Frame<Rational> fdc(detail::flatten(der_c), c.dim() * c.dim());
  const Frame<Rational> fdj(detail::flatten(der_j), j.dim() * j.dim());
  const Frame<Rational> fc0(c0, c.dim());
  const Frame<Rational> fj0(j0, j.dim());

  std::vector<std::string> labels;
  for (size_t i = 0; i < lay.der_c_dim; ++i) labels.push_back("DerC[" + std::to_string(i) + "]");
  const auto jl = detail::j0_labels(j);
  for (size_t a = 0; a < lay.c0_dim; ++a)
    for (size_t x = 0; x < lay.j0_dim; ++x) labels.push_back(c.alg().label(a + 1) + "@" + jl[x]);
  for (size_t i = 0; i < lay.der_j_dim; ++i) labels.push_back("DerJ[" + std::to_string(i) + "]");
  StructAlgebra<Rational> alg(labels);

  auto set_pair = [&](size_t p, size_t q, const Vec<Rational>& v) {
    alg.set_product(p, q, v);
    alg.set_product(q, p, scaled(Rational(-1), v));
  };

  // [Der C, Der C] and [Der J, Der J].
  for (size_t p = 0; p < lay.der_c_dim; ++p)
    for (size_t q = p + 1; q < lay.der_c_dim; ++q) {
      Vec<Rational> v(n);
      const auto cc = coords_or_throw(fdc, commutator(der_c[p], der_c[q]).flat(), "[Der C, Der C]");
      for (size_t k = 0; k < cc.size(); ++k) v[lay.der_c_off + k] = cc[k];
      set_pair(lay.der_c_off + p, lay.der_c_off + q, v);
    }
  for (size_t p = 0; p < lay.der_j_dim; ++p)
    for (size_t q = p + 1; q < lay.der_j_dim; ++q) {
      Vec<Rational> v(n);
      const auto cc = coords_or_throw(fdj, commutator(der_j[p], der_j[q]).flat(), "[Der J, Der J]");
      for (size_t k = 0; k < cc.size(); ++k) v[lay.der_j_off + k] = cc[k];
      set_pair(lay.der_j_off + p, lay.der_j_off + q, v);
    }

  // Actions on C0 and J0, in C0 / J0 coordinates.
  std::vector<std::vector<Vec<Rational>>> dc_on_c0(lay.der_c_dim), dj_on_j0(lay.der_j_dim);
  for (size_t p = 0; p < lay.der_c_dim; ++p)
    for (size_t a = 0; a < lay.c0_dim; ++a) dc_on_c0[p].push_back(coords_or_throw(fc0, der_c[p].apply(c0[a]), "d(C0)"));
  for (size_t p = 0; p < lay.der_j_dim; ++p)
    for (size_t x = 0; x < lay.j0_dim; ++x) dj_on_j0[p].push_back(coords_or_throw(fj0, der_j[p].apply(j0[x]), "D(J0)"));

  for (size_t a = 0; a < lay.c0_dim; ++a)
    for (size_t x = 0; x < lay.j0_dim; ++x) {
      const size_t ax = lay.mixed(a, x);
      for (size_t p = 0; p < lay.der_c_dim; ++p) {
        Vec<Rational> v(n);
        for (size_t b = 0; b < lay.c0_dim; ++b) v[lay.mixed(b, x)] = dc_on_c0[p][a][b];
        set_pair(lay.der_c_off + p, ax, v);
      }
      for (size_t p = 0; p < lay.der_j_dim; ++p) {
        Vec<Rational> v(n);
        for (size_t y = 0; y < lay.j0_dim; ++y) v[lay.mixed(a, y)] = dj_on_j0[p][x][y];
        set_pair(lay.der_j_off + p, ax, v);
      }
    }

  // Data for the mixed bracket.
  struct CPair {
    Vec<Rational> dab, comm;
    Rational tab;
  };
  std::vector<CPair> cp(lay.c0_dim * lay.c0_dim);
  for (size_t a = 0; a < lay.c0_dim; ++a)
    for (size_t b = 0; b < lay.c0_dim; ++b) {
      auto& e = cp[a * lay.c0_dim + b];
      e.dab = lay.der_c_dim ? coords_or_throw(fdc, c.d_ab(c0[a], c0[b]).flat(), "d_{a,b}") : Vec<Rational>{};
      if (!lay.der_c_dim && !c.d_ab(c0[a], c0[b]).is_zero()) throw AlgebraError("tits: nonzero d_{a,b} without Der(C)");
      e.comm = coords_or_throw(fc0, c.mul(c0[a], c0[b]) - c.mul(c0[b], c0[a]), "[a,b]");
      e.tab = c.trace(c.mul(c0[a], c0[b]));
    }
  struct JPair {
    Rational txy;
    Vec<Rational> star, rxy;
  };
  std::vector<JPair> jp(lay.j0_dim * lay.j0_dim);
  for (size_t x = 0; x < lay.j0_dim; ++x)
    for (size_t y = 0; y < lay.j0_dim; ++y) {
      auto& e = jp[x * lay.j0_dim + y];
      e.txy = j.trace(j.mul(j0[x], j0[y]));
      e.star = coords_or_throw(fj0, j.star(j0[x], j0[y]), "x*y");
      e.rxy = coords_or_throw(fdj, j.inner_der(j0[x], j0[y]).flat(), "[R_x,R_y]");
    }

  for (size_t p = 0; p < lay.c0_dim * lay.j0_dim; ++p)
    for (size_t q = p + 1; q < lay.c0_dim * lay.j0_dim; ++q) {
      const size_t a = p / lay.j0_dim, x = p % lay.j0_dim;
      const size_t b = q / lay.j0_dim, y = q % lay.j0_dim;
      const auto& ce = cp[a * lay.c0_dim + b];
      const auto& je = jp[x * lay.j0_dim + y];
      Vec<Rational> v(n);
      if (!je.txy.is_zero())
        for (size_t k = 0; k < ce.dab.size(); ++k) v[lay.der_c_off + k] += je.txy * ce.dab[k];
      for (size_t e = 0; e < lay.c0_dim; ++e) {
        if (ce.comm[e].is_zero()) continue;
        for (size_t z = 0; z < lay.j0_dim; ++z)
          if (!je.star[z].is_zero()) v[lay.mixed(e, z)] += ce.comm[e] * je.star[z];
      }
      if (!ce.tab.is_zero())
        for (size_t k = 0; k < lay.der_j_dim; ++k) v[lay.der_j_off + k] += Rational(2) * ce.tab * je.rxy[k];
      set_pair(lay.mixed_off + p, lay.mixed_off + q, v);
    }

  alg.provenance()["construction"] = "tits";
  alg.provenance()["C"] = c.name();
  alg.provenance()["J"] = j.name();
  TitsAlgebra t{LieAlgebra<Rational>(std::move(alg)), lay, c, j, std::move(der_c), std::move(der_j),
                "T(" + c.name() + "," + j.name() + ")"};
  return t;
}

/// Der(J) + J0 with [D, x] = D(x) and [x, y] = [R_x, R_y]. Recorded as a
/// Tits algebra over C = R+R with C0 = R u, so Der(J) comes first and the
/// J0 block follows.
inline TitsAlgebra derj_j0_model(const JordanAlgebra& j, std::vector<Matrix<Rational>> der_j = {}) {
  using detail::coords_or_throw;
  if (der_j.empty()) der_j = derivations(j.alg());
  const auto& j0 = j.traceless_basis();
  TitsLayout lay;
  lay.der_j_off = 0;
  lay.der_j_dim = der_j.size();
  lay.mixed_off = lay.der_j_dim;
  lay.c0_dim = 1;
  lay.j0_dim = j0.size();
  lay.der_c_off = lay.mixed_off + lay.j0_dim;
  const size_t n = lay.dim();
  const Frame<Rational> fdj(detail::flatten(der_j), j.dim() * j.dim());
  const Frame<Rational> fj0(j0, j.dim());

  std::vector<std::string> labels;
  for (size_t i = 0; i < lay.der_j_dim; ++i) labels.push_back("DerJ[" + std::to_string(i) + "]");
  for (const auto& l : detail::j0_labels(j)) labels.push_back(l);
  StructAlgebra<Rational> alg(labels);
  auto set_pair = [&](size_t p, size_t q, const Vec<Rational>& v) {
    alg.set_product(p, q, v);
    alg.set_product(q, p, scaled(Rational(-1), v));
  };
  for (size_t p = 0; p < lay.der_j_dim; ++p) {
    for (size_t q = p + 1; q < lay.der_j_dim; ++q) {
      Vec<Rational> v(n);
      const auto cc = coords_or_throw(fdj, commutator(der_j[p], der_j[q]).flat(), "[Der J, Der J]");
      for (size_t k = 0; k < cc.size(); ++k) v[lay.der_j_off + k] = cc[k];
      set_pair(lay.der_j_off + p, lay.der_j_off + q, v);
    }
    for (size_t x = 0; x < lay.j0_dim; ++x) {
      Vec<Rational> v(n);
      const auto cc = coords_or_throw(fj0, der_j[p].apply(j0[x]), "D(J0)");
      for (size_t y = 0; y < lay.j0_dim; ++y) v[lay.mixed_off + y] = cc[y];
      set_pair(lay.der_j_off + p, lay.mixed_off + x, v);
    }
  }
  for (size_t x = 0; x < lay.j0_dim; ++x)
    for (size_t y = x + 1; y < lay.j0_dim; ++y) {
      Vec<Rational> v(n);
      const auto cc = coords_or_throw(fdj, j.inner_der(j0[x], j0[y]).flat(), "[R_x,R_y]");
      for (size_t k = 0; k < cc.size(); ++k) v[lay.der_j_off + k] = cc[k];
      set_pair(lay.mixed_off + x, lay.mixed_off + y, v);
    }
  alg.provenance()["construction"] = "derj_j0";
  alg.provenance()["J"] = j.name();
  TitsAlgebra t{LieAlgebra<Rational>(std::move(alg)), lay, hurwitz("RR"), j, {}, std::move(der_j),
                "Der(" + j.name() + ")+J0"};
  return t;
}

/// G x H grading of T(C, J) from gradings of C and J:
///   L_(g,h) = Der(C)_g [h = e] + Der(J)_h [g = e] + (C0)_g (x) (J0)_h.
/// Degrees are returned with the coordinates of G first.
inline GradedDecomposition<Rational> combine(const GradedDecomposition<Rational>& gc,
                                             const GradedDecomposition<Rational>& gj, const TitsAlgebra& t) {
  const auto& lay = t.layout;
  const size_t n = t.dim();
  GradedDecomposition<Rational> out(gc.group() * gj.group(), n);
  auto pair_degree = [](const Degree& g, const Degree& h) {
    Degree d = g;
    d.insert(d.end(), h.begin(), h.end());
    return d;
  };
  if (lay.der_c_dim) {
    const auto induced = induced_on_der(gc, t.der_c);
    for (const auto& [g, vs] : induced.components())
      for (const auto& v : vs) {
        Vec<Rational> w(n);
        for (size_t k = 0; k < v.size(); ++k) w[lay.der_c_off + k] = v[k];
        out.add(pair_degree(g, gj.group().zero()), w);
      }
  }
  const auto induced = induced_on_der(gj, t.der_j);
  for (const auto& [h, vs] : induced.components())
    for (const auto& v : vs) {
      Vec<Rational> w(n);
      for (size_t k = 0; k < v.size(); ++k) w[lay.der_j_off + k] = v[k];
      out.add(pair_degree(gc.group().zero(), h), w);
    }
  // Graded pieces of C0 and J0 in C0 / J0 coordinates.
  auto restrict = [](const GradedDecomposition<Rational>& g, const std::vector<Vec<Rational>>& sub, size_t amb) {
    const Frame<Rational> f(sub, amb);
    const auto s = Subspace<Rational>::span(sub, amb);
    std::map<Degree, std::vector<Vec<Rational>>> pieces;
    size_t total = 0;
    for (const auto& [d, vs] : g.components()) {
      auto c = intersect(Subspace<Rational>::span(vs, amb), s);
      for (const auto& v : c.basis()) pieces[d].push_back(f.coords(v));
      total += c.dim();
    }
    if (total != sub.size()) throw GradingError("combine: traceless part is not a graded subspace");
    return pieces;
  };
  const auto c0 = t.c.traceless_basis();
  const auto pc = restrict(gc, c0, t.c.dim());
  const auto pj = restrict(gj, t.j.traceless_basis(), t.j.dim());
  for (const auto& [g, as] : pc)
    for (const auto& [h, xs] : pj)
      for (const auto& a : as)
        for (const auto& x : xs) {
          Vec<Rational> w(n);
          for (size_t p = 0; p < a.size(); ++p)
            for (size_t q = 0; q < x.size(); ++q)
              if (!a[p].is_zero() && !x[q].is_zero()) w[lay.mixed(p, q)] = a[p] * x[q];
          out.add(pair_degree(g, h), w);
        }
  return out;
}

/// Matrix on T(C, J) of the automorphism induced by automorphisms phi of C
/// and psi of J: d -> phi d phi^-1, a (x) x -> phi(a) (x) psi(x), D -> psi D psi^-1.
inline Matrix<Rational> lift_automorphism(const TitsAlgebra& t, const Matrix<Rational>& phi,
                                          const Matrix<Rational>& psi) {
  const auto& lay = t.layout;
  Matrix<Rational> m(t.dim(), t.dim());
  if (lay.der_c_dim) {
    const Frame<Rational> f(detail::flatten(t.der_c), t.c.dim() * t.c.dim());
    const Matrix<Rational> inv = inverse(phi);
    for (size_t p = 0; p < lay.der_c_dim; ++p) {
      const auto c = f.coords((phi * t.der_c[p] * inv).flat());
      for (size_t k = 0; k < c.size(); ++k) m(lay.der_c_off + k, lay.der_c_off + p) = c[k];
    }
  }
  {
    const Frame<Rational> f(detail::flatten(t.der_j), t.j.dim() * t.j.dim());
    const Matrix<Rational> inv = inverse(psi);
    for (size_t p = 0; p < lay.der_j_dim; ++p) {
      const auto c = f.coords((psi * t.der_j[p] * inv).flat());
      for (size_t k = 0; k < c.size(); ++k) m(lay.der_j_off + k, lay.der_j_off + p) = c[k];
    }
  }
  const Frame<Rational> fc0(t.c.traceless_basis(), t.c.dim());
  const Frame<Rational> fj0(t.j.traceless_basis(), t.j.dim());
  std::vector<Vec<Rational>> ca, jx;
  for (const auto& a : t.c.traceless_basis()) ca.push_back(fc0.coords(phi.apply(a)));
  for (const auto& x : t.j.traceless_basis()) jx.push_back(fj0.coords(psi.apply(x)));
  for (size_t a = 0; a < lay.c0_dim; ++a)
    for (size_t x = 0; x < lay.j0_dim; ++x)
      for (size_t b = 0; b < lay.c0_dim; ++b)
        for (size_t y = 0; y < lay.j0_dim; ++y)
          if (!ca[a][b].is_zero() && !jx[x][y].is_zero()) m(lay.mixed(b, y), lay.mixed(a, x)) = ca[a][b] * jx[x][y];
  return m;
}

/// Ratios of the Killing form against the natural forms on T(O, Mat3(R)+).
struct ProportionalityConstants {
  std::optional<Rational> c_der_c;  // k(d, d') / tr(d d') on Der(O)
  std::optional<Rational> c_der_j;  // k(D, D') / tr(D D') on Der(M)
  std::optional<Rational> alpha;    // k(a(x)x, b(x)y) / (n(a,b) t_M(x.y))
};

inline ProportionalityConstants tits_constants(const TitsAlgebra& t, const Matrix<Rational>& k) {
  const auto& lay = t.layout;
  ProportionalityConstants pc;
  auto block = [&](size_t off, size_t len) {
    Matrix<Rational> b(len, len);
    for (size_t p = 0; p < len; ++p)
      for (size_t q = 0; q < len; ++q) b(p, q) = k(off + p, off + q);
    return b;
  };
  auto traces = [](const std::vector<Matrix<Rational>>& ds) {
    Matrix<Rational> m(ds.size(), ds.size());
    for (size_t p = 0; p < ds.size(); ++p)
      for (size_t q = 0; q < ds.size(); ++q) m(p, q) = (ds[p] * ds[q]).trace();
    return m;
  };
  pc.c_der_c = proportionality(block(lay.der_c_off, lay.der_c_dim), traces(t.der_c));
  pc.c_der_j = proportionality(block(lay.der_j_off, lay.der_j_dim), traces(t.der_j));
  const auto c0 = t.c.traceless_basis();
  const auto& j0 = t.j.traceless_basis();
  const size_t m = lay.c0_dim * lay.j0_dim;
  Matrix<Rational> natural(m, m);
  for (size_t p = 0; p < m; ++p)
    for (size_t q = 0; q < m; ++q) {
      const size_t a = p / lay.j0_dim, x = p % lay.j0_dim, b = q / lay.j0_dim, y = q % lay.j0_dim;
      natural(p, q) = t.c.norm(c0[a], c0[b]) * t.j.trace(t.j.mul(j0[x], j0[y]));
    }
  pc.alpha = proportionality(block(lay.mixed_off, m), natural);
  return pc;
}

/// Decomposition of the -26 model Der(J) + J0, J = H3(O, I), under
/// nu' = theta nu (theta = +1 on Der(J), -1 on J0).
struct Sp31Decomposition {
  size_t even_dim = 0;
  size_t odd_dim = 0;
  size_t fix_theta_and_nu_dim = 0;
  long even_signature = 0;
  std::optional<Rational> delta;  // k_L restricted to the even part over its own Killing form
  bool nu_prime_is_automorphism = false;
  long twisted_signature = 0;  // signature after scaling odd x odd brackets by -1
  std::vector<Vec<Rational>> even_basis, odd_basis;
  Matrix<Rational> nu_prime;
};

inline Sp31Decomposition sp31_decomposition(const TitsAlgebra& l, const Matrix<Rational>& killing) {
  const auto& j = l.j;
  const auto nu = nu_automorphism(j);
  Matrix<Rational> lifted = lift_automorphism(l, Matrix<Rational>::identity(2), nu);
  Matrix<Rational> theta = Matrix<Rational>::identity(l.dim());
  for (size_t x = 0; x < l.layout.j0_dim; ++x) theta(l.layout.mixed(0, x), l.layout.mixed(0, x)) = Rational(-1);
  Sp31Decomposition d;
  d.nu_prime = theta * lifted;
  d.nu_prime_is_automorphism = is_automorphism(l.lie.alg(), d.nu_prime);
  const auto even = fixed_subspace(d.nu_prime);
  const auto odd = eigenspace(d.nu_prime, Rational(-1));
  d.even_dim = even.dim();
  d.odd_dim = odd.dim();
  d.even_basis = even.basis();
  d.odd_basis = odd.basis();
  d.fix_theta_and_nu_dim = intersect(fixed_subspace(theta), fixed_subspace(lifted)).dim();
  const Matrix<Rational> ke = restrict_form(killing, d.even_basis);
  d.even_signature = inertia(ke).signature();
  const LieAlgebra<Rational> sub(restrict_to(l.lie.alg(), d.even_basis));
  d.delta = proportionality(ke, killing_matrix(sub));
  std::vector<Vec<Rational>> adapted = d.even_basis;
  adapted.insert(adapted.end(), d.odd_basis.begin(), d.odd_basis.end());
  const LieAlgebra<Rational> rebased(change_basis(l.lie.alg(), adapted));
  Z2Split split(adapted.size(), false);
  for (size_t i = 0; i < d.even_dim; ++i) split[i] = true;
  d.twisted_signature = killing_signature(twist(rebased, split, Rational(-1)));
  return d;
}

/// One cell of the table of T(C, J) for two-dimensional C.
struct JacobsonCell {
  std::string c_name, j_name;
  size_t dim = 0;
  bool jacobi_ok = false;
  long signature = 0;
};

/// T(C, J) for C in {C, R+R} and J in {H3(O,I), H3(O,diag(1,-1,1)), H3(Os,I)}.
/// `middle_gamma` replaces diag(1,-1,1) in the middle column.
inline std::vector<JacobsonCell> jacobson_table(const Gamma& middle_gamma = {1, -1, 1}) {
  const std::vector<std::pair<std::string, Gamma>> js{{"O", {1, 1, 1}}, {"O", middle_gamma}, {"Os", {1, 1, 1}}};
  std::vector<JacobsonCell> out;
  for (const std::string cn : {"C", "RR"})
    for (const auto& [jn, g] : js) {
      const auto t = tits(hurwitz(cn), h3(hurwitz(jn), g));
      out.push_back({cn, t.j.name(), t.dim(), jacobi_defect(t.lie, 1).empty(),
                     killing_signature(t.lie)});
    }
  return out;
}


}  // namespace e6r
