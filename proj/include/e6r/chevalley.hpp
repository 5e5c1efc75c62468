/**
 * @file chevalley.hpp
 * @brief E6 roots, a Chevalley basis built from iterated brackets inside
 *        the 27-dimensional representation, the involution omega, the
 *        order-two torus elements and the Z2^7 grading.
 *
 * Simple roots use Bourbaki numbering: 1-3-4-5-6 is the long chain and 2
 * is attached to 4. For a positive root a of height > 1, j is the least
 * index with a - a_j a root, and e_a = [e_j, e_{a - a_j}], likewise for f_a.
 */
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "e6r/algebra.hpp"
#include "e6r/grading.hpp"
#include "e6r/parallel.hpp"

namespace e6r {

using Root = std::array<int, 6>;

inline const std::array<std::array<int, 6>, 6>& e6_cartan() {
  static const std::array<std::array<int, 6>, 6> a{{{2, 0, -1, 0, 0, 0},
                                                    {0, 2, 0, -1, 0, 0},
                                                    {-1, 0, 2, -1, 0, 0},
                                                    {0, -1, -1, 2, -1, 0},
                                                    {0, 0, 0, -1, 2, -1},
                                                    {0, 0, 0, 0, -1, 2}}};
  return a;
}

inline int height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

/// <beta, alpha_j> for beta in simple-root coordinates.
inline int pairing(const Root& beta, size_t j) {
  int s = 0;
  for (size_t i = 0; i < 6; ++i) s += beta[i] * e6_cartan()[i][j];
  return s;
}

struct RootSystem {
  std::vector<Root> positive;  // sorted by height, then lexicographically
  std::map<Root, size_t> index;
  std::vector<int> chain_j;       // least j with a - a_j positive (-1 for simple roots)
  std::vector<size_t> chain_rest; // index of a - a_j

  size_t size() const { return 2 * positive.size(); }
};

inline RootSystem e6_roots() {
  std::set<Root> found;
  std::vector<Root> frontier;
  for (size_t j = 0; j < 6; ++j) {
    Root r{};
    r[j] = 1;
    found.insert(r);
    frontier.push_back(r);
  }
  // Simply laced: beta + a_j is a root iff <beta, a_j> = -1 (beta != -a_j).
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& b : frontier)
      for (size_t j = 0; j < 6; ++j)
        if (pairing(b, j) == -1) {
          Root c = b;
          ++c[j];
          if (found.insert(c).second) next.push_back(c);
        }
    frontier = std::move(next);
  }
  RootSystem rs;
  rs.positive.assign(found.begin(), found.end());
  std::stable_sort(rs.positive.begin(), rs.positive.end(), [](const Root& a, const Root& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a > b;  // simple roots in order 1..6
  });
  for (size_t i = 0; i < rs.positive.size(); ++i) rs.index[rs.positive[i]] = i;
  for (const auto& a : rs.positive) {
    int jj = -1;
    size_t rest = 0;
    if (height(a) > 1)
      for (size_t j = 0; j < 6; ++j) {
        if (a[j] == 0) continue;
        Root b = a;
        --b[j];
        auto it = rs.index.find(b);
        if (it != rs.index.end()) {
          jj = static_cast<int>(j);
          rest = it->second;
          break;
        }
      }
    if (height(a) > 1 && jj < 0) throw AlgebraError("e6_roots: no chain for a positive root");
    rs.chain_j.push_back(jj);
    rs.chain_rest.push_back(rest);
  }
  return rs;
}

inline std::string root_str(const Root& r) {
  std::string s;
  for (int c : r) s += std::to_string(c);
  return s;
}

/// Weights of the 27-dimensional representation in Dynkin labels, and the
/// matrices of e_j, f_j, h_j on the weight basis.
struct Minuscule27 {
  std::vector<std::array<int, 6>> weights;
  std::array<Matrix<Rational>, 6> e, f, h;
};

inline Minuscule27 minuscule27() {
  Minuscule27 m;
  std::map<std::array<int, 6>, size_t> idx;
  std::vector<std::array<int, 6>> todo{{1, 0, 0, 0, 0, 0}};
  idx[todo[0]] = 0;
  m.weights.push_back(todo[0]);
  // Lowering by a_j is allowed where the j-th label is 1.
  for (size_t p = 0; p < m.weights.size(); ++p)
    for (size_t j = 0; j < 6; ++j) {
      const auto w = m.weights[p];
      if (w[j] != 1) continue;
      std::array<int, 6> v = w;
      for (size_t i = 0; i < 6; ++i) v[i] -= e6_cartan()[j][i];
      if (idx.emplace(v, m.weights.size()).second) m.weights.push_back(v);
    }
  const size_t n = m.weights.size();
  for (size_t j = 0; j < 6; ++j) {
    m.e[j] = Matrix<Rational>(n, n);
    m.f[j] = Matrix<Rational>(n, n);
    m.h[j] = Matrix<Rational>(n, n);
    for (size_t p = 0; p < n; ++p) {
      const auto& w = m.weights[p];
      m.h[j](p, p) = Rational(w[j]);
      if (w[j] == 1) {
        std::array<int, 6> v = w;
        for (size_t i = 0; i < 6; ++i) v[i] -= e6_cartan()[j][i];
        m.f[j](idx.at(v), p) = Rational(1);
        m.e[j](p, idx.at(v)) = Rational(1);
      }
    }
  }
  return m;
}

/// Chevalley basis h_1..h_6, e_a (a > 0), f_a (a > 0) in that order.
struct ChevalleyBasis {
  RootSystem roots;
  LieAlgebra<Rational> lie;
  std::vector<Matrix<Rational>> matrices;  // the basis inside gl(27)

  size_t n_pos() const { return roots.positive.size(); }
  size_t h(size_t j) const { return j; }
  size_t e(size_t a) const { return 6 + a; }
  size_t f(size_t a) const { return 6 + n_pos() + a; }
  size_t dim() const { return lie.dim(); }
};

inline ChevalleyBasis e6_chevalley() {
  ChevalleyBasis cb;
  cb.roots = e6_roots();
  const auto rep = minuscule27();
  const size_t np = cb.roots.positive.size();
  std::vector<Matrix<Rational>> e(np), f(np);
  for (size_t a = 0; a < np; ++a) {
    const int j = cb.roots.chain_j[a];
    if (j < 0) {
      const size_t s = static_cast<size_t>(std::find(cb.roots.positive[a].begin(), cb.roots.positive[a].end(), 1) -
                                           cb.roots.positive[a].begin());
      e[a] = rep.e[s];
      f[a] = rep.f[s];
    } else {
      e[a] = commutator(rep.e[j], e[cb.roots.chain_rest[a]]);
      f[a] = commutator(rep.f[j], f[cb.roots.chain_rest[a]]);
    }
  }
  std::vector<std::string> labels;
  for (size_t j = 0; j < 6; ++j) {
    cb.matrices.push_back(rep.h[j]);
    labels.push_back("h" + std::to_string(j + 1));
  }
  for (size_t a = 0; a < np; ++a) {
    cb.matrices.push_back(e[a]);
    labels.push_back("e" + root_str(cb.roots.positive[a]));
  }
  for (size_t a = 0; a < np; ++a) {
    cb.matrices.push_back(f[a]);
    labels.push_back("f" + root_str(cb.roots.positive[a]));
  }
  cb.lie = matrix_lie_algebra(cb.matrices, labels);
  cb.lie.mutable_alg().provenance()["construction"] = "chevalley";
  return cb;
}

/// The automorphism with omega(e_j) = -f_j, omega(f_j) = -e_j, omega(h_j) = -h_j,
/// extended along the chains.
inline Matrix<Rational> omega(const ChevalleyBasis& cb) {
  const size_t n = cb.dim(), np = cb.n_pos();
  std::vector<Vec<Rational>> img(n);
  for (size_t j = 0; j < 6; ++j) img[cb.h(j)] = scaled(Rational(-1), unit_vector<Rational>(n, cb.h(j)));
  for (size_t a = 0; a < np; ++a) {
    const int j = cb.roots.chain_j[a];
    if (j < 0) {
      img[cb.e(a)] = scaled(Rational(-1), unit_vector<Rational>(n, cb.f(a)));
      img[cb.f(a)] = scaled(Rational(-1), unit_vector<Rational>(n, cb.e(a)));
    } else {
      const size_t s = cb.roots.index.at([&] {
        Root r{};
        r[j] = 1;
        return r;
      }());
      img[cb.e(a)] = cb.lie.bracket(img[cb.e(s)], img[cb.e(cb.roots.chain_rest[a])]);
      img[cb.f(a)] = cb.lie.bracket(img[cb.f(s)], img[cb.f(cb.roots.chain_rest[a])]);
    }
  }
  return Matrix<Rational>::from_columns(img, n);
}

using SignVector = std::array<int, 6>;

/// t_s: 1 on the Cartan, prod s_i^{a_i} on e_a and f_a.
inline Matrix<Rational> torus_element(const ChevalleyBasis& cb, const SignVector& s) {
  Matrix<Rational> t = Matrix<Rational>::identity(cb.dim());
  for (size_t a = 0; a < cb.n_pos(); ++a) {
    int v = 1;
    for (size_t i = 0; i < 6; ++i)
      if (s[i] < 0 && cb.roots.positive[a][i] % 2) v = -v;
    t(cb.e(a), cb.e(a)) = Rational(v);
    t(cb.f(a), cb.f(a)) = Rational(v);
  }
  return t;
}

/// Sign vector number k in 0..63: bit i set means s_{i+1} = -1.
inline SignVector sign_vector(unsigned k) {
  SignVector s;
  for (size_t i = 0; i < 6; ++i) s[i] = (k >> i & 1u) ? -1 : 1;
  return s;
}

/// Z2^7 grading: coordinate 0 from omega, coordinate i from t with s_i = -1 alone.
inline GradedDecomposition<Rational> gamma13_grading(const ChevalleyBasis& cb) {
  std::vector<Matrix<Rational>> ops{omega(cb)};
  for (unsigned i = 0; i < 6; ++i) ops.push_back(torus_element(cb, sign_vector(1u << i)));
  std::vector<std::vector<Rational>> evs(7, {Rational(1), Rational(-1)});
  // Start from B' = {h_j, e_a + f_a, e_a - f_a}.
  std::vector<Vec<Rational>> start;
  const size_t n = cb.dim();
  for (size_t j = 0; j < 6; ++j) start.push_back(unit_vector<Rational>(n, cb.h(j)));
  for (size_t a = 0; a < cb.n_pos(); ++a) {
    start.push_back(unit_vector<Rational>(n, cb.e(a)) + unit_vector<Rational>(n, cb.f(a)));
    start.push_back(unit_vector<Rational>(n, cb.e(a)) - unit_vector<Rational>(n, cb.f(a)));
  }
  return eigen_grading<Rational>(FinAbGroup::z2_power(7), ops, evs, start);
}

struct TorusRow {
  SignVector s;
  size_t fix_t = 0;
  size_t fix_omega_t = 0;
  long sig_from_t = 0;        // real form for q = omega t: 78 - 2 dim fix(t)
  long sig_from_omega_t = 0;  // real form for q = t: 78 - 2 dim fix(omega t)
};

/// The 64 sign vectors with the fixed dimensions of t and omega t and the
/// signatures of the real forms they give.
inline std::vector<TorusRow> torus_table(const ChevalleyBasis& cb) {
  const Matrix<Rational> w = omega(cb);
  std::vector<TorusRow> rows(64);
  parallel_for(64, [&](size_t k) {
    TorusRow r;
    r.s = sign_vector(static_cast<unsigned>(k));
    const auto t = torus_element(cb, r.s);
    r.fix_t = fixed_subspace(t).dim();
    r.fix_omega_t = fixed_subspace(w * t).dim();
    r.sig_from_t = signature_from_fix(78, static_cast<long>(r.fix_t));
    r.sig_from_omega_t = signature_from_fix(78, static_cast<long>(r.fix_omega_t));
    rows[k] = r;
  });
  return rows;
}

inline std::set<long> inheriting_signatures(const std::vector<TorusRow>& rows) {
  std::set<long> s;
  for (const auto& r : rows) {
    s.insert(r.sig_from_t);
    s.insert(r.sig_from_omega_t);
  }
  return s;
}

inline std::string torus_csv(const std::vector<TorusRow>& rows) {
  std::ostringstream os;
  os << "s1,s2,s3,s4,s5,s6,dim_fix_t,dim_fix_omega_t,signature_omega_t,signature_t\n";
  for (const auto& r : rows) {
    for (int v : r.s) os << v << ",";
    os << r.fix_t << "," << r.fix_omega_t << "," << r.sig_from_t << "," << r.sig_from_omega_t << "\n";
  }
  return os.str();
}

}  // namespace e6r
