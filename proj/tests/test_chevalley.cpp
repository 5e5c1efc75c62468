#include <gtest/gtest.h>

#include <map>
#include <set>

#include "e6r/chevalley.hpp"

using namespace e6r;
using Q = Rational;

namespace {

const ChevalleyBasis& basis() {
  static const ChevalleyBasis cb = e6_chevalley();
  return cb;
}

const Matrix<Q>& omega_matrix() {
  static const Matrix<Q> w = omega(basis());
  return w;
}

const std::vector<TorusRow>& table() {
  static const std::vector<TorusRow> t = torus_table(basis());
  return t;
}

// dim fix(t_s) counted directly on roots: the Cartan plus e_a, f_a for
// every positive a with even pairing against the -1 entries of s.
size_t fix_dim_from_roots(const SignVector& s) {
  size_t d = 6;
  for (const auto& a : e6_roots().positive) {
    int odd = 0;
    for (size_t i = 0; i < 6; ++i)
      if (s[i] < 0) odd += a[i];
    if (odd % 2 == 0) d += 2;
  }
  return d;
}

bool is_integer(const Q& q) { return q.is_integer(); }

}  // namespace

TEST(Roots, CountsAndHeights) {
  const auto rs = e6_roots();
  EXPECT_EQ(rs.positive.size(), 36u);
  EXPECT_EQ(rs.size(), 72u);
  std::map<int, size_t> by_height;
  for (const auto& a : rs.positive) ++by_height[height(a)];
  // Exponents 1, 4, 5, 7, 8, 11 give the height partition.
  const std::map<int, size_t> expect{{1, 6}, {2, 5}, {3, 5}, {4, 5}, {5, 4}, {6, 3},
                                     {7, 3}, {8, 2}, {9, 1}, {10, 1}, {11, 1}};
  EXPECT_EQ(by_height, expect);
  EXPECT_EQ(rs.positive.back(), (Root{1, 2, 2, 3, 2, 1}));
  // Every positive root has squared length 2.
  for (const auto& a : rs.positive) {
    int n = 0;
    for (size_t j = 0; j < 6; ++j) n += a[j] * pairing(a, j);
    EXPECT_EQ(n, 2);
  }
}

TEST(Roots, ChainsUseTheLeastIndex) {
  const auto rs = e6_roots();
  for (size_t a = 0; a < rs.positive.size(); ++a) {
    if (height(rs.positive[a]) == 1) {
      EXPECT_EQ(rs.chain_j[a], -1);
      continue;
    }
    const int j = rs.chain_j[a];
    Root b = rs.positive[a];
    --b[j];
    EXPECT_EQ(rs.positive[rs.chain_rest[a]], b);
    for (int i = 0; i < j; ++i) {
      Root c = rs.positive[a];
      --c[i];
      EXPECT_EQ(rs.index.count(c), 0u);
    }
  }
}

TEST(Minuscule, ChevalleyRelations) {
  const auto m = minuscule27();
  ASSERT_EQ(m.weights.size(), 27u);
  const auto& a = e6_cartan();
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) {
      const auto c = commutator(m.e[i], m.f[j]);
      EXPECT_EQ(c, i == j ? m.h[i] : Matrix<Q>(27, 27));
      EXPECT_EQ(commutator(m.h[i], m.e[j]), Q(a[i][j]) * m.e[j]);
      EXPECT_EQ(commutator(m.h[i], m.f[j]), Q(-a[i][j]) * m.f[j]);
      if (i == j) continue;
      // Serre: ad(e_i)^{1 - a_ij} e_j = 0.
      Matrix<Q> x = m.e[j];
      for (int k = 0; k < 1 - a[i][j]; ++k) x = commutator(m.e[i], x);
      EXPECT_TRUE(x.is_zero()) << i << j;
    }
}

TEST(Chevalley, DimensionJacobiAndSignature) {
  const auto& cb = basis();
  EXPECT_EQ(cb.dim(), 78u);
  EXPECT_TRUE(jacobi_defect(cb.lie).empty());
  EXPECT_EQ(killing_signature(cb.lie), 6);
}

TEST(Chevalley, IntegralStructureConstants) {
  const auto& cb = basis();
  for (const auto& e : cb.lie.alg().entries()) EXPECT_TRUE(is_integer(e.c));
  const size_t np = cb.n_pos();
  for (size_t a = 0; a < np; ++a) {
    const auto c = cb.lie.bracket(unit_vector<Q>(78, cb.e(a)), unit_vector<Q>(78, cb.f(a)));
    for (size_t i = 6; i < 78; ++i) EXPECT_TRUE(c[i].is_zero());
    // Same-chain e_a and f_a bracket to (-1)^(ht a - 1) times the coroot.
    const Q sign = height(cb.roots.positive[a]) % 2 ? Q(1) : Q(-1);
    for (size_t j = 0; j < 6; ++j) EXPECT_EQ(c[j], sign * Q(cb.roots.positive[a][j]));
  }
  // N_{a,b} = +-1 whenever a + b is a root.
  for (size_t a = 0; a < np; ++a)
    for (size_t b = 0; b < np; ++b) {
      Root s;
      for (size_t i = 0; i < 6; ++i) s[i] = cb.roots.positive[a][i] + cb.roots.positive[b][i];
      const auto it = cb.roots.index.find(s);
      const auto& t = cb.lie.bracket(cb.e(a), cb.e(b));
      if (it == cb.roots.index.end()) {
        EXPECT_TRUE(t.empty());
      } else {
        ASSERT_EQ(t.size(), 1u);
        EXPECT_EQ(t[0].first, cb.e(it->second));
        EXPECT_TRUE(t[0].second == Q(1) || t[0].second == Q(-1));
      }
    }
}

TEST(Omega, IsAnInvolutiveAutomorphism) {
  const auto& cb = basis();
  const auto& w = omega_matrix();
  EXPECT_TRUE(is_automorphism(cb.lie.alg(), w));
  EXPECT_EQ(w * w, Matrix<Q>::identity(78));
  EXPECT_EQ(fixed_subspace(w).dim(), 36u);
  for (size_t a = 0; a < cb.n_pos(); ++a) {
    // omega swaps the root spaces of a and -a.
    const auto img = w.col(cb.e(a));
    for (size_t i = 0; i < 78; ++i)
      if (i != cb.f(a)) {
        EXPECT_TRUE(img[i].is_zero());
      }
    EXPECT_TRUE(img[cb.f(a)] == Q(1) || img[cb.f(a)] == Q(-1));
  }
}

TEST(Omega, FixedSubspaceIsSpannedByEPlusOrMinusF) {
  const auto& cb = basis();
  const auto& w = omega_matrix();
  std::vector<Vec<Q>> expect;
  for (size_t a = 0; a < cb.n_pos(); ++a) {
    const Q eps = w(cb.f(a), cb.e(a));
    expect.push_back(unit_vector<Q>(78, cb.e(a)) + scaled(eps, unit_vector<Q>(78, cb.f(a))));
  }
  EXPECT_EQ(Subspace<Q>::span(expect, 78).basis(), fixed_subspace(w).basis());
}

TEST(Torus, ElementsAreCommutingAutomorphisms) {
  const auto& cb = basis();
  const auto& w = omega_matrix();
  for (unsigned k : {1u, 6u, 21u, 63u}) {
    const auto t = torus_element(cb, sign_vector(k));
    EXPECT_TRUE(is_automorphism(cb.lie.alg(), t));
    EXPECT_EQ(t * t, Matrix<Q>::identity(78));
    EXPECT_EQ(t * w, w * t);
  }
}

TEST(Torus, FixedDimensions) {
  const auto& rows = table();
  ASSERT_EQ(rows.size(), 64u);
  std::set<size_t> fix_t;
  for (size_t k = 0; k < 64; ++k) {
    const auto& r = rows[k];
    EXPECT_EQ(r.fix_t, fix_dim_from_roots(r.s));
    EXPECT_EQ(r.fix_omega_t, 36u);
    if (k) fix_t.insert(r.fix_t);
  }
  EXPECT_EQ(rows[0].fix_t, 78u);
  EXPECT_EQ(fix_t, (std::set<size_t>{38, 46}));
}

TEST(Torus, InheritingSignatures) {
  const auto s = inheriting_signatures(table());
  EXPECT_EQ(s, (std::set<long>{6, 2, -14, -78}));
  EXPECT_EQ(s.count(-26), 0u);
}

TEST(Torus, CsvHasOneRowPerSignVector) {
  const auto csv = torus_csv(table());
  size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 65u);
  EXPECT_EQ(csv.rfind("s1,s2,s3,s4,s5,s6,", 0), 0u);
}

TEST(Gamma13, TypeClosureAndOrthogonality) {
  const auto& cb = basis();
  const auto g = gamma13_grading(cb);
  EXPECT_EQ(g.group().torsion(), (std::vector<int64_t>(7, 2)));
  EXPECT_EQ(g.type_vector(), (std::vector<size_t>{72, 0, 0, 0, 0, 1}));
  EXPECT_EQ(g.e_dim(), 0u);
  EXPECT_TRUE(g.verify(cb.lie.alg()).ok());
  const auto k = killing_matrix(cb.lie);
  EXPECT_TRUE(orthogonality_violations(g, k).empty());
  EXPECT_TRUE(signature_bound(g, 6).holds);
  // The Cartan sits in the single six-dimensional component, of degree (1, 0, ..., 0).
  for (const auto& d : g.support())
    if (g.dim(d) == 6) {
      EXPECT_EQ(d, (Degree{1, 0, 0, 0, 0, 0, 0}));
    }
}

TEST(Gamma13, EPlusFAndEMinusFDifferInOmega) {
  const auto& cb = basis();
  const auto g = gamma13_grading(cb);
  auto degree_of = [&](const Vec<Q>& v) {
    for (const auto& d : g.support())
      if (Subspace<Q>::span(g.component(d), 78).contains(v)) return d;
    return Degree{};
  };
  for (size_t a = 0; a < cb.n_pos(); ++a) {
    const auto e = unit_vector<Q>(78, cb.e(a)), f = unit_vector<Q>(78, cb.f(a));
    const auto dp = degree_of(e + f), dm = degree_of(e - f);
    ASSERT_EQ(dp.size(), 7u);
    ASSERT_EQ(dm.size(), 7u);
    EXPECT_NE(dp[0], dm[0]);
    for (size_t i = 1; i < 7; ++i) {
      EXPECT_EQ(dp[i], dm[i]);
      EXPECT_EQ(dp[i], cb.roots.positive[a][i - 1] % 2);
    }
  }
}
