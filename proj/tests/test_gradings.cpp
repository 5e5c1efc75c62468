#include <gtest/gtest.h>

#include "e6r/models.hpp"
#include "support.hpp"

using namespace e6r;
using Q = Rational;

namespace {

struct Case {
  ModelGrading m;
  Matrix<Q> k;
};

const Case& cached(const std::string& name) {
  static std::map<std::string, Case> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  ModelGrading m = name == "gamma4" ? gamma4() : name == "gamma7" ? gamma7() : gamma8();
  Matrix<Q> k = killing_matrix(m.lie);
  return cache.emplace(name, Case{std::move(m), std::move(k)}).first->second;
}

struct Expect {
  std::string name;
  size_t free_rank;
  std::vector<int64_t> torsion;
  std::vector<size_t> type;
  size_t e_dim;
};

const std::vector<Expect>& expectations() {
  static const std::vector<Expect> e{
      {"gamma7", 0, {2, 2, 2, 2, 2, 2}, {48, 1, 0, 7}, 0},
      {"gamma8", 1, {2, 2, 2, 2}, {57, 0, 7}, 1},
      {"gamma4", 2, {2, 2, 2}, {48, 1, 0, 7}, 2},
  };
  return e;
}

bool same_components(const GradedDecomposition<Q>& a, const GradedDecomposition<Q>& b) {
  if (a.support() != b.support()) return false;
  for (const auto& g : a.support())
    if (Subspace<Q>::span(a.component(g), a.ambient()).basis() !=
        Subspace<Q>::span(b.component(g), b.ambient()).basis())
      return false;
  return true;
}

}  // namespace

class FlagshipGrading : public ::testing::TestWithParam<size_t> {};

TEST_P(FlagshipGrading, GroupTypeAndIdentityComponent) {
  const auto& e = expectations()[GetParam()];
  const auto& g = cached(e.name).m.grading;
  EXPECT_EQ(g.group().free_rank(), e.free_rank);
  EXPECT_EQ(g.group().torsion(), e.torsion);
  EXPECT_EQ(g.type_vector(), e.type);
  EXPECT_EQ(g.e_dim(), e.e_dim);
  size_t total = 0;
  for (size_t i = 0; i < e.type.size(); ++i) total += (i + 1) * e.type[i];
  EXPECT_EQ(total, 78u);
}

TEST_P(FlagshipGrading, ClosureAndDirectSum) {
  const auto& c = cached(expectations()[GetParam()].name);
  const auto report = c.m.grading.verify(c.m.lie.alg());
  EXPECT_TRUE(report.direct_sum);
  EXPECT_TRUE(report.closure);
  EXPECT_TRUE(report.violations.empty());
}

TEST_P(FlagshipGrading, CarrierHasSignatureMinus26) {
  const auto& c = cached(expectations()[GetParam()].name);
  EXPECT_TRUE(jacobi_defect(c.m.lie).empty());
  EXPECT_EQ(inertia(c.k).signature(), -26);
}

TEST_P(FlagshipGrading, ComponentsAreKillingOrthogonal) {
  const auto& c = cached(expectations()[GetParam()].name);
  EXPECT_TRUE(orthogonality_violations(c.m.grading, c.k).empty());
}

TEST_P(FlagshipGrading, SignatureBoundHolds) {
  const auto& c = cached(expectations()[GetParam()].name);
  const auto b = signature_bound(c.m.grading, inertia(c.k).signature());
  EXPECT_TRUE(b.holds) << b.signature << " " << b.dim_e << " " << b.d;
}

TEST_P(FlagshipGrading, WittBasisCertifiesTheSignature) {
  const auto& c = cached(expectations()[GetParam()].name);
  const auto w = graded_witt_basis(c.m.grading, c.k);
  EXPECT_TRUE(w.gram_ok);
  EXPECT_EQ(2 * w.pairs.size() + w.lines.size(), 78u);
  EXPECT_EQ(w.signature(), -26);
  const auto& grp = c.m.grading.group();
  for (const auto& l : w.lines) EXPECT_TRUE(grp.has_order_at_most_two(l.g));
  for (const auto& p : w.pairs) EXPECT_FALSE(grp.has_order_at_most_two(p.g));
  // Only self-paired degrees contribute to the signature.
  long from_lines = 0;
  for (const auto& l : w.lines) from_lines += l.pivot.sign();
  EXPECT_EQ(from_lines, -26);
}

INSTANTIATE_TEST_SUITE_P(All, FlagshipGrading, ::testing::Values(0, 1, 2),
                         [](const auto& info) { return expectations()[info.param].name; });

TEST(Gradings, OrderTwoDimensions) {
  EXPECT_EQ(cached("gamma7").m.grading.order_two_dim(), 78u);
  // Gamma8: 21 dimensions sit in degrees with zero free coordinate, 7 of them in the seven
  // three-dimensional components and the identity line excluded.
  const auto& g8 = cached("gamma8").m.grading;
  size_t d8 = 0;
  for (const auto& g : g8.support())
    if (g[0] == 0 && !g8.group().is_zero(g)) d8 += g8.dim(g);
  EXPECT_EQ(g8.order_two_dim(), d8);
  const auto& g4 = cached("gamma4").m.grading;
  size_t d4 = 0;
  for (const auto& g : g4.support())
    if (g[0] == 0 && g[1] == 0 && !g4.group().is_zero(g)) d4 += g4.dim(g);
  EXPECT_EQ(g4.order_two_dim(), d4);
  EXPECT_EQ(d4, 28u);
}

TEST(Gradings, CorruptedDegreeIsCaught) {
  const auto& c = cached("gamma7");
  const auto& g = c.m.grading;
  const auto supp = g.support();
  GradedDecomposition<Q> bad(g.group(), g.ambient());
  bool moved = false;
  for (const auto& d : supp)
    for (const auto& v : g.component(d)) {
      if (!moved && !g.group().is_zero(d)) {
        Degree other = d;
        other[0] = 1 - other[0];
        bad.add(other, v);
        moved = true;
      } else {
        bad.add(d, v);
      }
    }
  const auto r = bad.verify(c.m.lie.alg());
  EXPECT_TRUE(r.direct_sum);
  EXPECT_FALSE(r.closure);
  EXPECT_FALSE(r.violations.empty());
}

TEST(Gradings, CombineProjectsToTheCompositionFactor) {
  // Projecting Gamma4 (before reordering) to the Z2^3 factor equals combining
  // with the trivial grading of Mat3(R).
  const auto t = tits(hurwitz("O"), m3r());
  const auto gc = octonion_z23_grading(t.c);
  const auto full = combine(gc, m3r_z2_grading(t.j), t);
  const auto projected = full.coarsen(gc.group(), [](const Degree& d) { return Degree(d.begin(), d.begin() + 3); });
  const auto direct = combine(gc, trivial_grading<Q>(9), t);
  EXPECT_TRUE(same_components(projected, direct));
  // And to the Mat3(R) factor.
  const auto gj = m3r_z2_grading(t.j);
  const auto to_j = full.coarsen(gj.group(), [](const Degree& d) { return Degree(d.begin() + 3, d.end()); });
  EXPECT_TRUE(same_components(to_j, combine(trivial_grading<Q>(8), gj, t)));
}

TEST(Gradings, JordanIngredients) {
  const auto j = h3(hurwitz("O"), {1, -1, 1});
  const auto z5 = intersect_gradings(jordan_z22_grading(j), jordan_z23_grading(j));
  EXPECT_EQ(z5.type_vector(), (std::vector<size_t>{24, 0, 1}));
  EXPECT_TRUE(z5.verify(j.alg()).ok());
  const auto zz = intersect_gradings(jordan_z_grading(j), jordan_z23_grading(j));
  EXPECT_TRUE(zz.verify(j.alg()).ok());
  EXPECT_EQ(zz.total_dim(), 27u);
}

TEST(Gradings, InducedOnDerivationsOfMat3) {
  const auto m = m3r();
  const auto g = induced_on_der(m3r_z2_grading(m), derivations(m.alg()));
  EXPECT_EQ(g.e_dim(), 2u);
  EXPECT_EQ(g.total_dim(), 8u);
}

TEST(Gradings, InducedZGradingContainsItsOperator) {
  const auto j = h3(hurwitz("O"), {1, -1, 1});
  const auto ders = derivations(j.alg());
  const auto g = induced_on_der(jordan_z_grading(j), ders);
  EXPECT_EQ(g.total_dim(), 52u);
  const Frame<Q> f(detail::flatten(ders), 27 * 27);
  const auto op = f.coords(jordan_z_operator(j).flat());
  EXPECT_TRUE(Subspace<Q>::span(g.component({0}), 52).contains(op));
}

TEST(Gradings, RandomCoarseningsStayGradings) {
  // Any homomorphism Z2^6 -> Z2 coarsens Gamma7 to a Z2-grading.
  const auto& c = cached("gamma7");
  gen::Gen rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<int64_t> w(6);
    for (auto& x : w) x = rng.integer(0, 1);
    const auto coarse = c.m.grading.coarsen(FinAbGroup::z2_power(1), [&](const Degree& d) {
      int64_t s = 0;
      for (size_t i = 0; i < 6; ++i) s += w[i] * d[i];
      return Degree{s % 2};
    });
    EXPECT_TRUE(coarse.verify(c.m.lie.alg()).ok());
    EXPECT_TRUE(orthogonality_violations(coarse, c.k).empty());
  }
}
