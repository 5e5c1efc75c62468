#include <gtest/gtest.h>

#include <array>

#include "e6r/composition.hpp"
#include "support.hpp"

using namespace e6r;
using Q = Rational;

namespace {

// Independent oracle: octonions as pairs of quaternions, multiplied through
// the three l-rules applied term by term.
using Quat = std::array<long, 4>;  // 1, i, j, k

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}
Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }
Quat qadd(const Quat& a, const Quat& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
Quat qneg(const Quat& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

// x = x1 + x2 l
std::array<long, 8> omul_oracle(size_t p, size_t q) {
  Quat x1{}, x2{}, y1{}, y2{};
  (p < 4 ? x1 : x2)[p % 4] = 1;
  (q < 4 ? y1 : y2)[q % 4] = 1;
  // x1 y1 + x1 (y2 l) + (x2 l) y1 + (x2 l)(y2 l)
  Quat re = qadd(qmul(x1, y1), qneg(qmul(qconj(y2), x2)));  // (q1 l)(q2 l) = -q2^ q1
  Quat im = qadd(qmul(y2, x1), qmul(x2, qconj(y1)));        // q1 (q2 l) = (q2 q1) l ; (q2 l) q1 = (q2 q1^) l
  std::array<long, 8> out{};
  for (size_t i = 0; i < 4; ++i) {
    out[i] = re[i];
    out[4 + i] = im[i];
  }
  return out;
}

Vec<Q> vec_of(const std::array<long, 8>& a) {
  Vec<Q> v;
  for (long x : a) v.push_back(Q(x));
  return v;
}

}  // namespace

TEST(Octonions, MatchTheLRules) {
  auto o = hurwitz("O");
  for (size_t p = 0; p < 8; ++p)
    for (size_t q = 0; q < 8; ++q)
      EXPECT_EQ(o.mul(o.basis_vector(p), o.basis_vector(q)), vec_of(omul_oracle(p, q))) << p << "," << q;
}

TEST(Octonions, NamedProducts) {
  auto o = hurwitz("O");
  auto e = [&](size_t i) { return o.basis_vector(i); };
  EXPECT_EQ(o.mul(e(1), e(2)), e(3));                      // i j = k
  EXPECT_EQ(o.mul(e(4), e(1)), scaled(Q(-1), e(5)));       // l i = -(il)
  EXPECT_EQ(o.mul(e(5), e(6)), scaled(Q(-1), e(3)));       // (il)(jl) = -k
  EXPECT_EQ(o.norm(e(4)), Q(1));                           // n(l) = 1
  EXPECT_EQ(o.alg().labels()[5], "il");
}

TEST(RR, ComponentwiseProduct) {
  auto rr = hurwitz("RR");
  EXPECT_TRUE(is_zero_vec(rr.mul(rr_element(1, 0), rr_element(0, 1))));
  EXPECT_EQ(rr.mul(rr_element(2, 3), rr_element(5, 7)), rr_element(10, 21));
  EXPECT_EQ(rr.norm(rr_element(3, 5)), Q(15));
}

TEST(Hurwitz, UnknownNameThrows) { EXPECT_THROW(hurwitz("X"), UnknownAlgebra); }

class AllHurwitz : public ::testing::TestWithParam<std::string> {};

TEST_P(AllHurwitz, LinearizedCompositionLaw) {
  // n(xy, zw) + n(xw, zy) = 2 n(x, z) n(y, w) on basis quadruples.
  auto c = hurwitz(GetParam());
  const size_t n = c.dim();
  std::vector<Vec<Q>> e;
  for (size_t i = 0; i < n; ++i) e.push_back(c.basis_vector(i));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z)
        for (size_t w = 0; w < n; ++w) {
          Q lhs = c.norm(c.mul(e[x], e[y]), c.mul(e[z], e[w])) + c.norm(c.mul(e[x], e[w]), c.mul(e[z], e[y]));
          EXPECT_EQ(lhs, Q(2) * c.norm(e[x], e[z]) * c.norm(e[y], e[w]));
        }
}

TEST_P(AllHurwitz, QuadraticEquationAndConjugation) {
  auto c = hurwitz(GetParam());
  gen::Gen g(31);
  for (int t = 0; t < 30; ++t) {
    Vec<Q> a = g.vec(c.dim());
    Vec<Q> lhs = c.mul(a, a) - scaled(c.trace(a), a) + scaled(c.norm(a), c.unit());
    EXPECT_TRUE(is_zero_vec(lhs));
    EXPECT_EQ(c.mul(a, c.conj(a)), scaled(c.norm(a), c.unit()));
    Vec<Q> b = g.vec(c.dim());
    EXPECT_EQ(c.trace(c.mul(a, b)), c.trace(c.mul(b, a)));
    EXPECT_EQ(c.norm(c.mul(a, b)), c.norm(a) * c.norm(b));
  }
}

TEST_P(AllHurwitz, DabAreDerivations) {
  auto c = hurwitz(GetParam());
  for (size_t a = 0; a < c.dim(); ++a) {
    EXPECT_TRUE(c.d_ab(c.basis_vector(a), c.basis_vector(a)).is_zero());
    for (size_t b = 0; b < c.dim(); ++b) EXPECT_TRUE(is_derivation(c.alg(), c.d_ab(c.basis_vector(a), c.basis_vector(b))));
  }
}

INSTANTIATE_TEST_SUITE_P(Names, AllHurwitz, ::testing::ValuesIn(hurwitz_names()));

TEST(Hurwitz, NormSignatures) {
  EXPECT_EQ(inertia(hurwitz("O").norm_gram()), (InertiaResult{8, 0, 0}));
  EXPECT_EQ(inertia(hurwitz("Os").norm_gram()).signature(), 0);
  EXPECT_EQ(inertia(hurwitz("M2R").norm_gram()).signature(), 0);
  EXPECT_EQ(inertia(hurwitz("RR").norm_gram()).signature(), 0);
}

TEST(Derivations, OctonionsHaveDimension14) {
  auto o = hurwitz("O");
  auto ders = derivations(o.alg());
  EXPECT_EQ(ders.size(), 14u);
  std::vector<Vec<Q>> dab;
  for (size_t a = 0; a < 8; ++a)
    for (size_t b = 0; b < 8; ++b) dab.push_back(o.d_ab(o.basis_vector(a), o.basis_vector(b)).flat());
  EXPECT_EQ(rank_of(dab, 64), 14u);
  auto span = Subspace<Q>::span(dab, 64);
  for (const auto& d : ders) EXPECT_TRUE(span.contains(d.flat()));
  for (const auto& d : ders)
    for (const auto& e : ders) EXPECT_TRUE(span.contains(commutator(d, e).flat()));
}

TEST(Derivations, CommutativeAssociativeHaveNone) {
  EXPECT_TRUE(derivations(hurwitz("RR").alg()).empty());
  EXPECT_TRUE(derivations(hurwitz("C").alg()).empty());
  auto rr = hurwitz("RR");
  EXPECT_TRUE(rr.d_ab(rr.basis_vector(0), rr.basis_vector(1)).is_zero());
}

TEST(OctonionGrading, DegreesAndClosure) {
  auto o = hurwitz("O");
  auto g = octonion_z23_grading(o);
  EXPECT_TRUE(g.verify(o.alg()).ok());
  EXPECT_EQ(g.component({1, 0, 0}), std::vector<Vec<Q>>{o.basis_vector(1)});
  EXPECT_EQ(g.component({1, 1, 1}), std::vector<Vec<Q>>{o.basis_vector(7)});
  EXPECT_EQ(g.group().add({1, 0, 0}, {0, 1, 0}), (Degree{1, 1, 0}));
  EXPECT_EQ(g.type_vector(), std::vector<size_t>{8});
}

TEST(OctonionGrading, CorruptedDegreeIsReported) {
  auto o = hurwitz("O");
  GradedDecomposition<Q> g(FinAbGroup::z2_power(3), 8);
  for (size_t i = 0; i < 8; ++i) g.add(i == 3 ? Degree{0, 0, 1} : octonion_degrees()[i], o.basis_vector(i));
  auto rep = g.verify(o.alg());
  EXPECT_TRUE(rep.direct_sum);
  EXPECT_FALSE(rep.closure);
}

TEST(OctonionGrading, InducedOnDer) {
  auto o = hurwitz("O");
  auto ders = derivations(o.alg());
  auto ind = induced_on_der(octonion_z23_grading(o), ders);
  EXPECT_EQ(ind.e_dim(), 0u);
  EXPECT_EQ(ind.type_vector(), (std::vector<size_t>{0, 7}));
  // Brute force: d in Der(O)_g iff d maps O_h into O_{g+h} for all h.
  for (const auto& [g, vs] : ind.components())
    for (const auto& c : vs) {
      Matrix<Q> d(8, 8);
      for (size_t i = 0; i < ders.size(); ++i) d = d + c[i] * ders[i];
      for (size_t h = 0; h < 8; ++h) {
        Vec<Q> img = d.col(h);
        const Degree target = ind.group().add(g, octonion_degrees()[h]);
        for (size_t k = 0; k < 8; ++k)
          if (!img[k].is_zero()) {
            EXPECT_EQ(octonion_degrees()[k], target);
          }
      }
    }
}
