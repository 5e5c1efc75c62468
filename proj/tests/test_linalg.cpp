#include <gtest/gtest.h>

#include "e6r/linalg.hpp"
#include "support.hpp"

using namespace e6r;
using Q = Rational;

namespace {

Matrix<Q> diag(std::initializer_list<long> d) {
  Matrix<Q> m(d.size(), d.size());
  size_t i = 0;
  for (long x : d) {
    m(i, i) = Q(x);
    ++i;
  }
  return m;
}

}  // namespace

TEST(Rref, PicksLeftmostPivots) {
  Matrix<Q> m(2, 3);
  m(0, 1) = Q(2);
  m(0, 2) = Q(4);
  m(1, 0) = Q(1);
  m(1, 2) = Q(1);
  auto piv = rref_inplace(m);
  ASSERT_EQ(piv, (std::vector<size_t>{0, 1}));
  EXPECT_EQ(m(0, 0), Q(1));
  EXPECT_EQ(m(0, 2), Q(1));
  EXPECT_EQ(m(1, 1), Q(1));
  EXPECT_EQ(m(1, 2), Q(2));
}

TEST(Kernel, SolvesHomogeneousSystem) {
  gen::Gen g(11);
  for (int n = 0; n < 40; ++n) {
    Matrix<Q> m = g.matrix(3, 6);
    auto k = kernel_basis(m);
    EXPECT_EQ(k.size() + rank(m), 6u);
    for (const auto& v : k) EXPECT_TRUE(is_zero_vec(m.apply(v)));
  }
}

TEST(Inverse, Roundtrip) {
  gen::Gen g(12);
  for (int n = 0; n < 20; ++n) {
    Matrix<Q> m = g.invertible(5);
    EXPECT_EQ(m * inverse(m), Matrix<Q>::identity(5));
  }
  EXPECT_THROW(inverse(Matrix<Q>(2, 2)), LinalgError);
}

TEST(Subspace, IntersectionAndSum) {
  const size_t n = 4;
  auto e = [&](size_t i) { return unit_vector<Q>(n, i); };
  auto a = Subspace<Q>::span({e(0), e(1)}, n);
  auto b = Subspace<Q>::span({e(1) + e(2), e(0) + e(1) + e(2)}, n);
  auto c = intersect(a, b);
  EXPECT_EQ(c.dim(), 1u);
  EXPECT_TRUE(c.contains(e(0)));
  EXPECT_EQ((a + b).dim(), 3u);
  EXPECT_TRUE(a.contains(c));
}

TEST(Subspace, PropertyIntersectionDimension) {
  gen::Gen g(13);
  for (int n = 0; n < 30; ++n) {
    std::vector<Vec<Q>> av, bv;
    for (int i = 0; i < 3; ++i) av.push_back(g.vec(6, 2));
    for (int i = 0; i < 4; ++i) bv.push_back(g.vec(6, 2));
    auto a = Subspace<Q>::span(av, 6);
    auto b = Subspace<Q>::span(bv, 6);
    auto c = intersect(a, b);
    EXPECT_EQ(c.dim() + (a + b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(c));
    EXPECT_TRUE(b.contains(c));
  }
}

TEST(Frame, CoordinatesRecombine) {
  gen::Gen g(14);
  for (int n = 0; n < 20; ++n) {
    Matrix<Q> m = g.invertible(4);
    std::vector<Vec<Q>> vs;
    for (size_t i = 0; i < 3; ++i) vs.push_back(m.row(i));
    Frame<Q> f(vs, 4);
    Vec<Q> c = g.vec(3);
    EXPECT_EQ(f.coords(f.combine(c)), c);
    EXPECT_FALSE(f.try_coords(m.row(3)).has_value());
  }
}

TEST(SparseEchelon, MatchesDenseKernel) {
  gen::Gen g(15);
  for (int n = 0; n < 30; ++n) {
    Matrix<Q> m = g.matrix(7, 10, 1);
    SparseEchelon<Q> ech(10);
    for (size_t r = 0; r < 7; ++r) ech.add_row(to_terms(m.row(r)));
    EXPECT_EQ(ech.rank(), rank(m));
    EXPECT_EQ(ech.kernel(), kernel_basis(m));
  }
}

TEST(Inertia, Basics) {
  EXPECT_EQ(inertia(Matrix<Q>::identity(5)), (InertiaResult{5, 0, 0}));
  EXPECT_EQ(inertia(diag({1, -1})).signature(), 0);
  Matrix<Q> hyp(2, 2);
  hyp(0, 1) = hyp(1, 0) = Q(1);
  EXPECT_EQ(inertia(hyp), (InertiaResult{1, 1, 0}));
  EXPECT_EQ(inertia(Matrix<Q>(3, 3)), (InertiaResult{0, 0, 3}));
  Matrix<Q> ns(2, 2);
  ns(0, 1) = Q(1);
  EXPECT_THROW(inertia(ns), LinalgError);
}

TEST(Inertia, PropertyCongruenceInvariant) {
  gen::Gen g(16);
  for (int n = 0; n < 40; ++n) {
    Matrix<Q> m = g.symmetric(6, 2);
    for (size_t i = 0; i < 6; i += 2) m(i, i) = Q(0);
    Matrix<Q> p = g.invertible(6, 2);
    auto a = inertia(m);
    auto b = inertia(p.transpose() * m * p);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 6u);
    EXPECT_EQ(a.n_zero, 6 - rank(m));
  }
}

TEST(Proportionality, DetectsConstantRatio) {
  Matrix<Q> a = diag({2, 4});
  Matrix<Q> b = diag({1, 2});
  EXPECT_EQ(proportionality(a, b), Q(2));
  a(0, 1) = Q(1);
  EXPECT_FALSE(proportionality(a, b).has_value());
}
