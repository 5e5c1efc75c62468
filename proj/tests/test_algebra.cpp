#include <gtest/gtest.h>

#include "e6r/algebra.hpp"
#include "support.hpp"

using namespace e6r;
using Q = Rational;

namespace {

// sl2 with basis {h, e, f}.
LieAlgebra<Q> sl2() {
  StructAlgebra<Q> a({"h", "e", "f"});
  auto set = [&](size_t i, size_t j, Vec<Q> v) {
    a.set_product(i, j, v);
    a.set_product(j, i, scaled(Q(-1), v));
  };
  set(0, 1, {0, 2, 0});
  set(0, 2, {0, 0, -2});
  set(1, 2, {1, 0, 0});
  return LieAlgebra<Q>(a);
}

// 2x2 matrices as an associative algebra on E11, E12, E21, E22.
StructAlgebra<Q> mat2() {
  StructAlgebra<Q> a({"E11", "E12", "E21", "E22"});
  for (size_t p = 0; p < 2; ++p)
    for (size_t q = 0; q < 2; ++q)
      for (size_t r = 0; r < 2; ++r)
        for (size_t s = 0; s < 2; ++s)
          if (q == r) a.add_entry(2 * p + q, 2 * r + s, 2 * p + s, Q(1));
  return a;
}

}  // namespace

TEST(Multiply, ZeroIsAbsorbing) {
  auto a = mat2();
  gen::Gen g(21);
  EXPECT_TRUE(is_zero_vec(a.multiply(Vec<Q>(4), g.vec(4))));
}

TEST(Jacobi, Sl2IsLie) { EXPECT_TRUE(jacobi_defect(sl2()).empty()); }

TEST(Jacobi, PerturbationIsDetected) {
  auto l = sl2();
  StructAlgebra<Q> a = l.alg();
  a.set_product(0, 1, Vec<Q>{0, 3, 0});
  a.set_product(1, 0, Vec<Q>{0, -3, 0});
  EXPECT_FALSE(jacobi_defect(a).empty());
}

TEST(Killing, Sl2MatchesHandExpansion) {
  // ad h = diag(0,2,-2); ad e: h->-2e, f->h; ad f: h->2f, e->-h.
  Matrix<Q> adh(3, 3), ade(3, 3), adf(3, 3);
  adh(1, 1) = Q(2);
  adh(2, 2) = Q(-2);
  ade(1, 0) = Q(-2);
  ade(0, 2) = Q(1);
  adf(2, 0) = Q(2);
  adf(0, 1) = Q(-1);
  auto l = sl2();
  EXPECT_EQ(l.ad(0), adh);
  EXPECT_EQ(l.ad(1), ade);
  EXPECT_EQ(l.ad(2), adf);
  std::vector<Matrix<Q>> ads{adh, ade, adf};
  Matrix<Q> oracle(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) oracle(i, j) = (ads[i] * ads[j]).trace();
  Matrix<Q> k = killing_matrix(l);
  EXPECT_EQ(k, oracle);
  Matrix<Q> expect(3, 3);
  expect(0, 0) = Q(8);
  expect(1, 2) = expect(2, 1) = Q(4);
  EXPECT_EQ(k, expect);
  EXPECT_EQ(inertia(k).signature(), 1);
}

TEST(Killing, AbelianIsZero) {
  LieAlgebra<Q> ab(StructAlgebra<Q>(4));
  EXPECT_TRUE(killing_matrix(ab).is_zero());
}

TEST(Killing, ParallelMatchesSequential) {
  auto l = sl2();
  setenv("E6_THREADS", "3", 1);
  Matrix<Q> a = killing_matrix(l);
  setenv("E6_THREADS", "1", 1);
  EXPECT_EQ(a, killing_matrix(l));
  unsetenv("E6_THREADS");
}

TEST(Derivations, OfMat2AreInner) {
  auto a = mat2();
  auto ders = derivations(a);
  EXPECT_EQ(ders.size(), 3u);
  for (const auto& d : ders) EXPECT_TRUE(is_derivation(a, d));
  for (const auto& d : ders)
    for (const auto& e : ders) {
      std::vector<Vec<Q>> flat;
      for (const auto& x : ders) flat.push_back(x.flat());
      EXPECT_TRUE(Subspace<Q>::span(flat, 16).contains(commutator(d, e).flat()));
    }
}

TEST(Derivations, OfSl2AreAd) {
  auto l = sl2();
  auto ders = derivations(l.alg());
  EXPECT_EQ(ders.size(), 3u);
  auto lie = matrix_lie_algebra(ders);
  EXPECT_TRUE(jacobi_defect(lie).empty());
  EXPECT_EQ(inertia(killing_matrix(lie)).signature(), 1);
}

TEST(Twist, IdentityForOne) {
  auto l = sl2();
  Z2Split even{true, false, false};
  EXPECT_EQ(twist(l, even, Q(1)).alg(), l.alg());
}

TEST(Twist, RejectsNonGrading) {
  Z2Split bad{false, true, false};
  EXPECT_THROW(twist(sl2(), bad, Q(-1)), AlgebraError);
}

TEST(Twist, SignatureIdentityOnSl2) {
  // sign(k) + sign(k^-1) = 2 sign(k|even) for both Z2-gradings of sl2.
  auto l = sl2();
  Z2Split cartan_even{true, false, false};
  auto t = twist(l, cartan_even, Q(-1));
  EXPECT_TRUE(jacobi_defect(t).empty());
  EXPECT_EQ(killing_signature(l), 1);
  EXPECT_EQ(killing_signature(t), 1);
  Matrix<Q> k = killing_matrix(l);
  EXPECT_TRUE(k(0, 1).is_zero() && k(0, 2).is_zero());

  // Basis {e - f, h, e + f}: even part spanned by the compact generator e - f.
  auto c = LieAlgebra<Q>(change_basis(l.alg(), {{0, 1, -1}, {1, 0, 0}, {0, 1, 1}}));
  Z2Split rotation_even{true, false, false};
  auto su2 = twist(c, rotation_even, Q(-1));
  EXPECT_TRUE(jacobi_defect(su2).empty());
  EXPECT_EQ(killing_signature(c), 1);
  EXPECT_EQ(killing_signature(su2), -3);
}

TEST(Fixed, IdentityFixesEverything) {
  EXPECT_EQ(fixed_subspace(Matrix<Q>::identity(5)).dim(), 5u);
  EXPECT_EQ(signature_from_fix(78, 52), -26);
  EXPECT_EQ(signature_from_fix(78, 36), 6);
  EXPECT_EQ(signature_from_fix(78, 78), -78);
  EXPECT_THROW(signature_from_fix(3, 4), AlgebraError);
}

TEST(Automorphism, KillingInvariant) {
  // Chevalley involution of sl2: h -> -h, e -> -f, f -> -e.
  auto l = sl2();
  Matrix<Q> w(3, 3);
  w(0, 0) = Q(-1);
  w(2, 1) = Q(-1);
  w(1, 2) = Q(-1);
  ASSERT_TRUE(is_automorphism(l.alg(), w));
  Matrix<Q> k = killing_matrix(l);
  EXPECT_EQ(w.transpose() * k * w, k);
  EXPECT_EQ(fixed_subspace(w).dim(), 1u);
  Matrix<Q> bad = Matrix<Q>::identity(3);
  bad(0, 0) = Q(2);
  EXPECT_FALSE(is_automorphism(l.alg(), bad));
}
