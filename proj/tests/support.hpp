// Shared helpers for the unit tests: seeded generators for small exact values.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "e6r/linalg.hpp"

namespace e6r::gen {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  int64_t integer(int64_t lo, int64_t hi) { return std::uniform_int_distribution<int64_t>(lo, hi)(rng_); }

  Rational rational(int64_t bound = 9) {
    const int64_t num = integer(-bound, bound);
    const int64_t den = integer(1, bound);
    return Rational(num, den);
  }

  Rational nonzero_rational(int64_t bound = 9) {
    for (;;) {
      Rational r = rational(bound);
      if (!r.is_zero()) return r;
    }
  }

  GaussRational gauss(int64_t bound = 9) { return {rational(bound), rational(bound)}; }

  Matrix<Rational> matrix(size_t r, size_t c, int64_t bound = 3) {
    Matrix<Rational> m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m(i, j) = Rational(integer(-bound, bound));
    return m;
  }

  Matrix<Rational> invertible(size_t n, int64_t bound = 3) {
    for (;;) {
      Matrix<Rational> m = matrix(n, n, bound);
      if (rank(m) == n) return m;
    }
  }

  Matrix<Rational> symmetric(size_t n, int64_t bound = 3) {
    Matrix<Rational> m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(integer(-bound, bound));
    return m;
  }

  Vec<Rational> vec(size_t n, int64_t bound = 3) {
    Vec<Rational> v(n);
    for (auto& x : v) x = Rational(integer(-bound, bound));
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace e6r::gen
