/**
 * @file scalar.hpp
 * @brief Exact scalar fields: the rationals Q and the Gaussian rationals Q(i).
 *
 * Rational keeps small values inline as a reduced int64 fraction and only
 * falls back to a GMP rational when a numerator or denominator leaves the
 * int64 range. Every result is reduced with a positive denominator.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace e6r {

/// Raised by division or inversion with a zero divisor.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline bool fits_i64(i128 v) {
  return v > static_cast<i128>(std::numeric_limits<int64_t>::min()) &&
         v <= static_cast<i128>(std::numeric_limits<int64_t>::max());
}

inline u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

inline u128 gcd128(u128 a, u128 b) {
  while ((a >> 64) != 0 || (b >> 64) != 0) {
    if (b == 0) return a;
    u128 t = a % b;
    a = b;
    b = t;
  }
  return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
}

inline mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  hi <<= 64;
  hi += mpz_class(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  return neg ? mpz_class(-hi) : hi;
}

}  // namespace detail

class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I n) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<I> && sizeof(I) >= sizeof(int64_t)) {
      if (n > static_cast<I>(std::numeric_limits<int64_t>::max())) {
        big_ = std::make_unique<mpq_class>(mpz_class(static_cast<unsigned long>(n)));
        return;
      }
    }
    num_ = static_cast<int64_t>(n);
  }

  Rational(int64_t n, int64_t d) { assign(static_cast<detail::i128>(n), static_cast<detail::i128>(d)); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t()) &&
        q.get_num() != mpz_class(std::numeric_limits<long>::min())) {
      r.num_ = q.get_num().get_si();
      r.den_ = q.get_den().get_si();
    } else {
      r.big_ = std::make_unique<mpq_class>(std::move(q));
    }
    return r;
  }

  /// Parses "p", "-p" or "p/q"; returns nullopt on malformed text or q = 0.
  static std::optional<Rational> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    return from_mpq(std::move(q));
  }

  bool is_small() const { return !big_; }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
  }

  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

  /// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_) return from_mpq(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  std::optional<Rational> try_inv() const {
    if (is_zero()) return std::nullopt;
    if (big_) return from_mpq(1 / *big_);
    Rational r;
    if (num_ < 0) {
      r.num_ = -den_;
      r.den_ = -num_;
    } else {
      r.num_ = den_;
      r.den_ = num_;
    }
    return r;
  }

  Rational inv() const {
    auto r = try_inv();
    if (!r) throw DivisionByZero();
    return std::move(*r);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using detail::i128;
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_int128(static_cast<i128>(a.num_) + b.num_);
      if (a.den_ == b.den_) {
        Rational r;
        r.assign(static_cast<i128>(a.num_) + b.num_, a.den_);
        return r;
      }
      Rational r;
      r.assign(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
               static_cast<i128>(a.den_) * b.den_);
      return r;
    }
    return from_mpq(a.to_mpq() + b.to_mpq());
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    using detail::i128;
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_int128(static_cast<i128>(a.num_) - b.num_);
      Rational r;
      r.assign(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
               static_cast<i128>(a.den_) * b.den_);
      return r;
    }
    return from_mpq(a.to_mpq() - b.to_mpq());
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    using detail::i128;
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      if (a.den_ == 1 && b.den_ == 1) return from_int128(static_cast<i128>(a.num_) * b.num_);
      const int64_t g1 = std::gcd(a.num_, b.den_);
      const int64_t g2 = std::gcd(b.num_, a.den_);
      const i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
      const i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
      if (detail::fits_i64(n) && detail::fits_i64(d)) {
        Rational r;
        r.num_ = static_cast<int64_t>(n);
        r.den_ = static_cast<int64_t>(d);
        return r;
      }
      return from_mpq(mpq_class(detail::to_mpz(n), detail::to_mpz(d)));
    }
    return from_mpq(a.to_mpq() * b.to_mpq());
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms: a big value never equals a small one
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    using detail::i128;
    if (!a.big_ && !b.big_) {
      const i128 l = static_cast<i128>(a.num_) * b.den_;
      const i128 r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_int128(detail::i128 n) {
    Rational r;
    if (detail::fits_i64(n)) {
      r.num_ = static_cast<int64_t>(n);
    } else {
      r.big_ = std::make_unique<mpq_class>(detail::to_mpz(n));
    }
    return r;
  }

  void assign(detail::i128 n, detail::i128 d) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    const detail::u128 g = detail::gcd128(detail::abs128(n), static_cast<detail::u128>(d));
    n /= static_cast<detail::i128>(g);
    d /= static_cast<detail::i128>(g);
    if (detail::fits_i64(n) && detail::fits_i64(d)) {
      num_ = static_cast<int64_t>(n);
      den_ = static_cast<int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_unique<mpq_class>(detail::to_mpz(n), detail::to_mpz(d));
      big_->canonicalize();
    }
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

/// Element re + i*im of Q(i). There is no implicit conversion from Rational;
/// use lift() to embed Q into Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  template <std::integral I>
  GaussRational(I n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  std::optional<GaussRational> try_inv() const {
    if (is_zero()) return std::nullopt;
    const Rational n = norm().inv();
    return GaussRational(re_ * n, -(im_ * n));
  }
  GaussRational inv() const {
    auto r = try_inv();
    if (!r) throw DivisionByZero();
    return std::move(*r);
  }

  GaussRational operator-() const { return {-re_, -im_}; }
  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_, Rational()};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) { return a * b.inv(); }
  GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
  GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
  GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }
  GaussRational& operator/=(const GaussRational& b) { return *this = *this / b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) = default;

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? "" : re_.str() + (im_.sign() > 0 ? "+" : "");
    if (im_.is_one()) return s + "i";
    if ((-im_).is_one()) return s + "-i";
    return s + im_.str() + "i";
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

 private:
  Rational re_;
  Rational im_;
};

inline GaussRational lift(const Rational& r) { return {r, Rational()}; }

inline Rational conj(const Rational& r) { return r; }
inline GaussRational conj(const GaussRational& z) { return z.conj(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

/// The two scalar fields used throughout the library.
template <class S>
concept ExactField = std::same_as<S, Rational> || std::same_as<S, GaussRational>;

template <class S>
struct FieldName;
template <>
struct FieldName<Rational> {
  static constexpr const char* value = "Q";
};
template <>
struct FieldName<GaussRational> {
  static constexpr const char* value = "Qi";
};

}  // namespace e6r
