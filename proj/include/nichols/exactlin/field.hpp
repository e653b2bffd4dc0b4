#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "nichols/errors.hpp"

namespace nichols {

bool is_prime(std::uint64_t n) noexcept;

/// The base field: the rationals, or F_p for a prime 2 <= p < 2^61.
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 61;

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }
  /// Throws ParseError unless p is a prime below 2^61.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  /// "Q" or "F_p".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class ModP;
  FieldSpec(Kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// Element of Q, always kept in canonical form (gcd(num, den) = 1, den > 0).
class Rational {
 public:
  Rational() = default;
  /// Integer `v` viewed in `field`, which must be the rationals.
  Rational(const FieldSpec& field, long long v);
  explicit Rational(mpq_class v);

  /// Accepts "a" or "a/b" with optional leading sign.
  static Rational parse(std::string_view text, const FieldSpec& field);

  FieldSpec field() const noexcept { return FieldSpec::rationals(); }
  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  const mpq_class& value() const noexcept { return v_; }

  Rational inverse() const;
  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  /// *this += a * b
  void add_mul(const Rational& a, const Rational& b);
  /// *this -= a * b
  void sub_mul(const Rational& a, const Rational& b);

  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_;
};

/// Residue class in F_p, stored as the canonical representative 0..p-1.
class ModP {
 public:
  /// `v` reduced into `field`, which must be a prime field.
  ModP(const FieldSpec& field, long long v);

  /// Decimal integer, reduced mod p (a leading '-' is allowed).
  static ModP parse(std::string_view text, const FieldSpec& field);

  FieldSpec field() const noexcept { return FieldSpec(FieldSpec::Kind::Prime, p_); }
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t residue() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  ModP inverse() const;
  ModP operator-() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o);

  void add_mul(const ModP& a, const ModP& b);
  void sub_mul(const ModP& a, const ModP& b);

  std::string to_string() const { return std::to_string(v_); }

  friend bool operator==(const ModP& a, const ModP& b) noexcept {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }

 private:
  ModP(std::uint64_t v, std::uint64_t p, int) noexcept : v_(v), p_(p) {}
  void check(const ModP& o) const;
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

template <class T>
concept FieldScalar = std::copy_constructible<T> && std::equality_comparable<T> &&
                      requires(T a, const T& b, const FieldSpec& f, std::string_view s) {
                        T(f, 0LL);
                        { T::parse(s, f) } -> std::same_as<T>;
                        { b.field() } -> std::same_as<FieldSpec>;
                        { b.is_zero() } -> std::same_as<bool>;
                        { b.is_one() } -> std::same_as<bool>;
                        { b.inverse() } -> std::same_as<T>;
                        { -b } -> std::same_as<T>;
                        a += b;
                        a -= b;
                        a *= b;
                        a /= b;
                        a.add_mul(b, b);
                        a.sub_mul(b, b);
                        { b.to_string() } -> std::same_as<std::string>;
                      };

template <FieldScalar T>
T operator+(T a, const T& b) {
  a += b;
  return a;
}
template <FieldScalar T>
T operator-(T a, const T& b) {
  a -= b;
  return a;
}
template <FieldScalar T>
T operator*(T a, const T& b) {
  a *= b;
  return a;
}
template <FieldScalar T>
T operator/(T a, const T& b) {
  a /= b;
  return a;
}

/// x^e for e >= 0.
template <FieldScalar T>
T power(const T& x, std::size_t e) {
  T result(x.field(), 1);
  T base = x;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<ModP>);

}  // namespace nichols
