#include "nichols/exactlin/field.hpp"

#include <charconv>
#include <string>

namespace nichols {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

// Deterministic Miller-Rabin; these witnesses are exact for all 64-bit n.
bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kModulusLimit || !is_prime(p)) {
    throw ParseError("field modulus " + std::to_string(p) + " is not a prime below 2^61");
  }
  return FieldSpec(Kind::Prime, p);
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "F_" + std::to_string(p_);
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const FieldSpec& field, long long v) : v_(static_cast<long>(v)) {
  if (!field.is_rationals()) throw FieldMismatch("rational scalar requested over " + field.to_string());
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text, const FieldSpec& field) {
  if (!field.is_rationals()) throw FieldMismatch("rational literal parsed over " + field.to_string());
  std::string_view t = trim(text);
  std::string_view num = t;
  std::string_view den = "1";
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    num = trim(t.substr(0, slash));
    den = trim(t.substr(slash + 1));
  }
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) { return (!s.empty() && s.front() == '+') ? s.substr(1) : s; };
  mpz_class n(std::string(strip_plus(num)), 10);
  mpz_class d(std::string(strip_plus(den)), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::operator-() const {
  Rational r = *this;
  mpq_neg(r.v_.get_mpq_t(), r.v_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
}

std::string Rational::to_string() const { return v_.get_str(10); }

// -------------------------------------------------------------------- ModP

ModP::ModP(const FieldSpec& field, long long v) : v_(0), p_(field.modulus()) {
  if (field.is_rationals()) throw FieldMismatch("residue requested over Q");
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  v_ = static_cast<std::uint64_t>(r);
}

ModP ModP::parse(std::string_view text, const FieldSpec& field) {
  if (field.is_rationals()) throw FieldMismatch("residue literal parsed over Q");
  std::string_view t = trim(text);
  if (!is_integer_literal(t)) throw ParseError("malformed residue literal '" + std::string(text) + "'");
  bool negative = t.front() == '-';
  if (t.front() == '-' || t.front() == '+') t.remove_prefix(1);
  mpz_class z(std::string(t), 10);
  const std::uint64_t p = field.modulus();
  mpz_class r = z % mpz_class(std::to_string(p), 10);
  std::uint64_t v = std::stoull(r.get_str(10));
  if (negative && v != 0) v = p - v;
  return ModP(v, p, 0);
}

void ModP::check(const ModP& o) const {
  if (p_ != o.p_) {
    throw FieldMismatch("mixed prime fields F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
  }
}

ModP ModP::inverse() const {
  if (v_ == 0) throw DivisionByZero("inverse of zero residue");
  // Extended Euclid on signed 128-bit values.
  __int128 a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    __int128 q = a / m;
    __int128 t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  __int128 r = x0 % static_cast<__int128>(p_);
  if (r < 0) r += p_;
  return ModP(static_cast<std::uint64_t>(r), p_, 0);
}

ModP ModP::operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_, 0); }

ModP& ModP::operator+=(const ModP& o) {
  check(o);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  check(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  check(o);
  v_ = mul(v_, o.v_, p_);
  return *this;
}

ModP& ModP::operator/=(const ModP& o) {
  check(o);
  return *this *= o.inverse();
}

void ModP::add_mul(const ModP& a, const ModP& b) {
  check(a);
  check(b);
  v_ += mul(a.v_, b.v_, p_);
  if (v_ >= p_) v_ -= p_;
}

void ModP::sub_mul(const ModP& a, const ModP& b) {
  check(a);
  check(b);
  const std::uint64_t t = mul(a.v_, b.v_, p_);
  v_ = v_ >= t ? v_ - t : v_ + p_ - t;
}

}  // namespace nichols
