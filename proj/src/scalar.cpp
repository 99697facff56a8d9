#include "wqg/scalar.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "wqg/errors.hpp"

namespace wqg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

u128 gcd128(u128 x, u128 y) {
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits_i64(i128 v) {
  return v > static_cast<i128>(std::numeric_limits<std::int64_t>::min()) &&
         v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
}

mpq_class to_mpq_i128(i128 num, i128 den) {
  auto conv = [](i128 v) {
    bool neg = v < 0;
    u128 u = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  };
  mpq_class q(conv(num), conv(den));
  q.canonicalize();
  return q;
}

std::uint64_t mod_reduce(std::int64_t v, std::uint64_t p) {
  i128 r = static_cast<i128>(v) % static_cast<i128>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  u128 result = 1 % m;
  u128 b = base % m;
  while (e != 0) {
    if (e & 1) result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

void require_same_field(const Scalar& x, const Scalar& y) {
  if (!(x.field() == y.field())) {
    throw FieldMismatch("cannot combine " + x.field().to_string() + " and " +
                        y.field().to_string());
  }
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % n);
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
  if (p >= kMaxModulus || !is_prime_u64(p)) {
    throw InvalidInput("modulus " + std::to_string(p) + " is not a prime below 2^62");
  }
  return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "rational") return rational();
  std::string_view digits = text;
  if (digits.starts_with("F_")) {
    digits.remove_prefix(2);
  } else if (digits.starts_with("F")) {
    digits.remove_prefix(1);
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ParseError("bad field '" + std::string(text) + "'");
  }
  if (!is_prime_u64(p) || p >= kMaxModulus) throw ParseError("field modulus " + std::to_string(p) + " is not a prime below 2^62");
  return prime(p);
}

Scalar::Scalar(FieldSpec field, std::int64_t value) : field_(field) {
  if (field_.is_prime()) {
    a_ = static_cast<std::int64_t>(mod_reduce(value, field_.modulus()));
  } else if (value == std::numeric_limits<std::int64_t>::min()) {
    set_rational(mpq_class(mpz_class(std::to_string(value))));
  } else {
    a_ = value;
  }
}

Scalar::Scalar(FieldSpec field, std::int64_t num, std::int64_t den) : field_(field) {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (field_.is_prime()) {
    Scalar n(field, num);
    Scalar d(field, den);
    *this = n / d;
  } else {
    set_rational_small(num, den);
  }
}

Scalar Scalar::from_mpq(FieldSpec f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.set_rational(q);
    return s;
  }
  mpz_class p(static_cast<unsigned long>(f.modulus()));
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw DivisionByZero("denominator vanishes in " + f.to_string());
  Scalar n(f, static_cast<std::int64_t>(num.get_ui()));
  Scalar d(f, static_cast<std::int64_t>(den.get_ui()));
  return n / d;
}

void Scalar::set_rational_small(i128 num, i128 den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0) den = 1;
  if (fits_i64(num) && fits_i64(den)) {
    a_ = static_cast<std::int64_t>(num);
    b_ = static_cast<std::int64_t>(den);
    big_.reset();
  } else {
    set_rational(to_mpq_i128(num, den));
  }
}

void Scalar::set_rational(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    a_ = n.get_si();
    b_ = d.get_si();
    big_.reset();
  } else {
    a_ = 1;  // keeps is_zero() false
    b_ = 1;
    big_ = std::make_shared<const mpq_class>(q);
  }
}

mpq_class Scalar::to_mpq() const {
  if (!field_.is_rational()) throw FieldMismatch("to_mpq on " + field_.to_string());
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(a_)), mpz_class(static_cast<long>(b_)));
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime()) throw FieldMismatch("residue of a rational");
  return static_cast<std::uint64_t>(a_);
}

Scalar Scalar::parse(FieldSpec f, std::string_view text) {
  std::string t(text);
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  t = trim(t);
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = t.find('/');
  std::string num = slash == std::string::npos ? t : trim(t.substr(0, slash));
  std::string den = slash == std::string::npos ? "1" : trim(t.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class zn(num), zd(den);
  if (zd == 0) throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  try {
    return from_mpq(f, q);
  } catch (const DivisionByZero&) {
    throw ParseError("denominator of '" + std::string(text) + "' vanishes in " + f.to_string());
  }
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(static_cast<std::uint64_t>(a_));
  if (big_) return big_->get_str();
  if (b_ == 1) return std::to_string(a_);
  return std::to_string(a_) + "/" + std::to_string(b_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime()) {
    r.a_ = a_ == 0 ? 0 : static_cast<std::int64_t>(field_.modulus() - static_cast<std::uint64_t>(a_));
  } else if (big_) {
    r.set_rational(-*big_);
  } else {
    r.a_ = -a_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (field_.is_prime()) {
    r.a_ = static_cast<std::int64_t>(
        mod_pow(static_cast<std::uint64_t>(a_), field_.modulus() - 2, field_.modulus()));
  } else if (big_) {
    r.set_rational(1 / *big_);
  } else {
    r.set_rational_small(b_, a_);
  }
  return r;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  if (y.is_zero()) return x;
  if (x.is_zero()) return y;
  Scalar r;
  r.field_ = x.field_;
  if (x.field_.is_prime()) {
    std::uint64_t p = x.field_.modulus();
    std::uint64_t s = static_cast<std::uint64_t>(x.a_) + static_cast<std::uint64_t>(y.a_);
    r.a_ = static_cast<std::int64_t>(s >= p ? s - p : s);
  } else if (x.big_ || y.big_) {
    r.set_rational(x.to_mpq() + y.to_mpq());
  } else if (x.b_ == 1 && y.b_ == 1) {
    r.set_rational_small(static_cast<i128>(x.a_) + y.a_, 1);
  } else {
    r.set_rational_small(static_cast<i128>(x.a_) * y.b_ + static_cast<i128>(y.a_) * x.b_,
                         static_cast<i128>(x.b_) * y.b_);
  }
  return r;
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  if (x.is_zero()) return x;
  if (y.is_zero()) return y;
  if (x.is_one()) return y;
  if (y.is_one()) return x;
  Scalar r;
  r.field_ = x.field_;
  if (x.field_.is_prime()) {
    r.a_ = static_cast<std::int64_t>(static_cast<u128>(x.a_) * static_cast<u128>(y.a_) %
                                     x.field_.modulus());
  } else if (x.big_ || y.big_) {
    r.set_rational(x.to_mpq() * y.to_mpq());
  } else {
    r.set_rational_small(static_cast<i128>(x.a_) * y.a_, static_cast<i128>(x.b_) * y.b_);
  }
  return r;
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  return x * y.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (!(x.field_ == y.field_)) return false;
  if (x.big_ || y.big_) {
    if (!x.big_ || !y.big_) return false;  // canonical forms differ in representation
    return *x.big_ == *y.big_;
  }
  return x.a_ == y.a_ && (x.field_.is_prime() || x.b_ == y.b_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace wqg
