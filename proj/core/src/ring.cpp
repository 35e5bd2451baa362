#include "ainfty/ring.hpp"

#include <charconv>

namespace ainfty {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// Inverse mod p via extended Euclid; a in [1, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw NotInvertible("element has no inverse mod p");
  return mod_reduce(old_s, p);
}

BigInt parse_big(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar literal");
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ParseError("sign without digits in scalar literal");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError("bad digit in scalar literal: " + std::string(text));
    v = v * 10 + (c - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

RingSpec RingSpec::prime_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw ValidationError("prime_field modulus must be a prime below 2^31");
  }
  return {RingKind::prime_field, p};
}

std::string RingSpec::name() const {
  switch (kind) {
    case RingKind::rationals:
      return "Q";
    case RingKind::integers:
      return "Z";
    case RingKind::prime_field:
      return "F" + std::to_string(p);
  }
  return "?";
}

Scalar Scalar::zero(const RingSpec& ring) { return from_int(ring, 0); }

Scalar Scalar::one(const RingSpec& ring) { return from_int(ring, 1); }

Scalar Scalar::from_int(const RingSpec& ring, long long n) {
  switch (ring.kind) {
    case RingKind::rationals:
      return Scalar(ring, BigRat(n));
    case RingKind::integers:
      return Scalar(ring, BigInt(n));
    case RingKind::prime_field:
      return Scalar(ring, mod_reduce(n, ring.p));
  }
  throw Error("unreachable ring kind");
}

Scalar Scalar::from_big(const RingSpec& ring, const BigInt& n) {
  switch (ring.kind) {
    case RingKind::rationals:
      return Scalar(ring, BigRat(n));
    case RingKind::integers:
      return Scalar(ring, n);
    case RingKind::prime_field: {
      BigInt r = n % ring.p;
      if (r < 0) r += ring.p;
      return Scalar(ring, static_cast<std::int64_t>(r));
    }
  }
  throw Error("unreachable ring kind");
}

Scalar Scalar::from_string(const RingSpec& ring, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return from_big(ring, parse_big(text));
  }
  BigInt num = parse_big(text.substr(0, slash));
  BigInt den = parse_big(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in scalar literal");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (ring.kind == RingKind::rationals) {
    return Scalar(ring, BigRat(num, den));
  }
  Scalar d = from_big(ring, den);
  return from_big(ring, num) * d.inverse();
}

bool Scalar::is_zero() const {
  switch (spec_.kind) {
    case RingKind::rationals:
      return std::get<BigRat>(value_) == 0;
    case RingKind::integers:
      return std::get<BigInt>(value_) == 0;
    case RingKind::prime_field:
      return std::get<std::int64_t>(value_) == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (spec_.kind) {
    case RingKind::rationals:
      return std::get<BigRat>(value_) == 1;
    case RingKind::integers:
      return std::get<BigInt>(value_) == 1;
    case RingKind::prime_field:
      return std::get<std::int64_t>(value_) == 1;
  }
  return false;
}

bool Scalar::is_unit() const {
  if (spec_.kind == RingKind::integers) {
    const BigInt& z = std::get<BigInt>(value_);
    return z == 1 || z == -1;
  }
  return !is_zero();
}

Scalar Scalar::operator-() const {
  switch (spec_.kind) {
    case RingKind::rationals:
      return Scalar(spec_, BigRat(-std::get<BigRat>(value_)));
    case RingKind::integers:
      return Scalar(spec_, BigInt(-std::get<BigInt>(value_)));
    case RingKind::prime_field:
      return Scalar(spec_, mod_reduce(-std::get<std::int64_t>(value_), spec_.p));
  }
  throw Error("unreachable ring kind");
}

Scalar Scalar::inverse() const {
  switch (spec_.kind) {
    case RingKind::rationals: {
      const BigRat& q = std::get<BigRat>(value_);
      if (q == 0) throw NotInvertible("inverse of zero");
      return Scalar(spec_, BigRat(1 / q));
    }
    case RingKind::integers: {
      const BigInt& z = std::get<BigInt>(value_);
      if (z == 1 || z == -1) return *this;
      throw NotInvertible("integer has no inverse: " + to_string());
    }
    case RingKind::prime_field: {
      std::int64_t r = std::get<std::int64_t>(value_);
      if (r == 0) throw NotInvertible("inverse of zero");
      return Scalar(spec_, mod_inverse(r, spec_.p));
    }
  }
  throw Error("unreachable ring kind");
}

void Scalar::require_same_ring(const Scalar& a, const Scalar& b) {
  if (!(a.spec_ == b.spec_)) {
    throw RingMismatch("scalar rings differ: " + a.spec_.name() + " vs " + b.spec_.name());
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same_ring(a, b);
  switch (a.spec_.kind) {
    case RingKind::rationals:
      return Scalar(a.spec_, BigRat(std::get<BigRat>(a.value_) + std::get<BigRat>(b.value_)));
    case RingKind::integers:
      return Scalar(a.spec_, BigInt(std::get<BigInt>(a.value_) + std::get<BigInt>(b.value_)));
    case RingKind::prime_field:
      return Scalar(a.spec_,
                    mod_reduce(std::get<std::int64_t>(a.value_) + std::get<std::int64_t>(b.value_),
                               a.spec_.p));
  }
  throw Error("unreachable ring kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_ring(a, b);
  switch (a.spec_.kind) {
    case RingKind::rationals:
      return Scalar(a.spec_, BigRat(std::get<BigRat>(a.value_) * std::get<BigRat>(b.value_)));
    case RingKind::integers:
      return Scalar(a.spec_, BigInt(std::get<BigInt>(a.value_) * std::get<BigInt>(b.value_)));
    case RingKind::prime_field:
      return Scalar(a.spec_,
                    mod_reduce(std::get<std::int64_t>(a.value_) * std::get<std::int64_t>(b.value_),
                               a.spec_.p));
  }
  throw Error("unreachable ring kind");
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::require_same_ring(a, b);
  return a.value_ == b.value_;
}

Scalar Scalar::div_exact(const Scalar& b) const {
  if (spec_.kind != RingKind::integers) return *this * b.inverse();
  require_same_ring(*this, b);
  const BigInt& x = std::get<BigInt>(value_);
  const BigInt& y = std::get<BigInt>(b.value_);
  if (y == 0) throw NotInvertible("division by zero");
  if (x % y != 0) throw NotInvertible("inexact integer division");
  return Scalar(spec_, BigInt(x / y));
}

const BigInt& Scalar::as_integer() const {
  if (spec_.kind != RingKind::integers) throw RingMismatch("as_integer on non-integer scalar");
  return std::get<BigInt>(value_);
}

std::string Scalar::to_string() const {
  switch (spec_.kind) {
    case RingKind::rationals: {
      const BigRat& q = std::get<BigRat>(value_);
      std::string s = numerator(q).str();
      if (denominator(q) != 1) s += "/" + denominator(q).str();
      return s;
    }
    case RingKind::integers:
      return std::get<BigInt>(value_).str();
    case RingKind::prime_field:
      return std::to_string(std::get<std::int64_t>(value_));
  }
  return "?";
}

}  // namespace ainfty
