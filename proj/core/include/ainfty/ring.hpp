#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "ainfty/errors.hpp"

namespace ainfty {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class RingKind { rationals, prime_field, integers };

struct RingSpec {
  RingKind kind = RingKind::rationals;
  std::int64_t p = 0;  // modulus, prime_field only

  static RingSpec rationals() { return {RingKind::rationals, 0}; }
  static RingSpec integers() { return {RingKind::integers, 0}; }
  // Validates primality; p must fit in 31 bits so products stay in int64.
  static RingSpec prime_field(std::int64_t p);

  bool is_field() const { return kind != RingKind::integers; }
  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Exact ring element: reduced fraction over Q, arbitrary-precision integer
// over Z, canonical residue in [0, p) over F_p.
class Scalar {
 public:
  Scalar() : spec_(RingSpec::rationals()), value_(BigRat(0)) {}

  static Scalar zero(const RingSpec& ring);
  static Scalar one(const RingSpec& ring);
  static Scalar from_int(const RingSpec& ring, long long n);
  static Scalar from_big(const RingSpec& ring, const BigInt& n);
  static Scalar from_string(const RingSpec& ring, std::string_view text);

  const RingSpec& ring() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;
  // Units: everything nonzero over a field, +-1 over Z.
  bool is_unit() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws NotInvertible

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  // Exact quotient; throws NotInvertible when b does not divide *this over Z.
  Scalar div_exact(const Scalar& b) const;

  // Underlying integer for ring == integers.
  const BigInt& as_integer() const;
  std::string to_string() const;

 private:
  Scalar(RingSpec spec, BigRat q) : spec_(spec), value_(std::move(q)) {}
  Scalar(RingSpec spec, BigInt z) : spec_(spec), value_(std::move(z)) {}
  Scalar(RingSpec spec, std::int64_t r) : spec_(spec), value_(r) {}

  static void require_same_ring(const Scalar& a, const Scalar& b);

  RingSpec spec_;
  std::variant<BigRat, BigInt, std::int64_t> value_;
};

}  // namespace ainfty
