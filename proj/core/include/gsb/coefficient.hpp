#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "gsb/errors.hpp"

namespace gsb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An exact scalar: a rational (in lowest terms, positive denominator) when
/// the characteristic is 0, or an element of the prime field F_p otherwise.
/// F_p elements are stored as integers in [0, p).
class Coefficient {
 public:
  Coefficient() : value_(0), char_(0) {}
  Coefficient(long v) : value_(v), char_(0) {}  // NOLINT: implicit by design
  explicit Coefficient(Rational v) : value_(std::move(v)), char_(0) {}

  static Coefficient in_field(const Integer& v, std::uint32_t p);

  std::uint32_t characteristic() const { return char_; }
  const Rational& value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return char_ == 0 ? value_ == 1 : value_ == 1; }

  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient operator-() const;
  Coefficient inverse() const;

  bool operator==(const Coefficient& o) const {
    return char_ == o.char_ && value_ == o.value_;
  }

  std::string str() const;

 private:
  Coefficient(Rational v, std::uint32_t p) : value_(std::move(v)), char_(p) {}
  static void require_same(const Coefficient& a, const Coefficient& b);
  Coefficient normalized() const;

  Rational value_;
  std::uint32_t char_;
};

}  // namespace gsb
