#include "gsb/coefficient.hpp"

namespace gsb {

namespace {

Integer mod_reduce(Integer v, std::uint32_t p) {
  Integer m = v % p;
  if (m < 0) m += p;
  return m;
}

Integer mod_pow(Integer base, Integer exp, std::uint32_t p) {
  Integer r = 1;
  base = mod_reduce(base, p);
  while (exp > 0) {
    if ((exp & 1) != 0) r = mod_reduce(r * base, p);
    base = mod_reduce(base * base, p);
    exp >>= 1;
  }
  return r;
}

}  // namespace

Coefficient Coefficient::in_field(const Integer& v, std::uint32_t p) {
  if (p < 2) throw DomainError("field characteristic must be a prime >= 2");
  return Coefficient(Rational(mod_reduce(v, p)), p);
}

void Coefficient::require_same(const Coefficient& a, const Coefficient& b) {
  if (a.char_ != b.char_)
    throw DomainError("coefficient domain mismatch (different characteristic)");
}

Coefficient Coefficient::normalized() const {
  if (char_ == 0) return *this;
  return Coefficient(Rational(mod_reduce(numerator(value_), char_)), char_);
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  require_same(*this, o);
  return Coefficient(value_ + o.value_, char_).normalized();
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  require_same(*this, o);
  return Coefficient(value_ - o.value_, char_).normalized();
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  require_same(*this, o);
  return Coefficient(value_ * o.value_, char_).normalized();
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
  require_same(*this, o);
  return *this * o.inverse();
}

Coefficient Coefficient::operator-() const {
  return Coefficient(-value_, char_).normalized();
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DomainError("division by zero coefficient");
  if (char_ == 0) return Coefficient(Rational(1) / value_, 0);
  // Fermat: a^(p-2) mod p
  Integer inv = mod_pow(numerator(value_), Integer(char_) - 2, char_);
  return Coefficient(Rational(inv), char_);
}

std::string Coefficient::str() const { return value_.str(); }

}  // namespace gsb
