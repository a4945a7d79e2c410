#include "ck/scalar.hpp"

#include <cctype>

namespace ck {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Residue inverse by extended Euclid; p prime, 0 < a < p.
unsigned long mod_inverse(unsigned long a, unsigned long p) {
  long r0 = static_cast<long>(p), r1 = static_cast<long>(a);
  long s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  long inv = s0 % static_cast<long>(p);
  if (inv < 0) inv += static_cast<long>(p);
  return static_cast<unsigned long>(inv);
}

}  // namespace

Field Field::prime(unsigned long p) {
  if (!is_prime(p)) fail("BadParameters", "field modulus " + std::to_string(p) + " is not prime");
  if (p >= (1ul << 31)) fail("BadParameters", "field modulus too large");
  return Field(p);
}

bool char_divides(const Field& f, unsigned long n) {
  if (f.is_rationals()) return false;
  return n % f.characteristic() == 0;
}

Scalar Scalar::from_int(const Field& f, long n) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.q_ = n;
  } else {
    long p = static_cast<long>(f.characteristic());
    long r = n % p;
    if (r < 0) r += p;
    s.res_ = static_cast<unsigned long>(r);
  }
  return s;
}

Scalar Scalar::from_fraction(const Field& f, long num, long den) {
  if (den == 0) fail("DivisionByZero", "fraction with zero denominator");
  return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto bad = [&]() -> void { fail("ParseError", "not a scalar: '" + text + "'"); };
  std::string num = text, den;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) bad();
  }
  auto check_int = [&](const std::string& s) {
    if (s.empty()) bad();
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
  };
  check_int(num);
  if (!den.empty()) check_int(den);
  // GMP string constructors take '-' but not '+'.
  auto strip_plus = [](std::string& s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
  };
  strip_plus(num);
  strip_plus(den);

  if (f.is_rationals()) {
    Scalar s(f);
    s.q_ = mpq_class(den.empty() ? num : num + "/" + den);
    if (s.q_.get_den() == 0) fail("DivisionByZero", "zero denominator in '" + text + "'");
    s.q_.canonicalize();
    return s;
  }
  mpz_class n(num), p(static_cast<unsigned long>(f.characteristic()));
  mpz_class r = n % p;
  if (r < 0) r += p;
  Scalar s = from_int(f, r.get_si());
  if (!den.empty()) s /= parse(f, den);
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : res_ == 1;
}

std::string Scalar::str() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(res_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rationals()) {
    s.q_ = -q_;
  } else if (res_ != 0) {
    s.res_ = field_.characteristic() - res_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero");
  Scalar s = *this;
  if (field_.is_rationals()) {
    s.q_ = 1 / q_;
  } else {
    s.res_ = mod_inverse(res_, field_.characteristic());
  }
  return s;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar acc = from_int(field_, 1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_)) fail("FieldMismatch", "operands from different fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (field_.is_rationals()) q_ += o.q_;
  else res_ = (res_ + o.res_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(o);
  if (field_.is_rationals()) q_ -= o.q_;
  else res_ = (res_ + field_.characteristic() - o.res_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (field_.is_rationals()) q_ *= o.q_;
  else res_ = (res_ * o.res_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.res_ == b.res_;
}

}  // namespace ck
