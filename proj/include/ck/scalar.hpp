#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "ck/error.hpp"

namespace ck {

// Ground field descriptor: the rationals (characteristic 0) or a prime field.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned long p);

  bool is_rationals() const { return p_ == 0; }
  unsigned long characteristic() const { return p_; }

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

// True iff the field characteristic is a nonzero divisor of n.
bool char_divides(const Field& f, unsigned long n);

// Exact field element in canonical form: reduced fraction with positive
// denominator over Q, residue in [0, p) over F_p. Equal values have equal
// representations, so operator== is exact.
class Scalar {
public:
  Scalar() : Scalar(Field::rationals()) {}
  explicit Scalar(Field f) : field_(f) {}  // zero of f

  static Scalar from_int(const Field& f, long n);
  static Scalar from_fraction(const Field& f, long num, long den);
  // Accepts "n" or "n/d" with optional sign; throws ParseError otherwise.
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar inverse() const;  // DivisionByZero on zero
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

private:
  void require_same(const Scalar& o) const;

  Field field_;
  mpq_class q_;           // rationals payload
  unsigned long res_ = 0; // prime-field payload
};

}  // namespace ck
