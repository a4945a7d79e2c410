#include <doctest.h>

#include <random>

#include "ck/error.hpp"
#include "ck/scalar.hpp"
#include "test_util.hpp"

using namespace ck;
using ckt::q;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(q(1, 2) + q(1, 2) == q(1));
  CHECK(q(3, 4) * q(4, 3) == q(1));
  CHECK((q(1, 3) - q(1, 2)) == q(-1, 6));
  CHECK(q(10, 4).str() == "5/2");
  CHECK(q(-3, -6).str() == "1/2");
  CHECK(q(3, -4).str() == "-3/4");
  CHECK(q(0, 5).str() == "0");
  CHECK(q(7).str() == "7");
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  Scalar two = Scalar::from_int(f5, 2);
  CHECK(two.inverse() == Scalar::from_int(f5, 3));
  CHECK((two * two.inverse()).is_one());
  CHECK(Scalar::from_int(f5, -1) == Scalar::from_int(f5, 4));
  Field f7 = Field::prime(7);
  CHECK(Scalar::from_fraction(f7, 1, 2) == Scalar::from_int(f7, 4));
  CHECK_THROWS_AS(Field::prime(6), CkError);
}

TEST_CASE("char_divides") {
  CHECK_FALSE(char_divides(Field::rationals(), 4));
  CHECK(char_divides(Field::prime(2), 4));
  CHECK_FALSE(char_divides(Field::prime(3), 4));
  CHECK(char_divides(Field::prime(3), 6));
}

TEST_CASE("parse and render round trip") {
  Field fq = Field::rationals();
  for (const char* s : {"0", "1", "-1", "3/4", "-22/7", "12"})
    CHECK(Scalar::parse(fq, s).str() == s);
  CHECK(Scalar::parse(fq, "10/4") == q(5, 2));
  CHECK(Scalar::parse(fq, "+3") == q(3));
  CHECK_THROWS_AS(Scalar::parse(fq, "abc"), CkError);
  CHECK_THROWS_AS(Scalar::parse(fq, "1/"), CkError);
  CHECK_THROWS_AS(Scalar::parse(fq, "1/0"), CkError);
  CHECK_THROWS_AS(Scalar::parse(fq, ""), CkError);
  Field f5 = Field::prime(5);
  CHECK(Scalar::parse(f5, "7") == Scalar::from_int(f5, 2));
  CHECK(Scalar::parse(f5, "1/2") == Scalar::from_int(f5, 3));
  CHECK(Scalar::parse(f5, "3").str() == "3");
}

TEST_CASE("field laws hold on random samples") {
  std::mt19937 rng(20260817u);
  auto rand_q = [&rng]() {
    long num = static_cast<long>(rng() % 61) - 30;
    long den = static_cast<long>(rng() % 29) + 1;
    return q(num, den);
  };
  Field f7 = Field::prime(7);
  auto rand_p = [&rng, &f7]() {
    return Scalar::from_int(f7, static_cast<long>(rng() % 7));
  };
  for (int i = 0; i < 200; ++i) {
    for (int which = 0; which < 2; ++which) {
      Scalar a = which ? rand_p() : rand_q();
      Scalar b = which ? rand_p() : rand_q();
      Scalar c = which ? rand_p() : rand_q();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("mixed fields are rejected") {
  Scalar a = Scalar::from_int(Field::rationals(), 1);
  Scalar b = Scalar::from_int(Field::prime(5), 1);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(a + b, CkError);
  CHECK_THROWS_AS(a * b, CkError);
}

TEST_CASE("pow covers negative exponents") {
  CHECK(q(2, 3).pow(-2) == q(9, 4));
  CHECK(q(5).pow(0) == q(1));
  CHECK(q(2).pow(10) == q(1024));
  CHECK_THROWS_AS(q(0).pow(-1), CkError);
  Field f5 = Field::prime(5);
  CHECK(Scalar::from_int(f5, 2).pow(-1) == Scalar::from_int(f5, 3));
}

TEST_CASE("division by zero is refused") {
  CHECK_THROWS_AS(q(1) / q(0), CkError);
  CHECK_THROWS_AS(q(0).inverse(), CkError);
  CHECK_THROWS_AS(Scalar::from_fraction(Field::rationals(), 1, 0), CkError);
}

TEST_SUITE_END();
