#include <doctest.h>

#include "magica/scalar.hpp"

using namespace magica;

TEST_CASE("gaussian norm of 1/2 + i") {
  GaussRat x{make_rat(1, 2), make_rat(1)};
  GaussRat y = x.conj();
  GaussRat p = x * y;
  CHECK(p == GaussRat(make_rat(5, 4)));
}

TEST_CASE("inverse of i is -i") {
  GaussRat i = imaginary_unit();
  CHECK(i.inv() == -i);
  CHECK(i * i == GaussRat(-1));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(GaussRat(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(GaussRat(1) / GaussRat(0), DivisionByZero);
}

TEST_CASE("text round-trip on 1000 random scalars") {
  Rng rng(42);
  for (int k = 0; k < 1000; ++k) {
    GaussRat x = rng.scalar(1000);
    CHECK(parse_gauss(print_gauss(x)) == x);
  }
}

TEST_CASE("canonical text forms") {
  CHECK(print_gauss(GaussRat(make_rat(-3, 6))) == "-1/2");
  CHECK(print_gauss(GaussRat(make_rat(1, 2), make_rat(-3, 4))) == "1/2-3/4*i");
  CHECK(print_gauss(GaussRat(0)) == "0/1");
  CHECK(print_gauss(GaussRat(make_rat(0), make_rat(2, 4))) == "0/1+1/2*i");
  CHECK(parse_gauss("1/2+1/3*i") == GaussRat(make_rat(1, 2), make_rat(1, 3)));
  CHECK(parse_gauss("5") == GaussRat(5));
}

TEST_CASE("malformed scalars raise ParseError") {
  CHECK_THROWS_AS(parse_gauss(""), ParseError);
  CHECK_THROWS_AS(parse_gauss("1/2+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("x/y"), ParseError);
  CHECK_THROWS_AS(parse_gauss("1//2"), ParseError);
  CHECK_THROWS_AS(parse_gauss("1/0"), DivisionByZero);
}

TEST_CASE("rand_scalar is deterministic and bounded") {
  CHECK(rand_scalar(1, 10) == rand_scalar(1, 10));
  Rng rng(7);
  for (int k = 0; k < 1000; ++k) {
    GaussRat x = rng.scalar(100);
    CHECK(x.re.get_den() <= 100);
    CHECK(x.im.get_den() <= 100);
    CHECK(abs(x.re.get_num()) <= 100);
    CHECK(abs(x.im.get_num()) <= 100);
  }
}

TEST_CASE("distinct seeds give distinct streams within 16 draws") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng a(s), b(s + 1);
    bool differs = false;
    for (int k = 0; k < 16 && !differs; ++k) {
      differs = !(a.scalar(100) == b.scalar(100));
    }
    CHECK(differs);
  }
}

TEST_CASE("field axioms on random triples") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    GaussRat x = rng.scalar(30), y = rng.scalar(30), z = rng.scalar(30);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inv() == kOne);
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("rng bound below 2 is rejected") {
  Rng rng(0);
  CHECK_THROWS_AS(rng.rat(1), Error);
}
