#include <doctest.h>

#include "pgeo/rat.hpp"
#include "pgeo/sample.hpp"

using namespace pgeo;

TEST_CASE("normalized reduces and fixes the sign of the denominator") {
  CHECK(Rat::normalized(2, 4) == Rat::normalized(1, 2));
  CHECK(Rat::normalized(2, 4).num() == 1);
  CHECK(Rat::normalized(2, 4).den() == 2);
  CHECK(Rat::normalized(3, -6).num() == -1);
  CHECK(Rat::normalized(3, -6).den() == 2);
  CHECK(Rat::normalized(0, 5).num() == 0);
  CHECK(Rat::normalized(0, 5).den() == 1);
  CHECK_THROWS_WITH_AS(Rat::normalized(1, 0), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("sign is the exact trichotomy") {
  CHECK(sign(Rat::normalized(1, 2)) == 1);
  CHECK(sign(Rat(0)) == 0);
  CHECK(sign(Rat::normalized(-7, 3)) == -1);
}

TEST_CASE("positive and negative parts") {
  Rat x = Rat::normalized(3, 2);
  CHECK(pos_part(x) == x);
  CHECK(neg_part(x) == Rat(0));
  Rat y = Rat::normalized(-1, 4);
  CHECK(pos_part(y) == Rat(0));
  CHECK(neg_part(y) == Rat::normalized(1, 4));

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rat v = Rat::normalized(rng.range(-50, 50), rng.range(1, 20));
    CHECK(pos_part(v) - neg_part(v) == v);
    CHECK(pos_part(v) * neg_part(v) == Rat(0));
  }
}

TEST_CASE("field laws hold exactly on random samples") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rat a = Rat::normalized(rng.range(-40, 40), rng.range(1, 12));
    Rat b = Rat::normalized(rng.range(-40, 40), rng.range(1, 12));
    Rat c = Rat::normalized(rng.range(-40, 40), rng.range(1, 12));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (b.sign() != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("text round-trip in the n/d form") {
  CHECK(to_string(Rat::normalized(-1, 2)) == "-1/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK(parse_rat("-1/2") == Rat::normalized(-1, 2));
  CHECK(parse_rat("+3/9") == Rat::normalized(1, 3));
  CHECK(parse_rat("42") == Rat(42));
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("a/2"), Error);
  CHECK_THROWS_AS(parse_rat("1/2 "), Error);

  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    Rat v = Rat::normalized(rng.range(-1000, 1000), rng.range(1, 999));
    CHECK(parse_rat(to_string(v)) == v);
  }
}

TEST_CASE("arbitrary precision does not overflow") {
  Rat big = Rat(BigInt("123456789123456789123456789"));
  Rat product = big * big;
  CHECK(product.num() == BigInt("15241578780673678546105778281054720515622620750190521"));
  CHECK(product.den() == 1);
}
