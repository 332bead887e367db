#include "doctest.h"

#include "curvelattice/error.hpp"
#include "curvelattice/k3.hpp"
#include "curvelattice/lattice.hpp"
#include "curvelattice/numeric.hpp"

using namespace curvelattice;

namespace {
const Gram2& g1() { return K3Model::q1().gram(); }
const Gram2& g2() { return K3Model::q2().gram(); }
}  // namespace

TEST_CASE("integer helpers") {
  CHECK(binom2(0) == 0);
  CHECK(binom2(1) == 0);
  CHECK(binom2(2) == 1);
  CHECK(binom2(5) == 10);
  CHECK(binom2(-1) == 1);  // polynomial extension n(n-1)/2
  CHECK(binom3(0) == 0);
  CHECK(binom3(3) == 1);
  CHECK(binom3(7) == 35);

  CHECK(parse_int("42") == 42);
  CHECK(parse_int("-7") == -7);
  CHECK(parse_int("+9") == 9);
  CHECK(parse_int("123456789012345678901234567890") ==
        Int("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_int("12x"), Error);
  CHECK_THROWS_AS(parse_int(""), Error);
  CHECK_THROWS_AS(parse_int("1.5"), Error);

  CHECK(is_integer(ratio(10, 5)));
  CHECK_FALSE(is_integer(ratio(10, 4)));
  CHECK(integer_value(ratio(12, 4), "test") == 3);
  CHECK_THROWS_AS(integer_value(ratio(1, 2), "test"), Error);
  CHECK_THROWS_AS(ratio(1, 0), Error);
}

TEST_CASE("divisor class arithmetic and ordering") {
  DivClass2 x{3, -2};
  DivClass2 y{1, 5};
  CHECK(x + y == DivClass2{4, 3});
  CHECK(x - y == DivClass2{2, -7});
  CHECK(-x == DivClass2{-3, 2});
  CHECK(Int(4) * y == DivClass2{4, 20});
  CHECK(DivClass2{0, 0}.is_zero());
  CHECK_FALSE(x.is_zero());
  CHECK(to_string(x) == "(3,-2)");

  CHECK(lex_less({1, 9}, {2, 0}));
  CHECK(lex_less({2, 0}, {2, 1}));
  CHECK_FALSE(lex_less({2, 1}, {2, 1}));
}

TEST_CASE("gram matrix validation") {
  CHECK_NOTHROW(Gram2(-2, 3, 0));
  CHECK_NOTHROW(Gram2(-2, 4, -2));

  // odd diagonal
  CHECK_THROWS_AS(Gram2(-1, 3, 0), Error);
  CHECK_THROWS_AS(Gram2(-2, 3, 5), Error);
  // non-negative determinant (wrong signature)
  CHECK_THROWS_AS(Gram2(2, 0, 2), Error);
  CHECK_THROWS_AS(Gram2(-2, 0, -2), Error);
  CHECK_THROWS_AS(Gram2(0, 0, 0), Error);

  try {
    Gram2(2, 1, 2);
    FAIL("expected invalid_model");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_model);
  }

  CHECK(g1().det() == -9);
  CHECK(g2().det() == -12);
}

TEST_CASE("bilinear form") {
  // Gram [[-2,3],[3,0]]
  CHECK(pair({1, 0}, {1, 0}, g1()) == -2);
  CHECK(pair({1, 0}, {0, 1}, g1()) == 3);
  CHECK(pair({0, 1}, {0, 1}, g1()) == 0);
  CHECK(self_int({1, 1}, g1()) == 4);    // hyperplane of the first model
  CHECK(self_int({8, 6}, g1()) == 160);  // 2g-2 with g=81
  CHECK(pair({8, 6}, {1, 1}, g1()) == 26);

  // Gram [[-2,4],[4,-2]]
  CHECK(self_int({1, 1}, g2()) == 4);
  CHECK(pair({3, 1}, {1, 1}, g2()) == 8);
  CHECK(self_int({3, 1}, g2()) == 4);

  // symmetry
  CHECK(pair({5, -3}, {2, 7}, g1()) == pair({2, 7}, {5, -3}, g1()));
  CHECK(pair({5, -3}, {2, 7}, g2()) == pair({2, 7}, {5, -3}, g2()));
}

TEST_CASE("euler characteristic") {
  CHECK(euler_char_k3({0, 0}, g1()) == 2);
  CHECK(euler_char_k3({1, 0}, g1()) == 1);   // rigid curve: chi = -2/2+2
  CHECK(euler_char_k3({0, 1}, g1()) == 2);   // pencil class: chi = 0/2+2
  CHECK(euler_char_k3({1, 1}, g1()) == 4);   // hyperplane: chi = 4/2+2
  CHECK(euler_char_k3({3, 1}, g2()) == 4);   // square 4
  CHECK(euler_char_k3({2, -1}, g2()) == -11);

  // An odd Gram matrix cannot arise from Gram2, but euler_char_k3 accepts raw
  // data defensively; an odd square must be rejected, not rounded.
  // (All Gram2 instances are even, so exercise the guard via the formula
  // check instead: chi is integral for every even lattice class.)
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      Int sq = self_int({a, b}, g1());
      CHECK(sq % 2 == 0);
      CHECK(euler_char_k3({a, b}, g1()) == sq / 2 + 2);
    }
  }
}
