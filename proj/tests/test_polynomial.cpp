#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cfconv/polynomial.hpp"

#include "support/oracles.hpp"

using namespace cfconv;
using cfconv::testsupport::SeqGen;

namespace {

Polynomial P(std::initializer_list<int> ints) {
  std::vector<Rat> c;
  for (int v : ints) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("addition") {
  CHECK(P({1, -1}) + P({0, 1}) == P({1}));             // (1 - x) + x = 1
  CHECK(Polynomial() + P({3, 0, 5}) == P({3, 0, 5}));  // 0 + p = p
  CHECK(P({1, -1, -1}) + P({0, 1, 1}) == P({1}));      // (1 - x - x^2) + (x + x^2) = 1
}

TEST_CASE("multiplication") {
  CHECK(P({1, -2, -4}) * P({1, -1}) == P({1, -3, -2, 4}));
  CHECK(P({1, 2, 3}) * Polynomial() == Polynomial());
  CHECK(P({1, 2, 3}) * P({1}) == P({1, 2, 3}));
  CHECK((P({0, 1}) * P({0, 1})).degree() == 2);
}

TEST_CASE("degree and trimming") {
  CHECK(!Polynomial().degree().has_value());
  CHECK(Polynomial({Rat(0), Rat(0)}).is_zero());
  CHECK(Polynomial({Rat(5), Rat(0)}) == P({5}));
  CHECK(P({0, 0, 7}).degree() == 2);
  CHECK(P({1, 2}).coeff(10) == 0);
}

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));  // gcd(x^2-1, x-1) = x-1 monic
  CHECK(poly_gcd(P({2, 8, -6}), P({1})) == P({1}));
  CHECK(poly_gcd(P({4, 0, 2}), Polynomial()) == P({2, 0, 1}));  // p made monic
  CHECK(poly_gcd(Polynomial(), P({0, 3})) == P({0, 1}));
  CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), std::invalid_argument);
}

TEST_CASE("gcd of polynomials with a known common factor") {
  Polynomial common = P({1, 5, 2});
  Polynomial a = common * P({-3, 1, 1});
  Polynomial b = common * P({2, 0, 0, 7});
  Polynomial g = poly_gcd(a, b);
  Rat inv = Rat(1) / common.leading_coeff();
  CHECK(g == inv * common);
  CHECK(poly_divmod(a, g).second.is_zero());
  CHECK(poly_divmod(b, g).second.is_zero());
}

TEST_CASE("divmod identity") {
  SeqGen gen(11);
  for (int iter = 0; iter < 200; ++iter) {
    Polynomial p = gen.random_polynomial(6);
    Polynomial q = gen.random_polynomial(4, /*allow_zero=*/false);
    auto [quot, rem] = poly_divmod(p, q);
    CHECK(quot * q + rem == p);
    if (!rem.is_zero()) CHECK(*rem.degree() < *q.degree());
  }
  CHECK_THROWS_AS(poly_divmod(P({1}), Polynomial()), std::domain_error);
}

TEST_CASE("ring laws on random polynomials") {
  SeqGen gen(7);
  for (int iter = 0; iter < 200; ++iter) {
    Polynomial a = gen.random_polynomial(5);
    Polynomial b = gen.random_polynomial(5);
    Polynomial c = gen.random_polynomial(5);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Polynomial());
  }
}

TEST_CASE("gcd divides both and is monic on random inputs") {
  SeqGen gen(23);
  for (int iter = 0; iter < 100; ++iter) {
    Polynomial a = gen.random_polynomial(6);
    Polynomial b = gen.random_polynomial(6);
    if (a.is_zero() && b.is_zero()) continue;
    Polynomial g = poly_gcd(a, b);
    CHECK(g.leading_coeff() == 1);
    if (!a.is_zero()) CHECK(poly_divmod(a, g).second.is_zero());
    if (!b.is_zero()) CHECK(poly_divmod(b, g).second.is_zero());
  }
}

TEST_CASE("eval") {
  Polynomial p = P({1, -3, 2});  // 1 - 3x + 2x^2
  CHECK(p.eval(Rat(0)) == 1);
  CHECK(p.eval(Rat(1)) == 0);
  Rat half(1, 2);
  CHECK(p.eval(half) == 0);  // 1 - 3/2 + 1/2
}
