#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cfconv/rational_function.hpp"

#include "support/oracles.hpp"

using namespace cfconv;
using cfconv::testsupport::divide_series;
using cfconv::testsupport::SeqGen;

namespace {

Polynomial P(std::initializer_list<int> ints) {
  std::vector<Rat> c;
  for (int v : ints) c.emplace_back(v);
  return Polynomial(std::move(c));
}

std::vector<Rat> R(std::initializer_list<int> ints) {
  std::vector<Rat> v;
  for (int x : ints) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("normalize examples") {
  // (2x^2, (1-x)(1-2x-4x^2)) -> 2x^2 / (1 - 3x - 2x^2 + 4x^3)
  RationalFunction f = normalize(P({0, 0, 2}), P({1, -1}) * P({1, -2, -4}));
  CHECK(f.numerator() == P({0, 0, 2}));
  CHECK(f.denominator() == P({1, -3, -2, 4}));

  // (x, 2-2x) -> (x/2)/(1-x)
  RationalFunction g = normalize(P({0, 1}), P({2, -2}));
  CHECK(g.numerator() == Polynomial({Rat(0), Rat(1, 2)}));
  CHECK(g.denominator() == P({1, -1}));

  // (x - x^2, 1 - x) -> x/1
  RationalFunction h = normalize(P({0, 1, -1}), P({1, -1}));
  CHECK(h.numerator() == P({0, 1}));
  CHECK(h.denominator() == P({1}));

  CHECK_THROWS_AS(normalize(P({0, 1}), P({0, 1})), std::domain_error);
  CHECK_THROWS_AS(normalize(P({1}), Polynomial()), std::domain_error);

  // zero numerator collapses to 0/1
  RationalFunction z = normalize(Polynomial(), P({1, -1, -1}));
  CHECK(z.is_zero());
  CHECK(z.denominator() == P({1}));
}

TEST_CASE("series expansion examples") {
  RationalFunction trib = normalize(P({0, 1}), P({1, -1, -1, -1}));
  CHECK(series_expand(trib, 7) == R({0, 1, 1, 2, 4, 7, 13}));

  RationalFunction fib = normalize(P({0, 1}), P({1, -1, -1}));
  CHECK(series_expand(fib, 7) == R({0, 1, 1, 2, 3, 5, 8}));

  CHECK(series_expand(RationalFunction::zero(), 5) == R({0, 0, 0, 0, 0}));

  // improper functions still expand: x/(1-x) = 0,1,1,1,...
  RationalFunction shifted_ones = normalize(P({0, 1}), P({1, -1}));
  CHECK(series_expand(shifted_ones, 4) == R({0, 1, 1, 1}));
  CHECK(!is_proper(shifted_ones));
}

TEST_CASE("series prefix stability") {
  SeqGen gen(31);
  for (int iter = 0; iter < 50; ++iter) {
    Polynomial num = gen.random_polynomial(4);
    Polynomial den = gen.random_polynomial(4, /*allow_zero=*/false);
    if (sgn(den.constant_term()) == 0) continue;
    RationalFunction f = normalize(num, den);
    auto a = series_expand(f, 12);
    auto b = series_expand(f, 22);
    b.resize(12);
    CHECK(a == b);
  }
}

TEST_CASE("normalize is idempotent") {
  SeqGen gen(37);
  for (int iter = 0; iter < 100; ++iter) {
    Polynomial num = gen.random_polynomial(5);
    Polynomial den = gen.random_polynomial(5, /*allow_zero=*/false);
    if (sgn(den.constant_term()) == 0) continue;
    RationalFunction f = normalize(num, den);
    CHECK(normalize(f.numerator(), f.denominator()) == f);
    CHECK(f.denominator().constant_term() == 1);
    if (!f.is_zero())
      CHECK(*poly_gcd(f.numerator(), f.denominator()).degree() == 0);
  }
}

TEST_CASE("reduction never changes the series") {
  SeqGen gen(41);
  for (int iter = 0; iter < 60; ++iter) {
    Polynomial num = gen.random_polynomial(3);
    Polynomial den = gen.random_polynomial(3, /*allow_zero=*/false);
    Polynomial common = gen.random_polynomial(2, /*allow_zero=*/false);
    if (sgn(den.constant_term()) == 0 || sgn(common.constant_term()) == 0) continue;
    auto direct = divide_series((num * common).coeffs(), (den * common).coeffs(), 15);
    CHECK(series_expand(normalize(num * common, den * common), 15) == direct);
  }
}

TEST_CASE("field arithmetic and pow") {
  RationalFunction x = normalize(P({0, 1}), P({1}));
  RationalFunction one = RationalFunction::one();
  RationalFunction geom = one / normalize(P({1, -1}), P({1}));  // 1/(1-x)
  CHECK(series_expand(geom, 4) == R({1, 1, 1, 1}));

  CHECK(geom * normalize(P({1, -1}), P({1})) == one);
  CHECK(geom - geom == RationalFunction::zero());
  CHECK(pow(x, 3) == normalize(P({0, 0, 0, 1}), P({1})));
  CHECK(pow(geom, 0) == one);
  // 1/(1-x)^2 expands to 1,2,3,4,...
  CHECK(series_expand(pow(geom, 2), 5) == R({1, 2, 3, 4, 5}));

  // division cancels a removable factor at 0, but a pole at 0 still throws
  RationalFunction xx = normalize(P({0, 1, 1}), P({1}));  // x + x^2
  CHECK(series_expand(x / xx, 4) == R({1, -1, 1, -1}));   // 1/(1+x)
  CHECK_THROWS_AS(one / x, std::domain_error);
  CHECK_THROWS_AS(one / RationalFunction::zero(), std::domain_error);
}
