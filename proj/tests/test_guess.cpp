#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cfconv/guess.hpp"

#include "cfconv/convolve.hpp"
#include "cfconv/families.hpp"
#include "support/hankel_fit.hpp"
#include "support/oracles.hpp"

using namespace cfconv;
using cfconv::testsupport::hankel_guess;
using cfconv::testsupport::SeqGen;

namespace {

std::vector<Rat> R(std::initializer_list<long> ints) {
  std::vector<Rat> v;
  for (long x : ints) v.emplace_back(static_cast<int>(x), 1);
  return v;
}

Polynomial P(std::initializer_list<int> ints) {
  std::vector<Rat> c;
  for (int v : ints) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("geometric data fits at order 1 even though order 2 also fits") {
  auto g = guess_recurrence(R({1, 2, 4, 8, 16}), 2);
  REQUIRE(g.has_value());
  CHECK(g->order_found == 1);
  CHECK(g->sequence.recurrence().coeffs() == R({2}));
  CHECK(g->sequence.initial_terms() == R({1}));
  CHECK(g->certified);
  CHECK(g->terms_used == 5);
}

TEST_CASE("fibonacci fits at order 2, not order 1") {
  auto g = guess_recurrence(R({0, 1, 1, 2, 3, 5, 8, 13, 21}), 3);
  REQUIRE(g.has_value());
  CHECK(g->order_found == 2);
  CHECK(g->sequence.recurrence().coeffs() == R({1, 1}));
  CHECK_FALSE(guess_recurrence(R({0, 1, 1, 2, 3}), 1).has_value());
}

TEST_CASE("all-zero data yields the distinguished zero result") {
  auto g = guess_recurrence(R({0, 0, 0, 0, 0}), 2);
  REQUIRE(g.has_value());
  CHECK(g->sequence.is_zero());
  CHECK(to_gf(g->sequence) == RationalFunction::zero());
  CHECK(g->order_found == g->sequence.order());
}

TEST_CASE("corrupted fibonacci tail is NotFound, insufficient data throws") {
  CHECK_FALSE(guess_recurrence(R({0, 1, 1, 2, 3, 5, 8, 14}), 3).has_value());
  CHECK_THROWS_AS(guess_recurrence(R({0, 1, 1, 2, 3, 5, 8, 14}), 5), insufficient_data);
  CHECK_THROWS_AS(guess_recurrence({}, 0), insufficient_data);
}

TEST_CASE("transient data has no true-order recurrence") {
  CHECK_FALSE(guess_recurrence(R({0, 1, 0, 0, 0, 0, 0, 0, 0}), 4).has_value());
  CHECK_FALSE(guess_recurrence(R({5, 0, 0, 0, 0}), 2).has_value());
}

TEST_CASE("guess_gf examples") {
  auto trib = guess_gf(R({0, 1, 1, 2, 4, 7, 13}), 3);
  REQUIRE(trib.has_value());
  CHECK(trib->numerator() == P({0, 1}));
  CHECK(trib->denominator() == P({1, -1, -1, -1}));

  auto ones = guess_gf(R({1, 1, 1, 1, 1}), 2);
  REQUIRE(ones.has_value());
  CHECK(*ones == normalize(P({1}), P({1, -1})));
}

TEST_CASE("tribonacci self-convolution terms fit at the self bound") {
  // Expected values hand-checked against direct summation of
  // binom(n,k) T_k T_{n-k}; e.g. n=6 gives 42+60+80+60+42 = 284.
  auto s = kbonacci(3);
  auto terms = binomial_conv_terms(s, s, 23);
  std::vector<Rat> first13(terms.begin(), terms.begin() + 13);
  CHECK(first13 ==
        R({0, 0, 2, 6, 22, 80, 284, 1036, 3800, 13944, 51288, 188672, 694032}));

  auto fit = guess_gf(first13, 6);
  REQUIRE(fit.has_value());
  CHECK(*fit->denominator().degree() <= 6);
  CHECK(series_expand(*fit, terms.size()) == terms);  // 13 fitted + 10 more
}

TEST_CASE("rational data") {
  CFiniteSequence s(Recurrence({Rat(1, 2), Rat(1, 3)}), {Rat(1), Rat(1, 5)});
  auto data = seq_terms(s, 15);
  auto g = guess_recurrence(data, 2);
  REQUIRE(g.has_value());
  CHECK(g->order_found == 2);
  CHECK(seq_terms(g->sequence, 15) == data);
}

TEST_CASE("soundness and minimality on random instances") {
  SeqGen gen(211);
  for (int iter = 0; iter < 200; ++iter) {
    CFiniteSequence s = gen.integer_sequence(4, -5, 5, /*nonzero_initials=*/true);
    auto data = seq_terms(s, 2 * 4 + 1 + 10);
    auto g = guess_recurrence(data, 4);
    REQUIRE(g.has_value());  // certification: the bound is a priori valid
    CHECK(seq_terms(g->sequence, data.size()) == data);
    CHECK(g->order_found == g->sequence.order());
    if (g->sequence.is_zero()) continue;
    if (g->order_found >= 1) {
      auto lower = guess_recurrence(data, g->order_found - 1);
      CHECK_FALSE(lower.has_value());
    }
  }
}

TEST_CASE("certification never returns NotFound at a valid a-priori bound") {
  SeqGen gen(223);
  for (int iter = 0; iter < 200; ++iter) {
    CFiniteSequence s = gen.rational_sequence(5);
    const int bound = s.order();  // declared order is always a valid bound
    auto data = seq_terms(s, 2 * static_cast<std::size_t>(bound) + 1);
    auto g = guess_recurrence(data, bound);
    REQUIRE(g.has_value());
    CHECK(g->order_found <= bound);
    CHECK(seq_terms(g->sequence, data.size()) == data);
  }
}

TEST_CASE("agreement with the Hankel nullspace reference fitter") {
  SeqGen gen(227);
  for (int iter = 0; iter < 150; ++iter) {
    CFiniteSequence s = gen.integer_sequence(4);
    auto data = seq_terms(s, 2 * 4 + 1 + 10);
    auto bm = guess_recurrence(data, 4);
    auto hk = hankel_guess(data, 4);
    REQUIRE(bm.has_value());
    REQUIRE(hk.has_value());
    CHECK(bm->sequence == *hk);
  }
  // non-C-finite data: both reject
  auto junk = R({0, 1, 1, 2, 3, 5, 8, 14, 3});
  CHECK_FALSE(guess_recurrence(junk, 4).has_value());
  CHECK_FALSE(hankel_guess(junk, 4).has_value());
  // transient data: both reject
  auto transient = R({0, 1, 0, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(guess_recurrence(transient, 4).has_value());
  CHECK_FALSE(hankel_guess(transient, 4).has_value());
}

TEST_CASE("minimize reduces declared order to minimal") {
  // (1 - x - x^2)(1 - 2x) as denominator over Fibonacci-compatible initials:
  // an order-3 recurrence whose sequence is plain Fibonacci.
  CFiniteSequence padded(Recurrence({Rat(3), Rat(-1), Rat(-2)}), {Rat(0), Rat(1), Rat(1)});
  CHECK(seq_terms(padded, 8) == R({0, 1, 1, 2, 3, 5, 8, 13}));
  CFiniteSequence reduced = minimize(padded);
  CHECK(reduced.order() == 2);
  CHECK(reduced.recurrence().coeffs() == R({1, 1}));
  CHECK(minimize(CFiniteSequence::zero()) == CFiniteSequence::zero());
  CFiniteSequence fib(Recurrence({Rat(1), Rat(1)}), {Rat(0), Rat(1)});
  CHECK(minimize(fib) == fib);
}
