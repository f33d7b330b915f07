#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidcalc/alexander.hpp"
#include "support/oracles.hpp"

using namespace braidcalc;

namespace {

LaurentPoly poly_from(std::initializer_list<long long> coeffs, long long min_exp = 0) {
  std::vector<BigInt> c;
  for (long long x : coeffs) c.emplace_back(x);
  return LaurentPoly::from_coeffs(min_exp, std::move(c));
}

}  // namespace

TEST_CASE("laurent arithmetic basics", "[alexander]") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly p = t * t - t + LaurentPoly::one();
  CHECK(p == poly_from({1, -1, 1}));
  CHECK(p.to_string() == "1 - t + t^2");
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly::monomial(-2, 3).to_string() == "3*t^-2");

  auto q = LaurentPoly::div_exact(poly_from({-1, 0, 0, 1}), poly_from({-1, 1}));
  REQUIRE(q.has_value());
  CHECK(*q == poly_from({1, 1, 1}));
  CHECK_FALSE(LaurentPoly::div_exact(poly_from({1, 1, 1}), poly_from({-1, 1})));

  LaurentPoly shifted = poly_from({2, -2}, -3);
  CHECK(shifted.normalized() == poly_from({2, -2}));
  CHECK(poly_from({-1, 1}).normalized() == poly_from({1, -1}));
}

TEST_CASE("reduced Burau image", "[alexander]") {
  PolyMatrix id3 = reduced_burau(BraidWord{3, {}});
  REQUIRE(id3.size() == 2);
  CHECK(id3[0][0] == LaurentPoly::one());
  CHECK(id3[0][1].is_zero());
  CHECK(id3[1][1] == LaurentPoly::one());

  PolyMatrix cancel = reduced_burau(parse_word("s1 -s1", 2));
  REQUIRE(cancel.size() == 1);
  CHECK(cancel[0][0] == LaurentPoly::one());

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord w = oracles::random_word(rng, 2 + trial % 4, trial % 8, false);
    BraidWord cancelled = concat(w, inverse(w));
    PolyMatrix m = reduced_burau(cancelled);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        CHECK(m[i][j] == (i == j ? LaurentPoly::one() : LaurentPoly::zero()));
  }
}

TEST_CASE("closure polynomials of small knots", "[alexander]") {
  CHECK(alexander_closure(parse_word("a^3", 2)).poly == poly_from({1, -1, 1}));
  CHECK(alexander_closure(parse_word("a^5", 2)).poly == poly_from({1, -1, 1, -1, 1}));
  ClosurePolynomial unknot = alexander_closure(parse_word("a", 2));
  CHECK(unknot.poly == LaurentPoly::one());
  CHECK_FALSE(unknot.is_link);

  ClosurePolynomial split = alexander_closure(BraidWord{2, {}});
  CHECK(split.poly.is_zero());
  CHECK(split.is_link);
}

TEST_CASE("torus closed form", "[alexander]") {
  CHECK(alexander_torus(2, 3) == poly_from({1, -1, 1}));
  CHECK(alexander_torus(2, 9) ==
        poly_from({1, -1, 1, -1, 1, -1, 1, -1, 1}));
  CHECK(alexander_torus(3, 2) == alexander_torus(2, 3));
  CHECK_THROWS_AS(alexander_torus(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(alexander_torus(1, 5), std::invalid_argument);
}

TEST_CASE("closure matches closed form on torus words", "[alexander]") {
  for (int k = 1; k <= 12; ++k)
    CHECK(alexander_closure(torus_word(2, 2 * k + 1)).poly ==
          alexander_torus(2, 2 * k + 1));
  CHECK(alexander_closure(torus_word(6, 7)).poly == alexander_torus(6, 7));
  CHECK(alexander_closure(torus_word(4, 5)).poly == alexander_torus(4, 5));
}

TEST_CASE("closure polynomial is a Markov invariant", "[alexander]") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    int strands = 2 + trial % 3;
    BraidWord w = oracles::random_word(rng, strands, 1 + trial % 7, false);
    LaurentPoly base = alexander_closure(w).poly;

    std::uniform_int_distribution<int> index(1, strands - 1);
    int g = index(rng);
    BraidWord conjugated{strands, {g}};
    conjugated.letters.insert(conjugated.letters.end(), w.letters.begin(),
                              w.letters.end());
    conjugated.letters.push_back(-g);
    CHECK(alexander_closure(conjugated).poly == base);

    for (int sign : {1, -1}) {
      BraidWord stabilized{strands + 1, w.letters};
      stabilized.letters.push_back(sign * strands);
      CHECK(alexander_closure(stabilized).poly == base);
    }
  }
}

TEST_CASE("knot polynomials are palindromic and unimodular at one", "[alexander]") {
  std::vector<BraidWord> knots = {torus_word(2, 5), torus_word(2, 9),
                                  torus_word(3, 4), torus_word(4, 5),
                                  torus_word(6, 7), torus_word(5, 6)};
  for (const BraidWord& w : knots) {
    REQUIRE(components(w) == 1);
    LaurentPoly poly = alexander_closure(w).poly;
    std::vector<BigInt> coeffs = poly.coeffs();
    std::vector<BigInt> reversed(coeffs.rbegin(), coeffs.rend());
    CHECK(coeffs == reversed);
    BigInt at_one = poly.eval_one();
    CHECK((at_one == 1 || at_one == -1));
  }
}

TEST_CASE("two-strand reduction closures are verified", "[alexander]") {
  CHECK(verify_t2_reduction(2));
  CHECK(verify_t2_reduction(3));
  CHECK_THROWS_AS(verify_t2_reduction(1), std::invalid_argument);
}
