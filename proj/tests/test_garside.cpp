#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidcalc/garside.hpp"
#include "support/oracles.hpp"

using namespace braidcalc;

TEST_CASE("normal form identifies the defining relations", "[garside]") {
  CHECK(normal_form(parse_word("aba", 3)) == normal_form(parse_word("bab", 3)));
  CHECK(normal_form(parse_word("ac", 4)) == normal_form(parse_word("ca", 4)));
  GarsideNormalForm id = normal_form(parse_word("s1 -s1", 2));
  CHECK(id.delta_power == 0);
  CHECK(id.factors.empty());
  CHECK(id.to_string() == "Δ^0 :");
}

TEST_CASE("normal form of the half twist", "[garside]") {
  GarsideNormalForm nf = normal_form(parse_word("aba", 3));
  CHECK(nf.delta_power == 1);
  CHECK(nf.factors.empty());
  GarsideNormalForm neg = normal_form(parse_word("-s1", 2));
  CHECK(neg.delta_power == -1);
  CHECK(neg.factors.empty());
}

TEST_CASE("factors are permutation braids in left-weighted order", "[garside]") {
  // factor word length equals the inversion count of its permutation, and
  // no factor is trivial or the half twist
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    int strands = 2 + trial % 4;
    BraidWord w = oracles::random_word(rng, strands, 1 + trial % 10, false);
    GarsideNormalForm nf = normal_form(w);
    for (const auto& factor : nf.factors) {
      long long inversions = 0;
      for (std::size_t a = 0; a < factor.size(); ++a)
        for (std::size_t b = a + 1; b < factor.size(); ++b)
          if (factor[a] > factor[b]) ++inversions;
      CHECK(inversions >= 1);
      CHECK(inversions < static_cast<long long>(strands) * (strands - 1) / 2);
    }
  }
}

TEST_CASE("braid equality certifies the six-strand identities", "[garside]") {
  BraidWord lhs = parse_word("(s1 s2 s3 s4 s5)^3", 6);
  BraidWord rhs = parse_word("s1 s3 (s1 s2 s3 s4 s5) (s1 s3 s2 s3 s3 s4 s3 s5)", 6);
  CHECK(braid_equal(lhs, rhs));

  // the same right side before the inner rewrite
  BraidWord figure = parse_word("ac abcde abcbdcde", 6);
  CHECK(braid_equal(lhs, figure));

  BraidWord sq = parse_word("(abcde)^2", 6);
  for (int i : {1, 3, 5}) {
    BraidWord a = sq;
    a.letters.push_back(i);
    int shifted = i + 2 <= 5 ? i + 2 : 1;
    BraidWord b{6, {shifted}};
    b.letters.insert(b.letters.end(), sq.letters.begin(), sq.letters.end());
    CHECK(braid_equal(a, b));
  }

  CHECK_FALSE(braid_equal(parse_word("ab", 3), parse_word("ba", 3)));
  CHECK_THROWS_AS(braid_equal(parse_word("a", 2), parse_word("a", 3)),
                  std::invalid_argument);
}

TEST_CASE("normal form is invariant under free reduction and relations", "[garside]") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int strands = 2 + trial % 4;
    BraidWord w = oracles::random_word(rng, strands, trial % 9, false);
    GarsideNormalForm base = normal_form(w);

    std::uniform_int_distribution<int> index(1, strands - 1);
    std::uniform_int_distribution<std::size_t> at(0, w.letters.size());
    BraidWord inserted = w;
    std::size_t k = at(rng);
    int g = index(rng);
    inserted.letters.insert(inserted.letters.begin() + static_cast<long>(k), {-g, g});
    CHECK(normal_form(inserted) == base);
  }

  std::mt19937 rng2(32);
  for (int trial = 0; trial < 60; ++trial) {
    int strands = 3 + trial % 2;
    BraidWord w = oracles::random_word(rng2, strands, 6, true);
    BraidWord moved = oracles::random_positive_moves(rng2, w, 5);
    CHECK(normal_form(moved) == normal_form(w));
  }
}

TEST_CASE("flip closure enumerates positive equivalents", "[garside]") {
  FlipClosure cl = positive_flip_closure(parse_word("aba", 3));
  REQUIRE(cl.size() == 2);
  CHECK(cl.complete);
  CHECK(cl.contains(parse_word("aba", 3)));
  CHECK(cl.contains(parse_word("bab", 3)));

  FlipClosure far = positive_flip_closure(parse_word("ac", 4));
  CHECK(far.size() == 2);
  CHECK(far.contains(parse_word("ca", 4)));

  FlipClosure square = positive_flip_closure(parse_word("aa", 2));
  CHECK(square.size() == 1);

  FlipClosure capped = positive_flip_closure(parse_word("(abc)^3", 4), 10);
  CHECK_FALSE(capped.complete);
  CHECK(capped.size() >= 10);
}

TEST_CASE("flip moves preserve length, permutation, and genus", "[garside]") {
  FlipClosure cl = positive_flip_closure(parse_word("(abc)^2", 4));
  Permutation reference = permutation(parse_word("(abc)^2", 4));
  Rational genus = positive_genus(parse_word("(abc)^2", 4));
  for (std::size_t k = 0; k < cl.size(); ++k) {
    BraidWord w = cl.word_at(k);
    CHECK(w.size() == 6);
    CHECK(permutation(w) == reference);
    CHECK(positive_genus(w) == genus);
  }
}

TEST_CASE("garside equality matches flip reachability", "[garside]") {
  std::mt19937 rng(404);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int strands = trial % 2 == 0 ? 3 : 4;
    int length = 1 + trial % 8;
    BraidWord a = oracles::random_word(rng, strands, length, true);
    BraidWord b = trial % 2 == 0
                      ? oracles::random_positive_moves(rng, a, 4)
                      : oracles::random_word(rng, strands, length, true);
    FlipClosure cl = positive_flip_closure(a);
    REQUIRE(cl.complete);
    CHECK(braid_equal(a, b) == cl.contains(b));
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("square exposure", "[garside]") {
  SquareSearch found = expose_square(parse_word("abab", 3));
  REQUIRE(found.square.has_value());
  bool has_square = false;
  for (std::size_t i = 0; i + 1 < found.square->letters.size(); ++i)
    if (found.square->letters[i] == found.square->letters[i + 1]) has_square = true;
  CHECK(has_square);
  CHECK(braid_equal(*found.square, parse_word("abab", 3)));

  SquareSearch none = expose_square(parse_word("aba", 3));
  CHECK_FALSE(none.square.has_value());
  CHECK(none.exhausted);

  SquareSearch self = expose_square(parse_word("cc", 4));
  REQUIRE(self.square.has_value());
  CHECK(*self.square == parse_word("cc", 4));

  SquareSearch capped = expose_square(parse_word("(abcde)^2", 6), 3);
  CHECK_FALSE(capped.square.has_value());
  CHECK_FALSE(capped.exhausted);
}

TEST_CASE("square exposure output stays equal to its input", "[garside]") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord w = oracles::random_word(rng, 3 + trial % 2, 2 + trial % 7, true);
    SquareSearch search = expose_square(w);
    if (search.square) CHECK(braid_equal(*search.square, w));
  }
}

TEST_CASE("destabilization removes single outermost crossings", "[garside]") {
  BraidWord unknot = destabilize(parse_word("a", 2));
  CHECK(unknot.strands == 1);
  CHECK(unknot.empty());

  BraidWord chain = destabilize(parse_word("abcde", 6));
  CHECK(chain.strands == 1);
  CHECK(chain.empty());

  BraidWord stuck = parse_word("(abcde)^3", 6);
  CHECK(destabilize(stuck) == stuck);

  // index-1 reduction renumbers the remaining letters; here s3 goes first,
  // then the single s1 drops and s2 s2 renumbers onto two strands
  BraidWord shifted = destabilize(parse_word("a bcb", 4));
  CHECK(shifted.strands == 2);
  CHECK(shifted.letters == std::vector<int>{1, 1});

  BraidWord empty_word{6, {}};
  CHECK(destabilize(empty_word) == empty_word);
}
