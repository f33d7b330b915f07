#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidcalc/braid_word.hpp"
#include "support/oracles.hpp"

using namespace braidcalc;

TEST_CASE("alphabetic letters map a..y to 1..25", "[word]") {
  BraidWord w = parse_word("abcde", 6);
  CHECK(w.letters == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(w.strands == 6);
}

TEST_CASE("powers and groups expand left to right", "[word]") {
  BraidWord w = parse_word("(s1 s2 s3 s3 s2 s1)^3", 4);
  REQUIRE(w.letters.size() == 18);
  std::vector<int> period{1, 2, 3, 3, 2, 1};
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    CHECK(w.letters[i] == period[i % 6]);

  CHECK(parse_word("a^3", 2).letters == std::vector<int>{1, 1, 1});
  CHECK(parse_word("(ab)^0", 3).letters.empty());
  CHECK(parse_word("(s1 s2)^-1", 3).letters == std::vector<int>{-2, -1});
  CHECK(parse_word("((ab)^2 c)^2", 4).letters ==
        std::vector<int>{1, 2, 1, 2, 3, 1, 2, 1, 2, 3});
}

TEST_CASE("numeric syntax and strand inference", "[word]") {
  CHECK(parse_word("s1 s2 -s3").strands == 4);
  CHECK(parse_word("1 2 -3").letters == std::vector<int>{1, 2, -3});
  CHECK(parse_word("s12", 13).letters == std::vector<int>{12});
  CHECK(parse_word("s", 20).letters == std::vector<int>{19});  // bare alphabetic s
  CHECK(parse_word("").letters.empty());
  CHECK(parse_word("").strands == 1);
}

TEST_CASE("parse errors carry positions", "[word]") {
  CHECK_THROWS_AS(parse_word("f", 6), ParseError);  // index 6 > strands-1
  try {
    parse_word("ab ^", 3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 3);
  }
  CHECK_THROWS_AS(parse_word("(ab", 3), ParseError);
  CHECK_THROWS_AS(parse_word("s0", 3), ParseError);
  CHECK_THROWS_AS(parse_word("z", 30), ParseError);
  CHECK_THROWS_AS(parse_word("ab)", 3), ParseError);
}

TEST_CASE("parse after render is the identity", "[word]") {
  std::mt19937 rng(20250811);
  for (int trial = 0; trial < 200; ++trial) {
    int strands = 2 + trial % 5;
    BraidWord w = oracles::random_word(rng, strands, trial % 12, false);
    CHECK(parse_word(render_word(w), strands) == w);
  }
}

TEST_CASE("letter parities partition the crossings", "[word]") {
  BraidWord t63_rhs = parse_word("ac abcde acbccdce", 6);
  WordStats s = word_stats(t63_rhs);
  CHECK(s.odd_letters == 11);
  CHECK(s.even_letters == 4);
  CHECK(s.crossing_count == 15);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord w = oracles::random_word(rng, 2 + trial % 6, trial % 15, false);
    WordStats ws = word_stats(w);
    CHECK(ws.odd_letters + ws.even_letters == ws.crossing_count);
  }
}

TEST_CASE("twist regions count cyclic runs", "[word]") {
  CHECK(word_stats(parse_word("s1^5", 2)).twist_regions == 1);
  CHECK(word_stats(parse_word("(s1 s1 s2 s2)^2", 3)).twist_regions == 4);
  CHECK(word_stats(parse_word("s2 s1 s1 s2", 3)).twist_regions == 2);
  CHECK(word_stats(parse_word("", 3)).twist_regions == 0);
  CHECK(word_stats(parse_word("s1 -s1", 2)).twist_regions == 2);
  CHECK(word_stats(parse_word("abc", 4)).twist_regions == 3);
}

TEST_CASE("exponent sum tracks signs", "[word]") {
  CHECK(word_stats(parse_word("s1 s2 -s1", 3)).exponent_sum == 1);
  CHECK(word_stats(parse_word("(s1 s2)^-2", 3)).exponent_sum == -4);
}

TEST_CASE("closure component counts", "[word]") {
  CHECK(components(parse_word("a", 2)) == 1);
  CHECK(components(parse_word("(abcde)^7", 6)) == 1);
  CHECK(components(parse_word("(abcde)^6", 6)) == 6);
  // (s1..s_{n-1} s_{n-1}..s1)^{n-1} closes to an n-component link
  for (int n = 2; n <= 6; ++n) {
    BraidWord period{n, {}};
    for (int i = 1; i < n; ++i) period.letters.push_back(i);
    for (int i = n - 1; i >= 1; --i) period.letters.push_back(i);
    CHECK(components(power(period, n - 1)) == n);
  }
}

TEST_CASE("components are a conjugation invariant", "[word]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int strands = 2 + trial % 5;
    BraidWord w = oracles::random_word(rng, strands, 1 + trial % 10, false);
    int base = components(w);

    std::uniform_int_distribution<int> index(1, strands - 1);
    int g = index(rng);
    BraidWord conjugated{strands, {g}};
    conjugated.letters.insert(conjugated.letters.end(), w.letters.begin(),
                              w.letters.end());
    conjugated.letters.push_back(-g);
    CHECK(components(conjugated) == base);

    BraidWord inserted = w;
    std::uniform_int_distribution<std::size_t> at(0, w.letters.size());
    std::size_t k = at(rng);
    int h = index(rng);
    inserted.letters.insert(inserted.letters.begin() + static_cast<long>(k), {h, -h});
    CHECK(components(inserted) == base);
  }
}

TEST_CASE("positive genus from euler characteristic", "[word]") {
  CHECK(positive_genus(parse_word("a^3", 2)) == Rational(1));
  CHECK(positive_genus(parse_word("(abcde)^7", 6)) == Rational(15));
  BraidWord c6 = parse_word("(abcde)^6", 6);
  CHECK(components(c6) == 6);
  CHECK(positive_genus(c6) == Rational(10));
  CHECK_THROWS_AS(positive_genus(parse_word("a -s2 a", 3)), std::invalid_argument);
}

TEST_CASE("crossing number of minimal-index positive braids", "[word]") {
  for (int n = 2; n <= 6; ++n) {
    BraidWord period{n, {}};
    for (int i = 1; i < n; ++i) period.letters.push_back(i);
    for (int i = n - 1; i >= 1; --i) period.letters.push_back(i);
    CHECK(crossing_number_assuming_minimal_index(power(period, n - 1)) ==
          2LL * (n - 1) * (n - 1));
  }
  for (int k = 1; k <= 4; ++k)
    CHECK(crossing_number_assuming_minimal_index(torus_word(6, 6 * k)) == 30 * k);
  CHECK(crossing_number_assuming_minimal_index(parse_word("a", 2)) == 1);
  CHECK_THROWS_AS(crossing_number_assuming_minimal_index(parse_word("-s1", 2)),
                  std::invalid_argument);
}

TEST_CASE("word helpers", "[word]") {
  BraidWord w = parse_word("s1 -s2", 3);
  CHECK(render_word(inverse(w)) == "s2 -s1");
  CHECK(power(w, -2).letters == std::vector<int>{2, -1, 2, -1});
  CHECK(torus_word(4, 2).letters == std::vector<int>{1, 2, 3, 1, 2, 3});
  CHECK(torus_word(2, -3).letters == std::vector<int>{-1, -1, -1});
  CHECK_THROWS_AS(concat(parse_word("a", 2), parse_word("a", 3)),
                  std::invalid_argument);
}

TEST_CASE("validate rejects out-of-range letters", "[word]") {
  BraidWord bad{3, {1, 3}};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  CHECK_THROWS_AS(components(bad), std::invalid_argument);
}
