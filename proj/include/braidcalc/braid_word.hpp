#ifndef BRAIDCALC_BRAID_WORD_HPP
#define BRAIDCALC_BRAID_WORD_HPP

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidcalc {

/// Thrown on malformed word input. Carries the byte offset of the offending
/// token within the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at offset " + std::to_string(position) +
                           ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A word in the braid group on `strands` strands. Letters are nonzero
/// integers: letter i with 1 <= |i| <= strands-1 denotes the |i|-th Artin
/// generator, negated for the inverse crossing.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  bool is_positive() const noexcept {
    return std::all_of(letters.begin(), letters.end(),
                       [](int x) { return x > 0; });
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Throws std::invalid_argument unless every letter index fits the strand
/// count.
inline void validate(const BraidWord& word) {
  if (word.strands < 1) throw std::invalid_argument("strand count must be >= 1");
  for (int letter : word.letters) {
    int index = std::abs(letter);
    if (index < 1 || index > word.strands - 1)
      throw std::invalid_argument("letter index " + std::to_string(index) +
                                  " out of range for " +
                                  std::to_string(word.strands) + " strands");
  }
}

inline void require_positive(const BraidWord& word, const char* operation) {
  if (!word.is_positive())
    throw std::invalid_argument(std::string(operation) +
                                " requires a positive braid word");
}

/// Bottom-to-top strand permutation of a braid word. images[j] is the top
/// position reached by the strand entering at bottom position j (1-based).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
  }

  int size() const noexcept { return static_cast<int>(images.size()); }

  int cycle_count() const {
    std::vector<char> seen(images.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = static_cast<std::size_t>(images[j]) - 1;
      }
    }
    return cycles;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

struct WordStats {
  long long crossing_count = 0;
  long long odd_letters = 0;
  long long even_letters = 0;
  long long twist_regions = 0;  // maximal sigma_i^k runs, counted cyclically
  long long exponent_sum = 0;
};

/// Exact rational with reduced representation; genus of a link closure can be
/// a half-integer when the bounding surface is disconnected.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) { reduce(); }
  Rational(long long n) : num(n), den(1) {}

  void reduce() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const noexcept { return den == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;
};

// --- parsing -----------------------------------------------------------

namespace detail {

// Grammar:  word := term*            (empty input denotes the empty word)
//           term := atom ('^' int)?
//           atom := letter | '(' word ')'
//           letter := [a-y] | '-'? 's'? digits
// Whitespace is insignificant. Exponents may be negative; w^-k expands to the
// reversed, sign-flipped word repeated k times.
class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<std::pair<int, std::size_t>> run() {
    auto seq = parse_sequence();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError(pos_, std::string("unexpected character '") +
                                 text_[pos_] + "'");
    return seq;
  }

 private:
  static constexpr std::size_t kMaxLetters = 4'000'000;

  using Seq = std::vector<std::pair<int, std::size_t>>;

  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '-' || c == 's' ||
           std::isdigit(static_cast<unsigned char>(c)) ||
           (c >= 'a' && c <= 'y');
  }

  Seq parse_sequence() {
    Seq out;
    while (starts_atom()) {
      Seq term = parse_term();
      if (out.size() + term.size() > kMaxLetters)
        throw ParseError(pos_, "word expansion exceeds letter limit");
      out.insert(out.end(), term.begin(), term.end());
    }
    return out;
  }

  Seq parse_term() {
    Seq atom = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      std::size_t caret = pos_;
      ++pos_;
      long long e = parse_integer("exponent");
      if (e < 0) {
        std::reverse(atom.begin(), atom.end());
        for (auto& [letter, p] : atom) letter = -letter;
        e = -e;
      }
      if (atom.size() * static_cast<std::size_t>(e) > kMaxLetters)
        throw ParseError(caret, "word expansion exceeds letter limit");
      Seq expanded;
      expanded.reserve(atom.size() * static_cast<std::size_t>(e));
      for (long long k = 0; k < e; ++k)
        expanded.insert(expanded.end(), atom.begin(), atom.end());
      return expanded;
    }
    return atom;
  }

  Seq parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "expected a letter");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Seq inner = parse_sequence();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    return {parse_letter()};
  }

  std::pair<int, std::size_t> parse_letter() {
    skip_ws();
    std::size_t start = pos_;
    char c = text_[pos_];
    // 's' is both the alphabetic letter 19 and the numeric prefix; a digit
    // after it selects the numeric reading.
    bool s_prefix = c == 's' && pos_ + 1 < text_.size() &&
                    std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    if (c >= 'a' && c <= 'y' && !s_prefix) {
      ++pos_;
      return {c - 'a' + 1, start};
    }
    int sign = 1;
    if (c == '-') {
      sign = -1;
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size())
        throw ParseError(start, "dangling '-'");
    }
    if (pos_ < text_.size() && text_[pos_] == 's') ++pos_;
    long long value = parse_unsigned("generator index");
    if (value < 1) throw ParseError(start, "generator index must be >= 1");
    return {sign * static_cast<int>(value), start};
  }

  long long parse_integer(const char* what) {
    skip_ws();
    long long sign = 1;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      sign = -1;
      ++pos_;
    }
    return sign * parse_unsigned(what);
  }

  long long parse_unsigned(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(pos_, std::string("expected ") + what);
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError(pos_, std::string(what) + " too large");
      ++pos_;
    }
    return value;
  }
};

}  // namespace detail

/// Parses the word grammar. If `strands` is omitted it is inferred as one
/// plus the largest generator index used (1 for the empty word).
inline BraidWord parse_word(std::string_view text,
                            std::optional<int> strands = std::nullopt) {
  detail::WordParser parser(text);
  auto seq = parser.run();

  int max_index = 0;
  for (auto& [letter, pos] : seq) max_index = std::max(max_index, std::abs(letter));

  BraidWord word;
  word.strands = strands.value_or(max_index + 1);
  if (word.strands < 1) throw std::invalid_argument("strand count must be >= 1");
  word.letters.reserve(seq.size());
  for (auto& [letter, pos] : seq) {
    if (std::abs(letter) > word.strands - 1)
      throw ParseError(pos, "generator index " + std::to_string(std::abs(letter)) +
                                " exceeds strands-1 = " +
                                std::to_string(word.strands - 1));
    word.letters.push_back(letter);
  }
  return word;
}

/// Canonical numeric rendering: "s1 s2 -s3". Empty word renders as "".
inline std::string render_word(const BraidWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) out += ' ';
    int letter = word.letters[i];
    if (letter < 0) out += '-';
    out += 's';
    out += std::to_string(std::abs(letter));
  }
  return out;
}

inline WordStats word_stats(const BraidWord& word) {
  WordStats s;
  s.crossing_count = static_cast<long long>(word.letters.size());
  for (int letter : word.letters) {
    (std::abs(letter) % 2 == 1 ? s.odd_letters : s.even_letters) += 1;
    s.exponent_sum += letter > 0 ? 1 : -1;
  }

  // Twist regions: maximal runs of one signed letter, merged across the
  // closure (the word is read cyclically).
  const auto& w = word.letters;
  if (!w.empty()) {
    long long runs = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
      if (w[i] != w[i - 1]) ++runs;
    if (runs > 1 && w.front() == w.back()) --runs;
    s.twist_regions = runs;
  }
  return s;
}

inline Permutation permutation(const BraidWord& word) {
  validate(word);
  // content[p] = strand currently occupying position p.
  std::vector<int> content(static_cast<std::size_t>(word.strands));
  std::iota(content.begin(), content.end(), 1);
  for (int letter : word.letters) {
    int i = std::abs(letter);
    std::swap(content[static_cast<std::size_t>(i) - 1],
              content[static_cast<std::size_t>(i)]);
  }
  Permutation p;
  p.images.resize(static_cast<std::size_t>(word.strands));
  for (int pos = 1; pos <= word.strands; ++pos)
    p.images[static_cast<std::size_t>(content[static_cast<std::size_t>(pos) - 1]) - 1] = pos;
  return p;
}

/// Number of components of the closure link.
inline int components(const BraidWord& word) {
  return permutation(word).cycle_count();
}

/// Genus of the canonical Seifert surface of a positive braid closure,
/// computed from euler characteristic strands - crossings. Minimal for
/// positive braids.
inline Rational positive_genus(const BraidWord& word) {
  validate(word);
  require_positive(word, "positive_genus");
  long long chi = word.strands - static_cast<long long>(word.letters.size());
  long long comps = components(word);
  return Rational(2 - comps - chi, 2);
}

/// Word length, which realises the crossing number of the closure whenever
/// the braid is positive and the strand count equals the braid index of the
/// closure. The braid-index assumption is the caller's responsibility; it is
/// not checkable here.
inline long long crossing_number_assuming_minimal_index(const BraidWord& word) {
  validate(word);
  require_positive(word, "crossing_number_assuming_minimal_index");
  return static_cast<long long>(word.letters.size());
}

// --- small word helpers -------------------------------------------------

inline BraidWord inverse(const BraidWord& word) {
  BraidWord out{word.strands, {}};
  out.letters.reserve(word.letters.size());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("concat requires equal strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

inline BraidWord power(const BraidWord& base, int exponent) {
  BraidWord unit = exponent < 0 ? inverse(base) : base;
  int reps = std::abs(exponent);
  BraidWord out{base.strands, {}};
  out.letters.reserve(unit.letters.size() * static_cast<std::size_t>(reps));
  for (int k = 0; k < reps; ++k)
    out.letters.insert(out.letters.end(), unit.letters.begin(), unit.letters.end());
  return out;
}

/// The standard p-strand torus braid word (s1 ... s_{p-1})^q; q < 0 yields
/// the mirror word.
inline BraidWord torus_word(int p, int q) {
  if (p < 2) throw std::invalid_argument("torus_word requires p >= 2");
  BraidWord period{p, {}};
  for (int i = 1; i < p; ++i) period.letters.push_back(i);
  return power(period, q);
}

}  // namespace braidcalc

#endif  // BRAIDCALC_BRAID_WORD_HPP
