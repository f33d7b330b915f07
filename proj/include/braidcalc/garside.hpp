#ifndef BRAIDCALC_GARSIDE_HPP
#define BRAIDCALC_GARSIDE_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "braidcalc/braid_word.hpp"

namespace braidcalc {

// Left-greedy normal form with the half twist as Garside element. A braid is
// written delta^p f1 f2 ... fk where every fi is a permutation braid (each
// pair of strands crosses at most once), no fi equals the identity or the
// half twist, and every adjacent pair satisfies the left-weighted condition
// S(f_{i+1}) subseteq F(f_i). Two words are equal in the braid group iff
// their normal forms coincide, which makes the serialized form usable as an
// equality certificate.

namespace garside_detail {

// Permutations are image arrays over 0-based positions: p[j] is where the
// strand entering at position j exits.
using Perm = std::vector<int>;

inline Perm identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = j;
  return p;
}

inline Perm half_twist(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = n - 1 - j;
  return p;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    q[static_cast<std::size_t>(p[j])] = static_cast<int>(j);
  return q;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != static_cast<int>(j)) return false;
  return true;
}

inline bool is_half_twist(const Perm& p) {
  int n = static_cast<int>(p.size());
  for (int j = 0; j < n; ++j)
    if (p[static_cast<std::size_t>(j)] != n - 1 - j) return false;
  return true;
}

// Conjugation by the half twist maps generator i to n-i; on permutation
// braids this is delta o p o delta.
inline Perm flip(const Perm& p) {
  int n = static_cast<int>(p.size());
  Perm q(p.size());
  for (int j = 0; j < n; ++j)
    q[static_cast<std::size_t>(j)] =
        n - 1 - p[static_cast<std::size_t>(n - 1 - j)];
  return q;
}

// Moves single letters from the front of b to the back of a while a letter
// i in S(b) \ F(a) exists. On exit the pair is left-weighted. Returns true
// if anything moved. a stays a permutation braid throughout: i not in F(a)
// means the two strands ending at positions i-1, i of a have not crossed.
inline bool make_left_weighted(Perm& a, Perm& b) {
  int n = static_cast<int>(a.size());
  Perm a_inv = inverse(a);
  bool changed = false;
  for (;;) {
    int pick = -1;
    for (int i = 1; i < n; ++i) {
      bool starts_b = b[static_cast<std::size_t>(i - 1)] > b[static_cast<std::size_t>(i)];
      if (!starts_b) continue;
      bool finishes_a = a_inv[static_cast<std::size_t>(i - 1)] > a_inv[static_cast<std::size_t>(i)];
      if (!finishes_a) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return changed;
    std::swap(a[static_cast<std::size_t>(a_inv[static_cast<std::size_t>(pick - 1)])],
              a[static_cast<std::size_t>(a_inv[static_cast<std::size_t>(pick)])]);
    std::swap(a_inv[static_cast<std::size_t>(pick - 1)],
              a_inv[static_cast<std::size_t>(pick)]);
    std::swap(b[static_cast<std::size_t>(pick - 1)], b[static_cast<std::size_t>(pick)]);
    changed = true;
  }
}

}  // namespace garside_detail

struct GarsideNormalForm {
  int strands = 1;
  long long delta_power = 0;
  // Each factor as a 1-based one-line permutation image array.
  std::vector<std::vector<int>> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;

  /// Serialized as "Δ^p : f1 | f2 | ..." with factors in one-line notation.
  std::string to_string() const {
    std::string out = "Δ^" + std::to_string(delta_power) + " :";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      out += k == 0 ? " " : " | ";
      for (std::size_t j = 0; j < factors[k].size(); ++j) {
        if (j) out += ' ';
        out += std::to_string(factors[k][j]);
      }
    }
    return out;
  }
};

inline GarsideNormalForm normal_form(const BraidWord& word) {
  using namespace garside_detail;
  validate(word);
  int n = word.strands;

  long long delta_power = 0;
  std::deque<Perm> factors;
  for (int letter : word.letters) {
    int i = std::abs(letter);
    if (letter > 0) {
      Perm t = identity(n);
      std::swap(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
      factors.push_back(std::move(t));
    } else {
      // sigma_i^-1 = delta^-1 (delta sigma_i^-1); push delta^-1 to the front,
      // flipping every factor it passes. The complement delta sigma_i^-1 is
      // the half twist with the entries holding values i-1, i exchanged.
      delta_power -= 1;
      for (Perm& f : factors) f = flip(f);
      Perm d = half_twist(n);
      std::swap(d[static_cast<std::size_t>(n - 1 - i)],
                d[static_cast<std::size_t>(n - i)]);
      factors.push_back(std::move(d));
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k)
      if (make_left_weighted(factors[k], factors[k + 1])) changed = true;
  }

  while (!factors.empty() && is_half_twist(factors.front())) {
    ++delta_power;
    factors.pop_front();
  }

  GarsideNormalForm nf;
  nf.strands = n;
  nf.delta_power = delta_power;
  for (const Perm& f : factors) {
    if (is_identity(f)) continue;
    std::vector<int> one_line(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) one_line[j] = f[j] + 1;
    nf.factors.push_back(std::move(one_line));
  }
  return nf;
}

/// Whether two words represent the same element of the braid group. Both
/// words must live in the same group.
inline bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("braid_equal requires equal strand counts");
  return normal_form(a) == normal_form(b);
}

// --- positive-word rewriting search -------------------------------------

namespace garside_detail {

inline void require_packable(const BraidWord& word, const char* operation) {
  if (word.strands > 127)
    throw std::invalid_argument(std::string(operation) +
                                " supports at most 127 strands");
}

// Positive words are packed into byte strings for dense visited sets.
inline std::string pack(const std::vector<int>& letters) {
  std::string s;
  s.reserve(letters.size());
  for (int x : letters) s.push_back(static_cast<char>(x));
  return s;
}

inline std::vector<int> unpack(const std::string& s) {
  return std::vector<int>(s.begin(), s.end());
}

template <typename Visit>
inline void for_each_neighbor(const std::string& w, Visit&& visit) {
  std::size_t len = w.size();
  for (std::size_t i = 0; i + 1 < len; ++i) {
    int a = w[i], b = w[i + 1];
    int d = a - b;
    if (d >= 2 || d <= -2) {
      std::string v = w;
      std::swap(v[i], v[i + 1]);
      visit(std::move(v));
    }
  }
  for (std::size_t i = 0; i + 2 < len; ++i) {
    int a = w[i], b = w[i + 1];
    int d = a - b;
    if (w[i + 2] == w[i] && (d == 1 || d == -1)) {
      std::string v = w;
      v[i] = static_cast<char>(b);
      v[i + 1] = static_cast<char>(a);
      v[i + 2] = static_cast<char>(b);
      visit(std::move(v));
    }
  }
}

inline bool has_adjacent_square(const std::string& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return true;
  return false;
}

// Smallest gap separating two occurrences of one letter; 0 means an adjacent
// square is present. Used to steer the square search.
inline int min_equal_gap(const std::string& w) {
  int best = 1 << 20;
  int last[128];
  for (int& x : last) x = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int c = static_cast<unsigned char>(w[i]);
    if (last[c] >= 0) best = std::min(best, static_cast<int>(i) - last[c] - 1);
    last[c] = static_cast<int>(i);
  }
  return best;
}

}  // namespace garside_detail

/// All positive words reachable from `word` by single commutation and braid
/// relation moves. `complete` is false when the visited-set cap was hit, in
/// which case `words` is a partial set.
struct FlipClosure {
  int strands = 1;
  std::vector<std::string> words;  // packed letter bytes, sorted
  bool complete = true;

  std::size_t size() const noexcept { return words.size(); }

  BraidWord word_at(std::size_t k) const {
    return BraidWord{strands, garside_detail::unpack(words[k])};
  }

  bool contains(const BraidWord& w) const {
    if (w.strands != strands) return false;
    return std::binary_search(words.begin(), words.end(),
                              garside_detail::pack(w.letters));
  }
};

inline constexpr std::size_t kDefaultFlipClosureCap = 5'000'000;

inline FlipClosure positive_flip_closure(
    const BraidWord& word, std::size_t cap = kDefaultFlipClosureCap) {
  using namespace garside_detail;
  validate(word);
  require_positive(word, "positive_flip_closure");
  require_packable(word, "positive_flip_closure");

  std::string start = pack(word.letters);
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  bool complete = true;
  while (!queue.empty() && complete) {
    std::string current = std::move(queue.front());
    queue.pop_front();
    for_each_neighbor(current, [&](std::string next) {
      if (!complete || seen.count(next)) return;
      if (seen.size() >= cap) {
        complete = false;
        return;
      }
      queue.push_back(next);
      seen.insert(std::move(next));
    });
  }

  FlipClosure out;
  out.strands = word.strands;
  out.complete = complete;
  out.words.assign(seen.begin(), seen.end());
  std::sort(out.words.begin(), out.words.end());
  return out;
}

/// Outcome of a square-exposure search. `square` holds a positive word equal
/// to the input containing two adjacent equal letters when one was found.
/// When absent, `exhausted` distinguishes a definitive negative (the full
/// flip closure was enumerated) from an inconclusive capped search.
struct SquareSearch {
  std::optional<BraidWord> square;
  bool exhausted = false;
  std::size_t visited = 0;
};

inline constexpr std::size_t kDefaultSquareSearchCap = 1'000'000;

inline SquareSearch expose_square(const BraidWord& word,
                                  std::size_t cap = kDefaultSquareSearchCap) {
  using namespace garside_detail;
  validate(word);
  require_positive(word, "expose_square");
  require_packable(word, "expose_square");

  SquareSearch result;
  std::string start = pack(word.letters);
  if (has_adjacent_square(start)) {
    result.square = word;
    result.exhausted = true;
    return result;
  }

  // Best-first over the flip closure, steered toward words whose equal
  // letters sit close together; falls back to full enumeration, so an empty
  // frontier is a proof of absence.
  using Entry = std::pair<int, std::string>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_set<std::string> seen{start};
  frontier.emplace(min_equal_gap(start), start);
  bool capped = false;

  while (!frontier.empty()) {
    std::string current = frontier.top().second;
    frontier.pop();
    bool found = false;
    for_each_neighbor(current, [&](std::string next) {
      if (found || capped || seen.count(next)) return;
      if (has_adjacent_square(next)) {
        result.square = BraidWord{word.strands, unpack(next)};
        found = true;
        return;
      }
      if (seen.size() >= cap) {
        capped = true;
        return;
      }
      int gap = min_equal_gap(next);
      seen.insert(next);
      frontier.emplace(gap, std::move(next));
    });
    if (found) {
      result.visited = seen.size();
      return result;
    }
    if (capped) break;
  }

  result.visited = seen.size();
  result.exhausted = !capped;
  return result;
}

/// Repeatedly removes single occurrences of the outermost generators
/// (index strands-1, or index 1 followed by renumbering), shrinking the
/// strand count while preserving the closure.
inline BraidWord destabilize(const BraidWord& word) {
  validate(word);
  require_positive(word, "destabilize");
  BraidWord w = word;
  bool changed = true;
  while (changed && w.strands >= 2) {
    changed = false;
    auto count_of = [&](int index) {
      return std::count(w.letters.begin(), w.letters.end(), index);
    };
    if (count_of(w.strands - 1) == 1) {
      std::erase(w.letters, w.strands - 1);
      w.strands -= 1;
      changed = true;
      continue;
    }
    if (count_of(1) == 1) {
      std::erase(w.letters, 1);
      for (int& letter : w.letters) letter -= 1;
      w.strands -= 1;
      changed = true;
    }
  }
  return w;
}

}  // namespace braidcalc

#endif  // BRAIDCALC_GARSIDE_HPP
