#ifndef BRAIDCALC_SMOOTHING_HPP
#define BRAIDCALC_SMOOTHING_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcalc/braid_word.hpp"

namespace braidcalc {

// Kauffman state resolution of a braid closure diagram. For a positive
// crossing the A-resolution is the vertical (strand-preserving) smoothing and
// the B-resolution is the horizontal cap-cup; for a negative crossing the
// roles swap. Circles are counted with a union-find over arc identifiers,
// where an arc is a vertical interval of a strand position between
// consecutive crossings, and closure arcs join each top endpoint to the
// bottom endpoint at the same position.

enum class Resolution : unsigned char { A, B };

struct AdequacyReport {
  long long s_a = 0;
  long long s_b = 0;
  bool a_adequate = false;
  bool b_adequate = false;
  long long crossing_count = 0;
  // Crossings (0-based word positions) whose two smoothing arcs land on one
  // circle in the corresponding extreme state.
  std::vector<int> a_contacts;
  std::vector<int> b_contacts;
};

class NonAdequateError : public std::invalid_argument {
 public:
  NonAdequateError(std::string message, std::vector<int> crossings)
      : std::invalid_argument(std::move(message)),
        crossings_(std::move(crossings)) {}

  const std::vector<int>& crossings() const noexcept { return crossings_; }

 private:
  std::vector<int> crossings_;
};

namespace smoothing_detail {

class UnionFind {
 public:
  int make() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(a)] = b;
  }

  int classes() {
    int count = 0;
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x)
      if (find(x) == x) ++count;
    return count;
  }

 private:
  std::vector<int> parent_;
};

struct StateResult {
  long long circles = 0;
  std::vector<int> self_contacts;  // crossings whose two smoothing arcs coincide
};

inline StateResult resolve(const BraidWord& word,
                           std::span<const Resolution> state) {
  validate(word);
  if (state.size() != word.letters.size())
    throw std::invalid_argument("state length must equal crossing count");

  UnionFind uf;
  std::vector<int> initial(static_cast<std::size_t>(word.strands));
  for (int& arc : initial) arc = uf.make();
  std::vector<int> current = initial;

  // For each crossing remember the two arcs whose circles must differ for
  // adequacy: the two vertical passes, or the bottom cap and top cup.
  std::vector<std::pair<int, int>> checks;
  checks.reserve(word.letters.size());

  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    int letter = word.letters[k];
    std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
    bool vertical = (state[k] == Resolution::A) == (letter > 0);
    int a = current[i], b = current[i + 1];
    int c = uf.make(), d = uf.make();
    if (vertical) {
      uf.unite(a, c);
      uf.unite(b, d);
      checks.emplace_back(a, b);
    } else {
      uf.unite(a, b);
      uf.unite(c, d);
      checks.emplace_back(a, c);
    }
    current[i] = c;
    current[i + 1] = d;
  }

  for (std::size_t p = 0; p < current.size(); ++p)
    uf.unite(current[p], initial[p]);

  StateResult out;
  out.circles = uf.classes();
  for (std::size_t k = 0; k < checks.size(); ++k)
    if (uf.find(checks[k].first) == uf.find(checks[k].second))
      out.self_contacts.push_back(static_cast<int>(k));
  return out;
}

inline std::vector<Resolution> uniform(std::size_t count, Resolution r) {
  return std::vector<Resolution>(count, r);
}

}  // namespace smoothing_detail

/// Number of circles after smoothing every crossing by the given state.
inline long long count_circles(const BraidWord& word,
                               std::span<const Resolution> state) {
  return smoothing_detail::resolve(word, state).circles;
}

inline long long count_circles(const BraidWord& word,
                               const std::vector<Resolution>& state) {
  return count_circles(word, std::span<const Resolution>(state));
}

inline AdequacyReport adequacy(const BraidWord& word) {
  using namespace smoothing_detail;
  auto all_a = resolve(word, uniform(word.letters.size(), Resolution::A));
  auto all_b = resolve(word, uniform(word.letters.size(), Resolution::B));
  AdequacyReport report;
  report.crossing_count = static_cast<long long>(word.letters.size());
  report.s_a = all_a.circles;
  report.s_b = all_b.circles;
  report.a_contacts = std::move(all_a.self_contacts);
  report.b_contacts = std::move(all_b.self_contacts);
  report.a_adequate = report.a_contacts.empty();
  report.b_adequate = report.b_contacts.empty();
  return report;
}

/// Khovanov width of an adequate closure diagram:
/// (c - s_A - s_B)/2 + 3. Refuses non-adequate diagrams, listing the
/// crossings with self-contact.
inline long long khovanov_width(const BraidWord& word) {
  AdequacyReport r = adequacy(word);
  if (!r.a_adequate || !r.b_adequate) {
    std::string msg = "diagram is not adequate; self-contact at crossings";
    std::vector<int> bad = r.a_contacts;
    bad.insert(bad.end(), r.b_contacts.begin(), r.b_contacts.end());
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    for (int k : bad) msg += ' ' + std::to_string(k);
    throw NonAdequateError(msg, std::move(bad));
  }
  long long numerator = r.crossing_count - r.s_a - r.s_b;
  if (numerator % 2 != 0)
    throw std::logic_error("width numerator has odd parity");
  return numerator / 2 + 3;
}

}  // namespace braidcalc

#endif  // BRAIDCALC_SMOOTHING_HPP
