#ifndef BRAIDCALC_ALEXANDER_HPP
#define BRAIDCALC_ALEXANDER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/rewrite.hpp"

namespace braidcalc {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable with exact integer coefficients.
/// Stored as a dense coefficient block starting at min_exp; the block never
/// has zero endpoints, and the zero polynomial has an empty block.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  static LaurentPoly constant(BigInt c) { return monomial(0, std::move(c)); }

  static LaurentPoly one() { return constant(1); }

  static LaurentPoly monomial(long long exp, BigInt c) {
    LaurentPoly p;
    if (c != 0) {
      p.min_exp_ = exp;
      p.coeffs_.push_back(std::move(c));
    }
    return p;
  }

  /// Builds from a coefficient list for t^min_exp, t^{min_exp+1}, ...
  static LaurentPoly from_coeffs(long long min_exp, std::vector<BigInt> coeffs) {
    LaurentPoly p;
    p.min_exp_ = min_exp;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long long min_exp() const noexcept { return min_exp_; }
  long long max_exp() const noexcept {
    return min_exp_ + static_cast<long long>(coeffs_.size()) - 1;
  }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  BigInt coeff(long long exp) const {
    if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
    return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (BigInt& c : out.coeffs_) c = -c;
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long lo = std::min(a.min_exp_, b.min_exp_);
    long long hi = std::max(a.max_exp(), b.max_exp());
    std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      c[static_cast<std::size_t>(a.min_exp_ - lo) + k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
      c[static_cast<std::size_t>(b.min_exp_ - lo) + k] += b.coeffs_[k];
    return from_coeffs(lo, std::move(c));
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_coeffs(a.min_exp_ + b.min_exp_, std::move(c));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return (a.is_zero() && b.is_zero()) ||
           (a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_);
  }

  /// Exact division; nullopt when the divisor does not divide exactly.
  static std::optional<LaurentPoly> div_exact(const LaurentPoly& num,
                                              const LaurentPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return zero();
    std::vector<BigInt> rem = num.coeffs_;
    const std::vector<BigInt>& d = den.coeffs_;
    if (rem.size() < d.size()) return std::nullopt;
    std::vector<BigInt> quot(rem.size() - d.size() + 1);
    const BigInt& lead = d.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
      BigInt& top = rem[k + d.size() - 1];
      if (top == 0) continue;
      if (top % lead != 0) return std::nullopt;
      BigInt q = top / lead;
      quot[k] = q;
      for (std::size_t j = 0; j < d.size(); ++j)
        rem[k + j] -= q * d[j];
    }
    for (const BigInt& r : rem)
      if (r != 0) return std::nullopt;
    return from_coeffs(num.min_exp_ - den.min_exp_, std::move(quot));
  }

  /// Unit normalization: shift so the minimal exponent is zero and flip sign
  /// so the constant coefficient is positive. Representatives up to +-t^k
  /// become unique and comparable.
  LaurentPoly normalized() const {
    if (is_zero()) return zero();
    LaurentPoly out = *this;
    out.min_exp_ = 0;
    if (out.coeffs_.front() < 0)
      for (BigInt& c : out.coeffs_) c = -c;
    return out;
  }

  BigInt eval_one() const {
    BigInt sum = 0;
    for (const BigInt& c : coeffs_) sum += c;
    return sum;
  }

  /// "1 - t + t^2" style rendering, lowest exponent first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      long long e = min_exp_ + static_cast<long long>(k);
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      bool unit = mag == 1;
      if (!unit || e == 0) out += mag.str();
      if (e != 0) {
        if (!unit) out += "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      min_exp_ = 0;
      return;
    }
    std::size_t tail = coeffs_.size();
    while (coeffs_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
      coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<long>(lead),
                                    coeffs_.begin() + static_cast<long>(tail));
      min_exp_ += static_cast<long long>(lead);
    }
  }

  long long min_exp_ = 0;
  std::vector<BigInt> coeffs_;
};

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

namespace alexander_detail {

inline PolyMatrix identity_matrix(int dim) {
  PolyMatrix m(static_cast<std::size_t>(dim),
               std::vector<LaurentPoly>(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LaurentPoly::one();
  return m;
}

// Row description of the reduced Burau image of one generator: only row
// |letter|-1 differs from the identity, with entries on columns i-1, i, i+1
// clipped to the matrix. Positive letter rows are
//   (t, -t, 1);  inverse letters use (1, -1/t, 1/t).
struct GeneratorRow {
  int row;
  std::vector<std::pair<int, LaurentPoly>> entries;
};

inline GeneratorRow burau_row(int letter, int strands) {
  int i = std::abs(letter);
  int dim = strands - 1;
  GeneratorRow g;
  g.row = i - 1;
  bool inv = letter < 0;
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly tinv = LaurentPoly::monomial(-1, 1);
  if (i - 2 >= 0)
    g.entries.emplace_back(i - 2, inv ? LaurentPoly::one() : t);
  g.entries.emplace_back(i - 1, inv ? -tinv : -t);
  if (i < dim)
    g.entries.emplace_back(i, inv ? tinv : LaurentPoly::one());
  return g;
}

// m <- g * m for the sparse one-row generator matrix: only row g.row of the
// product differs from m.
inline void left_multiply(PolyMatrix& m, const GeneratorRow& g) {
  std::size_t dim = m.size();
  std::vector<LaurentPoly> new_row(dim);
  for (const auto& [col, value] : g.entries)
    for (std::size_t j = 0; j < dim; ++j)
      new_row[j] = new_row[j] + value * m[static_cast<std::size_t>(col)][j];
  m[static_cast<std::size_t>(g.row)] = std::move(new_row);
}

// Fraction-free determinant; all entries are shifted to ordinary polynomials
// first so the intermediate exact divisions stay in the ring.
inline LaurentPoly determinant(PolyMatrix m) {
  std::size_t dim = m.size();
  if (dim == 0) return LaurentPoly::one();

  long long shift = 0;
  for (const auto& row : m)
    for (const auto& entry : row)
      if (!entry.is_zero()) shift = std::min(shift, entry.min_exp());
  LaurentPoly mono = LaurentPoly::monomial(-shift, 1);
  for (auto& row : m)
    for (auto& entry : row)
      entry = entry * mono;

  // Bareiss elimination with row-swap sign tracking.
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one();
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < dim && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == dim) return LaurentPoly::zero();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = LaurentPoly::div_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = LaurentPoly::zero();
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[dim - 1][dim - 1];
  if (sign < 0) det = -det;
  // Undo the global monomial scaling: the determinant picked up t^{-shift*dim}.
  return det * LaurentPoly::monomial(shift * static_cast<long long>(dim), 1);
}

inline LaurentPoly geometric_sum(long long count) {
  std::vector<BigInt> ones(static_cast<std::size_t>(count), 1);
  return LaurentPoly::from_coeffs(0, std::move(ones));
}

}  // namespace alexander_detail

/// Reduced Burau image of a braid word: an (strands-1)-square matrix of
/// Laurent polynomials, computed exactly.
inline PolyMatrix reduced_burau(const BraidWord& word) {
  using namespace alexander_detail;
  validate(word);
  if (word.strands < 2)
    throw std::invalid_argument("reduced_burau requires at least 2 strands");
  PolyMatrix m = identity_matrix(word.strands - 1);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    left_multiply(m, burau_row(*it, word.strands));
  return m;
}

struct ClosurePolynomial {
  LaurentPoly poly;  // normalized; zero for split closures
  bool is_link = false;
};

/// Alexander polynomial of the closure via det(burau - id) (1-t)/(1-t^n),
/// normalized to minimal exponent zero with positive constant coefficient.
/// Multi-component closures are flagged; their one-variable polynomial is
/// returned under the same normalization.
inline ClosurePolynomial alexander_closure(const BraidWord& word) {
  using namespace alexander_detail;
  validate(word);
  ClosurePolynomial out;
  out.is_link = components(word) > 1;
  if (word.strands < 2) {
    out.poly = LaurentPoly::one();
    return out;
  }
  PolyMatrix m = reduced_burau(word);
  int dim = word.strands - 1;
  for (int i = 0; i < dim; ++i) {
    auto& d = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    d = d - LaurentPoly::one();
  }
  LaurentPoly det = determinant(std::move(m));
  if (det.is_zero()) {
    out.poly = LaurentPoly::zero();
    return out;
  }
  auto quotient = LaurentPoly::div_exact(det, geometric_sum(word.strands));
  if (!quotient)
    throw std::logic_error("Alexander division by 1+t+...+t^{n-1} not exact");
  out.poly = quotient->normalized();
  return out;
}

/// Closed form for torus links of coprime parameters:
/// (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), normalized as above.
inline LaurentPoly alexander_torus(int p, int q) {
  using namespace alexander_detail;
  if (p < 2 || q < 2) throw std::invalid_argument("alexander_torus requires p, q >= 2");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("alexander_torus requires coprime parameters");
  auto power_minus_one = [](long long e) {
    LaurentPoly out = LaurentPoly::monomial(e, 1) - LaurentPoly::one();
    return out;
  };
  LaurentPoly numerator =
      power_minus_one(static_cast<long long>(p) * q) * power_minus_one(1);
  auto step = LaurentPoly::div_exact(numerator, power_minus_one(p));
  if (!step) throw std::logic_error("torus polynomial division not exact");
  auto full = LaurentPoly::div_exact(*step, power_minus_one(q));
  if (!full) throw std::logic_error("torus polynomial division not exact");
  return full->normalized();
}

/// Confirms that the even-deleted reduction word closes up to the expected
/// two-strand torus knot: one component, genus 4n, and Alexander polynomial
/// equal to the closed form for (2, 8n+1).
inline bool verify_t2_reduction(int n) {
  if (n < 2) throw std::invalid_argument("verify_t2_reduction requires n >= 2");
  BraidWord alpha = t2_subsurface_word(n);
  if (components(alpha) != 1) return false;
  if (positive_genus(alpha) != Rational(4LL * n)) return false;
  return alexander_closure(alpha).poly == alexander_torus(2, 8 * n + 1);
}

}  // namespace braidcalc

#endif  // BRAIDCALC_ALEXANDER_HPP
