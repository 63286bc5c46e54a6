#pragma once

#include "ptflab/dyadic.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptflab {

/// Packed truth table of f : {-1,1}^n -> {-1,1}.
///
/// Input index k encodes x by x_i = +1 iff bit (i-1) of k is set. Bit k of
/// the table is 1 iff f = +1 at input index k.
class BooleanFunction {
 public:
  explicit BooleanFunction(int arity) : n_(check_arity(arity)) {
    words_.assign(word_count(n_), 0);
  }

  static BooleanFunction from_predicate(int arity,
                                        const std::function<bool(std::uint64_t)>& is_plus_one) {
    BooleanFunction f(arity);
    for (std::uint64_t k = 0; k < f.size(); ++k)
      if (is_plus_one(k)) f.set_bit(k, true);
    return f;
  }

  /// Low 2^n bits of `table` are the truth table (arity <= 6).
  static BooleanFunction from_word(int arity, std::uint64_t table) {
    if (arity > 6) throw std::invalid_argument("from_word: arity > 6");
    BooleanFunction f(arity);
    f.words_[0] = table & f.tail_mask();
    return f;
  }

  /// Lowercase hex, most significant digit first, exactly ceil(2^n/4) digits.
  static BooleanFunction from_hex(int arity, std::string_view hex) {
    BooleanFunction f(arity);
    std::size_t digits = f.hex_digits();
    if (hex.size() != digits)
      throw std::invalid_argument("truth table hex: expected " + std::to_string(digits) +
                                  " digits, got " + std::to_string(hex.size()));
    for (std::size_t pos = 0; pos < digits; ++pos) {
      char c = hex[digits - 1 - pos];  // pos counts nibbles from the LSB
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else throw std::invalid_argument(std::string("truth table hex: bad digit '") + c + "'");
      f.words_[pos / 16] |= std::uint64_t(v) << (4 * (pos % 16));
    }
    if ((f.words_.back() & ~f.tail_mask()) != 0)
      throw std::invalid_argument("truth table hex: bits beyond 2^n");
    return f;
  }

  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::size_t nd = hex_digits();
    std::string s(nd, '0');
    for (std::size_t pos = 0; pos < nd; ++pos) {
      int v = int((words_[pos / 16] >> (4 * (pos % 16))) & 0xf);
      s[nd - 1 - pos] = digits[v];
    }
    return s;
  }

  int arity() const { return n_; }
  std::uint64_t size() const { return std::uint64_t(1) << n_; }

  bool bit(std::uint64_t k) const {
    check_index(k);
    return (words_[k >> 6] >> (k & 63)) & 1;
  }

  void set_bit(std::uint64_t k, bool v) {
    check_index(k);
    std::uint64_t mask = std::uint64_t(1) << (k & 63);
    if (v) words_[k >> 6] |= mask;
    else words_[k >> 6] &= ~mask;
  }

  /// +1 iff bit k of the table is set.
  int evaluate(std::uint64_t k) const { return bit(k) ? 1 : -1; }

  BooleanFunction negated() const {
    BooleanFunction g = *this;
    for (auto& w : g.words_) w = ~w;
    g.words_.back() &= g.tail_mask();
    return g;
  }

  /// g with g(k) = f(k ^ 2^b); b is a 0-based index bit.
  BooleanFunction with_index_bit_flipped(int b) const {
    if (b < 0 || b >= n_) throw std::out_of_range("index bit out of range");
    BooleanFunction g(n_);
    if (b < 6) {
      int s = 1 << b;
      std::uint64_t hi = bit_high_mask(b);
      for (std::size_t w = 0; w < words_.size(); ++w)
        g.words_[w] = ((words_[w] & hi) >> s) | ((words_[w] & ~hi) << s);
    } else {
      std::size_t stride = std::size_t(1) << (b - 6);
      for (std::size_t w = 0; w < words_.size(); ++w)
        g.words_[w] = words_[w ^ stride];
    }
    return g;
  }

  /// Number of inputs where f differs from f with coordinate i flipped.
  std::uint64_t boundary_count(int i) const {
    check_coordinate(i);
    BooleanFunction g = with_index_bit_flipped(i - 1);
    std::uint64_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      c += std::popcount(words_[w] ^ g.words_[w]);
    return c;
  }

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) = default;

 private:
  static int check_arity(int n) {
    if (n < 1 || n > 32) throw std::invalid_argument("arity must be in 1..32");
    return n;
  }
  void check_index(std::uint64_t k) const {
    if (k >= size()) throw std::out_of_range("input index out of range");
  }
  void check_coordinate(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("coordinate out of range");
  }
  static std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t(1) << (n - 6)) : 1;
  }
  std::uint64_t tail_mask() const {
    return n_ >= 6 ? ~std::uint64_t(0) : (std::uint64_t(1) << (1 << n_)) - 1;
  }
  std::size_t hex_digits() const { return std::size_t((size() + 3) / 4); }

  /// Mask of positions whose index has bit b set, within one 64-bit word (b < 6).
  static std::uint64_t bit_high_mask(int b) {
    static constexpr std::uint64_t masks[6] = {
        0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
        0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL};
    return masks[b];
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

/// Image of the discrete derivative or expectation operator: an
/// (n-1)-variable function with values in {-1, 0, +1}.
class SignedTernaryFunction {
 public:
  explicit SignedTernaryFunction(int arity) : n_(arity), values_(std::size_t(1) << arity, 0) {
    if (arity < 0 || arity > 31) throw std::invalid_argument("ternary arity out of range");
  }

  int arity() const { return n_; }
  std::uint64_t size() const { return std::uint64_t(1) << n_; }

  int value(std::uint64_t k) const { return values_.at(k); }
  void set_value(std::uint64_t k, int v) {
    if (v < -1 || v > 1) throw std::invalid_argument("ternary value out of range");
    values_.at(k) = static_cast<signed char>(v);
  }

  friend bool operator==(const SignedTernaryFunction&, const SignedTernaryFunction&) = default;

 private:
  int n_;
  std::vector<signed char> values_;
};

inline DyadicRational influence(const BooleanFunction& f, int i) {
  return DyadicRational(BigInt(f.boundary_count(i)), unsigned(f.arity()));
}

inline DyadicRational total_influence(const BooleanFunction& f) {
  BigInt total = 0;
  for (int i = 1; i <= f.arity(); ++i) total += f.boundary_count(i);
  return DyadicRational(total, unsigned(f.arity()));
}

namespace detail {
// Index of x over n coordinates, from its index j over n-1 coordinates with
// coordinate i (1-based) set to `hi`.
inline std::uint64_t insert_coordinate(std::uint64_t j, int i, bool hi) {
  std::uint64_t low = j & ((std::uint64_t(1) << (i - 1)) - 1);
  std::uint64_t high = j >> (i - 1);
  return low | (std::uint64_t(hi) << (i - 1)) | (high << i);
}
}  // namespace detail

/// D_i f(x) = (f(x^{i->1}) - f(x^{i->-1})) / 2 over the remaining n-1 coordinates.
inline SignedTernaryFunction discrete_derivative(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.arity()) throw std::out_of_range("coordinate out of range");
  SignedTernaryFunction d(f.arity() - 1);
  for (std::uint64_t j = 0; j < d.size(); ++j) {
    int hi = f.evaluate(detail::insert_coordinate(j, i, true));
    int lo = f.evaluate(detail::insert_coordinate(j, i, false));
    d.set_value(j, (hi - lo) / 2);
  }
  return d;
}

/// E_i f(x) = (f(x^{i->1}) + f(x^{i->-1})) / 2.
inline SignedTernaryFunction expectation_operator(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.arity()) throw std::out_of_range("coordinate out of range");
  SignedTernaryFunction e(f.arity() - 1);
  for (std::uint64_t j = 0; j < e.size(); ++j) {
    int hi = f.evaluate(detail::insert_coordinate(j, i, true));
    int lo = f.evaluate(detail::insert_coordinate(j, i, false));
    e.set_value(j, (hi + lo) / 2);
  }
  return e;
}

/// Restriction f_{J|z}: coordinates in J (1-based, ascending) stay free, the
/// complement is fixed to z (z bit t = assignment of the t-th smallest
/// coordinate outside J; bit set means +1).
inline BooleanFunction restrict_to(const BooleanFunction& f, const std::vector<int>& J,
                                   std::uint64_t z) {
  std::uint64_t keep_mask = 0;
  for (int i : J) {
    if (i < 1 || i > f.arity()) throw std::out_of_range("restriction coordinate out of range");
    keep_mask |= std::uint64_t(1) << (i - 1);
  }
  int kept = std::popcount(keep_mask);
  if (int(J.size()) != kept) throw std::invalid_argument("restriction set has duplicates");
  int fixed = f.arity() - kept;
  if (fixed < 64 && (z >> fixed) != 0)
    throw std::invalid_argument("restriction assignment has wrong dimension");
  if (kept == 0) throw std::invalid_argument("restriction to the empty set");

  std::uint64_t base = 0;  // fixed coordinates scattered into place
  {
    int t = 0;
    for (int b = 0; b < f.arity(); ++b)
      if (!((keep_mask >> b) & 1)) {
        if ((z >> t) & 1) base |= std::uint64_t(1) << b;
        ++t;
      }
  }
  std::vector<int> free_bits;
  for (int b = 0; b < f.arity(); ++b)
    if ((keep_mask >> b) & 1) free_bits.push_back(b);

  BooleanFunction g(kept);
  for (std::uint64_t j = 0; j < g.size(); ++j) {
    std::uint64_t k = base;
    for (int t = 0; t < kept; ++t)
      if ((j >> t) & 1) k |= std::uint64_t(1) << free_bits[t];
    g.set_bit(j, f.bit(k));
  }
  return g;
}

}  // namespace ptflab
