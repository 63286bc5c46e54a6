#pragma once

#include "ptflab/rational.hpp"

#include <compare>
#include <string>
#include <utility>

namespace ptflab {

/// Exact rational of the form numerator / 2^exponent, kept canonical
/// (numerator odd or zero). All hypercube probabilities live here.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator) : num_(std::move(numerator)) {}  // NOLINT: implicit by design
  DyadicRational(long long numerator) : num_(numerator) {}          // NOLINT
  DyadicRational(BigInt numerator, unsigned exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  BigInt denominator() const { return pow2(exp_); }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  DyadicRational operator-() const {
    DyadicRational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    unsigned k = std::max(a.exp_, b.exp_);
    return DyadicRational((a.num_ << (k - a.exp_)) + (b.num_ << (k - b.exp_)), k);
  }
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
    return a + (-b);
  }
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
    return DyadicRational(a.num_ * b.num_, a.exp_ + b.exp_);
  }

  DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }
  DyadicRational& operator-=(const DyadicRational& o) { return *this = *this - o; }
  DyadicRational& operator*=(const DyadicRational& o) { return *this = *this * o; }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
    unsigned k = std::max(a.exp_, b.exp_);
    BigInt lhs = a.num_ << (k - a.exp_);
    BigInt rhs = b.num_ << (k - b.exp_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  BigRational to_rational() const { return BigRational(num_, denominator()); }
  double to_double() const { return to_rational().convert_to<double>(); }

  /// "51/16" style; bare integer when the denominator is 1.
  std::string str() const {
    std::string s = num_.str();
    if (exp_ > 0) s += "/" + denominator().str();
    return s;
  }

 private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp_;
    }
  }

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace ptflab
