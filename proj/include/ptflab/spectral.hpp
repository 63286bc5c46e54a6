#pragma once

#include "ptflab/boolean_function.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ptflab {

/// Dense Fourier spectrum of an n-variable function, n <= 20. Coefficients
/// are stored as integers scaled by 2^n, so every f_hat(S) is exact.
class SpectralVector {
 public:
  SpectralVector(int arity, std::vector<long long> scaled)
      : n_(arity), scaled_(std::move(scaled)) {
    if (arity < 0 || arity > 20) throw std::invalid_argument("spectral arity must be in 0..20");
    if (scaled_.size() != (std::size_t(1) << arity))
      throw std::invalid_argument("spectral vector has wrong length");
  }

  int arity() const { return n_; }
  std::uint32_t size() const { return std::uint32_t(1) << n_; }

  /// f_hat(S) for the subset bitmask S (bit i-1 <-> coordinate i).
  DyadicRational coefficient(std::uint32_t mask) const {
    return DyadicRational(BigInt(scaled_.at(mask)), unsigned(n_));
  }
  long long scaled(std::uint32_t mask) const { return scaled_.at(mask); }

  friend bool operator==(const SpectralVector&, const SpectralVector&) = default;

 private:
  int n_;
  std::vector<long long> scaled_;
};

namespace detail {
// In-place butterfly mapping pointwise values to (coefficients scaled by 2^n).
// Our encoding has x_i = +1 at index bit 1, so each stage outputs
// (lo + hi, hi - lo) with lo = value at x_i = -1.
inline void wht_butterfly(std::vector<long long>& v, int n) {
  for (int stage = 0; stage < n; ++stage) {
    std::size_t half = std::size_t(1) << stage;
    for (std::size_t block = 0; block < v.size(); block += 2 * half)
      for (std::size_t t = 0; t < half; ++t) {
        long long lo = v[block + t];
        long long hi = v[block + half + t];
        v[block + t] = lo + hi;
        v[block + half + t] = hi - lo;
      }
  }
}
}  // namespace detail

/// Exact Walsh-Hadamard transform: f_hat(S) = E_x[f(x) x_S].
inline SpectralVector wht(const BooleanFunction& f) {
  if (f.arity() > 20) throw std::invalid_argument("wht: arity must be <= 20");
  std::vector<long long> v(f.size());
  for (std::uint64_t k = 0; k < f.size(); ++k) v[k] = f.evaluate(k);
  detail::wht_butterfly(v, f.arity());
  return SpectralVector(f.arity(), std::move(v));
}

inline SpectralVector wht(const SignedTernaryFunction& f) {
  if (f.arity() > 20) throw std::invalid_argument("wht: arity must be <= 20");
  std::vector<long long> v(f.size());
  for (std::uint64_t k = 0; k < f.size(); ++k) v[k] = f.value(k);
  detail::wht_butterfly(v, f.arity());
  return SpectralVector(f.arity(), std::move(v));
}

/// Inverse transform back to the truth table; requires a +/-1-valued input.
inline BooleanFunction inverse_wht(const SpectralVector& spec) {
  std::vector<long long> v(spec.size());
  for (std::uint32_t s = 0; s < spec.size(); ++s) v[s] = spec.scaled(s);
  // Inverse of each (lo + hi, hi - lo) stage, up to the overall 2^n scale.
  for (int stage = 0; stage < spec.arity(); ++stage) {
    std::size_t half = std::size_t(1) << stage;
    for (std::size_t block = 0; block < v.size(); block += 2 * half)
      for (std::size_t t = 0; t < half; ++t) {
        long long p = v[block + t];
        long long q = v[block + half + t];
        v[block + t] = p - q;
        v[block + half + t] = p + q;
      }
  }
  BooleanFunction f(spec.arity());
  long long scale = 1LL << spec.arity();
  for (std::uint32_t k = 0; k < spec.size(); ++k) {
    if (v[k] != scale && v[k] != -scale)
      throw std::invalid_argument("inverse_wht: spectrum is not a +/-1-valued function");
    f.set_bit(k, v[k] > 0);
  }
  return f;
}

/// Inf_i[f] = sum over S containing i of f_hat(S)^2.
inline DyadicRational influence_from_spectrum(const SpectralVector& spec, int i) {
  if (i < 1 || i > spec.arity()) throw std::out_of_range("coordinate out of range");
  std::uint32_t bit = std::uint32_t(1) << (i - 1);
  BigInt sum = 0;
  for (std::uint32_t s = 0; s < spec.size(); ++s)
    if (s & bit) sum += BigInt(spec.scaled(s)) * spec.scaled(s);
  return DyadicRational(sum, unsigned(2 * spec.arity()));
}

/// Spectrum of D_i f: coefficients with i in S, reindexed to S \ {i}.
inline SpectralVector spectral_derivative(const SpectralVector& spec, int i) {
  if (i < 1 || i > spec.arity()) throw std::out_of_range("coordinate out of range");
  std::uint32_t bit = std::uint32_t(1) << (i - 1);
  std::uint32_t low = bit - 1;
  std::vector<long long> v(std::size_t(1) << (spec.arity() - 1));
  for (std::uint32_t t = 0; t < v.size(); ++t) {
    std::uint32_t s = (t & low) | ((t & ~low) << 1) | bit;
    // Scaled coefficients of a +/-1 (or ternary) valued function are even,
    // so rescaling from 2^n to 2^(n-1) stays integral.
    v[t] = spec.scaled(s) / 2;
  }
  return SpectralVector(spec.arity() - 1, std::move(v));
}

}  // namespace ptflab
