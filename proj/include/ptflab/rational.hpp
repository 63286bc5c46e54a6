#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptflab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // always exact: r is C(n-k+i, i) after this step
  }
  return r;
}

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

inline std::string to_fraction_string(const BigRational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline BigRational parse_fraction(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return BigRational(BigInt(std::string(s)));
  BigInt num{std::string(s.substr(0, slash))};
  BigInt den{std::string(s.substr(slash + 1))};
  if (den == 0) throw std::invalid_argument("fraction with zero denominator");
  return BigRational(num, den);
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace ptflab
