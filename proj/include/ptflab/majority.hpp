#pragma once

#include "ptflab/boolean_function.hpp"

#include <bit>
#include <stdexcept>

namespace ptflab {

/// MAJ_n truth table (n odd).
inline BooleanFunction maj(int n) {
  if (n % 2 == 0) throw std::invalid_argument("maj requires odd arity");
  return BooleanFunction::from_predicate(
      n, [n](std::uint64_t k) { return 2 * std::popcount(k) > n; });
}

/// Maximum total influence of an LTF on n variables. For odd n this is
/// I[MAJ_n] = n 2^{-(n-1)} C(n-1, (n-1)/2); the even case uses the floor of
/// (n-1)/2, which equals E|x_1 + ... + x_n|.
inline DyadicRational maj_influence(int n) {
  if (n < 1) throw std::invalid_argument("maj_influence requires n >= 1");
  return DyadicRational(BigInt(n) * binomial(n - 1, (n - 1) / 2), unsigned(n - 1));
}

}  // namespace ptflab
