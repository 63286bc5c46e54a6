#include <catch2/catch_amalgamated.hpp>

#include "ptflab/majority.hpp"
#include "ptflab/qtf.hpp"
#include "ptflab/spectral.hpp"

#include <random>

using namespace ptflab;

namespace {

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  return BooleanFunction::from_predicate(n, [&](std::uint64_t) { return rng() & 1; });
}

// f_hat(S) straight from the definition, one expectation per subset.
DyadicRational coefficient_slow(const BooleanFunction& f, std::uint32_t mask) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k < f.size(); ++k) {
    // x_S = prod x_i = (-1)^{# i in S with x_i = -1}
    int chi = std::popcount(std::uint64_t(mask) & ~k & (f.size() - 1)) % 2 == 0 ? 1 : -1;
    sum += chi * f.evaluate(k);
  }
  return DyadicRational(sum, unsigned(f.arity()));
}

}  // namespace

TEST_CASE("spectra of pinned functions") {
  // f = x_1 on 2 variables.
  BooleanFunction x1 = BooleanFunction::from_predicate(2, [](std::uint64_t k) { return k & 1; });
  SpectralVector s = wht(x1);
  CHECK(s.coefficient(0b01) == DyadicRational(1));
  CHECK(s.coefficient(0b00).is_zero());
  CHECK(s.coefficient(0b10).is_zero());
  CHECK(s.coefficient(0b11).is_zero());

  BooleanFunction minus_one(3);
  CHECK(wht(minus_one).coefficient(0) == DyadicRational(-1));

  // MAJ_3: 1/2 on singletons, -1/2 on the full set.
  SpectralVector m = wht(maj(3));
  DyadicRational half(BigInt(1), 1);
  CHECK(m.coefficient(0b001) == half);
  CHECK(m.coefficient(0b010) == half);
  CHECK(m.coefficient(0b100) == half);
  CHECK(m.coefficient(0b111) == -half);
  CHECK(m.coefficient(0b000).is_zero());
  CHECK(m.coefficient(0b011).is_zero());
}

TEST_CASE("transform equals the definitional expectation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + int(rng() % 6);
    BooleanFunction f = random_function(n, rng);
    SpectralVector s = wht(f);
    for (std::uint32_t mask = 0; mask < f.size(); ++mask)
      CHECK(s.coefficient(mask) == coefficient_slow(f, mask));
  }
}

TEST_CASE("Parseval and inverse round trip") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 110; ++trial) {
    int n = 1 + int(rng() % 10);
    BooleanFunction f = random_function(n, rng);
    SpectralVector s = wht(f);
    BigInt sumsq = 0;
    for (std::uint32_t mask = 0; mask < s.size(); ++mask)
      sumsq += BigInt(s.scaled(mask)) * s.scaled(mask);
    CHECK(sumsq == pow2(unsigned(2 * n)));  // sum f_hat(S)^2 = 1
    CHECK(inverse_wht(s) == f);
  }
}

TEST_CASE("influence from the spectrum equals counting") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 110; ++trial) {
    int n = 1 + int(rng() % 10);
    BooleanFunction f = random_function(n, rng);
    SpectralVector s = wht(f);
    for (int i = 1; i <= n; ++i) CHECK(influence_from_spectrum(s, i) == influence(f, i));
  }
}

TEST_CASE("spectral derivative matches the pointwise derivative") {
  // Pinned: MAJ_3, i = 1 -> g_hat(empty) = 1/2, g_hat({2,3}) = -1/2.
  SpectralVector dm = spectral_derivative(wht(maj(3)), 1);
  CHECK(dm.coefficient(0b00) == DyadicRational(BigInt(1), 1));
  CHECK(dm.coefficient(0b11) == -DyadicRational(BigInt(1), 1));
  CHECK(dm.coefficient(0b01).is_zero());
  CHECK(dm.coefficient(0b10).is_zero());

  // PARITY_2 = x_1 x_2: +1 iff the two index bits agree.
  SpectralVector dp = spectral_derivative(wht(BooleanFunction::from_predicate(
                                              2,
                                              [](std::uint64_t k) {
                                                return std::popcount(k) % 2 == 0;
                                              })),
                                          1);
  CHECK(dp.coefficient(0b1) == DyadicRational(1));  // spectrum of x_2

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + int(rng() % 8);
    BooleanFunction f = random_function(n, rng);
    int i = 1 + int(rng() % n);
    CHECK(spectral_derivative(wht(f), i) == wht(discrete_derivative(f, i)));
  }
}

TEST_CASE("expectation operator keeps exactly the S without i") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + int(rng() % 8);
    BooleanFunction f = random_function(n, rng);
    int i = 1 + int(rng() % n);
    SpectralVector sf = wht(f);
    SpectralVector se = wht(expectation_operator(f, i));
    std::uint32_t bit = 1u << (i - 1);
    std::uint32_t low = bit - 1;
    for (std::uint32_t t = 0; t < se.size(); ++t) {
      std::uint32_t s = (t & low) | ((t & ~low) << 1);  // S with i absent
      CHECK(se.coefficient(t) == DyadicRational(BigInt(sf.scaled(s)), unsigned(n)));
    }
  }
}

TEST_CASE("LTF influence is the level-1 weight and at most sqrt(n)") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + int(rng() % 5);
    // Random integer LTF; re-draw if some input lands on the hyperplane.
    QuadraticPolynomial q(n);
    BooleanFunction f(n);
    for (;;) {
      q.constant() = BigRational(int(rng() % 9) - 4);
      for (int i = 1; i <= n; ++i) q.linear(i) = BigRational(int(rng() % 9) - 4);
      bool clean = true;
      for (std::uint32_t k = 0; k < f.size() && clean; ++k) {
        int s = q.sign_at(k);
        if (s == 0) clean = false;
        else f.set_bit(k, s > 0);
      }
      if (clean) break;
    }
    SpectralVector s = wht(f);
    DyadicRational level1(0);
    for (int i = 1; i <= n; ++i) {
      DyadicRational c = s.coefficient(1u << (i - 1));
      level1 += c.sign() < 0 ? -c : c;
    }
    DyadicRational total = total_influence(f);
    CHECK(level1 == total);  // sum_i |f_hat({i})| = I[f] for LTFs
    // I[f] <= sqrt(n), exactly: I^2 <= n.
    CHECK(total * total <= DyadicRational(n));
  }
}
