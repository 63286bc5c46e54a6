#include <catch2/catch_amalgamated.hpp>

#include "ptflab/family.hpp"
#include "ptflab/majority.hpp"
#include "ptflab/qtf.hpp"
#include "ptflab/search.hpp"
#include "ptflab/spectral.hpp"

using namespace ptflab;

namespace {

// PARITY_n(x) = prod x_i.
BooleanFunction parity(int n) {
  return BooleanFunction::from_predicate(
      n, [n](std::uint64_t k) { return std::popcount(k) % 2 == n % 2; });
}

// Does any quadratic with coefficients in {-bound..bound} sign-represent f?
// Independent cross-check for small infeasible instances.
bool small_integer_qtf_exists(const BooleanFunction& f, int bound) {
  int n = f.arity();
  std::size_t dim = 1 + n + std::size_t(n) * (n - 1) / 2;
  std::vector<int> coef(dim, -bound);
  for (;;) {
    QuadraticPolynomial q(n);
    std::size_t t = 0;
    q.constant() = coef[t++];
    for (int i = 1; i <= n; ++i) q.linear(i) = coef[t++];
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) q.quadratic(i, j) = coef[t++];
    bool match = true;
    for (std::uint32_t k = 0; k < f.size() && match; ++k)
      if (q.sign_at(k) != f.evaluate(k)) match = false;
    if (match) return true;
    std::size_t pos = 0;
    while (pos < dim && coef[pos] == bound) coef[pos++] = -bound;
    if (pos == dim) return false;
    ++coef[pos];
  }
}

}  // namespace

TEST_CASE("quadratic polynomial plumbing") {
  QuadraticPolynomial q(3);
  q.constant() = BigRational(-1, 2);
  q.linear(1) = 1;
  q.quadratic(2, 3) = BigRational(3, 4);
  CHECK(q.quadratic(3, 2) == BigRational(3, 4));
  CHECK_THROWS_AS(q.quadratic(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(q.linear(4), std::out_of_range);

  // At x = (+1, -1, +1): -1/2 + 1 + (-1)(+1)(3/4) = -1/4.
  CHECK(q.evaluate(0b101) == BigRational(-1, 4));
  CHECK(q.sign_at(0b101) == -1);

  auto ints = q.integer_coefficients();  // [-1/2, 1, 0, 0, 0, 0, 3/4] * 4
  CHECK(ints == std::vector<BigInt>{-2, 4, 0, 0, 0, 0, 3});

  SupportGraph g = support_of(q);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("representability on pinned functions") {
  // AND_2: +1 only at x = (1,1).
  BooleanFunction and2 = BooleanFunction::from_hex(2, "8");
  QtfResult res = qtf_representable(and2);
  REQUIRE(res.feasible);
  for (std::uint32_t k = 0; k < 4; ++k) CHECK(res.witness->sign_at(k) == and2.evaluate(k));

  QtfResult par = qtf_representable(parity(3));
  REQUIRE_FALSE(par.feasible);
  CHECK(par.certificate.size() == 8);
  // Cross-check with an independent exhaustive scan of small-integer witnesses
  // (a scale-invariant problem: an infeasible LP rules out all real q, a
  // fortiori all small-integer q).
  CHECK_FALSE(small_integer_qtf_exists(parity(3), 2));

  // The 5-variable counterexample is representable.
  QtfResult fam = qtf_representable(build_family(5));
  REQUIRE(fam.feasible);
  CHECK(support_of(*fam.witness).edge_count() == 10);  // complete support

  // Degree matters: PARITY_3 is not a QTF but is a (trivial) degree-3 PTF.
  CHECK(qtf_representable(parity(2)).feasible);
}

TEST_CASE("support restriction is honored") {
  BooleanFunction f5 = build_family(5);
  SupportGraph empty(5);
  QtfResult res = qtf_representable(f5, empty);
  // f_5 needs quadratic terms: with an empty support it is an LTF question.
  REQUIRE_FALSE(res.feasible);

  SupportGraph path(4);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  path.add_edge(3, 4);
  // x_1 x_4 cannot be used with this support.
  BooleanFunction x1x4 = BooleanFunction::from_predicate(
      4, [](std::uint64_t k) { return ((k & 1) != 0) == (((k >> 3) & 1) != 0); });
  QtfResult on_path = qtf_representable(x1x4, path);
  CHECK_FALSE(on_path.feasible);
  QtfResult full = qtf_representable(x1x4);
  REQUIRE(full.feasible);
  CHECK(full.witness->quadratic(1, 4) > 0);

  CHECK_THROWS_AS(qtf_representable(f5, SupportGraph(4)), std::invalid_argument);
}

TEST_CASE("symmetric PTFs") {
  CHECK(symmetric_ptf(3, 1) == maj(3));
  CHECK(symmetric_ptf(5, 1) == maj(5));
  CHECK(total_influence(symmetric_ptf(5, 2)) == DyadicRational(BigInt(25), 3));
  CHECK(total_influence(symmetric_ptf(7, 2)) == DyadicRational(BigInt(245), 6));
  for (int n = 2; n <= 16; ++n)
    CHECK(total_influence(symmetric_ptf(n, 2)) == igl2_closed(n));
}

TEST_CASE("I_GL values") {
  CHECK(igl(5, 2) == DyadicRational(BigInt(25), 3));
  CHECK(igl(7, 2) == DyadicRational(BigInt(245), 6));
  CHECK(igl(4, 2) == DyadicRational(3));
  CHECK(igl(2, 2) == DyadicRational(2));
  CHECK_THROWS_AS(igl(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(igl(3, 4), std::invalid_argument);

  for (int n = 2; n <= 40; ++n) CHECK(igl(n, 2) == igl2_closed(n));

  // The misread even-branch formula at n = 5 gives the flagged 3.4375.
  CHECK(igl2_even_form_misread(5) == DyadicRational(BigInt(55), 4));
  CHECK(igl2_even_form_misread(5).to_double() == 3.4375);
}

TEST_CASE("majority influence") {
  CHECK(maj_influence(3) == DyadicRational(BigInt(3), 1));
  CHECK(maj_influence(5) == DyadicRational(BigInt(15), 3));
  for (int n = 1; n <= 15; n += 2) CHECK(total_influence(maj(n)) == maj_influence(n));
  CHECK_THROWS_AS(maj(4), std::invalid_argument);

  // maj_influence(n)/sqrt(n) -> sqrt(2/pi) ~ 0.7979.
  double r = maj_influence(10001).to_rational().convert_to<double>() / std::sqrt(10001.0);
  CHECK(r > 0.7879);
  CHECK(r < 0.8079);
}

TEST_CASE("LTF maximum influence is majority's (n <= 4)") {
  for (int n = 1; n <= 4; ++n)
    CHECK(max_influence_with_support(SupportGraph(n)).influence == maj_influence(n));
}
