#include <catch2/catch_amalgamated.hpp>

#include "ptflab/graphs.hpp"
#include "ptflab/search.hpp"

#include <sstream>

using namespace ptflab;

namespace {

SupportGraph complete(int n) {
  SupportGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

SupportGraph cycle(int n) {
  SupportGraph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(1, n);
  return g;
}

}  // namespace

TEST_CASE("graph construction and file format") {
  SupportGraph g(4);
  g.add_edge(2, 1);
  g.add_edge(3, 4);
  g.add_edge(1, 2);  // duplicate, ignored
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::out_of_range);

  std::ostringstream out;
  g.format(out);
  CHECK(out.str() == "4 2\n1 2\n3 4\n");
  std::istringstream in(out.str());
  CHECK(SupportGraph::parse(in) == g);

  std::istringstream bad1("4 1\n2 2\n");
  CHECK_THROWS_AS(SupportGraph::parse(bad1), std::invalid_argument);
  std::istringstream bad2("4 2\n1 2\n");
  CHECK_THROWS_AS(SupportGraph::parse(bad2), std::invalid_argument);
  std::istringstream bad3("4 1\n2 1\n");  // i < j required
  CHECK_THROWS_AS(SupportGraph::parse(bad3), std::invalid_argument);

  SupportGraph sub = complete(4).induced({2, 3, 4});
  CHECK(sub == complete(3));
  CHECK(cycle(4).complement().edges() ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(SupportGraph(4)).colors == 1);
  CHECK(chromatic_number(complete(4)).colors == 4);
  CHECK(chromatic_number(cycle(5)).colors == 3);
  CHECK(chromatic_number(cycle(6)).colors == 2);
  // Petersen graph: chromatic number 3.
  SupportGraph petersen(10);
  for (int i = 1; i <= 5; ++i) {
    petersen.add_edge(i, i % 5 + 1);           // outer cycle
    petersen.add_edge(i, i + 5);               // spokes
    petersen.add_edge(i + 5, (i + 1) % 5 + 6); // inner pentagram
  }
  Coloring c = chromatic_number(petersen);
  CHECK(c.colors == 3);
  for (auto [i, j] : petersen.edges()) CHECK(c.color[i - 1] != c.color[j - 1]);
}

TEST_CASE("maximal independent sets") {
  auto sets = maximal_independent_sets(cycle(5));
  // C_5 has exactly the five 2-subsets of non-adjacent vertices.
  REQUIRE(sets.size() == 5);
  for (std::uint32_t s : sets) CHECK(std::popcount(s) == 2);
  CHECK(maximal_independent_sets(SupportGraph(3)) == std::vector<std::uint32_t>{0b111});
  CHECK(maximal_independent_sets(complete(3)).size() == 3);
}

TEST_CASE("fractional chromatic number") {
  CHECK(fractional_chromatic(SupportGraph(5)).first == 1);
  CHECK(fractional_chromatic(complete(4)).first == 4);

  auto [chi_f, coloring] = fractional_chromatic(cycle(5));
  CHECK(chi_f == BigRational(5, 2));
  // Strong duality certificate for C_5: weight 1/2 on each of the five
  // maximal independent sets is feasible with value 5/2, and y_v = 1/2 per
  // vertex is dual feasible (each independent set has exactly 2 vertices)
  // with the same value; so 5/2 is optimal. Check the returned witness.
  BigRational total = 0;
  for (const auto& [mask, w] : coloring.weights) {
    CHECK(w > 0);
    total += w;
  }
  CHECK(total == BigRational(5, 2));
  for (int v = 1; v <= 5; ++v) CHECK(coloring.vertex_coverage(v) >= 1);

  // chi_f <= chi on assorted graphs.
  for (const auto& g : four_vertex_classes())
    CHECK(fractional_chromatic(g).first <= chromatic_number(g).colors);
  CHECK(fractional_chromatic(cycle(5)).first < chromatic_number(cycle(5)).colors);
}

TEST_CASE("bound formulas") {
  RadicalBound fb = fracch_bound(complete(4));
  CHECK(fb.radicand == 16);
  CHECK(fb.value == 4.0);
  CHECK(fracch_bound(SupportGraph(9)).value == 3.0);
  CHECK(fracch_bound(cycle(5)).radicand == BigRational(25, 2));

  EdgeBound eb = edge_bound(complete(4));
  CHECK(eb.n == 4);
  CHECK(eb.edge_count == 6);
  CHECK(eb.value == Catch::Approx(std::sqrt(4.0 + std::sqrt(48.0))).epsilon(1e-12));
  CHECK(edge_bound(SupportGraph(9)).value == 3.0);

  // Exact comparisons behind the radicals.
  CHECK(influence_within_fracch_bound(BigRational(3), BigRational(4), 4));     // 9 <= 16
  CHECK_FALSE(influence_within_fracch_bound(BigRational(3), BigRational(2), 4)); // 9 > 8
  CHECK(influence_within_edge_bound(BigRational(3), 4, 6));   // (9-4)^2 = 25 <= 48
  CHECK_FALSE(influence_within_edge_bound(BigRational(3), 4, 2));  // 25 > 16
  CHECK(influence_within_edge_bound(BigRational(1), 4, 0));   // I^2 <= n side
}

TEST_CASE("covering bound") {
  // Edgeless on 4 vertices split 2+2: 2 * maj_influence(2) = 2.
  CHECK(covering_bound(SupportGraph(4), {{1, 2}, {3, 4}}) == BigRational(2));
  // K_4 with singleton parts.
  CHECK(covering_bound(complete(4), {{1}, {2}, {3}, {4}}) == BigRational(4));
  // Bipartite split of C_4 matches Table 1's value 2 for C_4.
  CHECK(covering_bound(cycle(4), {{1, 3}, {2, 4}}) == BigRational(2));

  CHECK_THROWS_AS(covering_bound(cycle(4), {{1, 2}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(covering_bound(cycle(4), {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(covering_bound(cycle(4), {{1, 3}, {1, 2, 4}}), std::invalid_argument);
  CHECK(covering_bound(cycle(4), {{1, 2}, {3, 4}},
                       {BigRational(2), BigRational(2)}) == BigRational(4));
}

TEST_CASE("excision bound") {
  auto exact_small = [](const SupportGraph& h) -> std::optional<BigRational> {
    if (h.order() > 4) return std::nullopt;
    return max_influence_with_support(h).influence.to_rational();
  };

  // H empty: min of the two bounds on G itself.
  SupportGraph k5 = complete(5);
  ExcisionBound none = excision_bound(k5, {});
  CHECK(none.h_bound == 0);
  CHECK(none.value ==
        Catch::Approx(std::min(edge_bound(k5).value, fracch_bound(k5).value)).epsilon(1e-12));

  // K_5 minus one vertex: min bound on K_4 plus the exact single-vertex
  // maximum, which is 1.
  ExcisionBound one = excision_bound(k5, {5}, exact_small);
  CHECK(one.h_bound == 1);
  CHECK(one.remainder_bound ==
        Catch::Approx(std::min(edge_bound(complete(4)).value, fracch_bound(complete(4)).value))
            .epsilon(1e-12));

  // Star K_{1,5} with the center excised: remainder edgeless.
  SupportGraph star(6);
  for (int leaf = 2; leaf <= 6; ++leaf) star.add_edge(1, leaf);
  ExcisionBound center = excision_bound(star, {1}, exact_small);
  CHECK(center.h_bound == 1);
  CHECK(center.remainder_bound == Catch::Approx(std::sqrt(5.0)).epsilon(1e-12));

  // Without the callback, |H| > 0 falls back to the trivial bound |H|.
  CHECK(excision_bound(k5, {4, 5}).h_bound == 2);
}

TEST_CASE("thinned cover distribution") {
  CoverDistribution edgeless = thinned_distribution(SupportGraph(4));
  CHECK(edgeless.chi_f == 1);
  REQUIRE(edgeless.probabilities.size() == 1);
  CHECK(edgeless.probabilities[0].second == 1);
  for (const auto& q : edgeless.thinning) CHECK(q.is_zero());
  CHECK(edgeless.expected_thinned_size == 4);

  CoverDistribution k3 = thinned_distribution(complete(3));
  CHECK(k3.chi_f == 3);
  CHECK(k3.expected_thinned_size == 1);

  CoverDistribution c5 = thinned_distribution(cycle(5));
  CHECK(c5.chi_f == BigRational(5, 2));
  CHECK(c5.expected_thinned_size == 2);
  BigRational total_p = 0;
  for (const auto& [mask, p] : c5.probabilities) total_p += p;
  CHECK(total_p == 1);
  // p_v (1 - q_v) = 1/chi_f at every vertex; summing over v the expected
  // thinned size is n/chi_f.
  BigRational expected = 0;
  for (int v = 0; v < 5; ++v)
    expected += c5.vertex_probability[v] * (BigRational(1) - c5.thinning[v]);
  CHECK(expected == c5.expected_thinned_size);
}
