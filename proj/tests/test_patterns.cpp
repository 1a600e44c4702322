#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kneser/subgraph.hpp"

using namespace kneser;

namespace {

Family petersen() { return Family(5, 2, enumerate_all_ksets(5, 2)); }

Family random_family(std::mt19937_64& rng, int n, int k, int size) {
  auto all = enumerate_all_ksets(n, k);
  for (int i = 0; i < size; ++i) std::swap(all[i], all[i + rng() % (all.size() - i)]);
  all.resize(static_cast<std::size_t>(size));
  return Family(n, k, std::move(all));
}

PatternGraph random_pattern(std::mt19937_64& rng, int max_order) {
  int order = 2 + static_cast<int>(rng() % (max_order - 1));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (rng() & 1) edges.emplace_back(i, j);
  return PatternGraph::arbitrary(order, std::move(edges));
}

}  // namespace

TEST_CASE("named pattern constructors") {
  CHECK(PatternGraph::clique(4).edge_count() == 6);
  CHECK(PatternGraph::even_cycle(6).edge_count() == 6);
  CHECK(PatternGraph::path(5).edge_count() == 4);
  CHECK(PatternGraph::star(3).order() == 4);
  PatternGraph k23 = PatternGraph::complete_multipartite({2, 3});
  CHECK(k23.order() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(k23.parts() == std::vector<int>{2, 3});
  CHECK(PatternGraph::cycle(5).kind() == PatternKind::Arbitrary);
  CHECK(PatternGraph::cycle(6).kind() == PatternKind::EvenCycle);

  CHECK_THROWS_AS(PatternGraph::even_cycle(5), InvalidPattern);
  CHECK_THROWS_AS(PatternGraph::arbitrary(2, {{0, 0}}), InvalidPattern);
  CHECK_THROWS_AS(PatternGraph::arbitrary(2, {{0, 1}, {1, 0}}), InvalidPattern);
  CHECK_THROWS_AS(PatternGraph::arbitrary(2, {{0, 5}}), InvalidPattern);
}

TEST_CASE("pattern literal parsing") {
  CHECK(parse_pattern("K2").kind() == PatternKind::Clique);
  CHECK(parse_pattern("K2").order() == 2);
  CHECK(parse_pattern("K12").order() == 12);
  CHECK(parse_pattern("K{2,3}").parts() == std::vector<int>{2, 3});
  CHECK(parse_pattern("K{2,2,2}").order() == 6);
  CHECK(parse_pattern("C6").kind() == PatternKind::EvenCycle);
  CHECK(parse_pattern("P6").order() == 6);
  CHECK(parse_pattern("P_6").order() == 6);
  CHECK(parse_pattern("K1_3").kind() == PatternKind::Star);
  CHECK(parse_pattern("K1_3").order() == 4);
  PatternGraph fromEdges = parse_pattern("edges:[[0,1],[1,2]]");
  CHECK(fromEdges.order() == 3);
  CHECK(fromEdges.edge_count() == 2);
  CHECK_THROWS_AS(parse_pattern("Q5"), InvalidPattern);
  CHECK_THROWS_AS(parse_pattern("K{2,"), InvalidPattern);

  for (const char* lit : {"K3", "K{2,3}", "C6", "P4", "K1_2"}) {
    PatternGraph p = parse_pattern(lit);
    CHECK(p.to_string() == lit);
  }
}

TEST_CASE("Petersen graph contains a 6-cycle but no triangle") {
  InducedGraph host = induced_kneser_graph(petersen());

  SubgraphResult hexagon = contains_subgraph(host, PatternGraph::even_cycle(6));
  REQUIRE(hexagon.found());
  CHECK(embedding_valid(host, PatternGraph::even_cycle(6), *hexagon.witness));
  CHECK(brute_force_contains(host, PatternGraph::even_cycle(6)).found());

  SubgraphResult triangle = contains_subgraph(host, PatternGraph::clique(3));
  CHECK_FALSE(triangle.found());
  CHECK_FALSE(brute_force_contains(host, PatternGraph::clique(3)).found());
}

TEST_CASE("small containment cases") {
  Family triple = Family::of(6, 2, {{1, 2}, {3, 4}, {5, 6}});
  InducedGraph triangle = induced_kneser_graph(triple);
  CHECK(contains_subgraph(triangle, PatternGraph::path(3)).found());
  CHECK(brute_force_contains(triangle, PatternGraph::path(3)).found());

  Family pair = Family::of(4, 2, {{1, 2}, {3, 4}});
  SubgraphResult hit = contains_subgraph(induced_kneser_graph(pair), PatternGraph::clique(2));
  REQUIRE(hit.found());
  CHECK(hit.witness->mapping == std::vector<int>{0, 1});

  Family star = Family::of(5, 2, {{1, 2}, {1, 3}, {1, 4}});
  CHECK_FALSE(contains_subgraph(induced_kneser_graph(star), PatternGraph::clique(2)).found());

  SubgraphResult too_big = contains_subgraph(induced_kneser_graph(pair), PatternGraph::clique(3));
  CHECK_FALSE(too_big.found());
  CHECK(too_big.pattern_larger_than_host);
}

TEST_CASE("oracle caps") {
  Family big(8, 2, enumerate_all_ksets(8, 2));  // 28 vertices
  CHECK_THROWS_AS(brute_force_contains(induced_kneser_graph(big), PatternGraph::clique(2)),
                  OracleSizeExceeded);
  Family small = Family::of(4, 2, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(brute_force_contains(induced_kneser_graph(small), PatternGraph::clique(9)),
                  OracleSizeExceeded);
}

TEST_CASE("matcher agrees with the brute-force oracle on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    int n = 2 * k + 2 + static_cast<int>(rng() % 3);
    int size = 3 + static_cast<int>(rng() % 10);
    Family f = random_family(rng, n, k, size);
    PatternGraph p = random_pattern(rng, 5);
    InducedGraph host(f);
    SubgraphResult fast = contains_subgraph(host, p);
    SubgraphResult oracle = brute_force_contains(host, p);
    REQUIRE(fast.found() == oracle.found());
    if (fast.found()) {
      CHECK(embedding_valid(host, p, *fast.witness));
      CHECK(*fast.witness == *oracle.witness);  // both lexicographically minimal
    }
  }
}

TEST_CASE("matcher agrees with the oracle at the oracle caps") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    int n = 2 * k + 3 + static_cast<int>(rng() % 3);
    int max_size = std::min<int>(24, static_cast<int>(enumerate_all_ksets(n, k).size()));
    int size = 16 + static_cast<int>(rng() % (max_size - 15));
    Family f = random_family(rng, n, k, size);
    PatternGraph p = random_pattern(rng, 7);
    InducedGraph host(f);
    SubgraphResult fast = contains_subgraph(host, p);
    SubgraphResult oracle = brute_force_contains(host, p);
    REQUIRE(fast.found() == oracle.found());
    if (fast.found()) CHECK(*fast.witness == *oracle.witness);
  }
}

TEST_CASE("freeness is monotone under pattern edge additions") {
  // a 6-cycle-free host stays free of any pattern containing the 6-cycle
  Family f = Family::of(9, 2,
                        {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {6, 7}});
  InducedGraph host = induced_kneser_graph(f);
  REQUIRE_FALSE(contains_subgraph(host, PatternGraph::even_cycle(6)).found());
  std::vector<std::pair<int, int>> chorded{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}};
  CHECK_FALSE(contains_subgraph(host, PatternGraph::arbitrary(6, chorded)).found());
}

TEST_CASE("has_matching") {
  CHECK(has_matching(Family::of(6, 2, {{1, 2}, {3, 4}, {5, 6}}), 3));
  CHECK_FALSE(has_matching(Family::of(5, 2, {{1, 2}, {1, 3}, {2, 3}}), 2));
  CHECK(has_matching(Family::of(5, 2, {{1, 2}}), 1));
  CHECK_FALSE(has_matching(Family::of(5, 2, {{1, 2}}), 2));
}

TEST_CASE("has_matching agrees with clique containment") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + static_cast<int>(rng() % 3);
    Family f = random_family(rng, n, 2, 4 + static_cast<int>(rng() % 8));
    InducedGraph host(f);
    for (int s = 2; s <= 4; ++s)
      CHECK(has_matching(f, s) == contains_subgraph(host, PatternGraph::clique(s)).found());
  }
}

TEST_CASE("union-intersecting violations") {
  Family f = Family::of(8, 2, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  UnionViolation v = is_union_intersecting_violation(f, 2, 2);
  REQUIRE(v.found);
  CHECK(v.left == std::vector<int>{0, 1});
  CHECK(v.right == std::vector<int>{2, 3});

  Family star = Family::of(7, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  CHECK_FALSE(is_union_intersecting_violation(star, 2, 2).found);
  CHECK_FALSE(is_union_intersecting_violation(star, 1, 1).found);
  CHECK_THROWS_AS(is_union_intersecting_violation(star, 2, 1), Error);
}

TEST_CASE("union-intersecting agrees with complete bipartite containment") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 7 + static_cast<int>(rng() % 3);
    Family f = random_family(rng, n, 2, 5 + static_cast<int>(rng() % 8));
    InducedGraph host(f);
    for (auto [s, t] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
      bool expected = contains_subgraph(host, PatternGraph::complete_multipartite({s, t})).found();
      UnionViolation got = is_union_intersecting_violation(f, s, t);
      CHECK(got.found == expected);
      if (got.found) {
        detail::Bits left = 0, right = 0;
        for (int i : got.left) left |= f[i].bits();
        for (int i : got.right) right |= f[i].bits();
        CHECK((left & right) == 0);
      }
    }
  }
}

TEST_CASE("star containment matches the almost-intersecting condition") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 6 + static_cast<int>(rng() % 3);
    Family f = random_family(rng, n, 2, 4 + static_cast<int>(rng() % 8));
    InducedGraph host(f);
    for (int l = 1; l <= 3; ++l) {
      bool some_member_has_l_disjoint = false;
      for (int i = 0; i < f.size() && !some_member_has_l_disjoint; ++i)
        if (host.degree(i) >= l) some_member_has_l_disjoint = true;
      CHECK(contains_subgraph(host, PatternGraph::star(l)).found() == some_member_has_l_disjoint);
    }
  }
}
