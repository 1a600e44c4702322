#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kneser/invariants.hpp"
#include "kneser/subgraph.hpp"
#include "kneser/verify.hpp"

using namespace kneser;
using kneser::verify_detail::ell_bruteforce;

namespace {

Family random_family(std::mt19937_64& rng, int n, int k, int size) {
  auto all = enumerate_all_ksets(n, k);
  size = std::min<int>(size, static_cast<int>(all.size()));
  for (int i = 0; i < size; ++i) std::swap(all[i], all[i + rng() % (all.size() - i)]);
  all.resize(static_cast<std::size_t>(size));
  return Family(n, k, std::move(all));
}

bool witness_removal_kills_matchings(const Family& f, const std::vector<int>& witness, int t) {
  std::vector<KSet> rest;
  std::size_t w = 0;
  for (int i = 0; i < f.size(); ++i) {
    if (w < witness.size() && witness[w] == i) {
      ++w;
      continue;
    }
    rest.push_back(f[i]);
  }
  Family remainder(f.ground_set(), f.set_size(), std::move(rest));
  return !has_matching(remainder, t);
}

}  // namespace

TEST_CASE("ell on a disjoint triple") {
  Family triple = Family::of(6, 2, {{1, 2}, {3, 4}, {5, 6}});
  EllResult two = ell(triple, 2);
  CHECK(two.value == 2);
  CHECK(two.proven);
  CHECK(two.removal_witness == std::vector<int>{0, 1});
  CHECK(witness_removal_kills_matchings(triple, two.removal_witness, 2));

  EllResult three = ell(triple, 3);
  CHECK(three.value == 1);
  CHECK(three.removal_witness == std::vector<int>{0});

  CHECK(ell(Family::of(5, 2, {{1, 2}, {1, 3}}), 2).value == 0);
  CHECK_THROWS_AS(ell(triple, 1), Error);
}

TEST_CASE("ell agrees with the subset-enumeration oracle") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    int n = 2 * k + 1 + static_cast<int>(rng() % 4);
    int size = 4 + static_cast<int>(rng() % 9);
    Family f = random_family(rng, n, k, size);
    for (int t = 2; t <= 3; ++t) {
      EllResult got = ell(f, t);
      REQUIRE(got.proven);
      CHECK(got.value == ell_bruteforce(f, t));
      CHECK(static_cast<int>(got.removal_witness.size()) == got.value);
      CHECK(witness_removal_kills_matchings(f, got.removal_witness, t));
    }
  }
}

TEST_CASE("ell never decreases when a member is added") {
  std::mt19937_64 rng(159);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 6 + static_cast<int>(rng() % 3);
    auto all = enumerate_all_ksets(n, 2);
    int size = 4 + static_cast<int>(rng() % 6);
    for (int i = 0; i <= size; ++i) std::swap(all[i], all[i + rng() % (all.size() - i)]);
    std::vector<KSet> base(all.begin(), all.begin() + size);
    std::vector<KSet> extended(all.begin(), all.begin() + size + 1);
    int before = ell(Family(n, 2, base), 2).value;
    int after = ell(Family(n, 2, extended), 2).value;
    CHECK(after >= before);
  }
}

TEST_CASE("ell reports certified bounds when the budget is exhausted") {
  std::mt19937_64 rng(77);
  Family f = random_family(rng, 9, 2, 18);
  for (int t = 2; t <= 3; ++t) {
    EllResult r = ell(f, t, 3);
    CHECK_FALSE(r.proven);
    CHECK(r.lower_bound <= r.upper_bound);
    int exact = ell_bruteforce(f, t);
    CHECK(r.lower_bound <= exact);
    CHECK(exact <= r.upper_bound);
    CHECK(witness_removal_kills_matchings(f, r.removal_witness, t));
  }
}

TEST_CASE("ell witnesses are lexicographically minimal among optimal removals") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 6 + static_cast<int>(rng() % 3);
    Family f = random_family(rng, n, 2, 5 + static_cast<int>(rng() % 6));
    for (int t = 2; t <= 3; ++t) {
      EllResult got = ell(f, t);
      int m = got.value;
      // enumerate all size-m removal sets in lexicographic order; the first
      // one that kills every t-matching must be the reported witness
      std::vector<int> combo(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) combo[static_cast<std::size_t>(i)] = i;
      bool checked = false;
      while (!checked) {
        if (witness_removal_kills_matchings(f, combo, t)) {
          CHECK(got.removal_witness == combo);
          checked = true;
          break;
        }
        int pos = m - 1;
        while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == f.size() - m + pos) --pos;
        if (pos < 0) break;
        ++combo[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < m; ++i)
          combo[static_cast<std::size_t>(i)] = combo[static_cast<std::size_t>(i - 1)] + 1;
      }
      CHECK(checked);
    }
  }
}

TEST_CASE("chromatic profiles of named patterns") {
  for (int r = 1; r <= 5; ++r) {
    ChromaticProfile prof = chromatic_profile(PatternGraph::clique(r));
    CHECK(prof.chi == r);
    CHECK(prof.eta == 1);
  }
  ChromaticProfile k23 = chromatic_profile(PatternGraph::complete_multipartite({2, 3}));
  CHECK(k23.chi == 2);
  CHECK(k23.eta == 2);

  ChromaticProfile c6 = chromatic_profile(PatternGraph::even_cycle(6));
  CHECK(c6.chi == 2);
  CHECK(c6.eta == 3);

  ChromaticProfile c5 = chromatic_profile(PatternGraph::cycle(5));
  CHECK(c5.chi == 3);
  CHECK(c5.eta == 1);

  ChromaticProfile p4 = chromatic_profile(PatternGraph::path(4));
  CHECK(p4.chi == 2);
  CHECK(p4.eta == 2);

  ChromaticProfile lone = chromatic_profile(PatternGraph::clique(1));
  CHECK(lone.chi == 1);
  CHECK(lone.eta == 1);

  ChromaticProfile edgeless = chromatic_profile(PatternGraph::arbitrary(3, {}));
  CHECK(edgeless.chi == 1);
  CHECK(edgeless.eta == 3);

  CHECK_THROWS_AS(chromatic_profile(PatternGraph::clique(13)), PatternTooLarge);
}

TEST_CASE("witness coloring is proper and attains eta") {
  for (const std::vector<int>& parts : {std::vector<int>{2, 2}, std::vector<int>{3, 2, 2}}) {
    PatternGraph p = PatternGraph::complete_multipartite(parts);
    ChromaticProfile prof = chromatic_profile(p);
    REQUIRE(static_cast<int>(prof.witness_coloring.size()) == p.order());
    for (auto [a, b] : p.edges())
      CHECK(prof.witness_coloring[static_cast<std::size_t>(a)] !=
            prof.witness_coloring[static_cast<std::size_t>(b)]);
    std::vector<int> class_size(static_cast<std::size_t>(prof.chi), 0);
    for (int c : prof.witness_coloring) ++class_size[static_cast<std::size_t>(c)];
    CHECK(*std::min_element(class_size.begin(), class_size.end()) == prof.eta);
  }
}

TEST_CASE("canonical forms are permutation invariant") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    int order = 3 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < order; ++i)
      for (int j = i + 1; j < order; ++j)
        if (rng() & 1) edges.emplace_back(i, j);
    PatternGraph g = PatternGraph::arbitrary(order, edges);

    std::vector<int> perm(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = order - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)], perm[rng() % (i + 1)]);
    std::vector<std::pair<int, int>> relabeled;
    for (auto [a, b] : edges)
      relabeled.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    CHECK(isomorphic(g, PatternGraph::arbitrary(order, relabeled)));

    if (!edges.empty()) {
      std::vector<std::pair<int, int>> fewer(edges.begin(), edges.end() - 1);
      CHECK_FALSE(isomorphic(g, PatternGraph::arbitrary(order, fewer)));  // edge counts differ
    }
  }
}

TEST_CASE("canonical forms identify isomorphic graphs") {
  PatternGraph c6 = PatternGraph::even_cycle(6);
  std::vector<std::pair<int, int>> shuffled{{2, 5}, {0, 5}, {0, 3}, {1, 3}, {1, 4}, {2, 4}};
  CHECK(isomorphic(c6, PatternGraph::arbitrary(6, shuffled)));

  // same degree sequence, different graphs: C6 vs two triangles
  std::vector<std::pair<int, int>> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_FALSE(isomorphic(c6, PatternGraph::arbitrary(6, two_triangles)));
  CHECK_FALSE(isomorphic(c6, PatternGraph::path(6)));
}

TEST_CASE("bipartite classes of a triangle") {
  BipartiteClasses classes = bipartite_classes(PatternGraph::clique(3));
  REQUIRE(classes.all.size() == 1);
  CHECK(isomorphic(classes.all[0], PatternGraph::clique(2)));
  REQUIRE(classes.eta_matching.size() == 1);
}

TEST_CASE("bipartite classes of complete multipartite patterns") {
  BipartiteClasses c221 = bipartite_classes(PatternGraph::complete_multipartite({2, 2, 1}));
  REQUIRE(c221.all.size() == 2);
  bool has22 = false, has21 = false;
  for (const PatternGraph& b : c221.all) {
    has22 |= isomorphic(b, PatternGraph::complete_multipartite({2, 2}));
    has21 |= isomorphic(b, PatternGraph::complete_multipartite({2, 1}));
  }
  CHECK(has22);
  CHECK(has21);
  REQUIRE(c221.eta_matching.size() == 1);
  CHECK(isomorphic(c221.eta_matching[0], PatternGraph::complete_multipartite({2, 1})));

  BipartiteClasses c322 = bipartite_classes(PatternGraph::complete_multipartite({3, 2, 2}));
  CHECK(c322.all.size() == 2);
  CHECK(c322.eta_matching.size() == 2);

  CHECK_THROWS_AS(bipartite_classes(PatternGraph::even_cycle(6)), ChromaticTooSmall);
  CHECK_THROWS_AS(bipartite_classes(PatternGraph::clique(13)), PatternTooLarge);
}

TEST_CASE("every bipartite class member has eta at least eta(F)") {
  for (const std::vector<int>& parts :
       {std::vector<int>{2, 2, 1}, std::vector<int>{3, 2, 2}, std::vector<int>{2, 2, 2}}) {
    PatternGraph p = PatternGraph::complete_multipartite(parts);
    int eta_f = chromatic_profile(p).eta;
    for (const PatternGraph& b : bipartite_classes(p).all) {
      ChromaticProfile prof = chromatic_profile(b);
      CHECK(prof.chi <= 2);
      CHECK(prof.eta >= eta_f);
    }
  }
  // C5: the complement part must be a nonempty independent set, so the
  // classes are a 4-path (one vertex removed) and an edge plus an isolated
  // vertex (two non-adjacent vertices removed)
  BipartiteClasses c5 = bipartite_classes(PatternGraph::cycle(5));
  REQUIRE(c5.all.size() == 2);
  bool has_p4 = false, has_edge_plus_point = false;
  for (const PatternGraph& b : c5.all) {
    has_p4 |= isomorphic(b, PatternGraph::path(4));
    has_edge_plus_point |= isomorphic(b, PatternGraph::arbitrary(3, {{0, 1}}));
  }
  CHECK(has_p4);
  CHECK(has_edge_plus_point);
}
