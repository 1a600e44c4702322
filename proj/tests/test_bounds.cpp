#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kneser/bounds.hpp"
#include "kneser/constructions.hpp"
#include "kneser/invariants.hpp"

using namespace kneser;

TEST_CASE("binom basics and conventions") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 5) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(7, -2) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(60, 30) == mpz_class("118264581564861424"));
  CHECK(binom(128, 64) == mpz_class("23951146041928082866135587776380551750"));
}

TEST_CASE("binom agrees with the Pascal recurrence") {
  std::vector<std::vector<mpz_class>> row{{1}};
  for (int n = 1; n <= 64; ++n) {
    std::vector<mpz_class> next(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k)
      next[static_cast<std::size_t>(k)] = row.back()[static_cast<std::size_t>(k - 1)] +
                                          row.back()[static_cast<std::size_t>(k)];
    row.push_back(next);
  }
  for (int n = 0; n <= 64; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binom(n, k) == row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
}

TEST_CASE("at_bound") {
  CHECK(at_bound(10, 2, 3, 2).integer() == 18);
  for (int k = 1; k <= 4; ++k)
    for (int n = k; n <= 16; ++n)
      CHECK(at_bound(n, k, 2, 1).integer() == binom(n - 1, k - 1));
  // eta = 1 drops the additive term entirely
  CHECK(at_bound(12, 3, 4, 1).integer() == binom(12, 3) - binom(9, 3));
  CHECK(at_bound(10, 2, 3, 2).exact);
  CHECK_THROWS_AS(at_bound(10, 2, 1, 1), Error);
}

TEST_CASE("hm_bound") {
  CHECK(hm_bound(5, 2).integer() == 3);
  CHECK(hm_bound(7, 3).integer() == 13);
  for (int n = 3; n <= 12; ++n) CHECK(hm_bound(n, 1).integer() == 1);
}

TEST_CASE("stabst_bound") {
  CHECK(stabst_bound(10, 2, 2, 2).integer() == 7);
  for (int k = 2; k <= 3; ++k)
    for (int n = 8; n <= 14; ++n)
      CHECK(stabst_bound(n, k, 1, 1).integer() == hm_bound(n, k).integer());
}

TEST_CASE("stabmulti_bound") {
  for (int k = 2; k <= 3; ++k)
    for (int n = 8; n <= 14; ++n)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= a; ++b)
          CHECK(stabmulti_bound(n, k, {a, b}).integer() == stabst_bound(n, k, b, a).integer());
  CHECK(stabmulti_bound(12, 2, {1, 1}).integer() == hm_bound(12, 2).integer());
  CHECK_THROWS_AS(stabmulti_bound(10, 2, {2, 3}), Error);
  CHECK_THROWS_AS(stabmulti_bound(10, 2, {2}), Error);
}

TEST_CASE("stabmulti_bound matches generated family sizes") {
  for (int k : {2, 3})
    for (int n = 3 * k + 2; n <= 3 * k + 6; ++n)
      for (const std::vector<int>& parts :
           {std::vector<int>{2, 2}, std::vector<int>{2, 2, 1}, std::vector<int>{2, 2, 2}}) {
        std::vector<long> pl(parts.begin(), parts.end());
        CHECK(mpz_class(gen_f_multi(n, k, parts).size()) == stabmulti_bound(n, k, pl).integer());
      }
}

TEST_CASE("cycle6_bound") {
  BoundValue b = cycle6_bound(9, 2);
  CHECK_FALSE(b.exact);
  // leading term at (9,2) is C(8,1) - C(4,1) = 4
  CHECK(b.real() == Catch::Approx(4 + 1e6 * std::pow(4.0, 0.75)));
  for (int n = 7; n <= 13; ++n) {
    CHECK(cycle6_bound(n, 2).real() > gen_g6(n, 2).size());
  }
  // the 3/4-power term is dominated once the leading term grows
  mpz_class big_lead = binom(199, 29) - binom(139, 29);
  CHECK(1e6 * std::pow(big_lead.get_d(), 0.75) / big_lead.get_d() < 0.01);
}

TEST_CASE("cycles_bound") {
  CHECK(cycles_bound(12, 3, 4).integer() == 50);
  CHECK(cycles_bound(12, 3, 4).integer() >= gen_g2s(12, 3, 4).size());
  // k = 3: third term is 10 C(n-3,0) = 10; k = 2: C(n-3,-1) = 0
  CHECK(cycles_bound(14, 3, 4).integer() ==
        binom(13, 2) - binom(8, 2) + 10);
  CHECK(cycles_bound(14, 2, 4).integer() == binom(13, 1) - binom(10, 1));
}

TEST_CASE("easy_lemma_bound") {
  CHECK(easy_lemma_bound(10, 2, 2, 2).integer() == 6);
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k + 2; n <= 14; ++n)
      CHECK(easy_lemma_bound(n, k, 1, 1).integer() ==
            binom(n - 1, k - 1) - binom(n - k - 1, k - 1));
  for (int t = 1; t <= 5; ++t)
    CHECK(easy_lemma_bound(12, 2, 2, t).integer() <= easy_lemma_bound(12, 2, 2, t + 1).integer());
}

TEST_CASE("bbn_lower_edges") {
  CHECK(bbn_lower_edges(0, 2).rational() == 0);
  CHECK(bbn_lower_edges(6, 2).rational() == 3);
  BoundValue b = bbn_lower_edges(5, 2);
  CHECK(b.exact);
  CHECK(b.rational() == mpq_class(25, 12));
}

TEST_CASE("edge count always dominates the bbn bound") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    int n = 2 * k + 1 + static_cast<int>(rng() % 4);
    auto all = enumerate_all_ksets(n, k);
    int size = 4 + static_cast<int>(rng() % std::min<std::size_t>(12, all.size() - 3));
    for (int i = 0; i < size; ++i) std::swap(all[i], all[i + rng() % (all.size() - i)]);
    all.resize(static_cast<std::size_t>(size));
    Family f(n, k, all);
    InducedGraph g(f);
    mpz_class ell_value = ell(f).value;
    mpq_class bound = bbn_lower_edges(ell_value, k).rational();
    CHECK(mpq_class(static_cast<long>(g.edge_count())) >= bound);
  }
}

TEST_CASE("bs_edge_bound") {
  CHECK(bs_edge_bound(1, 2).real() == Catch::Approx(200.0));
  CHECK(bs_edge_bound(1, 7).real() == Catch::Approx(700.0));
  CHECK(bs_edge_bound(16, 2).real() == Catch::Approx(12800.0));
  CHECK_FALSE(bs_edge_bound(16, 2).exact);
}

TEST_CASE("kst_edge_bound") {
  BoundValue b = kst_edge_bound(100, 2, 2);
  CHECK(b.real() == Catch::Approx(500.0));
  CHECK_FALSE(b.exact);
  CHECK(b.leading_term_only);
  // s = 1, t = 2: exponent 2 - 1/s collapses to 1
  CHECK(kst_edge_bound(50, 1, 2).real() == Catch::Approx(25.0));
}

TEST_CASE("bound json carries exactness and tag") {
  nlohmann::json j = hm_bound(7, 3).to_json();
  CHECK(j["value"] == "13");
  CHECK(j["exact"] == true);
  CHECK(j["formula_tag"] == "hm");
  nlohmann::json r = kst_edge_bound(100, 2, 2).to_json();
  CHECK(r["exact"] == false);
  CHECK(r["leading_term_only"] == true);
  CHECK(bbn_lower_edges(5, 2).to_json()["value"] == "25/12");
}
