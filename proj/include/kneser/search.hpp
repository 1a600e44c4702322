#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "kneser/bounds.hpp"
#include "kneser/invariants.hpp"
#include "kneser/subgraph.hpp"

namespace kneser {

inline constexpr int kSearchVertexCap = 512;
inline constexpr int kSearchPatternCap = 8;

enum class SideConstraint { None, NoCommonElement, MinEll };

struct SearchProblem {
  int n = 0;
  int k = 0;
  PatternGraph pattern = PatternGraph::clique(2);
  SideConstraint constraint = SideConstraint::None;
  int min_ell_t = 2;  // MinEll only
  int min_ell_s = 0;  // MinEll only
  std::uint64_t budget = kDefaultSearchBudget;
};

struct SearchOutcome {
  int optimum;
  Family witness;
  bool proven;
  int lower_bound;
  int upper_bound;
  std::uint64_t nodes;
};

namespace detail {

/// Does the induced subgraph on `active` contain a pattern copy whose image
/// includes `anchor`?  Tries each pattern vertex as the anchored one.
inline bool copy_using_vertex(Embedder& embedder, const PatternGraph& p, const Words& active,
                              int anchor) {
  for (int u = 0; u < p.order(); ++u)
    if (embedder.exists(&active, u, anchor)) return true;
  return false;
}

struct MaxFreeSearch {
  const InducedGraph& g;
  const SearchProblem& problem;
  Embedder embedder;
  bool edge_pattern;  // single-edge two-vertex pattern: plain independent set
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int best = -1;
  std::vector<int> best_family;
  Words chosen_mask;
  std::vector<int> chosen;

  MaxFreeSearch(const InducedGraph& graph, const SearchProblem& prob)
      : g(graph), problem(prob), embedder(graph, prob.pattern),
        edge_pattern(prob.pattern.order() == 2 && prob.pattern.edge_count() == 1),
        chosen_mask(static_cast<std::size_t>(graph.words()), 0) {}

  bool constraint_satisfied(const std::vector<int>& family_ids) {
    switch (problem.constraint) {
      case SideConstraint::None:
        return true;
      case SideConstraint::NoCommonElement: {
        if (family_ids.empty()) return false;
        Bits common = ~Bits(0);
        for (int id : family_ids) common &= g.label(id).bits();
        return common == 0;
      }
      case SideConstraint::MinEll: {
        std::vector<KSet> members;
        members.reserve(family_ids.size());
        for (int id : family_ids) members.push_back(g.label(id));
        Family f(problem.n, problem.k, std::move(members));
        return ell(f, problem.min_ell_t).value >= problem.min_ell_s;
      }
    }
    return false;
  }

  /// Would `candidate` keep the current selection pattern-free?
  bool stays_free(int candidate) {
    if (edge_pattern) return true;  // handled by row masking instead
    word_set(chosen_mask, candidate);
    bool hit = copy_using_vertex(embedder, problem.pattern, chosen_mask, candidate);
    word_clear(chosen_mask, candidate);
    return !hit;
  }

  void run() {
    Words cands(static_cast<std::size_t>(g.words()), 0);
    for (int v = 0; v < g.order(); ++v)
      if (problem.pattern.order() > 1) word_set(cands, v);
    dfs(cands, 0);
  }

  void dfs(const Words& cands, int from) {
    if (exhausted || ++nodes > problem.budget) {
      exhausted = true;
      return;
    }
    int remaining = word_popcount(cands);
    if (static_cast<int>(chosen.size()) + remaining <= best) return;
    // next candidate at or above `from`
    int v = -1;
    for (int w = from / 64; w < g.words() && v < 0; ++w) {
      std::uint64_t bits = cands[static_cast<std::size_t>(w)];
      if (w == from / 64) bits &= ~((std::uint64_t(1) << (from % 64)) - 1);
      if (bits) v = w * 64 + std::countr_zero(bits);
    }
    if (v < 0) {  // maximal family: side constraints are checked here
      if (static_cast<int>(chosen.size()) > best && constraint_satisfied(chosen)) {
        best = static_cast<int>(chosen.size());
        best_family = chosen;
      }
      return;
    }

    // include v
    Words sub = cands;
    word_clear(sub, v);
    chosen.push_back(v);
    word_set(chosen_mask, v);
    if (edge_pattern) {
      auto row = g.row(v);
      for (int w = 0; w < g.words(); ++w) sub[static_cast<std::size_t>(w)] &= ~row[static_cast<std::size_t>(w)];
    } else {
      Words filtered = sub;
      for (int w = 0; w < g.words(); ++w) {
        std::uint64_t bits = sub[static_cast<std::size_t>(w)];
        while (bits) {
          int u = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (!stays_free(u)) word_clear(filtered, u);
        }
      }
      sub = std::move(filtered);
    }
    dfs(sub, v + 1);
    word_clear(chosen_mask, v);
    chosen.pop_back();

    // exclude v
    Words rest = cands;
    word_clear(rest, v);
    dfs(rest, v + 1);
  }

  /// Lexicographically smallest pattern-free constraint-satisfying family of
  /// the proven optimal size.
  std::vector<int> lex_min_optimal(int m) {
    std::vector<int> out;
    if (m == 0) return out;
    Words cands(static_cast<std::size_t>(g.words()), 0);
    for (int v = 0; v < g.order(); ++v) word_set(cands, v);
    std::fill(chosen_mask.begin(), chosen_mask.end(), 0);
    chosen.clear();
    rec_extract(cands, -1, m, out);
    return out;
  }

  bool rec_extract(const Words& cands, int last, int m, std::vector<int>& out) {
    if (static_cast<int>(chosen.size()) == m) {
      if (!constraint_satisfied(chosen)) return false;
      out = chosen;
      return true;
    }
    for (int v = last + 1; v < g.order(); ++v) {
      if (!word_test(cands, v)) continue;
      int avail = 0;
      for (int u = v; u < g.order(); ++u)
        if (word_test(cands, u)) ++avail;
      if (static_cast<int>(chosen.size()) + avail < m) return false;
      Words sub = cands;
      word_clear(sub, v);
      chosen.push_back(v);
      word_set(chosen_mask, v);
      if (edge_pattern) {
        auto row = g.row(v);
        for (int w = 0; w < g.words(); ++w) sub[static_cast<std::size_t>(w)] &= ~row[static_cast<std::size_t>(w)];
      } else {
        Words filtered = sub;
        for (int w = 0; w < g.words(); ++w) {
          std::uint64_t bits = sub[static_cast<std::size_t>(w)];
          while (bits) {
            int u = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            if (!stays_free(u)) word_clear(filtered, u);
          }
        }
        sub = std::move(filtered);
      }
      if (rec_extract(sub, v, m, out)) return true;
      word_clear(chosen_mask, v);
      chosen.pop_back();
    }
    return false;
  }
};

inline void validate_problem(const SearchProblem& p) {
  if (p.pattern.order() > kSearchPatternCap)
    throw CapExceeded("pattern order above " + std::to_string(kSearchPatternCap));
  if (binom(p.n, p.k) > kSearchVertexCap)
    throw CapExceeded("C(n,k) above the " + std::to_string(kSearchVertexCap) + "-vertex cap");
}

}  // namespace detail

/// Exact maximum pattern-free vertex subset of K(n,k), optionally under a
/// side constraint checked at maximal families (both supported constraints
/// are upward closed, so optima occur there).  Witness is the
/// lexicographically smallest optimal family.
inline SearchOutcome max_f_free(const SearchProblem& problem) {
  detail::validate_problem(problem);
  Family all(problem.n, problem.k, enumerate_all_ksets(problem.n, problem.k));
  InducedGraph g(all);
  detail::MaxFreeSearch search(g, problem);
  search.run();

  if (search.exhausted) {
    std::vector<KSet> members;
    for (int id : search.best_family) members.push_back(g.label(id));
    int lower = std::max(search.best, 0);
    return {std::max(search.best, 0), Family(problem.n, problem.k, std::move(members)), false,
            lower, g.order(), search.nodes};
  }
  if (search.best < 0) throw Error("no family satisfies the side constraint");

  std::vector<int> ids = search.lex_min_optimal(search.best);
  std::vector<KSet> members;
  members.reserve(ids.size());
  for (int id : ids) members.push_back(g.label(id));
  return {search.best, Family(problem.n, problem.k, std::move(members)), true,
          search.best, search.best, search.nodes};
}

/// Greedy maximal pattern-free family along the given vertex order (default:
/// ascending vertex order, which on the regular Kneser host matches the
/// degree order).  A lower-bound heuristic; never beats max_f_free.
inline Family greedy_f_free(const SearchProblem& problem, std::span<const int> order = {}) {
  detail::validate_problem(problem);
  Family all(problem.n, problem.k, enumerate_all_ksets(problem.n, problem.k));
  InducedGraph g(all);
  detail::MaxFreeSearch helper(g, problem);

  std::vector<int> sequence(order.begin(), order.end());
  if (sequence.empty()) {
    sequence.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) sequence[static_cast<std::size_t>(v)] = v;
  }
  std::vector<int> picked;
  for (int v : sequence) {
    if (problem.pattern.order() == 1) break;
    bool ok;
    if (helper.edge_pattern) {
      ok = true;
      for (int u : picked)
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
    } else {
      ok = helper.stays_free(v);
    }
    if (ok) {
      picked.push_back(v);
      detail::word_set(helper.chosen_mask, v);
    }
  }
  std::vector<KSet> members;
  members.reserve(picked.size());
  for (int id : picked) members.push_back(g.label(id));
  return Family(problem.n, problem.k, std::move(members));
}

/// True iff no k-set outside the family can be added without creating a
/// pattern copy.
inline bool verify_local_maximality(const Family& f, const PatternGraph& pattern) {
  std::vector<KSet> extended(f.members());
  extended.push_back(KSet());  // slot for the candidate
  KSetStream stream(f.ground_set(), f.set_size());
  while (auto candidate = stream.next()) {
    if (f.contains(*candidate)) continue;
    extended.back() = *candidate;
    Family trial(f.ground_set(), f.set_size(), extended);
    if (!contains_subgraph(induced_kneser_graph(trial), pattern).found()) return false;
  }
  return true;
}

}  // namespace kneser
