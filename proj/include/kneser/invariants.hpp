#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/pattern.hpp"

namespace kneser {

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Exact value of ell_t plus a removal witness.  When the node budget ran
/// out, `proven` is false and the certified bracket [lower_bound,
/// upper_bound] is attached; `value` and the witness then reflect the best
/// known upper bound.
struct EllResult {
  int value = 0;
  std::vector<int> removal_witness;  // member indices, ascending
  bool proven = true;
  int lower_bound = 0;
  int upper_bound = 0;
};

namespace detail {

using Words = std::vector<std::uint64_t>;

inline bool word_test(const Words& w, int v) { return (w[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1; }
inline void word_set(Words& w, int v) { w[static_cast<std::size_t>(v / 64)] |= std::uint64_t(1) << (v % 64); }
inline void word_clear(Words& w, int v) { w[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t(1) << (v % 64)); }

inline int word_popcount(const Words& w) {
  int c = 0;
  for (std::uint64_t x : w) c += std::popcount(x);
  return c;
}

/// Lexicographically first t pairwise-adjacent vertices avoiding `excluded`,
/// or nullopt.  In the disjointness graph this is the first t-matching of
/// the underlying family.
inline std::optional<std::vector<int>> first_t_clique(const InducedGraph& g, const Words& excluded,
                                                      int t) {
  int words = g.words();
  std::vector<Words> cand(static_cast<std::size_t>(t) + 1, Words(static_cast<std::size_t>(words)));
  for (int w = 0; w < words; ++w) cand[0][static_cast<std::size_t>(w)] = ~excluded[static_cast<std::size_t>(w)];
  if (words > 0) {
    int tail = g.order() % 64;
    if (tail != 0) cand[0][static_cast<std::size_t>(words - 1)] &= (std::uint64_t(1) << tail) - 1;
  }
  std::vector<int> clique(static_cast<std::size_t>(t));

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == t) return true;
    const Words& c = cand[static_cast<std::size_t>(depth)];
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = c[static_cast<std::size_t>(w)];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        clique[static_cast<std::size_t>(depth)] = v;
        Words& next = cand[static_cast<std::size_t>(depth) + 1];
        auto row = g.row(v);
        for (int x = 0; x < words; ++x) next[static_cast<std::size_t>(x)] = c[static_cast<std::size_t>(x)] & row[static_cast<std::size_t>(x)];
        // only vertices above v, to keep the tuple ascending
        for (int x = 0; x < v / 64; ++x) next[static_cast<std::size_t>(x)] = 0;
        next[static_cast<std::size_t>(v / 64)] &= ~((std::uint64_t(2) << (v % 64)) - 1);
        if (self(self, depth + 1)) return true;
      }
    }
    return false;
  };
  if (rec(rec, 0)) return clique;
  return std::nullopt;
}

/// Can all t-cliques be hit by deleting at most `budget` further vertices,
/// every one of index > floor?  Bounded-depth branch on a violating clique.
inline bool hitting_feasible(const InducedGraph& g, Words& excluded, int t, int floor, int budget) {
  auto clique = first_t_clique(g, excluded, t);
  if (!clique) return true;
  if (budget == 0) return false;
  for (int v : *clique) {
    if (v <= floor) continue;
    word_set(excluded, v);
    bool ok = hitting_feasible(g, excluded, t, floor, budget - 1);
    word_clear(excluded, v);
    if (ok) return true;
  }
  return false;
}

/// Smallest (lexicographically, as a sorted index set) hitting set of the
/// exact optimal size m.
inline std::vector<int> lex_min_hitting_witness(const InducedGraph& g, int t, int m) {
  Words excluded(static_cast<std::size_t>(g.words()), 0);
  std::vector<int> witness;
  int floor = -1;
  for (int slot = 0; slot < m; ++slot) {
    for (int v = floor + 1; v < g.order(); ++v) {
      word_set(excluded, v);
      if (hitting_feasible(g, excluded, t, v, m - slot - 1)) {
        witness.push_back(v);
        floor = v;
        break;
      }
      word_clear(excluded, v);
    }
  }
  return witness;
}

/// Greedy packing of vertex-disjoint t-cliques; its size is a certified
/// lower bound on the minimum hitting set.
inline int clique_packing_lower_bound(const InducedGraph& g, int t) {
  Words excluded(static_cast<std::size_t>(g.words()), 0);
  int count = 0;
  while (auto clique = first_t_clique(g, excluded, t)) {
    for (int v : *clique) word_set(excluded, v);
    ++count;
  }
  return count;
}

/// Branch-and-bound maximum independent set.  Branches on the vertex of
/// highest residual degree; residual-isolated vertices are taken outright.
struct MisSolver {
  const InducedGraph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int best = -1;
  Words best_set;
  Words current;

  explicit MisSolver(const InducedGraph& graph, std::uint64_t node_budget)
      : g(graph), budget(node_budget), best_set(static_cast<std::size_t>(graph.words()), 0),
        current(static_cast<std::size_t>(graph.words()), 0) {}

  void solve() {
    Words all(static_cast<std::size_t>(g.words()), 0);
    for (int v = 0; v < g.order(); ++v) word_set(all, v);
    best = 0;
    recurse(all, 0);
  }

  void recurse(const Words& pool, int size) {
    if (exhausted || ++nodes > budget) {
      exhausted = true;
      return;
    }
    int cnt = word_popcount(pool);
    if (size + cnt <= best) return;
    int branch = -1, branch_deg = 0;
    for (int w = 0; w < g.words(); ++w) {
      std::uint64_t bits = pool[static_cast<std::size_t>(w)];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        int deg = 0;
        auto row = g.row(v);
        for (int x = 0; x < g.words(); ++x)
          deg += std::popcount(row[static_cast<std::size_t>(x)] & pool[static_cast<std::size_t>(x)]);
        if (deg > branch_deg) {
          branch_deg = deg;
          branch = v;
        }
      }
    }
    if (branch < 0) {  // pool is independent: take everything
      best = size + cnt;
      best_set = current;
      for (int w = 0; w < g.words(); ++w) best_set[static_cast<std::size_t>(w)] |= pool[static_cast<std::size_t>(w)];
      return;
    }
    Words sub = pool;
    auto row = g.row(branch);
    for (int x = 0; x < g.words(); ++x) sub[static_cast<std::size_t>(x)] &= ~row[static_cast<std::size_t>(x)];
    word_clear(sub, branch);
    word_set(current, branch);
    recurse(sub, size + 1);
    word_clear(current, branch);

    sub = pool;
    word_clear(sub, branch);
    recurse(sub, size);
  }
};

/// Branch-and-bound minimum hitting set over lazily generated t-cliques.
struct HittingSolver {
  const InducedGraph& g;
  int t;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int best = INT_MAX;
  std::vector<int> best_witness;

  HittingSolver(const InducedGraph& graph, int target, std::uint64_t node_budget)
      : g(graph), t(target), budget(node_budget) {}

  void solve() {
    Words excluded(static_cast<std::size_t>(g.words()), 0);
    std::vector<int> removed;
    // Greedy warm start: hit each found clique with its first vertex.
    while (auto clique = first_t_clique(g, excluded, t)) {
      word_set(excluded, (*clique)[0]);
      removed.push_back((*clique)[0]);
    }
    best = static_cast<int>(removed.size());
    best_witness = removed;
    std::fill(excluded.begin(), excluded.end(), 0);
    removed.clear();
    recurse(excluded, removed);
  }

  void recurse(Words& excluded, std::vector<int>& removed) {
    if (exhausted || ++nodes > budget) {
      exhausted = true;
      return;
    }
    if (static_cast<int>(removed.size()) >= best) return;
    auto clique = first_t_clique(g, excluded, t);
    if (!clique) {
      best = static_cast<int>(removed.size());
      best_witness = removed;
      return;
    }
    for (int v : *clique) {
      word_set(excluded, v);
      removed.push_back(v);
      recurse(excluded, removed);
      removed.pop_back();
      word_clear(excluded, v);
    }
  }
};

}  // namespace detail

/// ell_t: the minimum number of members whose removal leaves no t pairwise
/// disjoint sets.  Exact; for t = 2 computed as |F| minus the maximum
/// independent set of the disjointness graph, for t >= 3 as a minimum
/// hitting set over lazily enumerated t-cliques.  The witness is the
/// lexicographically smallest optimal removal set.
inline EllResult ell(const Family& f, int t = 2, std::uint64_t budget = kDefaultSearchBudget) {
  if (t < 2) throw Error("ell_t needs t >= 2");
  InducedGraph g(f);
  EllResult result;

  if (t == 2) {
    detail::MisSolver solver(g, budget);
    solver.solve();
    if (!solver.exhausted) {
      result.value = g.order() - solver.best;
      result.proven = true;
    } else {
      result.proven = false;
      result.upper_bound = g.order() - solver.best;
      result.lower_bound = detail::clique_packing_lower_bound(g, 2);
      result.value = result.upper_bound;
      for (int v = 0; v < g.order(); ++v)
        if (!detail::word_test(solver.best_set, v)) result.removal_witness.push_back(v);
      return result;
    }
  } else {
    detail::HittingSolver solver(g, t, budget);
    solver.solve();
    if (!solver.exhausted) {
      result.value = solver.best;
      result.proven = true;
    } else {
      result.proven = false;
      result.upper_bound = solver.best;
      result.lower_bound = detail::clique_packing_lower_bound(g, t);
      result.value = result.upper_bound;
      result.removal_witness = solver.best_witness;
      std::sort(result.removal_witness.begin(), result.removal_witness.end());
      return result;
    }
  }
  result.lower_bound = result.upper_bound = result.value;
  result.removal_witness = detail::lex_min_hitting_witness(g, t, result.value);
  return result;
}

/// Exact chromatic number plus eta, the smallest color-class size over all
/// proper chi-colorings.  witness_coloring attains eta; colors are indexed
/// in first-use order.
struct ChromaticProfile {
  int chi = 0;
  int eta = 0;
  std::vector<int> witness_coloring;  // color per vertex
};

namespace detail {

/// Enumerates proper colorings with at most `limit` colors, symmetry-broken
/// by first-use color order.  Calls sink on every complete coloring; a true
/// return from sink stops the enumeration.
template <typename Sink>
inline bool enumerate_colorings(const std::vector<std::uint64_t>& masks, int order, int limit,
                                std::vector<int>& color, Sink&& sink) {
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == order) return sink(color);
    int top = std::min(limit - 1, used);
    for (int c = 0; c <= top; ++c) {
      bool ok = true;
      std::uint64_t nbrs = masks[static_cast<std::size_t>(v)];
      while (nbrs && ok) {
        int u = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (u < v && color[static_cast<std::size_t>(u)] == c) ok = false;
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
    }
    color[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return rec(rec, 0, 0);
}

inline bool colorable(const std::vector<std::uint64_t>& masks, int order, int colors) {
  if (order == 0) return true;
  if (colors == 0) return false;
  std::vector<int> color(static_cast<std::size_t>(order), -1);
  return enumerate_colorings(masks, order, colors, color, [](const std::vector<int>&) { return true; });
}

inline int exact_chromatic_number(const std::vector<std::uint64_t>& masks, int order) {
  if (order == 0) return 0;
  for (int c = 1;; ++c)
    if (colorable(masks, order, c)) return c;
}

}  // namespace detail

inline ChromaticProfile chromatic_profile(const PatternGraph& p) {
  if (p.order() > 12) throw PatternTooLarge("chromatic profile cap is order 12");
  int order = p.order();
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(order));
  for (int v = 0; v < order; ++v) masks[static_cast<std::size_t>(v)] = p.adjacency_mask(v);

  ChromaticProfile out;
  out.chi = detail::exact_chromatic_number(masks, order);
  out.eta = order + 1;
  std::vector<int> color(static_cast<std::size_t>(order), -1);
  detail::enumerate_colorings(masks, order, out.chi, color, [&](const std::vector<int>& c) {
    std::vector<int> class_size(static_cast<std::size_t>(out.chi), 0);
    for (int col : c) ++class_size[static_cast<std::size_t>(col)];
    int smallest = *std::min_element(class_size.begin(), class_size.end());
    if (smallest < out.eta) {
      out.eta = smallest;
      out.witness_coloring = c;
    }
    return out.eta == 1;  // cannot improve further
  });
  return out;
}

// --- canonical forms (exhaustive permutation minimization) ----------------

namespace detail {

/// Minimal adjacency encoding over all vertex orderings: row i holds the
/// adjacency bits toward positions j < i.  Prefix-pruned search.
inline std::vector<std::uint16_t> canonical_encoding(const std::vector<std::uint64_t>& masks,
                                                     int order) {
  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> cur(static_cast<std::size_t>(order), 0);
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(order));
  std::vector<bool> used(static_cast<std::size_t>(order), false);

  auto rec = [&](auto&& self, int pos, bool tight) -> void {
    if (pos == order) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (int v = 0; v < order; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      std::uint16_t row = 0;
      for (int j = 0; j < pos; ++j)
        if ((masks[static_cast<std::size_t>(v)] >> perm[static_cast<std::size_t>(j)]) & 1)
          row |= static_cast<std::uint16_t>(1u << j);
      bool child_tight = tight;
      if (tight && !best.empty()) {
        if (row > best[static_cast<std::size_t>(pos)]) continue;
        child_tight = row == best[static_cast<std::size_t>(pos)];
      }
      cur[static_cast<std::size_t>(pos)] = row;
      used[static_cast<std::size_t>(v)] = true;
      perm.push_back(v);
      self(self, pos + 1, child_tight);
      perm.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0, true);
  return best;
}

inline PatternGraph graph_from_encoding(const std::vector<std::uint16_t>& rows) {
  int order = static_cast<int>(rows.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < i; ++j)
      if ((rows[static_cast<std::size_t>(i)] >> j) & 1) edges.emplace_back(j, i);
  return PatternGraph::arbitrary(order, std::move(edges));
}

}  // namespace detail

inline std::vector<std::uint16_t> canonical_encoding(const PatternGraph& p) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(p.order()));
  for (int v = 0; v < p.order(); ++v) masks[static_cast<std::size_t>(v)] = p.adjacency_mask(v);
  return detail::canonical_encoding(masks, p.order());
}

inline bool isomorphic(const PatternGraph& a, const PatternGraph& b) {
  return a.order() == b.order() && canonical_encoding(a) == canonical_encoding(b);
}

/// The two bipartite classes attached to a pattern F with chi(F) >= 3:
/// `all` holds (up to isomorphism) every bipartite induced subgraph F[U]
/// whose complementary induced part has chromatic number chi(F) - 2;
/// `eta_matching` keeps those members B with eta(B) = eta(F).
struct BipartiteClasses {
  std::vector<PatternGraph> all;
  std::vector<PatternGraph> eta_matching;
};

inline BipartiteClasses bipartite_classes(const PatternGraph& p) {
  if (p.order() > 12) throw PatternTooLarge("bipartite-class cap is order 12");
  ChromaticProfile profile = chromatic_profile(p);
  if (profile.chi < 3) throw ChromaticTooSmall("pattern must have chromatic number >= 3");

  int order = p.order();
  auto induced_masks = [&](unsigned subset, std::vector<std::uint64_t>& masks) -> int {
    std::vector<int> vertices;
    for (int v = 0; v < order; ++v)
      if ((subset >> v) & 1) vertices.push_back(v);
    int m = static_cast<int>(vertices.size());
    masks.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (p.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
          masks[static_cast<std::size_t>(i)] |= std::uint64_t(1) << j;
    return m;
  };

  std::vector<std::vector<std::uint16_t>> seen;
  BipartiteClasses out;
  std::vector<std::uint64_t> masks_u, masks_w;
  unsigned full = (1u << order) - 1u;
  for (unsigned subset = 1; subset <= full; ++subset) {
    int m_w = induced_masks(full & ~subset, masks_w);
    if (detail::exact_chromatic_number(masks_w, m_w) != profile.chi - 2) continue;
    int m_u = induced_masks(subset, masks_u);
    if (!detail::colorable(masks_u, m_u, 2)) continue;  // must be bipartite
    auto key = detail::canonical_encoding(masks_u, m_u);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.all.push_back(detail::graph_from_encoding(key));
  }

  // Deterministic order: by vertex count, then encoding.
  std::vector<std::size_t> idx(out.all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (out.all[a].order() != out.all[b].order()) return out.all[a].order() < out.all[b].order();
    return seen[a] < seen[b];
  });
  std::vector<PatternGraph> sorted;
  sorted.reserve(out.all.size());
  for (std::size_t i : idx) sorted.push_back(out.all[i]);
  out.all = std::move(sorted);

  for (const PatternGraph& b : out.all)
    if (chromatic_profile(b).eta == profile.eta) out.eta_matching.push_back(b);
  return out;
}

}  // namespace kneser
