#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/pattern.hpp"

namespace kneser {

/// Injective map pattern-vertex -> host-vertex carrying every pattern edge
/// to a host edge (subgraph embedding, not necessarily induced).
struct EmbeddingWitness {
  std::vector<int> mapping;

  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

struct SubgraphResult {
  std::optional<EmbeddingWitness> witness;
  bool pattern_larger_than_host = false;

  bool found() const { return witness.has_value(); }
};

inline bool embedding_valid(const InducedGraph& host, const PatternGraph& p,
                            const EmbeddingWitness& w) {
  if (static_cast<int>(w.mapping.size()) != p.order()) return false;
  for (int i = 0; i < p.order(); ++i) {
    int v = w.mapping[static_cast<std::size_t>(i)];
    if (v < 0 || v >= host.order()) return false;
    for (int j = 0; j < i; ++j)
      if (v == w.mapping[static_cast<std::size_t>(j)]) return false;
  }
  for (auto [a, b] : p.edges())
    if (!host.adjacent(w.mapping[static_cast<std::size_t>(a)],
                       w.mapping[static_cast<std::size_t>(b)]))
      return false;
  return true;
}

namespace detail {

/// Backtracking embedder over packed candidate bitsets.  Existence queries
/// pick the most-constrained pattern vertex next (fewest remaining host
/// candidates) with forward checking; the lexicographic pass assigns pattern
/// vertices in index order with ascending candidates, so its first hit is
/// the lexicographically smallest mapping.
class Embedder {
 public:
  Embedder(const InducedGraph& host, const PatternGraph& p) : host_(host), p_(p) {
    words_ = host.words();
    // Degree filter: a valid image of u needs at least deg(u) host neighbors.
    domain_.assign(static_cast<std::size_t>(p.order()) * words_, 0);
    for (int u = 0; u < p.order(); ++u)
      for (int v = 0; v < host.order(); ++v)
        if (host.degree(v) >= p.degree(u))
          domain_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
  }

  /// Existence query.  An `active` mask restricts the host to an induced
  /// vertex subset; a pin forces pattern vertex `pin_pattern` onto host
  /// vertex `pin_host`.
  bool exists(const std::vector<std::uint64_t>* active = nullptr, int pin_pattern = -1,
              int pin_host = -1) {
    active_ = active;
    pin_pattern_ = pin_pattern;
    pin_host_ = pin_host;
    reset();
    bool found = dfs_dynamic(0);
    active_ = nullptr;
    pin_pattern_ = pin_host_ = -1;
    return found;
  }

  /// Lexicographically smallest embedding, or nullopt.
  std::optional<std::vector<int>> lex_smallest() {
    reset();
    if (dfs_lex(0)) return mapping_;
    return std::nullopt;
  }

 private:
  void reset() {
    mapping_.assign(static_cast<std::size_t>(p_.order()), -1);
    used_.assign(static_cast<std::size_t>(words_), 0);
    scratch_.assign(static_cast<std::size_t>(p_.order()) * words_, 0);
  }

  /// Fills `cand` with the feasible images of u given current placements.
  void candidates(int u, std::uint64_t* cand) const {
    const std::uint64_t* dom = domain_.data() + static_cast<std::size_t>(u) * words_;
    for (int w = 0; w < words_; ++w) cand[w] = dom[w] & ~used_[static_cast<std::size_t>(w)];
    if (active_)
      for (int w = 0; w < words_; ++w) cand[w] &= (*active_)[static_cast<std::size_t>(w)];
    if (u == pin_pattern_)
      for (int w = 0; w < words_; ++w)
        cand[w] &= (w == pin_host_ / 64) ? (std::uint64_t(1) << (pin_host_ % 64)) : 0;
    std::uint64_t nbrs = p_.adjacency_mask(u);
    while (nbrs) {
      int t = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (mapping_[static_cast<std::size_t>(t)] >= 0) {
        auto row = host_.row(mapping_[static_cast<std::size_t>(t)]);
        for (int w = 0; w < words_; ++w) cand[w] &= row[static_cast<std::size_t>(w)];
      }
    }
  }

  bool dfs_dynamic(int depth) {
    if (depth == p_.order()) return true;
    // Most-constrained unplaced vertex; any empty candidate set fails fast.
    std::uint64_t* cand = scratch_.data() + static_cast<std::size_t>(depth) * words_;
    std::vector<std::uint64_t> probe(static_cast<std::size_t>(words_));
    int pick = -1;
    long long pick_count = -1;
    for (int u = 0; u < p_.order(); ++u) {
      if (mapping_[static_cast<std::size_t>(u)] >= 0) continue;
      candidates(u, probe.data());
      long long count = 0;
      for (int w = 0; w < words_; ++w) count += std::popcount(probe[static_cast<std::size_t>(w)]);
      if (count == 0) return false;
      if (u == pin_pattern_ && depth == 0) {  // place the pinned vertex first
        pick = u;
        std::copy(probe.begin(), probe.end(), cand);
        break;
      }
      if (pick_count < 0 || count < pick_count) {
        pick = u;
        pick_count = count;
        std::copy(probe.begin(), probe.end(), cand);
      }
    }
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        mapping_[static_cast<std::size_t>(pick)] = v;
        used_[static_cast<std::size_t>(w)] |= std::uint64_t(1) << (v % 64);
        if (dfs_dynamic(depth + 1)) return true;
        used_[static_cast<std::size_t>(w)] &= ~(std::uint64_t(1) << (v % 64));
        mapping_[static_cast<std::size_t>(pick)] = -1;
      }
    }
    return false;
  }

  bool dfs_lex(int u) {
    if (u == p_.order()) return true;
    std::uint64_t* cand = scratch_.data() + static_cast<std::size_t>(u) * words_;
    candidates(u, cand);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        mapping_[static_cast<std::size_t>(u)] = v;
        used_[static_cast<std::size_t>(w)] |= std::uint64_t(1) << (v % 64);
        if (dfs_lex(u + 1)) return true;
        used_[static_cast<std::size_t>(w)] &= ~(std::uint64_t(1) << (v % 64));
        mapping_[static_cast<std::size_t>(u)] = -1;
      }
    }
    return false;
  }

  const InducedGraph& host_;
  const PatternGraph& p_;
  int words_;
  const std::vector<std::uint64_t>* active_ = nullptr;
  int pin_pattern_ = -1;
  int pin_host_ = -1;
  std::vector<std::uint64_t> domain_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> scratch_;
  std::vector<int> mapping_;
};

}  // namespace detail

/// Decides (non-induced) subgraph containment.  When a copy exists, returns
/// the lexicographically smallest witness under host vertex order; existence
/// itself is decided first by the dynamically ordered search.
inline SubgraphResult contains_subgraph(const InducedGraph& host, const PatternGraph& p) {
  if (p.order() > host.order()) return {std::nullopt, true};
  detail::Embedder embedder(host, p);
  if (!embedder.exists()) return {};
  auto mapping = embedder.lex_smallest();
  return {EmbeddingWitness{*mapping}, false};
}

/// Test oracle: tries all injective mappings in lexicographic order with
/// nothing but the edge-consistency check.  Enforced caps keep it honest.
inline SubgraphResult brute_force_contains(const InducedGraph& host, const PatternGraph& p) {
  if (p.order() > 8) throw OracleSizeExceeded("oracle pattern cap is 8 vertices");
  if (host.order() > 24) throw OracleSizeExceeded("oracle host cap is 24 vertices");
  if (p.order() > host.order()) return {std::nullopt, true};

  std::vector<int> mapping(static_cast<std::size_t>(p.order()), -1);
  std::vector<bool> used(static_cast<std::size_t>(host.order()), false);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == p.order()) return true;
    for (int v = 0; v < host.order(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j)
        if (p.adjacent(depth, j) && !host.adjacent(v, mapping[static_cast<std::size_t>(j)]))
          ok = false;
      if (!ok) continue;
      mapping[static_cast<std::size_t>(depth)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (self(self, depth + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
      mapping[static_cast<std::size_t>(depth)] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return {EmbeddingWitness{mapping}, false};
  return {};
}

inline bool family_pattern_free(const Family& f, const PatternGraph& p) {
  return !contains_subgraph(induced_kneser_graph(f), p).found();
}

/// True iff the family contains s pairwise disjoint members; equivalent to a
/// clique of size s in the disjointness graph.
inline bool has_matching(const Family& f, int s) {
  if (s < 1) throw Error("matching size must be >= 1");
  auto rec = [&](auto&& self, int start, int need, detail::Bits acc) -> bool {
    if (need == 0) return true;
    for (int i = start; i + need <= f.size(); ++i)
      if ((f[i].bits() & acc) == 0 && self(self, i + 1, need - 1, acc | f[i].bits())) return true;
    return false;
  };
  return rec(rec, 0, s, 0);
}

struct UnionViolation {
  bool found = false;
  std::vector<int> left;   // member indices, ascending
  std::vector<int> right;  // member indices, ascending

  explicit operator bool() const { return found; }
};

/// Looks for members F_1..F_s and F'_1..F'_t whose unions are disjoint;
/// equivalent to a complete bipartite K_{s,t} in the disjointness graph.
/// Returns the first violation in lexicographic order of the left side.
inline UnionViolation is_union_intersecting_violation(const Family& f, int s, int t) {
  if (s < 1 || s > t) throw Error("union-intersecting check needs 1 <= s <= t");
  if (f.size() < s + t) return {};

  std::vector<int> combo(static_cast<std::size_t>(s));
  std::vector<bool> in_left(static_cast<std::size_t>(f.size()), false);
  auto rec = [&](auto&& self, int start, int slot, detail::Bits acc) -> UnionViolation {
    if (slot == s) {
      std::vector<int> right;
      for (int i = 0; i < f.size(); ++i) {
        if (in_left[static_cast<std::size_t>(i)]) continue;
        if ((f[i].bits() & acc) == 0) {
          right.push_back(i);
          if (static_cast<int>(right.size()) == t) return {true, combo, right};
        }
      }
      return {};
    }
    for (int i = start; i + (s - slot) <= f.size(); ++i) {
      combo[static_cast<std::size_t>(slot)] = i;
      in_left[static_cast<std::size_t>(i)] = true;
      UnionViolation hit = self(self, i + 1, slot + 1, acc | f[i].bits());
      in_left[static_cast<std::size_t>(i)] = false;
      if (hit.found) return hit;
    }
    return {};
  };
  return rec(rec, 0, 0, 0);
}

}  // namespace kneser
