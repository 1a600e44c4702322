#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "kneser/family.hpp"

namespace kneser {

/// The disjointness graph K(n,k)[F] induced by a family: vertex i is the
/// i-th family member, edges join disjoint members.  Adjacency is stored as
/// packed bitset rows; vertex labeling follows the canonical family order.
class InducedGraph {
 public:
  explicit InducedGraph(const Family& f)
      : order_(f.size()),
        words_((order_ + 63) / 64),
        adj_(static_cast<std::size_t>(order_) * words_, 0),
        labels_(f.members()) {
    for (int i = 0; i < order_; ++i)
      for (int j = i + 1; j < order_; ++j)
        if ((f[i].bits() & f[j].bits()) == 0) {
          set_edge(i, j);
          set_edge(j, i);
        }
  }

  int order() const { return order_; }
  int words() const { return words_; }

  bool adjacent(int i, int j) const {
    return (adj_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) & 1;
  }

  std::span<const std::uint64_t> row(int i) const {
    return {adj_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
  }

  int degree(int i) const {
    int d = 0;
    for (std::uint64_t w : row(i)) d += std::popcount(w);
    return d;
  }

  long long edge_count() const {
    long long total = 0;
    for (int i = 0; i < order_; ++i) total += degree(i);
    return total / 2;
  }

  const KSet& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<KSet>& labels() const { return labels_; }

 private:
  void set_edge(int i, int j) {
    adj_[static_cast<std::size_t>(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
  }

  int order_;
  int words_;
  std::vector<std::uint64_t> adj_;
  std::vector<KSet> labels_;
};

inline InducedGraph induced_kneser_graph(const Family& f) { return InducedGraph(f); }

}  // namespace kneser
