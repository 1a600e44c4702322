#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kneser/errors.hpp"

namespace kneser {

enum class PatternKind { Clique, CompleteMultipartite, EvenCycle, Path, Star, Arbitrary };

/// A small abstract forbidden graph.  Named kinds carry their structure
/// (parts, cycle length) so specialized checkers can dispatch without graph
/// inspection.  Vertices are 0-based; order <= 64.
class PatternGraph {
 public:
  int order() const { return order_; }
  PatternKind kind() const { return kind_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Multipartite part sizes (CompleteMultipartite only).
  const std::vector<int>& parts() const { return parts_; }

  std::uint64_t adjacency_mask(int v) const { return masks_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (masks_[static_cast<std::size_t>(u)] >> v) & 1; }
  int degree(int v) const { return std::popcount(masks_[static_cast<std::size_t>(v)]); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  static PatternGraph clique(int s) {
    if (s < 1) throw InvalidPattern("clique needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
    return PatternGraph(s, std::move(edges), PatternKind::Clique, {});
  }

  /// Complete multipartite graph; vertices grouped into consecutive blocks
  /// of the given sizes, all cross-block edges present.
  static PatternGraph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw InvalidPattern("multipartite pattern needs parts");
    for (int p : parts)
      if (p < 1) throw InvalidPattern("part sizes must be positive");
    int order = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> block(static_cast<std::size_t>(order));
    int v = 0;
    for (std::size_t b = 0; b < parts.size(); ++b)
      for (int i = 0; i < parts[b]; ++i) block[static_cast<std::size_t>(v++)] = static_cast<int>(b);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < order; ++i)
      for (int j = i + 1; j < order; ++j)
        if (block[static_cast<std::size_t>(i)] != block[static_cast<std::size_t>(j)])
          edges.emplace_back(i, j);
    return PatternGraph(order, std::move(edges), PatternKind::CompleteMultipartite, parts);
  }

  static PatternGraph even_cycle(int length) {
    if (length < 4 || length % 2 != 0) throw InvalidPattern("even cycle length must be even, >= 4");
    return cycle(length);
  }

  /// Cycle of any length >= 3; tagged EvenCycle when the length is even.
  static PatternGraph cycle(int length) {
    if (length < 3) throw InvalidPattern("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < length; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, length - 1);
    PatternKind kind = (length % 2 == 0) ? PatternKind::EvenCycle : PatternKind::Arbitrary;
    return PatternGraph(length, std::move(edges), kind, {});
  }

  /// Path on m vertices (m-1 edges).
  static PatternGraph path(int m) {
    if (m < 1) throw InvalidPattern("path needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return PatternGraph(m, std::move(edges), PatternKind::Path, {});
  }

  /// Star K_{1,l}: center 0, leaves 1..l.
  static PatternGraph star(int l) {
    if (l < 1) throw InvalidPattern("star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= l; ++i) edges.emplace_back(0, i);
    return PatternGraph(l + 1, std::move(edges), PatternKind::Star, {});
  }

  static PatternGraph arbitrary(int order, std::vector<std::pair<int, int>> edges) {
    return PatternGraph(order, std::move(edges), PatternKind::Arbitrary, {});
  }

  std::string to_string() const {
    switch (kind_) {
      case PatternKind::Clique:
        return "K" + std::to_string(order_);
      case PatternKind::CompleteMultipartite: {
        std::string out = "K{";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(parts_[i]);
        }
        return out + "}";
      }
      case PatternKind::EvenCycle:
        return "C" + std::to_string(order_);
      case PatternKind::Path:
        return "P" + std::to_string(order_);
      case PatternKind::Star:
        return "K1_" + std::to_string(order_ - 1);
      case PatternKind::Arbitrary:
        break;
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : edges_) edges.push_back({a, b});
    return "edges:" + edges.dump();
  }

 private:
  PatternGraph(int order, std::vector<std::pair<int, int>> edges, PatternKind kind,
               std::vector<int> parts)
      : order_(order), edges_(std::move(edges)), kind_(kind), parts_(std::move(parts)) {
    if (order_ < 1) throw InvalidPattern("pattern needs at least one vertex");
    if (order_ > 64) throw InvalidPattern("pattern order above 64 unsupported");
    masks_.assign(static_cast<std::size_t>(order_), 0);
    for (auto& [a, b] : edges_) {
      if (a > b) std::swap(a, b);
      if (a < 0 || b >= order_) throw InvalidPattern("edge endpoint outside [0, order)");
      if (a == b) throw InvalidPattern("self-loop");
      if ((masks_[static_cast<std::size_t>(a)] >> b) & 1) throw InvalidPattern("duplicate edge");
      masks_[static_cast<std::size_t>(a)] |= std::uint64_t(1) << b;
      masks_[static_cast<std::size_t>(b)] |= std::uint64_t(1) << a;
    }
    std::sort(edges_.begin(), edges_.end());
  }

  int order_;
  std::vector<std::pair<int, int>> edges_;
  PatternKind kind_;
  std::vector<int> parts_;
  std::vector<std::uint64_t> masks_;
};

/// Parses a pattern literal: `Ks`, `K{s,t,...}`, `C2s`, `Pm` (or `P_m`),
/// `K1_l`, or `edges:[[0,1],...]`.
inline PatternGraph parse_pattern(const std::string& text) {
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  if (text.rfind("edges:", 0) == 0) {
    nlohmann::json j = nlohmann::json::parse(text.substr(6), nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw InvalidPattern("bad edge list: " + text);
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2) throw InvalidPattern("edge must be a pair: " + text);
      int a = e[0].get<int>(), b = e[1].get<int>();
      edges.emplace_back(a, b);
      max_vertex = std::max({max_vertex, a, b});
    }
    return PatternGraph::arbitrary(max_vertex + 1, std::move(edges));
  }
  if (text.size() >= 2 && text[0] == 'K' && text[1] == '{') {
    if (text.back() != '}') throw InvalidPattern("unterminated part list: " + text);
    std::vector<int> parts;
    std::string body = text.substr(2, text.size() - 3);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (!all_digits(item)) throw InvalidPattern("bad part size in " + text);
      parts.push_back(std::stoi(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return PatternGraph::complete_multipartite(parts);
  }
  if (text.rfind("K1_", 0) == 0 && all_digits(text.substr(3)))
    return PatternGraph::star(std::stoi(text.substr(3)));
  if (text.size() >= 2 && text[0] == 'K' && all_digits(text.substr(1)))
    return PatternGraph::clique(std::stoi(text.substr(1)));
  if (text.size() >= 2 && text[0] == 'C' && all_digits(text.substr(1)))
    return PatternGraph::cycle(std::stoi(text.substr(1)));
  if (text.size() >= 2 && text[0] == 'P') {
    std::string rest = text.substr(text[1] == '_' ? 2 : 1);
    if (all_digits(rest)) return PatternGraph::path(std::stoi(rest));
  }
  throw InvalidPattern("unrecognized pattern literal: " + text);
}

}  // namespace kneser
