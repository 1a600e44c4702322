#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kneser/errors.hpp"
#include "kneser/kset.hpp"

namespace kneser {

/// A duplicate-free collection of k-sets over one ground set, kept in
/// canonical ascending bit-value order.  Immutable after construction;
/// duplicates are rejected rather than silently dropped.
class Family {
 public:
  Family(int n, int k, std::vector<KSet> members) : n_(n), k_(k), members_(std::move(members)) {
    check_ground_set(n);
    if (k < 0 || k > n) throw ElementOutOfRange("k outside [0, n]");
    for (const KSet& m : members_) {
      if (m.ground_set() != n_) throw GroundSetMismatch("member over a different ground set");
      if (m.size() != k_)
        throw GroundSetMismatch("member of size " + std::to_string(m.size()) +
                                " in a " + std::to_string(k_) + "-uniform family");
    }
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 1; i < members_.size(); ++i)
      if (members_[i - 1] == members_[i])
        throw DuplicateMember("duplicate member {" + members_[i].to_string() + "}");
  }

  static Family of(int n, int k, const std::vector<std::vector<int>>& sets) {
    std::vector<KSet> members;
    members.reserve(sets.size());
    for (const auto& s : sets) members.push_back(KSet::of(s, n));
    return Family(n, k, std::move(members));
  }

  int ground_set() const { return n_; }
  int set_size() const { return k_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  const KSet& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
  const std::vector<KSet>& members() const { return members_; }

  std::optional<int> index_of(const KSet& s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it != members_.end() && *it == s) return static_cast<int>(it - members_.begin());
    return std::nullopt;
  }

  bool contains(const KSet& s) const { return index_of(s).has_value(); }

  friend bool operator==(const Family& a, const Family& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.members_ == b.members_;
  }

  // --- text format -------------------------------------------------------
  // First line "n=<n> k=<k>", then one member per line as comma-separated
  // ascending elements.  Round-trips bit-exactly.

  std::string to_text() const {
    std::string out = "n=" + std::to_string(n_) + " k=" + std::to_string(k_) + "\n";
    for (const KSet& m : members_) {
      out += m.to_string();
      out += '\n';
    }
    return out;
  }

  static Family from_text(const std::string& text);

  // --- JSON form ----------------------------------------------------------

  nlohmann::json to_json() const {
    nlohmann::json sets = nlohmann::json::array();
    for (const KSet& m : members_) sets.push_back(m.elements());
    return nlohmann::json{{"n", n_}, {"k", k_}, {"sets", sets}};
  }

  static Family from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("sets"))
      throw FamilyParseError("expected object with n, k, sets", 1, 1);
    std::vector<std::vector<int>> sets;
    for (const auto& s : j.at("sets")) sets.push_back(s.get<std::vector<int>>());
    return Family::of(j.at("n").get<int>(), j.at("k").get<int>(), sets);
  }

 private:
  int n_;
  int k_;
  std::vector<KSet> members_;
};

namespace detail {

inline int parse_int(const std::string& line, std::size_t& pos, int line_no) {
  std::size_t start = pos;
  while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
  if (pos == start)
    throw FamilyParseError("expected a number", line_no, static_cast<int>(start) + 1);
  return std::stoi(line.substr(start, pos - start));
}

}  // namespace detail

inline Family Family::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw FamilyParseError("empty input", 1, 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::size_t pos = 0;
  if (line.rfind("n=", 0) != 0) throw FamilyParseError("expected 'n='", 1, 1);
  pos = 2;
  int n = detail::parse_int(line, pos, 1);
  if (pos >= line.size() || line[pos] != ' ')
    throw FamilyParseError("expected ' k=' after n", 1, static_cast<int>(pos) + 1);
  ++pos;
  if (line.compare(pos, 2, "k=") != 0)
    throw FamilyParseError("expected 'k='", 1, static_cast<int>(pos) + 1);
  pos += 2;
  int k = detail::parse_int(line, pos, 1);
  if (pos != line.size())
    throw FamilyParseError("trailing characters after header", 1, static_cast<int>(pos) + 1);

  std::vector<std::vector<int>> sets;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (k == 0) sets.push_back({});  // the empty set
      continue;
    }
    std::vector<int> elems;
    pos = 0;
    while (true) {
      int e = detail::parse_int(line, pos, line_no);
      if (!elems.empty() && e <= elems.back())
        throw FamilyParseError("elements must be strictly ascending", line_no,
                               static_cast<int>(pos));
      elems.push_back(e);
      if (pos == line.size()) break;
      if (line[pos] != ',')
        throw FamilyParseError("expected ','", line_no, static_cast<int>(pos) + 1);
      ++pos;
    }
    if (static_cast<int>(elems.size()) != k)
      throw FamilyParseError("expected " + std::to_string(k) + " elements, got " +
                                 std::to_string(elems.size()),
                             line_no, 1);
    sets.push_back(std::move(elems));
  }
  try {
    return Family::of(n, k, sets);
  } catch (const Error& e) {
    throw FamilyParseError(e.what(), line_no, 1);
  }
}

}  // namespace kneser
