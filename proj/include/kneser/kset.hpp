#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneser/errors.hpp"

namespace kneser {

/// Ground-set elements are named 1..n.  Two machine words cover every
/// supported ground set.
inline constexpr int kMaxGroundSetSize = 128;

namespace detail {

using Bits = unsigned __int128;

inline int popcount128(Bits v) {
  return std::popcount(static_cast<std::uint64_t>(v)) +
         std::popcount(static_cast<std::uint64_t>(v >> 64));
}

}  // namespace detail

inline void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSetSize)
    throw ElementOutOfRange("ground set size " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxGroundSetSize) + "]");
}

/// One k-element subset of [n], stored as a bit vector (element e <-> bit e-1).
/// Immutable after construction.
class KSet {
 public:
  KSet() = default;

  /// Builds a k-set from 1-based elements.  Rejects out-of-range and
  /// duplicate elements.
  static KSet of(const std::vector<int>& elements, int n) {
    check_ground_set(n);
    detail::Bits bits = 0;
    for (int e : elements) {
      if (e < 1 || e > n)
        throw ElementOutOfRange("element " + std::to_string(e) + " outside [1, " +
                                std::to_string(n) + "]");
      detail::Bits mask = detail::Bits(1) << (e - 1);
      if (bits & mask) throw DuplicateElement("element " + std::to_string(e) + " listed twice");
      bits |= mask;
    }
    return KSet(bits, n);
  }

  /// Builds a k-set directly from a bit vector; k is the popcount.
  static KSet from_bits(detail::Bits bits, int n) {
    check_ground_set(n);
    if (n < kMaxGroundSetSize && (bits >> n) != 0)
      throw ElementOutOfRange("bit set above position n");
    return KSet(bits, n);
  }

  int ground_set() const { return n_; }

  /// Cardinality k.
  int size() const { return k_; }

  detail::Bits bits() const { return bits_; }

  bool contains(int element) const {
    if (element < 1 || element > n_) return false;
    return (bits_ >> (element - 1)) & 1;
  }

  /// Elements in ascending order, 1-based.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(k_);
    for (int e = 1; e <= n_; ++e)
      if ((bits_ >> (e - 1)) & 1) out.push_back(e);
    return out;
  }

  std::string to_string() const {
    std::string out;
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out;
  }

  friend bool operator==(const KSet& a, const KSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  /// Ascending bit-value order; the canonical member order of a family.
  friend bool operator<(const KSet& a, const KSet& b) { return a.bits_ < b.bits_; }

 private:
  KSet(detail::Bits bits, int n)
      : bits_(bits), n_(static_cast<std::int16_t>(n)),
        k_(static_cast<std::int16_t>(detail::popcount128(bits))) {}

  detail::Bits bits_ = 0;
  std::int16_t n_ = 0;
  std::int16_t k_ = 0;
};

inline KSet make_kset(const std::vector<int>& elements, int n) { return KSet::of(elements, n); }

/// The interval [a,b] as a subset of [n]; empty when a > b.
inline KSet kset_interval(int a, int b, int n) {
  std::vector<int> elems;
  for (int e = a; e <= b; ++e) elems.push_back(e);
  return KSet::of(elems, n);
}

inline bool are_disjoint(const KSet& a, const KSet& b) {
  if (a.ground_set() != b.ground_set())
    throw GroundSetMismatch("k-sets over different ground sets");
  return (a.bits() & b.bits()) == 0;
}

/// Streams the k-subsets of [n] in ascending bit-value order.
class KSetStream {
 public:
  KSetStream(int n, int k) : n_(n), k_(k) {
    check_ground_set(n);
    if (k < 0 || k > n)
      throw ElementOutOfRange("k = " + std::to_string(k) + " outside [0, n]");
    if (k == 0) {
      cur_ = 0;
      last_ = 0;
    } else {
      cur_ = (~detail::Bits(0)) >> (kMaxGroundSetSize - k);  // lowest k bits
      last_ = cur_ << (n - k);
    }
  }

  std::optional<KSet> next() {
    if (done_) return std::nullopt;
    KSet out = KSet::from_bits(cur_, n_);
    if (cur_ == last_) {
      done_ = true;
    } else {
      // Gosper's hack: next larger value with the same popcount.
      detail::Bits u = cur_ & (~cur_ + 1);
      detail::Bits w = cur_ + u;
      cur_ = w | (((cur_ ^ w) >> 2) / u);
    }
    return out;
  }

 private:
  detail::Bits cur_ = 0;
  detail::Bits last_ = 0;
  int n_;
  int k_;
  bool done_ = false;
};

/// Materializes the full vertex set of K(n,k).  Desk-scale use only; prefer
/// KSetStream when C(n,k) is large.
inline std::vector<KSet> enumerate_all_ksets(int n, int k) {
  KSetStream stream(n, k);
  std::vector<KSet> out;
  while (auto s = stream.next()) out.push_back(*s);
  return out;
}

}  // namespace kneser
