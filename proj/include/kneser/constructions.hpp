#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kneser/bounds.hpp"
#include "kneser/family.hpp"

namespace kneser {

namespace detail {

template <typename Pred>
inline void collect_ksets(int n, int k, std::vector<KSet>& out, Pred&& pred) {
  KSetStream stream(n, k);
  while (auto s = stream.next())
    if (pred(*s)) out.push_back(*s);
}

template <typename Pred>
inline void collect_first_ksets(int n, int k, int count, std::vector<KSet>& out, Pred&& pred,
                                const std::string& what) {
  KSetStream stream(n, k);
  int taken = 0;
  while (taken < count) {
    auto s = stream.next();
    if (!s) throw ParamsInfeasible("not enough " + what + " available");
    if (pred(*s)) {
      out.push_back(*s);
      ++taken;
    }
  }
}

}  // namespace detail

/// The point-1 star restricted to sets meeting [2,k+1], plus the set
/// [2,k+1] itself: an intersecting family with empty common intersection of
/// size C(n-1,k-1) - C(n-k-1,k-1) + 1.
inline Family gen_hm_star(int n, int k) {
  if (k < 1 || n < 2 * k + 1) throw ParamsInfeasible("needs k >= 1 and n >= 2k+1");
  KSet base = kset_interval(2, k + 1, n);
  std::vector<KSet> members;
  detail::collect_ksets(n, k, members, [&](const KSet& s) {
    return s.contains(1) && (s.bits() & base.bits()) != 0;
  });
  members.push_back(base);
  return Family(n, k, std::move(members));
}

/// Extremal family for the K_{s,t}-free second-level problem: the point-1
/// star restricted to sets meeting S = [2,sk+1], the s disjoint blocks
/// H_i = [(i-1)k+2, ik+1], and the t-1 lexicographically smallest sets
/// containing 1 and disjoint from S.
inline Family gen_f_st(int n, int k, int s, int t) {
  if (k < 1 || s < 2 || s > t) throw ParamsInfeasible("needs k >= 1 and 2 <= s <= t");
  if (n < s * k + 1) throw ParamsInfeasible("ground set too small for S = [2, sk+1]");
  if (binom(n - s * k - 1, k - 1) < t - 1)
    throw ParamsInfeasible("fewer than t-1 sets contain 1 and avoid S");

  KSet big_s = kset_interval(2, s * k + 1, n);
  std::vector<KSet> members;
  detail::collect_ksets(n, k, members, [&](const KSet& x) {
    return x.contains(1) && (x.bits() & big_s.bits()) != 0;
  });
  for (int i = 1; i <= s; ++i) members.push_back(kset_interval((i - 1) * k + 2, i * k + 1, n));
  detail::collect_first_ksets(n, k, t - 1, members, [&](const KSet& x) {
    return x.contains(1) && (x.bits() & big_s.bits()) == 0;
  }, "sets containing 1 and avoiding S");
  return Family(n, k, std::move(members));
}

/// Extremal family for the complete-multipartite second-level problem with
/// parts s_1 >= ... >= s_{r+1}: all sets meeting [r-1]; all sets containing
/// r and meeting the union of s_{r+1} disjoint blocks that avoid [r]; those
/// blocks; and the s_r - 1 lexicographically smallest further sets
/// containing r.
inline Family gen_f_multi(int n, int k, const std::vector<int>& parts) {
  if (k < 1 || parts.size() < 2) throw ParamsInfeasible("needs k >= 1 and at least two parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw ParamsInfeasible("part sizes must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw ParamsInfeasible("parts must be non-increasing");
  }
  int r = static_cast<int>(parts.size()) - 1;
  int s_r = parts[static_cast<std::size_t>(r) - 1];
  int s_last = parts[static_cast<std::size_t>(r)];
  if (n < r + s_last * k) throw ParamsInfeasible("no room for the disjoint blocks beyond [r]");
  if (binom(n - r - s_last * k, k - 1) < s_r - 1)
    throw ParamsInfeasible("fewer than s_r - 1 extra sets containing r");

  detail::Bits low = r >= 2 ? kset_interval(1, r - 1, n).bits() : 0;
  std::vector<KSet> blocks;
  for (int j = 1; j <= s_last; ++j) blocks.push_back(kset_interval(r + (j - 1) * k + 1, r + j * k, n));
  detail::Bits block_union = 0;
  for (const KSet& b : blocks) block_union |= b.bits();

  std::vector<KSet> members;
  detail::collect_ksets(n, k, members, [&](const KSet& x) {
    return (x.bits() & low) != 0 || (x.contains(r) && (x.bits() & block_union) != 0);
  });
  members.insert(members.end(), blocks.begin(), blocks.end());
  detail::collect_first_ksets(n, k, s_r - 1, members, [&](const KSet& x) {
    return x.contains(r) && (x.bits() & low) == 0 && (x.bits() & block_union) == 0;
  }, "extra sets containing r");
  return Family(n, k, std::move(members));
}

/// 6-cycle-free construction: the point-1 star restricted to sets meeting
/// [2,2k+1], plus the three disjoint blocks [2,k+1], [k+2,2k+1], [2k+2,3k+1].
inline Family gen_g6(int n, int k) {
  if (k < 1 || n < 3 * k + 1) throw ParamsInfeasible("needs n >= 3k+1");
  KSet window = kset_interval(2, 2 * k + 1, n);
  std::vector<KSet> members;
  detail::collect_ksets(n, k, members, [&](const KSet& x) {
    return x.contains(1) && (x.bits() & window.bits()) != 0;
  });
  members.push_back(kset_interval(2, k + 1, n));
  members.push_back(kset_interval(k + 2, 2 * k + 1, n));
  members.push_back(kset_interval(2 * k + 2, 3 * k + 1, n));
  return Family(n, k, std::move(members));
}

/// How gen_g2s picks its s-1 blocks H_i (all contain [k+2,2k], none
/// contains 1; the construction's size and 2s-cycle-freeness hold either
/// way):
///   MeetingK: H_i = [k+2,2k] + {i+1}.  Every H_i meets K = [2,k+1], which
///     also rules out paths on 2s vertices.  Needs s-1 <= k.
///   DetachedFromK: H_i = [k+2,2k] + {2k+i}.  Disjoint from K; the variant
///     the gen_g2s_plus extension builds on, but long paths exist once the
///     point-1 star is rich enough.
///   Auto: MeetingK when available, DetachedFromK otherwise.
enum class G2sBlockStyle { Auto, MeetingK, DetachedFromK };

/// 2s-cycle-free construction for s >= 4: the point-1 star restricted to
/// sets meeting [2,2k], plus K = [2,k+1] and s-1 blocks H_i sharing
/// [k+2,2k], chosen per `style`.
inline Family gen_g2s(int n, int k, int s, G2sBlockStyle style = G2sBlockStyle::Auto) {
  if (s < 4) throw ParamsInfeasible("needs s >= 4 (use gen_g6 for s = 3)");
  if (k < 2) throw ParamsInfeasible("needs k >= 2");
  if (n < 2 * k + s - 1) throw ParamsInfeasible("needs n >= 2k+s-1");
  if (style == G2sBlockStyle::Auto)
    style = (s - 1 <= k) ? G2sBlockStyle::MeetingK : G2sBlockStyle::DetachedFromK;
  if (style == G2sBlockStyle::MeetingK && s - 1 > k)
    throw ParamsInfeasible("only k blocks through [2,k+1] exist; needs s-1 <= k");

  KSet window = kset_interval(2, 2 * k, n);
  std::vector<KSet> members;
  detail::collect_ksets(n, k, members, [&](const KSet& x) {
    return x.contains(1) && (x.bits() & window.bits()) != 0;
  });
  members.push_back(kset_interval(2, k + 1, n));
  for (int i = 1; i <= s - 1; ++i) {
    std::vector<int> h;
    for (int e = k + 2; e <= 2 * k; ++e) h.push_back(e);
    h.push_back(style == G2sBlockStyle::MeetingK ? i + 1 : 2 * k + i);
    members.push_back(KSet::of(h, n));
  }
  return Family(n, k, std::move(members));
}

/// The detached-block gen_g2s extended (when s-1 <= k) by every set
/// containing T = {1} + [2k+1, 2k+s-2]; the union stays 2s-cycle-free.  New
/// members are exactly the supersets of T avoiding [2,2k]:
/// C(n-2k-s+2, k-s+1) of them.
inline Family gen_g2s_plus(int n, int k, int s) {
  if (s - 1 > k) throw ParamsInfeasible("extension needs s-1 <= k");
  Family base = gen_g2s(n, k, s, G2sBlockStyle::DetachedFromK);
  std::vector<KSet> members(base.members());
  std::vector<int> anchor{1};
  for (int e = 2 * k + 1; e <= 2 * k + s - 2; ++e) anchor.push_back(e);
  detail::Bits anchor_bits = KSet::of(anchor, n).bits();
  detail::Bits window = kset_interval(2, 2 * k, n).bits();
  detail::collect_ksets(n, k, members, [&](const KSet& x) {
    return (x.bits() & anchor_bits) == anchor_bits && (x.bits() & window) == 0;
  });
  return Family(n, k, std::move(members));
}

/// Lifts a family over [n-chi+2] into [n] by adding every k-set that meets
/// the top chi-2 points [n-chi+3, n].  Size grows by exactly
/// C(n,k) - C(n-chi+2,k).
inline Family compose_chi3(const Family& base, int chi, int n) {
  if (chi < 3) throw ParamsInfeasible("needs chi >= 3");
  check_ground_set(n);
  if (base.ground_set() != n - chi + 2)
    throw GroundSetMismatch("base family must live on [n-chi+2]");
  int k = base.set_size();
  detail::Bits top = kset_interval(n - chi + 3, n, n).bits();
  std::vector<KSet> members;
  members.reserve(static_cast<std::size_t>(base.size()));
  for (const KSet& m : base.members()) members.push_back(KSet::from_bits(m.bits(), n));
  detail::collect_ksets(n, k, members, [&](const KSet& x) { return (x.bits() & top) != 0; });
  return Family(n, k, std::move(members));
}

// --- named-construction dispatch -------------------------------------------

enum class ConstructionKind { HiltonMilnerStar, FSt, FMulti, G6, G2s, G2sPlus, Chi3Compose };

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::HiltonMilnerStar;
  int n = 0;
  int k = 0;
  int s = 0;
  int t = 0;
  int chi = 0;
  std::vector<int> parts;
};

inline mpz_class construction_expected_size(const ConstructionSpec& spec) {
  long n = spec.n, k = spec.k, s = spec.s, t = spec.t;
  switch (spec.kind) {
    case ConstructionKind::HiltonMilnerStar:
      return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
    case ConstructionKind::FSt:
      return binom(n - 1, k - 1) - binom(n - s * k - 1, k - 1) + s + t - 1;
    case ConstructionKind::FMulti: {
      std::vector<long> parts(spec.parts.begin(), spec.parts.end());
      return stabmulti_bound(n, k, parts).integer();
    }
    case ConstructionKind::G6:
      return binom(n - 1, k - 1) - binom(n - 2 * k - 1, k - 1) + 3;
    case ConstructionKind::G2s:
      return binom(n - 1, k - 1) - binom(n - 2 * k, k - 1) + s;
    case ConstructionKind::G2sPlus:
      return binom(n - 1, k - 1) - binom(n - 2 * k, k - 1) + s +
             binom(n - 2 * k - s + 2, k - s + 1);
    case ConstructionKind::Chi3Compose:
      throw Error("compose size depends on the base family; use compose_expected_size");
  }
  throw Error("unknown construction kind");
}

inline mpz_class compose_expected_size(int n, int k, int chi, int base_size) {
  return binom(n, k) - binom(n - chi + 2, k) + base_size;
}

/// Generates a self-contained named construction (everything except
/// Chi3Compose, which needs a base family).
inline Family generate(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::HiltonMilnerStar:
      return gen_hm_star(spec.n, spec.k);
    case ConstructionKind::FSt:
      return gen_f_st(spec.n, spec.k, spec.s, spec.t);
    case ConstructionKind::FMulti:
      return gen_f_multi(spec.n, spec.k, spec.parts);
    case ConstructionKind::G6:
      return gen_g6(spec.n, spec.k);
    case ConstructionKind::G2s:
      return gen_g2s(spec.n, spec.k, spec.s);
    case ConstructionKind::G2sPlus:
      return gen_g2s_plus(spec.n, spec.k, spec.s);
    case ConstructionKind::Chi3Compose:
      throw Error("compose needs a base family; call compose_chi3 directly");
  }
  throw Error("unknown construction kind");
}

inline ConstructionKind parse_construction_kind(const std::string& name) {
  if (name == "hm" || name == "hm_star") return ConstructionKind::HiltonMilnerStar;
  if (name == "f_st" || name == "fst") return ConstructionKind::FSt;
  if (name == "f_multi" || name == "fmulti") return ConstructionKind::FMulti;
  if (name == "g6") return ConstructionKind::G6;
  if (name == "g2s") return ConstructionKind::G2s;
  if (name == "g2s_plus" || name == "g2splus") return ConstructionKind::G2sPlus;
  if (name == "compose") return ConstructionKind::Chi3Compose;
  throw Error("unknown construction kind: " + name);
}

inline std::string construction_kind_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::HiltonMilnerStar: return "hm_star";
    case ConstructionKind::FSt: return "f_st";
    case ConstructionKind::FMulti: return "f_multi";
    case ConstructionKind::G6: return "g6";
    case ConstructionKind::G2s: return "g2s";
    case ConstructionKind::G2sPlus: return "g2s_plus";
    case ConstructionKind::Chi3Compose: return "compose";
  }
  return "?";
}

}  // namespace kneser
