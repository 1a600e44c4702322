#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "kneser/errors.hpp"

namespace kneser {

/// Exact binomial coefficient; 0 whenever k < 0, n < 0 or k > n, which keeps
/// expressions like C(n-3, k-3) total at small k.
inline mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// An evaluated closed-form bound.  Integer and rational values are exact;
/// real values carry exact = false (floating-point powers, or formulas with
/// an omitted o(1) term flagged by leading_term_only).
struct BoundValue {
  std::variant<mpz_class, mpq_class, double> value;
  bool exact = true;
  std::string tag;
  bool leading_term_only = false;

  const mpz_class& integer() const { return std::get<mpz_class>(value); }
  const mpq_class& rational() const { return std::get<mpq_class>(value); }
  double real() const { return std::get<double>(value); }

  std::string value_string() const {
    if (std::holds_alternative<mpz_class>(value)) return integer().get_str();
    if (std::holds_alternative<mpq_class>(value)) return rational().get_str();
    std::ostringstream out;
    out.precision(17);
    out << real();
    return out.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"exact", exact}, {"formula_tag", tag}};
    if (std::holds_alternative<double>(value))
      j["value"] = real();
    else
      j["value"] = value_string();
    if (leading_term_only) j["leading_term_only"] = true;
    return j;
  }
};

/// C(n,k) - C(n-chi+1,k) + eta - 1: the ceiling for families whose induced
/// disjointness graph avoids a pattern with chromatic number chi and
/// smallest color class eta.
inline BoundValue at_bound(long n, long k, long chi, long eta) {
  if (chi < 2 || eta < 1) throw Error("at_bound needs chi >= 2, eta >= 1");
  return {mpz_class(binom(n, k) - binom(n - chi + 1, k) + eta - 1), true, "at"};
}

/// C(n-1,k-1) - C(n-k-1,k-1) + 1: the ceiling for intersecting families
/// with empty common intersection.
inline BoundValue hm_bound(long n, long k) {
  return {mpz_class(binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1), true, "hm"};
}

/// C(n-1,k-1) - C(n-sk-1,k-1) + s + t - 1: the second-level ceiling for
/// K_{s,t}-free families with ell >= s.
inline BoundValue stabst_bound(long n, long k, long s, long t) {
  return {mpz_class(binom(n - 1, k - 1) - binom(n - s * k - 1, k - 1) + s + t - 1), true,
          "stabst"};
}

/// Complete-multipartite analogue of stabst_bound; parts must be listed in
/// non-increasing order s_1 >= ... >= s_{r+1}.
inline BoundValue stabmulti_bound(long n, long k, const std::vector<long>& parts) {
  if (parts.size() < 2) throw Error("stabmulti_bound needs at least two parts");
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw Error("parts must be non-increasing");
  long r = static_cast<long>(parts.size()) - 1;
  long s_r = parts[static_cast<std::size_t>(r) - 1];
  long s_last = parts[static_cast<std::size_t>(r)];
  mpz_class v = binom(n, k) - binom(n - r + 1, k) + binom(n - r, k - 1) -
                binom(n - s_last * k - r, k - 1) + s_r + s_last - 1;
  return {v, true, "stabmulti"};
}

/// Leading term C(n-1,k-1) - C(n-2k-1,k-1) plus 10^6 times its 3/4 power;
/// the strict upper bound for 6-cycle-free families with ell >= 3.  The 3/4
/// power is evaluated in floating point (+-1 ulp), hence exact = false.
inline BoundValue cycle6_bound(long n, long k) {
  mpz_class lead = binom(n - 1, k - 1) - binom(n - 2 * k - 1, k - 1);
  double l = lead.get_d();
  return {l + 1e6 * std::pow(l, 0.75), false, "cycle6"};
}

/// C(n-1,k-1) - C(n-2k,k-1) + (k^2+1) C(n-3,k-3): the ceiling for
/// 2s-cycle-free families with ell >= s (s >= 4); independent of s.
inline BoundValue cycles_bound(long n, long k, long /*s*/) {
  mpz_class v = binom(n - 1, k - 1) - binom(n - 2 * k, k - 1) + (k * k + 1) * binom(n - 3, k - 3);
  return {v, true, "cycles"};
}

/// C(n-1,k-1) - C(n-floor((s+1)k/2)-1,k-1) + (s+1)(t-1): the ceiling for
/// star-like families pinned to a point x and extended by s+1 fixed sets.
inline BoundValue easy_lemma_bound(long n, long k, long s, long t) {
  long span = ((s + 1) * k) / 2;
  mpz_class v = binom(n - 1, k - 1) - binom(n - span - 1, k - 1) + (s + 1) * (t - 1);
  return {v, true, "easy"};
}

/// ell^2 / (2 C(2k,k)): the lower bound on the edge count of the induced
/// disjointness graph in terms of ell.  Exact rational.
inline BoundValue bbn_lower_edges(const mpz_class& ell_value, long k) {
  mpq_class q(ell_value * ell_value, 2 * binom(2 * k, k));
  q.canonicalize();
  return {q, true, "bbn"};
}

/// 100 s n^{1+1/s}: the edge ceiling for 2s-cycle-free graphs on n vertices.
inline BoundValue bs_edge_bound(long n_vertices, long s) {
  double v = 100.0 * static_cast<double>(s) *
             std::pow(static_cast<double>(n_vertices), 1.0 + 1.0 / static_cast<double>(s));
  return {v, false, "bs"};
}

/// (1/2) (t-1)^{1/s} n^{2-1/s}, leading term only (the o(1) factor is
/// omitted and flagged): the edge ceiling for K_{s,t}-free graphs.
inline BoundValue kst_edge_bound(long n_vertices, long s, long t) {
  double v = 0.5 * std::pow(static_cast<double>(t - 1), 1.0 / static_cast<double>(s)) *
             std::pow(static_cast<double>(n_vertices), 2.0 - 1.0 / static_cast<double>(s));
  return {v, false, "kst", true};
}

}  // namespace kneser
