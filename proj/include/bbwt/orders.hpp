#pragma once

#include <cassert>
#include <concepts>
#include <cstddef>
#include <ranges>
#include <span>
#include <vector>

#include "bbwt/common.hpp"

namespace bbwt {

enum class Ordering { Less, Equal, Greater };

/// Position classes used by induced sorting. Sstar refines S.
enum class SuffixType : unsigned char { L, S, Sstar };

inline bool is_s_class(SuffixType t) { return t != SuffixType::L; }

namespace detail {
template <class R>
concept symbol_range = std::ranges::random_access_range<R> &&
                       std::integral<std::ranges::range_value_t<R>>;
}  // namespace detail

/// Lexicographic order; a proper prefix is smaller.
template <detail::symbol_range U, detail::symbol_range V>
Ordering lex_compare(const U& u, const V& v) {
  const std::size_t nu = std::ranges::size(u);
  const std::size_t nv = std::ranges::size(v);
  const std::size_t m = nu < nv ? nu : nv;
  for (std::size_t i = 0; i < m; ++i) {
    if (u[i] < v[i]) return Ordering::Less;
    if (v[i] < u[i]) return Ordering::Greater;
  }
  if (nu == nv) return Ordering::Equal;
  return nu < nv ? Ordering::Less : Ordering::Greater;
}

/// Order of the infinite powers u^w vs v^w. If they agree on the first
/// |u|+|v| symbols they are equal, so the scan stops there.
template <detail::symbol_range U, detail::symbol_range V>
Ordering omega_compare(const U& u, const V& v) {
  const std::size_t nu = std::ranges::size(u);
  const std::size_t nv = std::ranges::size(v);
  assert(nu > 0 && nv > 0);
  std::size_t iu = 0, iv = 0;
  for (std::size_t i = 0, bound = nu + nv; i < bound; ++i) {
    if (u[iu] < v[iv]) return Ordering::Less;
    if (v[iv] < u[iu]) return Ordering::Greater;
    if (++iu == nu) iu = 0;
    if (++iv == nv) iv = 0;
  }
  return Ordering::Equal;
}

/// Substring order used to rank LMS (inf-)substrings: at the first position
/// where the symbols or the type classes differ, a smaller symbol wins, and
/// on equal symbols the L-typed side is smaller.
template <detail::symbol_range U, detail::symbol_range V>
Ordering lms_compare(const U& u, std::span<const SuffixType> ut, const V& v,
                     std::span<const SuffixType> vt) {
  const std::size_t nu = std::ranges::size(u);
  const std::size_t nv = std::ranges::size(v);
  assert(nu == ut.size() && nv == vt.size());
  const std::size_t m = nu < nv ? nu : nv;
  for (std::size_t i = 0; i < m; ++i) {
    if (u[i] < v[i]) return Ordering::Less;
    if (v[i] < u[i]) return Ordering::Greater;
    const bool ul = ut[i] == SuffixType::L;
    const bool vl = vt[i] == SuffixType::L;
    if (ul != vl) return ul ? Ordering::Less : Ordering::Greater;
  }
  // Unreachable for two genuine LMS substrings unless they are equal; the
  // length tie-break keeps the comparator total.
  if (nu == nv) return Ordering::Equal;
  return nu < nv ? Ordering::Less : Ordering::Greater;
}

/// True iff u is not w^k for any k >= 2 (smallest period via the border array).
template <detail::symbol_range U>
bool is_primitive(const U& u) {
  const std::size_t n = std::ranges::size(u);
  assert(n >= 1);
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && u[i] != u[k]) k = border[k - 1];
    if (u[i] == u[k]) ++k;
    border[i] = k;
  }
  const std::size_t period = n - border[n - 1];
  return period == n || n % period != 0;
}

/// Rotation index r in [0..|u|-1] such that u[r..]u[..r) is the unique Lyndon
/// conjugate of u. Throws NonPrimitiveInput when the minimum is not unique.
template <detail::symbol_range U>
std::size_t min_conjugate(const U& u) {
  const std::size_t n = std::ranges::size(u);
  assert(n >= 1);
  if (!is_primitive(u)) throw NonPrimitiveInput(0);
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto a = u[(i + k) % n];
    const auto b = u[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return i < j ? i : j;
}

}  // namespace bbwt
