#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bbwt/common.hpp"
#include "bbwt/orders.hpp"

namespace bbwt {

/// One Lyndon factor; 1-based inclusive positions into its host text.
struct FactorSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t length() const { return end - begin + 1; }
  friend bool operator==(const FactorSpan&, const FactorSpan&) = default;
};

struct LyndonFactorization {
  std::vector<FactorSpan> spans;  // tiles [1..text_length], non-increasing
  std::size_t text_length = 0;
};

/// Duval's algorithm, one left-to-right pass. When `comparisons` is given it
/// receives the number of symbol comparisons made (at most 2 * |text|).
template <detail::symbol_range T>
LyndonFactorization duval_factorize(const T& text,
                                    std::size_t* comparisons = nullptr) {
  LyndonFactorization out;
  const std::size_t n = std::ranges::size(text);
  out.text_length = n;
  std::size_t cmps = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n) {
      ++cmps;
      if (text[k] > text[j]) break;
      k = text[k] < text[j] ? i : k + 1;
      ++j;
    }
    const std::size_t len = j - k;
    while (i <= k) {
      out.spans.push_back({i + 1, i + len});
      i += len;
    }
  }
  if (comparisons) *comparisons = cmps;
  return out;
}

struct FactorRef {
  std::size_t factor = 0;  // 1-based
  std::size_t ibeg = 0;
  std::size_t iend = 0;
};

/// Factorization with runs of equal adjacent factors collapsed into
/// multiplicities; R concatenates one copy of each distinct factor.
struct ComposedFactorization {
  Bytes reduced_text;                       // R
  std::vector<FactorSpan> spans;            // over R; distinct, strictly decreasing
  std::vector<std::size_t> multiplicities;  // tau per span
  std::size_t origin_length = 0;            // |T|
  std::vector<std::uint32_t> factor_ids;    // 0-based factor index per position of R

  /// Span lookup for a 1-based position of R.
  FactorRef factor_of(std::size_t i) const;
  /// Successor/predecessor of a 1-based position, wrapping at its factor.
  std::size_t cyclic_next(std::size_t i) const;
  std::size_t cyclic_prev(std::size_t i) const;
};

ComposedFactorization compose(const LyndonFactorization& f,
                              std::span<const Byte> text);

/// Repeats span x exactly tau_x times in order; left inverse of compose.
Bytes expand(const ComposedFactorization& cf);

/// Composed factors located in the original text: [begin..end] covers all
/// tau copies of the factor.
struct ComposedRun {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t multiplicity = 0;
  friend bool operator==(const ComposedRun&, const ComposedRun&) = default;
};
std::vector<ComposedRun> composed_runs(const LyndonFactorization& f,
                                       std::span<const Byte> text);

}  // namespace bbwt
