#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bbwt/common.hpp"

namespace bbwt {

struct TransformResult {
  Bytes output;
  struct Provenance {
    std::size_t source = 0;        // 1-based position in R the output came from
    std::size_t multiplicity = 0;  // factor multiplicity applied
  };
  std::vector<Provenance> provenance;  // one per output byte when requested
};

/// Forward bijective BWT: factorize, compose, sort the factor conjugates,
/// emit. Output length equals input length.
TransformResult bbwt(std::span<const Byte> text, bool with_provenance = false);

/// Inverse via the standard permutation: stable-sort positions by character,
/// decompose into cycles, rotate each recovered word to its Lyndon conjugate,
/// sort the words non-increasingly and concatenate. Total on all byte strings.
Bytes inverse_bbwt(std::span<const Byte> b);

/// Suffix array of the plain text (no sentinel), 1-based, prefix doubling.
std::vector<std::size_t> suffix_array(std::span<const Byte> text);

/// Traditional BWT without a terminator: BWT[i] = T[SA[i]-1], wrapping to
/// T[n] when SA[i] = 1. Not reversible; a baseline for comparison.
Bytes bwt_baseline(std::span<const Byte> text);

/// Reversible variant over T with the sentinel byte 0x00 appended; output
/// has length |T|+1. Throws SentinelPresent if 0x00 occurs in text.
Bytes bwt_dollar(std::span<const Byte> text);

/// Extended BWT of a multiset of primitive strings: rotate each to its Lyndon
/// conjugate, sort descending, concatenate, then bbwt. Throws EmptyString or
/// NonPrimitiveInput naming the offending input index.
Bytes ebwt(const std::vector<Bytes>& strings);

/// Smallest k <= max_k with the k-fold bbwt equal to text, or nullopt if the
/// cap is reached first.
std::optional<std::uint64_t> bbwt_order(std::span<const Byte> text,
                                        std::uint64_t max_k);

}  // namespace bbwt
