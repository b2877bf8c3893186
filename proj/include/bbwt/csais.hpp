#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bbwt/lyndon.hpp"
#include "bbwt/orders.hpp"

namespace bbwt {

using TypeArray = std::vector<SuffixType>;

/// Inf-suffix type per position of R. Every factor start is Sstar; the last
/// position of a factor of length >= 2 is L.
TypeArray classify_inf_types(const ComposedFactorization& cf);

/// The run between one Sstar position and the next within a factor, the
/// closing symbol appended. The closer of the last run is the factor's own
/// first character, never a character of the next factor.
struct LmsInfSubstring {
  std::size_t factor = 0;  // 1-based factor index
  std::size_t start = 0;   // 1-based position in R, type Sstar
  std::size_t end = 0;     // 1-based last position before the closing Sstar (cyclic)
  Bytes content;           // symbols start..end plus the closing symbol
  TypeArray content_types;
};

inline bool is_unit(const LmsInfSubstring& s) { return s.content.size() == 2; }

/// All LMS inf-substrings in text order, one per Sstar position.
std::vector<LmsInfSubstring> lms_inf_substrings(const ComposedFactorization& cf,
                                                const TypeArray& types);

/// Dense 1-based ranks in lms_compare order. Substrings of unit factors get
/// no rank; all_distinct is true iff no two ranked substrings share a rank.
struct LmsRanks {
  std::vector<std::optional<std::uint32_t>> ranks;
  bool all_distinct = true;
};
LmsRanks rank_lms(const std::vector<LmsInfSubstring>& subs);

/// The recursion input: one rank per LMS inf-substring of every factor of
/// length >= 2, factor boundaries carried over, unit factors set aside.
struct ReducedProblem {
  std::vector<std::uint32_t> ranks;  // rank string, text order
  std::vector<FactorSpan> spans;     // boundaries over `ranks`
  std::vector<std::pair<Byte, std::size_t>> omitted;  // (character, 1-based factor)
  std::vector<std::size_t> back_map;  // rank position -> Sstar position in R (1-based)
};
ReducedProblem build_reduced(const ComposedFactorization& cf,
                             const TypeArray& types, const LmsRanks& ranks);

/// Sstar positions of R ordered by the omega-order of their inf-suffixes,
/// omitted unit factors merged back in by first character.
std::vector<std::size_t> solve_sstar_order(const ComposedFactorization& cf,
                                           const TypeArray& types);

struct CircularSuffixArray {
  std::vector<std::size_t> entries;  // 1-based positions of R, a permutation
};

/// Array contents right after the left-to-right pass; 0 marks an empty slot.
struct InduceSnapshot {
  std::vector<std::size_t> after_l_pass;
};

/// Bucket the positions by (symbol, L-before-S), seed the Sstar order, then
/// induce L left-to-right and S right-to-left with factor-wrapping steps.
CircularSuffixArray induce(const ComposedFactorization& cf,
                           const TypeArray& types,
                           std::span<const std::size_t> sstar_order,
                           InduceSnapshot* snapshot = nullptr);

struct CsaisStats {
  struct Level {
    std::size_t input_length = 0;
    std::size_t reduced_length = 0;
    bool all_distinct = true;
  };
  std::vector<Level> levels;  // outermost first
};

/// Full driver: classify, carve, rank, reduce, recurse, merge, induce.
CircularSuffixArray circular_suffix_array(const ComposedFactorization& cf,
                                          CsaisStats* stats = nullptr);

}  // namespace bbwt
