#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bbwt/csais.hpp"
#include "bbwt/lyndon.hpp"

namespace bbwt {
namespace oracle {

// Brute-force references for differential testing. Quadratic-ish by design;
// keep inputs to a few thousand characters. None of these touch the csais
// machinery: they depend on lyndon and orders only.

/// Sorts every conjugate of every factor of R by omega_compare.
/// Throws DuplicateConjugate if two distinct positions compare Equal.
CircularSuffixArray naive_csa(const ComposedFactorization& cf);

/// Materializes the conjugates of all (non-deduplicated) Lyndon factors,
/// sorts them stably by omega_compare, and emits the last characters.
Bytes naive_bbwt(std::span<const Byte> text);

/// Comparison-sorted suffix array, 1-based.
std::vector<std::size_t> naive_sa(std::span<const Byte> text);

/// BWT[i] = T[SA[i]-1] with a cyclic wrap at SA[i] = 1.
Bytes naive_bwt(std::span<const Byte> text);

}  // namespace oracle
}  // namespace bbwt
