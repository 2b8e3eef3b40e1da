#pragma once

#include <cstdint>
#include <vector>

namespace momray {

/// Multi-index (i_1, ..., i_m) with 0-based axes in [0, n). Symmetric storage
/// identifies an index with its sorted form; rank 0 is the empty index.
using MultiIndex = std::vector<int>;

/// Number of independent components of a rank-m symmetric tensor over R^n,
/// i.e. the binomial coefficient C(n+m-1, m).
std::size_t sym_dim(int n, int m);

/// Binomial coefficient C(m, k), equal to 0 whenever m < 0, k < 0 or k > m.
double binomial(int m, int k);

/// All canonical (non-decreasing) multi-indices of rank m over [0, n) in
/// lexicographic order. The list has sym_dim(n, m) entries.
std::vector<MultiIndex> canonical_indices(int n, int m);

/// Sorted copy of an arbitrary multi-index.
MultiIndex canonical(const MultiIndex& idx);

/// Position of a canonical multi-index in the lexicographic enumeration.
/// The input must be non-decreasing with entries in [0, n).
std::size_t pack_offset(int n, const MultiIndex& sorted_idx);

/// Number of distinct permutations of a multi-index: m! / prod(counts!).
/// This is the weight of a canonical component in full-index sums.
std::uint64_t index_multiplicity(const MultiIndex& idx);

} // namespace momray
