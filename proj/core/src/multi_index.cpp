#include "momray/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace momray {

std::size_t sym_dim(int n, int m) {
    if (n < 1) throw std::invalid_argument("sym_dim: dimension must be >= 1");
    if (m < 0) throw std::invalid_argument("sym_dim: rank must be >= 0");
    // C(n+m-1, m) by incremental products; exact for all sizes used here.
    std::size_t r = 1;
    for (int j = 1; j <= m; ++j) r = r * static_cast<std::size_t>(n - 1 + j) / static_cast<std::size_t>(j);
    return r;
}

double binomial(int m, int k) {
    if (m < 0 || k < 0 || k > m) return 0.0;
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * static_cast<double>(m - k + j) / static_cast<double>(j);
    return r;
}

std::vector<MultiIndex> canonical_indices(int n, int m) {
    if (n < 1) throw std::invalid_argument("canonical_indices: dimension must be >= 1");
    if (m < 0) throw std::invalid_argument("canonical_indices: rank must be >= 0");
    std::vector<MultiIndex> out;
    out.reserve(sym_dim(n, m));
    MultiIndex cur(static_cast<std::size_t>(m), 0);
    if (m == 0) {
        out.push_back(cur);
        return out;
    }
    while (true) {
        out.push_back(cur);
        // advance to the next non-decreasing tuple
        int pos = m - 1;
        while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        int v = ++cur[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < m; ++j) cur[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

MultiIndex canonical(const MultiIndex& idx) {
    MultiIndex s = idx;
    std::sort(s.begin(), s.end());
    return s;
}

std::size_t pack_offset(int n, const MultiIndex& sorted_idx) {
    const int m = static_cast<int>(sorted_idx.size());
    std::size_t offset = 0;
    int prev = 0;
    for (int j = 0; j < m; ++j) {
        const int ij = sorted_idx[static_cast<std::size_t>(j)];
        if (ij < prev || ij >= n) throw std::invalid_argument("pack_offset: index out of range or not sorted");
        // count indices that branch to a smaller value at position j
        for (int v = prev; v < ij; ++v) offset += sym_dim(n - v, m - j - 1);
        prev = ij;
    }
    return offset;
}

std::uint64_t index_multiplicity(const MultiIndex& idx) {
    MultiIndex s = canonical(idx);
    const int m = static_cast<int>(s.size());
    std::uint64_t fact = 1;
    for (int j = 2; j <= m; ++j) fact *= static_cast<std::uint64_t>(j);
    std::uint64_t denom = 1;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        for (std::size_t c = 2; c <= j - i; ++c) denom *= c;
        i = j;
    }
    return fact / denom;
}

} // namespace momray
