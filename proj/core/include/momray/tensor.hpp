#pragma once

#include <complex>
#include <vector>

#include "momray/geometry.hpp"
#include "momray/multi_index.hpp"

namespace momray {

using Complex = std::complex<double>;

/// Rank-m symmetric tensor over R^n with packed storage: one complex entry
/// per canonical multi-index, ordered lexicographically. Lookup with an
/// arbitrary index order resolves to the sorted representative.
class SymTensor {
public:
    SymTensor(int rank, int dim);

    int rank() const { return rank_; }
    int dim() const { return dim_; }

    const std::vector<Complex>& comps() const { return comps_; }
    std::vector<Complex>& comps() { return comps_; }

    Complex at(const MultiIndex& idx) const;
    void set(const MultiIndex& idx, Complex v);

    Complex& packed(std::size_t offset) { return comps_[offset]; }
    Complex packed(std::size_t offset) const { return comps_[offset]; }

    /// Full contraction <T, xi^m> = sum over all index tuples of
    /// T_{i_1...i_m} xi^{i_1} ... xi^{i_m}.
    Complex contract_pow(const Vec3& xi) const;

    SymTensor& operator+=(const SymTensor& o);
    SymTensor& operator*=(Complex s);

    /// Componentwise max abs difference; tensors must have equal (rank, dim).
    friend double max_abs_diff(const SymTensor& a, const SymTensor& b);

private:
    int rank_;
    int dim_;
    std::vector<Complex> comps_;
};

/// Dense rank-r tensor over R^n (all n^r entries, row-major). Used by the
/// partial symmetrization, which acts on unsymmetrized data.
class DenseTensor {
public:
    DenseTensor(int rank, int dim);

    int rank() const { return rank_; }
    int dim() const { return dim_; }

    Complex at(const MultiIndex& idx) const { return data_[flat(idx)]; }
    void set(const MultiIndex& idx, Complex v) { data_[flat(idx)] = v; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    std::size_t flat(const MultiIndex& idx) const;

private:
    int rank_;
    int dim_;
    std::vector<Complex> data_;
};

/// Average of u over all permutations of its first r indices; the remaining
/// indices are untouched. Requires 0 <= r <= rank(u).
DenseTensor symmetrize_partial(const DenseTensor& u, int r);

} // namespace momray
