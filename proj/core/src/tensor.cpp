#include "momray/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace momray {

SymTensor::SymTensor(int rank, int dim) : rank_(rank), dim_(dim) {
    if (dim < 1) throw std::invalid_argument("SymTensor: dimension must be >= 1");
    if (rank < 0) throw std::invalid_argument("SymTensor: rank must be >= 0");
    comps_.assign(sym_dim(dim, rank), Complex(0.0, 0.0));
}

Complex SymTensor::at(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != rank_)
        throw std::invalid_argument("SymTensor::at: index rank mismatch");
    return comps_[pack_offset(dim_, canonical(idx))];
}

void SymTensor::set(const MultiIndex& idx, Complex v) {
    if (static_cast<int>(idx.size()) != rank_)
        throw std::invalid_argument("SymTensor::set: index rank mismatch");
    comps_[pack_offset(dim_, canonical(idx))] = v;
}

Complex SymTensor::contract_pow(const Vec3& xi) const {
    Complex acc(0.0, 0.0);
    const auto indices = canonical_indices(dim_, rank_);
    for (std::size_t a = 0; a < indices.size(); ++a) {
        double xi_pow = 1.0;
        for (int ax : indices[a]) xi_pow *= xi[ax];
        acc += static_cast<double>(index_multiplicity(indices[a])) * xi_pow * comps_[a];
    }
    return acc;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
    if (o.rank_ != rank_ || o.dim_ != dim_)
        throw std::invalid_argument("SymTensor::operator+=: shape mismatch");
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

SymTensor& SymTensor::operator*=(Complex s) {
    for (auto& c : comps_) c *= s;
    return *this;
}

double max_abs_diff(const SymTensor& a, const SymTensor& b) {
    if (a.rank_ != b.rank_ || a.dim_ != b.dim_)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
        m = std::max(m, std::abs(a.comps_[i] - b.comps_[i]));
    return m;
}

DenseTensor::DenseTensor(int rank, int dim) : rank_(rank), dim_(dim) {
    if (dim < 1) throw std::invalid_argument("DenseTensor: dimension must be >= 1");
    if (rank < 0) throw std::invalid_argument("DenseTensor: rank must be >= 0");
    std::size_t total = 1;
    for (int j = 0; j < rank; ++j) total *= static_cast<std::size_t>(dim);
    data_.assign(total, Complex(0.0, 0.0));
}

std::size_t DenseTensor::flat(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != rank_)
        throw std::invalid_argument("DenseTensor: index rank mismatch");
    std::size_t f = 0;
    for (int ax : idx) {
        if (ax < 0 || ax >= dim_) throw std::invalid_argument("DenseTensor: index out of range");
        f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(ax);
    }
    return f;
}

DenseTensor symmetrize_partial(const DenseTensor& u, int r) {
    const int rank = u.rank();
    const int n = u.dim();
    if (r < 0 || r > rank)
        throw std::invalid_argument("symmetrize_partial: r must satisfy 0 <= r <= rank");
    if (r <= 1) return u;

    DenseTensor out(rank, n);
    std::vector<int> perm(static_cast<std::size_t>(r));
    MultiIndex idx(static_cast<std::size_t>(rank), 0), permuted(static_cast<std::size_t>(rank), 0);

    double rfact = 1.0;
    for (int j = 2; j <= r; ++j) rfact *= j;

    const std::size_t total = u.data().size();
    for (std::size_t f = 0; f < total; ++f) {
        // decode flat position
        std::size_t rem = f;
        for (int j = rank - 1; j >= 0; --j) {
            idx[static_cast<std::size_t>(j)] = static_cast<int>(rem % static_cast<std::size_t>(n));
            rem /= static_cast<std::size_t>(n);
        }
        for (int j = 0; j < r; ++j) perm[static_cast<std::size_t>(j)] = j;
        permuted = idx;
        Complex acc(0.0, 0.0);
        do {
            for (int j = 0; j < r; ++j)
                permuted[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            acc += u.at(permuted);
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.data()[f] = acc / rfact;
    }
    return out;
}

} // namespace momray
