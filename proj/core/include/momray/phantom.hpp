#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "momray/geometry.hpp"
#include "momray/multi_index.hpp"
#include "momray/polynomial.hpp"
#include "momray/tensor.hpp"

namespace momray {

/// One Gaussian-polynomial bump: every tensor component is
/// poly(x - center) * exp(-width * |x - center|^2).
struct Lump {
    Vec3 center;
    double width = 1.0;
    /// One polynomial per canonical multi-index, in u = x - center.
    std::vector<Polynomial> comp_polys;
};

/// Analytic symmetric tensor field built from finitely many lumps.
/// The family is closed under the inner derivative, the divergence and the
/// Fourier transform, and its line moments have closed forms, so every
/// transform in the library has an exact oracle on phantoms.
class Phantom {
public:
    Phantom(int rank, int dim, std::vector<Lump> lumps);

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    const std::vector<Lump>& lumps() const { return lumps_; }
    const std::vector<MultiIndex>& component_indices() const { return indices_; }

    /// Pointwise value as a packed symmetric tensor.
    SymTensor eval(const Vec3& x) const;

    /// <f(x), xi^m> without materializing the tensor; hot path for quadrature.
    Complex eval_contract(const Vec3& x, const Vec3& xi) const;

    /// Exact Fourier transform under fhat(y) = (2 pi)^{-n/2} int e^{-i<y,x>} f dx.
    SymTensor fourier(const Vec3& y) const;

    /// k-th directional derivative <xi, d/dy>^k of the Fourier transform,
    /// computed symbolically (no finite differences).
    SymTensor fourier_dir_derivative(const Vec3& y, const Vec3& xi, int k) const;

    /// Symmetrized gradient: raises rank by one.
    Phantom inner_derivative() const;

    /// Trace of the gradient: lowers rank by one. Requires rank >= 1.
    Phantom divergence() const;

    /// Single component as a rank-0 phantom (index may be unsorted).
    Phantom component(const MultiIndex& idx) const;

    /// f_a(x) = f(x + a).
    Phantom shifted(const Vec3& a) const;

    double max_lump_width() const;
    double min_lump_width() const;

private:
    int rank_;
    int dim_;
    std::vector<Lump> lumps_;
    std::vector<MultiIndex> indices_;          // canonical component order
    std::vector<double> multiplicities_;       // per canonical component

    struct FourierLump {
        Vec3 center;
        double decay = 0.0;                    // b = 1/(4a)
        double scale = 1.0;                    // (2a)^{-n/2}
        std::vector<Polynomial> comp_polys;    // polynomial factor in y
    };
    std::vector<FourierLump> fourier_lumps_;

    void build_fourier_cache();
};

/// Pointwise sum; both fields must share (rank, dim).
Phantom add(const Phantom& a, const Phantom& b);

/// Scalar multiple.
Phantom scale(const Phantom& f, Complex s);

} // namespace momray
