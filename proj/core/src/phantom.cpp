#include "momray/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momray {

namespace {

const Complex kImag(0.0, 1.0);

/// d/du_axis acting on poly * exp(-a |u|^2), returned as the new polynomial.
Polynomial gauss_derivative(const Polynomial& p, int axis, double a) {
    Polynomial out = p.derivative(axis);
    Polynomial tail = p.mul_coord(axis);
    tail *= Complex(-2.0 * a, 0.0);
    out += tail;
    return out;
}

} // namespace

Phantom::Phantom(int rank, int dim, std::vector<Lump> lumps)
    : rank_(rank), dim_(dim), lumps_(std::move(lumps)) {
    if (dim_ != 2 && dim_ != 3) throw std::invalid_argument("Phantom: dimension must be 2 or 3");
    if (rank_ < 0) throw std::invalid_argument("Phantom: rank must be >= 0");
    indices_ = canonical_indices(dim_, rank_);
    multiplicities_.reserve(indices_.size());
    for (const auto& idx : indices_)
        multiplicities_.push_back(static_cast<double>(index_multiplicity(idx)));
    const std::size_t n_comp = indices_.size();
    for (const auto& l : lumps_) {
        if (!(l.width > 0.0)) throw std::invalid_argument("Phantom: lump width must be positive");
        if (l.comp_polys.size() != n_comp)
            throw std::invalid_argument("Phantom: lump component count mismatch");
    }
    build_fourier_cache();
}

void Phantom::build_fourier_cache() {
    fourier_lumps_.clear();
    fourier_lumps_.reserve(lumps_.size());
    for (const auto& l : lumps_) {
        FourierLump fl;
        fl.center = l.center;
        const double a = l.width;
        fl.decay = 1.0 / (4.0 * a);
        fl.scale = std::pow(2.0 * a, -0.5 * dim_);
        fl.comp_polys.reserve(l.comp_polys.size());
        for (const auto& p : l.comp_polys) {
            // F[u^alpha g](y) = i^|alpha| d^alpha Ghat(y); accumulate the
            // polynomial factor of the derivative of the Gaussian.
            Polynomial acc;
            for (const auto& [e, c] : p.terms()) {
                Polynomial q = Polynomial::constant(1.0);
                int order = 0;
                for (int axis = 0; axis < 3; ++axis)
                    for (int j = 0; j < e[static_cast<std::size_t>(axis)]; ++j) {
                        q = gauss_derivative(q, axis, fl.decay);
                        ++order;
                    }
                Complex ipow(1.0, 0.0);
                for (int j = 0; j < order; ++j) ipow *= kImag;
                q *= c * ipow;
                acc += q;
            }
            fl.comp_polys.push_back(std::move(acc));
        }
        fourier_lumps_.push_back(std::move(fl));
    }
}

SymTensor Phantom::eval(const Vec3& x) const {
    SymTensor out(rank_, dim_);
    for (const auto& l : lumps_) {
        const Vec3 u = x - l.center;
        const double env = std::exp(-l.width * norm_sq(u));
        for (std::size_t c = 0; c < indices_.size(); ++c)
            out.packed(c) += env * l.comp_polys[c].evaluate(u);
    }
    return out;
}

Complex Phantom::eval_contract(const Vec3& x, const Vec3& xi) const {
    Complex acc(0.0, 0.0);
    for (const auto& l : lumps_) {
        const Vec3 u = x - l.center;
        const double env = std::exp(-l.width * norm_sq(u));
        if (env == 0.0) continue;
        Complex lump_val(0.0, 0.0);
        for (std::size_t c = 0; c < indices_.size(); ++c) {
            double w = multiplicities_[c];
            for (int ax : indices_[c]) w *= xi[ax];
            if (w == 0.0) continue;
            lump_val += w * l.comp_polys[c].evaluate(u);
        }
        acc += env * lump_val;
    }
    return acc;
}

SymTensor Phantom::fourier(const Vec3& y) const {
    SymTensor out(rank_, dim_);
    for (const auto& fl : fourier_lumps_) {
        const Complex phase = std::exp(Complex(0.0, -dot(y, fl.center)));
        const double env = fl.scale * std::exp(-fl.decay * norm_sq(y));
        for (std::size_t c = 0; c < fl.comp_polys.size(); ++c)
            out.packed(c) += phase * env * fl.comp_polys[c].evaluate(y);
    }
    return out;
}

SymTensor Phantom::fourier_dir_derivative(const Vec3& y, const Vec3& xi, int k) const {
    if (k < 0) throw std::invalid_argument("fourier_dir_derivative: k must be >= 0");
    SymTensor out(rank_, dim_);
    for (const auto& fl : fourier_lumps_) {
        const Complex phase = std::exp(Complex(0.0, -dot(y, fl.center)));
        const double env = fl.scale * std::exp(-fl.decay * norm_sq(y));
        const Complex cdot(-dot(xi, fl.center), 0.0);
        for (std::size_t c = 0; c < fl.comp_polys.size(); ++c) {
            // <xi, d/dy> applied k times to phase * T(y) * exp(-b|y|^2):
            // T <- -i<xi,c> T + D_xi T - 2b <y,xi> T
            Polynomial t = fl.comp_polys[c];
            for (int j = 0; j < k; ++j) {
                Polynomial next = (kImag * cdot) * t; // equals -i<xi,c> T
                for (int axis = 0; axis < dim_; ++axis) {
                    if (xi[axis] == 0.0) continue;
                    next += Complex(xi[axis], 0.0) * t.derivative(axis);
                    Polynomial m = t.mul_coord(axis);
                    m *= Complex(-2.0 * fl.decay * xi[axis], 0.0);
                    next += m;
                }
                t = std::move(next);
            }
            out.packed(c) += phase * env * t.evaluate(y);
        }
    }
    return out;
}

Phantom Phantom::inner_derivative() const {
    const int m = rank_;
    const auto out_indices = canonical_indices(dim_, m + 1);
    std::vector<Lump> out_lumps;
    out_lumps.reserve(lumps_.size());
    for (const auto& l : lumps_) {
        Lump nl;
        nl.center = l.center;
        nl.width = l.width;
        nl.comp_polys.reserve(out_indices.size());
        for (const auto& beta : out_indices) {
            Polynomial acc;
            MultiIndex sub(static_cast<std::size_t>(m));
            for (int j = 0; j <= m; ++j) {
                // drop position j; beta stays sorted so sub is canonical
                std::size_t w = 0;
                for (int r = 0; r <= m; ++r)
                    if (r != j) sub[w++] = beta[static_cast<std::size_t>(r)];
                const std::size_t src = pack_offset(dim_, sub);
                acc += gauss_derivative(l.comp_polys[src], beta[static_cast<std::size_t>(j)], l.width);
            }
            acc *= Complex(1.0 / (m + 1), 0.0);
            nl.comp_polys.push_back(std::move(acc));
        }
        out_lumps.push_back(std::move(nl));
    }
    return Phantom(m + 1, dim_, std::move(out_lumps));
}

Phantom Phantom::divergence() const {
    if (rank_ < 1) throw std::invalid_argument("divergence: rank must be >= 1");
    const int m = rank_;
    const auto out_indices = canonical_indices(dim_, m - 1);
    std::vector<Lump> out_lumps;
    out_lumps.reserve(lumps_.size());
    for (const auto& l : lumps_) {
        Lump nl;
        nl.center = l.center;
        nl.width = l.width;
        nl.comp_polys.reserve(out_indices.size());
        for (const auto& alpha : out_indices) {
            Polynomial acc;
            MultiIndex full(static_cast<std::size_t>(m));
            for (int p = 0; p < dim_; ++p) {
                std::copy(alpha.begin(), alpha.end(), full.begin());
                full[static_cast<std::size_t>(m) - 1] = p;
                const std::size_t src = pack_offset(dim_, canonical(full));
                acc += gauss_derivative(l.comp_polys[src], p, l.width);
            }
            nl.comp_polys.push_back(std::move(acc));
        }
        out_lumps.push_back(std::move(nl));
    }
    return Phantom(m - 1, dim_, std::move(out_lumps));
}

Phantom Phantom::component(const MultiIndex& idx) const {
    const std::size_t off = pack_offset(dim_, canonical(idx));
    std::vector<Lump> out_lumps;
    out_lumps.reserve(lumps_.size());
    for (const auto& l : lumps_)
        out_lumps.push_back(Lump{l.center, l.width, {l.comp_polys[off]}});
    return Phantom(0, dim_, std::move(out_lumps));
}

Phantom Phantom::shifted(const Vec3& a) const {
    std::vector<Lump> out_lumps = lumps_;
    for (auto& l : out_lumps) l.center = l.center - a;
    return Phantom(rank_, dim_, std::move(out_lumps));
}

double Phantom::max_lump_width() const {
    double w = 0.0;
    for (const auto& l : lumps_) w = std::max(w, l.width);
    return w;
}

double Phantom::min_lump_width() const {
    if (lumps_.empty()) return 1.0;
    double w = lumps_.front().width;
    for (const auto& l : lumps_) w = std::min(w, l.width);
    return w;
}

Phantom add(const Phantom& a, const Phantom& b) {
    if (a.rank() != b.rank() || a.dim() != b.dim())
        throw std::invalid_argument("add: phantom shape mismatch");
    std::vector<Lump> lumps = a.lumps();
    lumps.insert(lumps.end(), b.lumps().begin(), b.lumps().end());
    return Phantom(a.rank(), a.dim(), std::move(lumps));
}

Phantom scale(const Phantom& f, Complex s) {
    std::vector<Lump> lumps = f.lumps();
    for (auto& l : lumps)
        for (auto& p : l.comp_polys) p *= s;
    return Phantom(f.rank(), f.dim(), std::move(lumps));
}

} // namespace momray
