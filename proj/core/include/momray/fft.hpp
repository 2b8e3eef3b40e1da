#pragma once

#include <complex>
#include <span>

namespace momray {

/// Unnormalized in-place DFT of length n on contiguous complex data.
/// forward uses the e^{-i 2 pi jk/n} kernel, backward its conjugate.
/// Backed by FFTW; planning is serialized internally.
class Fft1d {
public:
    explicit Fft1d(int n);
    ~Fft1d();
    Fft1d(const Fft1d&) = delete;
    Fft1d& operator=(const Fft1d&) = delete;

    int size() const { return n_; }
    void forward(std::span<std::complex<double>> data) const;
    void backward(std::span<std::complex<double>> data) const;

private:
    int n_;
    void* plan_fwd_;
    void* plan_bwd_;
    void* buf_;
    void run(std::span<std::complex<double>> data, bool fwd) const;
};

/// Unnormalized in-place 2-D DFT on row-major data of shape rows x cols.
class Fft2d {
public:
    Fft2d(int rows, int cols);
    ~Fft2d();
    Fft2d(const Fft2d&) = delete;
    Fft2d& operator=(const Fft2d&) = delete;

    void forward(std::span<std::complex<double>> data) const;
    void backward(std::span<std::complex<double>> data) const;

private:
    int rows_;
    int cols_;
    void* plan_fwd_;
    void* plan_bwd_;
    void* buf_;
    void run(std::span<std::complex<double>> data, bool fwd) const;
};

} // namespace momray
