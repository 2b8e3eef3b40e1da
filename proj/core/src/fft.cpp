#include "momray/fft.hpp"

#include <cstring>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace momray {

namespace {
// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

Fft1d::Fft1d(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Fft1d: length must be >= 1");
    std::lock_guard<std::mutex> lock(plan_mutex());
    auto* buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    buf_ = buf;
    plan_fwd_ = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft1d::~Fft1d() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(static_cast<fftw_complex*>(buf_));
}

void Fft1d::run(std::span<std::complex<double>> data, bool fwd) const {
    if (static_cast<int>(data.size()) != n_) throw std::invalid_argument("Fft1d: size mismatch");
    auto* buf = static_cast<fftw_complex*>(buf_);
    std::memcpy(buf, data.data(), sizeof(fftw_complex) * static_cast<std::size_t>(n_));
    fftw_execute(static_cast<fftw_plan>(fwd ? plan_fwd_ : plan_bwd_));
    std::memcpy(data.data(), buf, sizeof(fftw_complex) * static_cast<std::size_t>(n_));
}

void Fft1d::forward(std::span<std::complex<double>> data) const { run(data, true); }
void Fft1d::backward(std::span<std::complex<double>> data) const { run(data, false); }

Fft2d::Fft2d(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("Fft2d: bad shape");
    std::lock_guard<std::mutex> lock(plan_mutex());
    auto* buf = fftw_alloc_complex(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    buf_ = buf;
    plan_fwd_ = fftw_plan_dft_2d(rows, cols, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_2d(rows, cols, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft2d::~Fft2d() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(static_cast<fftw_complex*>(buf_));
}

void Fft2d::run(std::span<std::complex<double>> data, bool fwd) const {
    const std::size_t total = static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
    if (data.size() != total) throw std::invalid_argument("Fft2d: size mismatch");
    auto* buf = static_cast<fftw_complex*>(buf_);
    std::memcpy(buf, data.data(), sizeof(fftw_complex) * total);
    fftw_execute(static_cast<fftw_plan>(fwd ? plan_fwd_ : plan_bwd_));
    std::memcpy(data.data(), buf, sizeof(fftw_complex) * total);
}

void Fft2d::forward(std::span<std::complex<double>> data) const { run(data, true); }
void Fft2d::backward(std::span<std::complex<double>> data) const { run(data, false); }

} // namespace momray
