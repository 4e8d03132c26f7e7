#include "snse/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace snse {

namespace {
// FFTW plan creation is not thread safe; execution on private buffers is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

FourierWorkspace::FourierWorkspace(const TorusGrid& grid)
    : dim_(grid.dim), modes_(grid.modes), points_(grid.points()), buffer_(points_) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto* data = reinterpret_cast<fftw_complex*>(buffer_.data());
    if (dim_ == 2) {
        plan_forward_ = fftw_plan_dft_2d(modes_, modes_, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
        plan_backward_ = fftw_plan_dft_2d(modes_, modes_, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    } else {
        plan_forward_ =
            fftw_plan_dft_3d(modes_, modes_, modes_, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
        plan_backward_ =
            fftw_plan_dft_3d(modes_, modes_, modes_, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    if (plan_forward_ == nullptr || plan_backward_ == nullptr)
        throw std::runtime_error("fftw plan creation failed");
}

FourierWorkspace::~FourierWorkspace() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plan_forward_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
    if (plan_backward_ != nullptr) fftw_destroy_plan(static_cast<fftw_plan>(plan_backward_));
}

FourierWorkspace& FourierWorkspace::local(const TorusGrid& grid) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<FourierWorkspace>> cache;
    const std::pair<int, int> key{grid.dim, grid.modes};
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<FourierWorkspace>(new FourierWorkspace(grid))).first;
    return *it->second;
}

void FourierWorkspace::to_physical(std::span<const Complex> coeffs, std::span<Complex> out) {
    if (coeffs.size() != points_ || out.size() != points_)
        throw std::invalid_argument("fft buffer size mismatch");
    std::copy(coeffs.begin(), coeffs.end(), buffer_.begin());
    fftw_execute(static_cast<fftw_plan>(plan_backward_));
    std::copy(buffer_.begin(), buffer_.end(), out.begin());
}

void FourierWorkspace::to_spectral(std::span<const Complex> values, std::span<Complex> out) {
    if (values.size() != points_ || out.size() != points_)
        throw std::invalid_argument("fft buffer size mismatch");
    std::copy(values.begin(), values.end(), buffer_.begin());
    fftw_execute(static_cast<fftw_plan>(plan_forward_));
    const double inv = 1.0 / static_cast<double>(points_);
    for (std::size_t i = 0; i < points_; ++i) out[i] = buffer_[i] * inv;
}

std::span<Complex> FourierWorkspace::scratch(int slot) {
    if (slot < 0 || slot >= 8) throw std::invalid_argument("scratch slot out of range");
    if (scratch_.size() <= static_cast<std::size_t>(slot)) scratch_.resize(8);
    auto& buf = scratch_[slot];
    if (buf.size() != points_) buf.assign(points_, Complex{0.0, 0.0});
    return buf;
}

std::vector<Complex> to_physical(const SpectralField& f, int comp) {
    auto& ws = FourierWorkspace::local(f.grid());
    std::vector<Complex> out(f.points());
    ws.to_physical(f.component(comp), out);
    return out;
}

}  // namespace snse
