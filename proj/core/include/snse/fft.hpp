#pragma once

#include <complex>
#include <span>
#include <vector>

#include "snse/field.hpp"
#include "snse/grid.hpp"

namespace snse {

/// Per-thread FFT workspace for one grid shape.  Wraps double-precision
/// complex-to-complex FFTW plans created with FFTW_ESTIMATE so that plan
/// selection (and hence rounding) is reproducible run to run.  Obtain
/// instances through local(); they are cached thread-locally, so a worker
/// thread can transform without locking.
class FourierWorkspace {
  public:
    static FourierWorkspace& local(const TorusGrid& grid);

    /// coefficients -> point values (unnormalised exponential sum).
    void to_physical(std::span<const Complex> coeffs, std::span<Complex> out);

    /// point values -> coefficients (normalised by 1/points).
    void to_spectral(std::span<const Complex> values, std::span<Complex> out);

    /// Scratch buffer of grid.points() complex entries; slot < 8.
    std::span<Complex> scratch(int slot);

    FourierWorkspace(const FourierWorkspace&) = delete;
    FourierWorkspace& operator=(const FourierWorkspace&) = delete;
    ~FourierWorkspace();

  private:
    explicit FourierWorkspace(const TorusGrid& grid);

    int dim_;
    int modes_;
    std::size_t points_;
    void* plan_forward_ = nullptr;
    void* plan_backward_ = nullptr;
    std::vector<Complex> buffer_;
    std::vector<std::vector<Complex>> scratch_;
};

/// Physical-space samples of one component (row-major over grid points).
std::vector<Complex> to_physical(const SpectralField& f, int comp);

}  // namespace snse
