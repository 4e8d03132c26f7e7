#pragma once

#include <complex>
#include <span>
#include <vector>

#include "snse/grid.hpp"

namespace snse {

using Complex = std::complex<double>;

/// A d-component vector field stored as Fourier coefficients on a TorusGrid.
/// Coefficients are component-major: component c occupies the flat k-range
/// [c*points, (c+1)*points).  Real-valued physical fields satisfy the
/// Hermitian symmetry coef(-k) = conj(coef(k)); the solenoidal flag records
/// that k . coef(k) = 0 holds for every mode.
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(const TorusGrid& grid)
        : grid_(grid), coef_(grid.points() * grid.dim, Complex{0.0, 0.0}) {}

    static SpectralField zero(const TorusGrid& grid) { return SpectralField(grid); }

    const TorusGrid& grid() const { return grid_; }
    int components() const { return grid_.dim; }
    std::size_t points() const { return grid_.points(); }

    Complex& at(int comp, std::size_t flat) { return coef_[comp * points() + flat]; }
    const Complex& at(int comp, std::size_t flat) const { return coef_[comp * points() + flat]; }

    Complex& at(int comp, const std::array<int, 3>& k) { return at(comp, grid_.flat_index(k)); }
    const Complex& at(int comp, const std::array<int, 3>& k) const {
        return at(comp, grid_.flat_index(k));
    }

    std::span<Complex> component(int c) { return {coef_.data() + c * points(), points()}; }
    std::span<const Complex> component(int c) const {
        return {coef_.data() + c * points(), points()};
    }

    std::span<Complex> raw() { return coef_; }
    std::span<const Complex> raw() const { return coef_; }

    bool solenoidal() const { return solenoidal_; }
    void set_solenoidal(bool s) { solenoidal_ = s; }

    bool empty() const { return coef_.empty(); }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField f) { return f *= s; }

  private:
    TorusGrid grid_;
    std::vector<Complex> coef_;
    bool solenoidal_ = false;
};

/// Zero the mean mode coef(0) of every component.
void remove_mean(SpectralField& f);

/// Symmetrise coefficients so that coef(-k) = conj(coef(k)) exactly.
void enforce_hermitian(SpectralField& f);

/// Largest |coef(-k) - conj(coef(k))| over all modes and components.
double hermitian_defect(const SpectralField& f);

/// Largest |k . coef(k)| over all modes (physical wavenumbers).
double divergence_defect(const SpectralField& f);

/// y += a*x (grids must match).
void axpy(double a, const SpectralField& x, SpectralField& y);

/// True if any coefficient is NaN or infinite.
bool has_non_finite(const SpectralField& f);

}  // namespace snse
