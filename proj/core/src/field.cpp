#include "snse/field.hpp"

#include <cmath>
#include <stdexcept>

namespace snse {

namespace {
void require_same_grid(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid() == b.grid())) throw std::invalid_argument("spectral fields live on different grids");
}
}  // namespace

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
    solenoidal_ = solenoidal_ && o.solenoidal_;
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
    solenoidal_ = solenoidal_ && o.solenoidal_;
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& c : coef_) c *= s;
    return *this;
}

void remove_mean(SpectralField& f) {
    for (int c = 0; c < f.components(); ++c) f.at(c, std::size_t{0}) = Complex{0.0, 0.0};
}

void enforce_hermitian(SpectralField& f) {
    const auto& grid = f.grid();
    const std::size_t n = grid.points();
    for (int c = 0; c < grid.dim; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            auto k = grid.wavevector(i);
            std::array<int, 3> mk{0, 0, 0};
            bool self = true;
            for (int a = 0; a < grid.dim; ++a) {
                // the Nyquist line maps to itself under k -> -k on the grid
                mk[a] = (k[a] == grid.modes / 2) ? k[a] : -k[a];
                if (mk[a] != k[a]) self = false;
            }
            const std::size_t j = grid.flat_index(mk);
            if (self) {
                f.at(c, i) = Complex{f.at(c, i).real(), 0.0};
            } else if (j > i) {
                const Complex avg = 0.5 * (f.at(c, i) + std::conj(f.at(c, j)));
                f.at(c, i) = avg;
                f.at(c, j) = std::conj(avg);
            }
        }
    }
}

double hermitian_defect(const SpectralField& f) {
    const auto& grid = f.grid();
    const std::size_t n = grid.points();
    double worst = 0.0;
    for (int c = 0; c < grid.dim; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            auto k = grid.wavevector(i);
            std::array<int, 3> mk{0, 0, 0};
            for (int a = 0; a < grid.dim; ++a) mk[a] = (k[a] == grid.modes / 2) ? k[a] : -k[a];
            const std::size_t j = grid.flat_index(mk);
            worst = std::max(worst, std::abs(f.at(c, i) - std::conj(f.at(c, j))));
        }
    }
    return worst;
}

double divergence_defect(const SpectralField& f) {
    const auto& grid = f.grid();
    const double scale = grid.kappa_scale();
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.points(); ++i) {
        const auto k = grid.wavevector(i);
        Complex div{0.0, 0.0};
        for (int c = 0; c < grid.dim; ++c) div += scale * static_cast<double>(k[c]) * f.at(c, i);
        worst = std::max(worst, std::abs(div));
    }
    return worst;
}

void axpy(double a, const SpectralField& x, SpectralField& y) {
    require_same_grid(x, y);
    auto xs = x.raw();
    auto ys = y.raw();
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] += a * xs[i];
    y.set_solenoidal(y.solenoidal() && x.solenoidal());
}

bool has_non_finite(const SpectralField& f) {
    for (const auto& c : f.raw())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return true;
    return false;
}

}  // namespace snse
