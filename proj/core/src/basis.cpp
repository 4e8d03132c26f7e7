#include "snse/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snse {

namespace {

bool half_lattice(const std::array<int, 3>& k) {
    if (k[0] != 0) return k[0] > 0;
    if (k[1] != 0) return k[1] > 0;
    return k[2] > 0;
}

int isq(const std::array<int, 3>& k) { return k[0] * k[0] + k[1] * k[1] + k[2] * k[2]; }

bool mode_order(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    const int sa = isq(a), sb = isq(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

std::vector<std::array<double, 3>> polarisations(int dim, const std::array<int, 3>& k) {
    std::vector<std::array<double, 3>> pols;
    const double norm = std::sqrt(static_cast<double>(isq(k)));
    if (dim == 2) {
        pols.push_back({-k[1] / norm, k[0] / norm, 0.0});
        return pols;
    }
    // deterministic orthonormal pair spanning the plane orthogonal to k
    std::array<double, 3> kd{static_cast<double>(k[0]), static_cast<double>(k[1]),
                             static_cast<double>(k[2])};
    int axis = 0;
    for (int a = 1; a < 3; ++a)
        if (std::abs(kd[a]) < std::abs(kd[axis])) axis = a;
    std::array<double, 3> e{0.0, 0.0, 0.0};
    e[axis] = 1.0;
    std::array<double, 3> p1{e[1] * kd[2] - e[2] * kd[1], e[2] * kd[0] - e[0] * kd[2],
                             e[0] * kd[1] - e[1] * kd[0]};
    double p1n = std::sqrt(p1[0] * p1[0] + p1[1] * p1[1] + p1[2] * p1[2]);
    for (auto& x : p1) x /= p1n;
    std::array<double, 3> p2{kd[1] * p1[2] - kd[2] * p1[1], kd[2] * p1[0] - kd[0] * p1[2],
                             kd[0] * p1[1] - kd[1] * p1[0]};
    double p2n = std::sqrt(p2[0] * p2[0] + p2[1] * p2[1] + p2[2] * p2[2]);
    for (auto& x : p2) x /= p2n;
    pols.push_back(p1);
    pols.push_back(p2);
    return pols;
}

std::vector<std::array<int, 3>> sorted_half_lattice(int dim, int kmax) {
    std::vector<std::array<int, 3>> ks;
    const int zmin = dim == 3 ? -kmax : 0;
    const int zmax = dim == 3 ? kmax : 0;
    for (int a = -kmax; a <= kmax; ++a)
        for (int b = -kmax; b <= kmax; ++b)
            for (int c = zmin; c <= zmax; ++c) {
                std::array<int, 3> k{a, b, c};
                if (isq(k) == 0) continue;
                if (!half_lattice(k)) continue;
                ks.push_back(k);
            }
    std::sort(ks.begin(), ks.end(), mode_order);
    return ks;
}

}  // namespace

std::vector<BasisMode> enumerate_basis(int dim, int count, double period) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("basis dimension must be 2 or 3");
    if (count <= 0) throw std::invalid_argument("basis count must be positive");
    const int per_k = 2 * (dim - 1);  // polarisations x {cos, sin}
    const double scale2 = (two_pi / period) * (two_pi / period);

    int kmax = 4;
    std::vector<std::array<int, 3>> ks;
    for (;;) {
        ks = sorted_half_lattice(dim, kmax);
        // modes with |k| <= kmax are guaranteed complete up to that radius
        long complete = 0;
        for (const auto& k : ks)
            if (isq(k) <= kmax * kmax) ++complete;
        if (complete * per_k >= count) break;
        kmax *= 2;
    }

    std::vector<BasisMode> modes;
    modes.reserve(count);
    for (const auto& k : ks) {
        for (const auto& pol : polarisations(dim, k)) {
            for (int phase = 0; phase < 2; ++phase) {
                BasisMode m;
                m.k = k;
                m.pol = pol;
                m.sine = phase == 1;
                m.ksq = scale2 * isq(k);
                modes.push_back(m);
                if (static_cast<int>(modes.size()) == count) return modes;
            }
        }
    }
    throw std::logic_error("basis enumeration exhausted");
}

NoiseBasis::NoiseBasis(const TorusGrid& grid, int count) : grid_(grid) {
    const int available = dealiased_count(grid);
    if (count <= 0) count = available;
    if (count > available)
        throw std::invalid_argument("noise basis truncation exceeds the dealiased band");
    // enumerate inside the dealias box in the same (|k|^2, lex) order
    const double scale2 = grid.kappa_scale() * grid.kappa_scale();
    modes_.reserve(count);
    for (const auto& k : sorted_half_lattice(grid.dim, grid.dealias_limit())) {
        for (const auto& pol : polarisations(grid.dim, k)) {
            for (int phase = 0; phase < 2; ++phase) {
                if (static_cast<int>(modes_.size()) == count) break;
                BasisMode m;
                m.k = k;
                m.pol = pol;
                m.sine = phase == 1;
                m.ksq = scale2 * isq(k);
                modes_.push_back(m);
            }
        }
    }
    flat_plus_.reserve(modes_.size());
    flat_minus_.reserve(modes_.size());
    for (const auto& m : modes_) {
        std::array<int, 3> mk{-m.k[0], -m.k[1], -m.k[2]};
        flat_plus_.push_back(grid.flat_index(m.k));
        flat_minus_.push_back(grid.flat_index(mk));
    }
}

int NoiseBasis::dealiased_count(const TorusGrid& grid) {
    const int lim = grid.dealias_limit();
    long lattice = 1;
    for (int a = 0; a < grid.dim; ++a) lattice *= 2 * lim + 1;
    // half lattice without the origin, times polarisations and phases
    return static_cast<int>((lattice - 1) / 2 * 2 * (grid.dim - 1));
}

SpectralField NoiseBasis::field(int j) const {
    if (j < 0 || j >= size()) throw std::out_of_range("basis index out of range");
    SpectralField f(grid_);
    add_scaled(f, j, 1.0);
    f.set_solenoidal(true);
    return f;
}

void NoiseBasis::add_scaled(SpectralField& acc, int j, double w) const {
    const BasisMode& m = modes_[j];
    // unit L^2 normalisation: sqrt(2/volume) * trig(kappa . x) * pol
    const double amp = 0.5 * w * std::sqrt(2.0 / grid_.volume());
    const std::size_t ip = flat_plus_[j];
    const std::size_t im = flat_minus_[j];
    if (!m.sine) {
        for (int c = 0; c < grid_.dim; ++c) {
            acc.at(c, ip) += Complex{amp * m.pol[c], 0.0};
            acc.at(c, im) += Complex{amp * m.pol[c], 0.0};
        }
    } else {
        for (int c = 0; c < grid_.dim; ++c) {
            acc.at(c, ip) += Complex{0.0, -amp * m.pol[c]};
            acc.at(c, im) += Complex{0.0, amp * m.pol[c]};
        }
    }
}

double NoiseBasis::h_inner(const SpectralField& v, int j) const {
    const BasisMode& m = modes_[j];
    const double amp = 0.5 * std::sqrt(2.0 / grid_.volume());
    const std::size_t ip = flat_plus_[j];
    // Hermitian v: the -k term is the conjugate of the +k term
    Complex sum{0.0, 0.0};
    for (int c = 0; c < grid_.dim; ++c) {
        const Complex coeff = m.sine ? Complex{0.0, -amp * m.pol[c]} : Complex{amp * m.pol[c], 0.0};
        sum += v.at(c, ip) * std::conj(coeff);
    }
    return 2.0 * grid_.volume() * sum.real();
}

}  // namespace snse
