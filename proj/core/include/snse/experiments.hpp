#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snse/ou.hpp"
#include "snse/solver.hpp"

namespace snse {

struct UniquenessConfig {
    double delta0 = 1e-8;          ///< initial separation (0 = identical data)
    std::vector<double> delta0_ladder;  ///< optional extra rungs for the scaling study
    double c_bar = 0.0;            ///< constant of the psi weight; 0 = calibrate
    double n_stop = 100.0;         ///< stopping threshold on ||V||_{H^{-g}}
};

struct ExperimentConfig {
    SolverConfig base{};
    std::vector<double> n_ladder{1, 4, 16, 64, 256};
    int paths = 100;
    UniquenessConfig uniqueness{};
    double beta = 0.0;     ///< 0 = default (1-g)/4
    double delta = 0.0;    ///< 0 = default (1-g)/4
    double epsilon = 0.0;  ///< extra regularity of the z moment norm
    int moment_m = 2;
    int holder_p = 2;
    int record_stride = 32;
    int threads = 0;       ///< 0 = hardware concurrency
};

/// Time series of one coupled pair, recorded at the experiment stride.
struct UniquenessRecord {
    double delta0 = 0.0;
    std::vector<double> times;
    std::vector<double> v_norm;        ///< ||V(t)||_{H^{-g}}
    std::vector<double> psi_integral;  ///< int_0^t psi
    std::vector<double> weighted;      ///< Q(t) = e^{-int psi} ||V||^2_{H^{-g}}
    bool stopped = false;              ///< tau_N hit
    int stop_step = -1;
};

struct UniquenessResult {
    double c_bar = 0.0;
    double lipschitz_lg = 0.0;
    std::vector<double> times;
    /// records[rung][path]
    std::vector<std::vector<UniquenessRecord>> records;
    std::vector<double> delta0_ladder;
    /// mean/SE of Q(t) per rung over paths, indexed [rung][time]
    std::vector<std::vector<double>> mean_weighted;
    std::vector<std::vector<double>> se_weighted;
    /// mean terminal ||V(T)|| per rung
    std::vector<double> terminal_v_mean;
    std::uint64_t increment_fingerprint = 0;  ///< shared by every coupled run
};

/// Two solvers coupled through one Wiener path per sample path: v1 from v0,
/// v2 from v0 + delta0 * e_0 (first basis mode).  Requires dim == 2.
UniquenessResult uniqueness_experiment(const ExperimentConfig& cfg);

struct LadderStatistics {
    std::vector<std::string> names;  ///< statistic ids, fixed order
    /// value[stat][n_index][path]
    std::vector<std::vector<std::vector<double>>> value;
};

struct ConvergenceResult {
    std::vector<double> n_ladder;
    /// distance[pair][path] with pair i = (n_i, n_{i+1}), L^2(0,T;H) metric
    std::vector<std::vector<double>> distance;
    std::vector<double> mean_distance;
    std::vector<double> se_distance;
    double monotone_fraction = 0.0;  ///< paths with strictly decreasing pair distances
    LadderStatistics stats;          ///< S1..S5 of v_n plus z statistics
    std::vector<std::vector<double>> quantile95;  ///< [stat][n_index]
};

/// Couples every ladder level to one Wiener path per sample and reports the
/// consecutive-pair distances plus the uniform statistics.  Ladder length
/// must be at least 3 (throws otherwise).
ConvergenceResult convergence_experiment(const ExperimentConfig& cfg);

struct TightnessRow {
    std::string statistic;
    double yosida_n = 0.0;
    double eta = 0.0;
    double tail = 0.0;       ///< empirical P(statistic > eta)
    double majorant = 0.0;   ///< mean/eta Chebyshev bound
    double mean = 0.0;
    double std_error = 0.0;
    int paths = 0;
};

/// Tail tables P(stat > eta) with the Chebyshev majorant overlaid; eta grid
/// spans the sampled range per statistic.  Requires paths >= 100.
std::vector<TightnessRow> tightness_tables(const ExperimentConfig& cfg);

}  // namespace snse
