#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nvm/generator.hpp"

namespace nvm {

/// Probability vector indexed by state encoding.
using DistributionVector = std::vector<double>;

DistributionVector point_mass(std::size_t dim, std::size_t state);
DistributionVector uniform_distribution(std::size_t dim);

/// Total variation distance, computed as half the L1 distance.
double tv_distance(const DistributionVector& mu1, const DistributionVector& mu2);

/// Solves dp/dt = p Q from p0 over [0, t] by uniformization with the Poisson
/// series truncated once the accumulated weight reaches 1 - tol, so the L1
/// truncation error is at most tol.  Long horizons are split into segments
/// to keep the series weights in range.
DistributionVector transient(const GeneratorMatrix& Q, const DistributionVector& p0,
                             double t, double tol = 1e-12);

/// Stationary distribution: pi Q = 0, sum pi = 1, residual inf-norm <= 1e-10.
/// Requires an irreducible chain (checked by reachability over the nonzero
/// off-diagonals).  Below `direct_limit` states the solve is a direct sparse
/// LU with one balance equation replaced by normalization; above it, power
/// style refinement by repeated transient advances.
DistributionVector stationary(const GeneratorMatrix& Q,
                              std::size_t direct_limit = std::size_t(1) << 14);

struct MixingTimeResult {
    double epsilon = 0;
    double t_mix = 0;
    std::uint64_t worst_state = 0;  // initial point mass attaining the max TV
    double time_resolution = 0;     // bisection resolution
    double solver_tol = 0;          // uniformization tolerance used
    std::string initial_states;     // "all-point-masses" | "extreme-states"
};

/// t_mix(eps) = inf{t : max over initial point masses of
/// tv(p_t(x, .), pi) <= eps}, located by bisection to resolution 1e-4.
/// Maximizing over point masses is exact (TV to pi is convex in the initial
/// law); for n_sites > 10 the maximization is restricted to the two extreme
/// states and flagged in `initial_states`.
MixingTimeResult exact_mixing_time(const GeneratorMatrix& Q, double epsilon);

struct MCurve {
    std::vector<double> times;
    std::vector<double> m;          // M(t) = max_v P(Z_t(v) = 1)
    std::vector<int> argmax_vertex;
};

/// Exact M(t): transient solve on the disagreement generator from the
/// all-ones state, maximizing the per-vertex marginal at each grid time.
MCurve exact_M_curve(const Graph& g, const ModelParams& p, const std::vector<double>& t_grid);

/// Residual of the disagreement master equation at vertex x and time t:
/// |central difference of P(Z_t(x)=1) at step h  -  RHS from exact pair
/// probabilities|.  Second-order in h.
double master_eq_residual(const Graph& g, const ModelParams& p, int x, double t, double h);

} // namespace nvm
