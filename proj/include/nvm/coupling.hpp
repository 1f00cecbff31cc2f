#pragma once

#include <cstdint>
#include <vector>

#include "nvm/dynamics.hpp"

namespace nvm {

/// Two copies of the chain driven by shared randomness: shared clocks,
/// shared branch draws, shared neighbor choices.
struct CoupledState {
    Configuration x;
    Configuration y;
    double time = 0;
};

/// Per-vertex disagreement indicator z(v) = 1{X(v) != Y(v)}.
using DisagreementField = Configuration;

DisagreementField disagreement_field(const CoupledState& s);

/// One ring of the shared clock at v.  branch_draw picks the branch
/// (set both to 0 / set both to 1 / copy the same uniformly chosen
/// neighbor in both copies); neighbor_draw is consumed only by the copy
/// branch.  Pure: returns the updated pair.
CoupledState coupled_update(const CoupledState& s, const Graph& g, const ModelParams& p,
                            int v, double branch_draw, double neighbor_draw);

struct CoupledEvent {
    double time;
    int vertex;
    bool x_spin;
    bool y_spin;
    UpdateBranch branch;
};

struct CoupledTrajectory {
    CoupledState initial;
    double t_end = 0;
    std::vector<CoupledEvent> events;
    CoupledState final_state;
};

/// Coupled run on [0, t_end] under shared randomness; same draw order and
/// seeding scheme as simulate, so each copy is marginally the plain chain.
/// Requires delta = beta.
CoupledTrajectory run_coupling(const Graph& g, const ModelParams& p, const Configuration& x0,
                               const Configuration& y0, double t_end, std::uint64_t seed,
                               std::uint64_t stream = 0);

/// Monte Carlo estimate of M(t) = max_v P(Z_t(v) = 1) from replicas of the
/// coupling started at (all-0, all-1).
struct MCurveEstimate {
    std::vector<double> times;
    std::vector<std::vector<double>> p_hat;     // [time][vertex]
    std::vector<std::vector<double>> std_error; // binomial, same shape
    std::vector<double> m_hat;                  // max_v p_hat
    std::vector<double> m_std_error;            // std error at the argmax vertex
    std::vector<int> argmax_vertex;
    std::vector<double> p_any;                  // empirical P(X_t != Y_t)
    int replicas = 0;
    std::uint64_t seed = 0;
};

/// Replica r runs on stream (seed, r); the disagreement field is evaluated
/// exactly at each grid time by replaying events between grid points.
/// Replicas are split across `workers` threads; the aggregation is an
/// integer-count reduction, so results are identical for any worker count.
/// Requires delta = beta and a sorted, nonnegative grid.
MCurveEstimate estimate_M(const Graph& g, const ModelParams& p,
                          const std::vector<double>& t_grid, int replicas,
                          std::uint64_t seed, int workers = 1);

} // namespace nvm
