#pragma once

#include <cstdint>
#include <vector>

#include "nvm/configuration.hpp"
#include "nvm/graph.hpp"

namespace nvm {

/// Noise parameters of the model.  The flip rate at vertex x in state eta is
///
///   (1/(delta+beta+1)) * [ disagree(x)/d(x)
///                          + delta * 1{eta(x)=0} + beta * 1{eta(x)=1} ],
///
/// where disagree(x) counts neighbors with spin differing from eta(x) and
/// the neighbor term is an empty sum (0) when d(x) = 0.  beta defaults to
/// delta, which recovers the single-parameter model.  delta = beta = 0 is
/// the pure voter model: accepted by the simulator for absorption demos,
/// rejected by every operation that needs ergodicity.
struct ModelParams {
    double delta = 0;
    double beta = 0;

    ModelParams() = default;
    explicit ModelParams(double d) : delta(d), beta(d) {}
    ModelParams(double d, double b) : delta(d), beta(b) {}

    double total() const { return delta + beta + 1.0; }
    bool symmetric() const { return delta == beta; }
    bool ergodic() const { return delta > 0 && beta > 0; }

    void validate() const;                       // finite, nonnegative
    void require_ergodic(const char* op) const;  // delta, beta > 0
    void require_symmetric(const char* op) const;
};

/// Configuration with the spin at x flipped, all other spins unchanged.
Configuration flip(const Configuration& config, int x);

/// Transition rate of the single-site flip at x (events per unit time).
double flip_rate(int x, const Configuration& config, const Graph& g, const ModelParams& p);

enum class UpdateBranch : std::uint8_t { set_zero = 0, set_one = 1, copy_neighbor = 2 };

/// The resample performed when the rate-1 clock at a vertex rings.  One
/// uniform draw selects the branch via the partition of [0,1)
///
///   [0, beta/S) -> set 0,  [beta/S, (beta+delta)/S) -> set 1,
///   [(beta+delta)/S, 1) -> copy a uniformly chosen neighbor,
///
/// with S = delta + beta + 1; the copy branch consumes one further draw for
/// the neighbor choice (none when d(v) = 0, where copying is a no-op).
/// Because the branches partition one draw, the implied probabilities of
/// resampling to 0 and to 1 sum to exactly 1.
struct UpdateRule {
    double t_set_zero; // beta/S
    double t_set_one;  // (beta+delta)/S

    explicit UpdateRule(const ModelParams& p)
        : t_set_zero(p.beta / p.total()), t_set_one((p.beta + p.delta) / p.total()) {}

    UpdateBranch select(double u) const {
        if (u < t_set_zero) return UpdateBranch::set_zero;
        if (u < t_set_one) return UpdateBranch::set_one;
        return UpdateBranch::copy_neighbor;
    }
};

struct TrajectoryEvent {
    double time;
    int vertex;
    bool new_spin;        // resampled value; may equal the previous spin
    UpdateBranch branch;  // diagnostic: which branch produced the resample
};

struct Trajectory {
    Configuration initial;
    double t_end = 0;
    std::vector<TrajectoryEvent> events; // strictly increasing times
    Configuration final_config;
};

/// Event-driven simulation of the chain on [0, t_end].  Uses the
/// superposition view (one rate-n clock plus a uniform vertex choice) and a
/// counter-based stream keyed by (seed, stream), with per-event draws
/// consumed in the fixed order: holding time, vertex, branch, neighbor.
/// Identical (inputs, seed, stream) give bit-identical trajectories.
Trajectory simulate(const Graph& g, const ModelParams& p, const Configuration& init,
                    double t_end, std::uint64_t seed, std::uint64_t stream = 0);

} // namespace nvm
