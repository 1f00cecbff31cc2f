#pragma once

#include <cstdint>
#include <vector>

#include "nvm/ctmc.hpp"
#include "nvm/graph.hpp"

namespace nvm {

/// Exact projected marginals are summed over 2^|H| outcomes; keep H small.
inline constexpr int kProjectionCap = 12;

/// Frozen spin per boundary vertex of a LatticeBox, in boundary order.
struct BoundaryCondition {
    std::vector<std::uint8_t> spins;
};

BoundaryCondition bc_all_zero(const LatticeBox& box);
BoundaryCondition bc_all_one(const LatticeBox& box);
BoundaryCondition bc_random(const LatticeBox& box, std::uint64_t seed);
BoundaryCondition bc_flipped_at(const BoundaryCondition& tau, int boundary_index);

/// Boundary spins folded into per-interior-vertex frozen neighbor counts.
FrozenBoundary frozen_field(const LatticeBox& box, const BoundaryCondition& tau);

/// Stationary law of the frozen-boundary dynamics on the box, marginalized
/// onto the sub-box H (interior vertex ids).  Indexing: bit j of the outcome
/// is the spin at H[j].
DistributionVector projected_stationary(const LatticeBox& box, const BoundaryCondition& tau,
                                        const ModelParams& p, const std::vector<int>& H);

struct SSMRow {
    int site;        // boundary index of the flipped vertex u
    LatticePoint u;
    int dist;        // dist(u, H)
    double tv;       // || mu^tau|_H - mu^{tau^u}|_H ||
};

struct SSMTable {
    std::vector<SSMRow> rows;
    std::vector<int> h_vertices;
    ModelParams params;
};

/// For each boundary site u in `sites`, the TV distance between the
/// projected stationary measures under tau_base and under tau_base flipped
/// at u, paired with dist(u, H).
SSMTable ssm_scan(const LatticeBox& box, const std::vector<int>& H, const ModelParams& p,
                  const BoundaryCondition& tau_base, const std::vector<int>& sites);

struct SSMDecayFit {
    double C_hat = 0;    // prefactor with |V(H)| divided out
    double c_hat = 0;    // decay rate per unit distance
    double residual = 0; // rms residual of the log-linear fit
};

/// Least-squares fit of log(tv) against dist over rows with tv > 1e-14.
/// Needs >= 3 distinct distances; otherwise the decay is too fast to
/// resolve and an input_error is raised.
SSMDecayFit fit_ssm_decay(const SSMTable& table);

} // namespace nvm
