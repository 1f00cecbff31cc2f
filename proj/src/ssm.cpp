#include "nvm/ssm.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nvm/errors.hpp"
#include "nvm/linfit.hpp"
#include "nvm/rng.hpp"

namespace nvm {

BoundaryCondition bc_all_zero(const LatticeBox& box) {
    return {std::vector<std::uint8_t>(box.boundary.size(), 0)};
}

BoundaryCondition bc_all_one(const LatticeBox& box) {
    return {std::vector<std::uint8_t>(box.boundary.size(), 1)};
}

BoundaryCondition bc_random(const LatticeBox& box, std::uint64_t seed) {
    CounterRng rng(seed);
    BoundaryCondition tau;
    tau.spins.resize(box.boundary.size());
    for (auto& s : tau.spins) s = rng.next_u64() & 1;
    return tau;
}

BoundaryCondition bc_flipped_at(const BoundaryCondition& tau, int boundary_index) {
    if (boundary_index < 0 || boundary_index >= static_cast<int>(tau.spins.size()))
        throw input_error("boundary index " + std::to_string(boundary_index) + " out of range");
    BoundaryCondition out = tau;
    out.spins[boundary_index] ^= 1;
    return out;
}

FrozenBoundary frozen_field(const LatticeBox& box, const BoundaryCondition& tau) {
    if (tau.spins.size() != box.boundary.size())
        throw input_error("boundary condition covers " + std::to_string(tau.spins.size()) +
                          " vertices, boundary has " + std::to_string(box.boundary.size()));
    FrozenBoundary f;
    f.ones.assign(box.interior.n, 0);
    f.degree.assign(box.interior.n, 0);
    for (std::size_t b = 0; b < box.boundary.size(); ++b) {
        for (int v : box.boundary_adjacency[b]) {
            ++f.degree[v];
            if (tau.spins[b]) ++f.ones[v];
        }
    }
    return f;
}

DistributionVector projected_stationary(const LatticeBox& box, const BoundaryCondition& tau,
                                        const ModelParams& p, const std::vector<int>& H) {
    if (H.empty()) throw input_error("projected_stationary: H must be nonempty");
    if (static_cast<int>(H.size()) > kProjectionCap)
        throw resource_error("projected_stationary: |H| capped at " +
                             std::to_string(kProjectionCap));
    std::set<int> hset;
    for (int v : H) {
        if (v < 0 || v >= box.interior.n)
            throw input_error("projected_stationary: H vertex " + std::to_string(v) +
                              " not in the interior");
        if (!hset.insert(v).second)
            throw input_error("projected_stationary: duplicate H vertex " + std::to_string(v));
    }

    const FrozenBoundary frozen = frozen_field(box, tau);
    const GeneratorMatrix Q = build_generator(box.interior, p, &frozen);
    const DistributionVector pi = stationary(Q);

    DistributionVector out(std::size_t(1) << H.size(), 0.0);
    for (std::size_t s = 0; s < pi.size(); ++s) {
        std::size_t key = 0;
        for (std::size_t j = 0; j < H.size(); ++j)
            if ((s >> H[j]) & 1) key |= std::size_t(1) << j;
        out[key] += pi[s];
    }
    return out;
}

SSMTable ssm_scan(const LatticeBox& box, const std::vector<int>& H, const ModelParams& p,
                  const BoundaryCondition& tau_base, const std::vector<int>& sites) {
    SSMTable table;
    table.h_vertices = H;
    table.params = p;

    std::vector<LatticePoint> h_coords;
    h_coords.reserve(H.size());
    for (int v : H) {
        if (v < 0 || v >= box.interior.n)
            throw input_error("ssm_scan: H vertex " + std::to_string(v) + " not in the interior");
        h_coords.push_back(box.interior.coords[v]);
    }

    const DistributionVector base = projected_stationary(box, tau_base, p, H);
    for (int site : sites) {
        if (site < 0 || site >= static_cast<int>(box.boundary.size()))
            throw input_error("ssm_scan: site " + std::to_string(site) + " is not on the boundary");
        const DistributionVector flipped =
            projected_stationary(box, bc_flipped_at(tau_base, site), p, H);
        SSMRow row;
        row.site = site;
        row.u = box.boundary[site];
        row.dist = dist_to_box(row.u, h_coords);
        row.tv = tv_distance(base, flipped);
        table.rows.push_back(std::move(row));
    }
    return table;
}

SSMDecayFit fit_ssm_decay(const SSMTable& table) {
    std::vector<double> xs, ys;
    std::set<int> dists;
    for (const auto& row : table.rows) {
        if (row.tv > 1e-14) {
            xs.push_back(row.dist);
            ys.push_back(std::log(row.tv));
            dists.insert(row.dist);
        }
    }
    if (dists.size() < 3)
        throw input_error("fit_ssm_decay: need >= 3 distinct distances with tv > 1e-14 (got " +
                          std::to_string(dists.size()) + "); decay too fast to resolve");
    const LineFit fit = least_squares_line(xs, ys);
    SSMDecayFit out;
    out.c_hat = -fit.slope;
    out.C_hat = std::exp(fit.intercept) / double(table.h_vertices.size());
    out.residual = fit.residual_rms;
    return out;
}

} // namespace nvm
