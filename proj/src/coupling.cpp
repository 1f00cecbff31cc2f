#include "nvm/coupling.hpp"

#include <cmath>
#include <thread>

#include "nvm/errors.hpp"
#include "nvm/rng.hpp"

namespace nvm {

namespace {

// Shared-randomness update at v; u_neighbor is consumed only by the copy
// branch (and only when v has neighbors).
void apply_coupled(CoupledState& s, const Graph& g, int v, UpdateBranch branch,
                   double u_neighbor) {
    switch (branch) {
    case UpdateBranch::set_zero:
        s.x.set(v, false);
        s.y.set(v, false);
        break;
    case UpdateBranch::set_one:
        s.x.set(v, true);
        s.y.set(v, true);
        break;
    default:
        if (g.degrees[v] > 0) {
            const int u = g.adjacency[v][static_cast<int>(u_neighbor * g.degrees[v])];
            s.x.set(v, s.x.get(u));
            s.y.set(v, s.y.get(u));
        }
    }
}

} // namespace

DisagreementField disagreement_field(const CoupledState& s) { return s.x.xored(s.y); }

CoupledState coupled_update(const CoupledState& s, const Graph& g, const ModelParams& p,
                            int v, double branch_draw, double neighbor_draw) {
    if (v < 0 || v >= g.n)
        throw input_error("coupled_update: vertex " + std::to_string(v) + " out of range");
    p.validate();
    const UpdateRule rule(p);
    CoupledState out = s;
    apply_coupled(out, g, v, rule.select(branch_draw), neighbor_draw);
    return out;
}

CoupledTrajectory run_coupling(const Graph& g, const ModelParams& p, const Configuration& x0,
                               const Configuration& y0, double t_end, std::uint64_t seed,
                               std::uint64_t stream) {
    p.require_symmetric("run_coupling");
    if (x0.size() != g.n || y0.size() != g.n)
        throw input_error("run_coupling: configuration size mismatch");
    if (t_end < 0) throw input_error("run_coupling: t_end must be >= 0");

    CoupledTrajectory tr;
    tr.initial = {x0, y0, 0.0};
    tr.t_end = t_end;
    tr.final_state = tr.initial;
    if (g.n == 0 || t_end == 0) return tr;

    const UpdateRule rule(p);
    CounterRng rng(seed, stream);
    CoupledState& s = tr.final_state;
    for (;;) {
        const double dt = -std::log(rng.next_unit_open()) / g.n;
        if (s.time + dt > t_end) break;
        s.time += dt;
        const int v = rng.next_below(g.n);
        const UpdateBranch branch = rule.select(rng.next_unit());
        double u_nbr = 0;
        if (branch == UpdateBranch::copy_neighbor && g.degrees[v] > 0) u_nbr = rng.next_unit();
        apply_coupled(s, g, v, branch, u_nbr);
        tr.events.push_back({s.time, v, s.x.get(v), s.y.get(v), branch});
    }
    s.time = t_end;
    return tr;
}

MCurveEstimate estimate_M(const Graph& g, const ModelParams& p,
                          const std::vector<double>& t_grid, int replicas,
                          std::uint64_t seed, int workers) {
    p.require_symmetric("estimate_M");
    if (replicas < 1) throw input_error("estimate_M: need at least one replica");
    if (workers < 1) throw input_error("estimate_M: need at least one worker");
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        if (t_grid[k] < 0 || (k > 0 && t_grid[k] < t_grid[k - 1]))
            throw input_error("estimate_M: time grid must be sorted and nonnegative");
    }

    const int n = g.n;
    const std::size_t nt = t_grid.size();
    const UpdateRule rule(p);

    // Per-worker integer counts; summing them afterwards is order-independent,
    // so the estimate is byte-identical for any worker count.
    auto run_range = [&](int r_lo, int r_hi, std::vector<std::int64_t>& counts,
                         std::vector<std::int64_t>& any_counts) {
        counts.assign(nt * n, 0);
        any_counts.assign(nt, 0);
        for (int r = r_lo; r < r_hi; ++r) {
            CounterRng rng(seed, static_cast<std::uint64_t>(r));
            CoupledState s{Configuration::all_zero(n), Configuration::all_one(n), 0.0};
            std::size_t k = 0;
            double t = 0;
            while (k < nt) {
                const double t_next = t + -std::log(rng.next_unit_open()) / n;
                while (k < nt && t_grid[k] < t_next) {
                    const DisagreementField z = disagreement_field(s);
                    bool any = false;
                    for (int v = 0; v < n; ++v)
                        if (z.get(v)) { ++counts[k * n + v]; any = true; }
                    if (any) ++any_counts[k];
                    ++k;
                }
                if (k == nt) break;
                t = t_next;
                const int v = rng.next_below(n);
                const UpdateBranch branch = rule.select(rng.next_unit());
                double u_nbr = 0;
                if (branch == UpdateBranch::copy_neighbor && g.degrees[v] > 0)
                    u_nbr = rng.next_unit();
                apply_coupled(s, g, v, branch, u_nbr);
            }
        }
    };

    const int w = std::min(workers, replicas);
    std::vector<std::vector<std::int64_t>> counts(w), any_counts(w);
    if (w == 1) {
        run_range(0, replicas, counts[0], any_counts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < w; ++i) {
            const int lo = static_cast<int>(std::int64_t(replicas) * i / w);
            const int hi = static_cast<int>(std::int64_t(replicas) * (i + 1) / w);
            pool.emplace_back(run_range, lo, hi, std::ref(counts[i]), std::ref(any_counts[i]));
        }
        for (auto& th : pool) th.join();
    }
    for (int i = 1; i < w; ++i) {
        for (std::size_t j = 0; j < counts[0].size(); ++j) counts[0][j] += counts[i][j];
        for (std::size_t j = 0; j < nt; ++j) any_counts[0][j] += any_counts[i][j];
    }

    MCurveEstimate est;
    est.times = t_grid;
    est.replicas = replicas;
    est.seed = seed;
    est.p_hat.assign(nt, std::vector<double>(n, 0.0));
    est.std_error = est.p_hat;
    est.m_hat.assign(nt, 0.0);
    est.m_std_error.assign(nt, 0.0);
    est.argmax_vertex.assign(nt, 0);
    est.p_any.assign(nt, 0.0);
    const double R = replicas;
    for (std::size_t k = 0; k < nt; ++k) {
        int best = 0;
        for (int v = 0; v < n; ++v) {
            const double ph = counts[0][k * n + v] / R;
            est.p_hat[k][v] = ph;
            est.std_error[k][v] = std::sqrt(ph * (1.0 - ph) / R);
            if (ph > est.p_hat[k][best]) best = v;
        }
        est.argmax_vertex[k] = best;
        est.m_hat[k] = n > 0 ? est.p_hat[k][best] : 0.0;
        est.m_std_error[k] = n > 0 ? est.std_error[k][best] : 0.0;
        est.p_any[k] = any_counts[0][k] / R;
    }
    return est;
}

} // namespace nvm
