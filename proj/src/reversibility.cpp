#include "nvm/reversibility.hpp"

#include <bit>
#include <cmath>

#include "nvm/errors.hpp"
#include "nvm/graph.hpp"

namespace nvm {

ReversibilityVerdict kolmogorov_check(const GeneratorMatrix& Q, int max_cycle_len, double tol) {
    if (max_cycle_len < 3) throw input_error("kolmogorov_check: max_cycle_len must be >= 3");
    if (Q.n_sites > 10)
        throw resource_error("kolmogorov_check: cycle enumeration capped at 10 sites");

    ReversibilityVerdict verdict;

    // DFS over simple cycles of the flip graph, rooted at the minimal state
    // of each cycle so every cycle is visited once up to rotation.  Flip
    // cycles have even length >= 4, so nothing shorter can close.
    const int n = Q.n_sites;
    std::vector<std::uint64_t> path;
    std::vector<char> on_path(Q.dim, 0);

    auto consider = [&](std::uint64_t base) {
        double fwd = 1.0, bwd = 1.0;
        bool nonzero = true;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const std::uint64_t a = path[i];
            const std::uint64_t b = i + 1 < path.size() ? path[i + 1] : base;
            const int bit = std::countr_zero(a ^ b);
            const double qf = Q.rate(a, bit), qb = Q.rate(b, bit);
            if (qf <= 0 || qb <= 0) { nonzero = false; break; }
            fwd *= qf;
            bwd *= qb;
        }
        if (!nonzero) return;
        const double viol = std::abs(fwd / bwd - 1.0);
        if (viol > verdict.max_violation) {
            verdict.max_violation = viol;
            if (viol > tol) {
                verdict.witness = path;
                verdict.witness.push_back(base);
                verdict.witness_forward = fwd;
                verdict.witness_backward = bwd;
            }
        }
    };

    auto dfs = [&](auto&& self, std::uint64_t base, std::uint64_t cur) -> void {
        for (int b = 0; b < n; ++b) {
            const std::uint64_t nxt = cur ^ (std::uint64_t(1) << b);
            if (nxt == base) {
                if (path.size() >= 4) consider(base);
            } else if (nxt > base && !on_path[nxt] &&
                       static_cast<int>(path.size()) < max_cycle_len) {
                path.push_back(nxt);
                on_path[nxt] = 1;
                self(self, base, nxt);
                on_path[nxt] = 0;
                path.pop_back();
            }
        }
    };

    for (std::uint64_t base = 0; base < Q.dim; ++base) {
        path.assign(1, base);
        on_path[base] = 1;
        dfs(dfs, base, base);
        on_path[base] = 0;
    }
    verdict.reversible = verdict.max_violation <= tol;
    return verdict;
}

double ising_beta(double delta) {
    if (!(delta > 0)) throw input_error("ising_beta: delta must be > 0");
    return 0.25 * std::log(1.0 + 1.0 / delta);
}

DistributionVector ising_gibbs_measure(int n, double beta) {
    if (n < 3) throw input_error("ising_gibbs_measure: cycle length must be >= 3");
    const std::size_t dim = std::size_t(1) << n;
    DistributionVector mu(dim);
    double z = 0;
    for (std::size_t s = 0; s < dim; ++s) {
        int energy = 0; // sum of sigma_i sigma_{i+1}, sigma = 2 eta - 1
        for (int i = 0; i < n; ++i) {
            const int si = (s >> i) & 1, sj = (s >> ((i + 1) % n)) & 1;
            energy += si == sj ? 1 : -1;
        }
        mu[s] = std::exp(beta * energy);
        z += mu[s];
    }
    for (auto& w : mu) w /= z;
    return mu;
}

IsingCheckResult cycle_ising_equivalence_check(int n, double delta, double tol,
                                               double beta_scale) {
    if (n < 3) throw input_error("cycle_ising_equivalence_check: cycle length must be >= 3");
    const Graph g = make_cycle(n);
    const GeneratorMatrix Q = build_generator(g, ModelParams(delta));
    IsingCheckResult out;
    out.beta = beta_scale * ising_beta(delta);
    const DistributionVector mu = ising_gibbs_measure(n, out.beta);
    for (std::size_t s = 0; s < Q.dim; ++s) {
        for (int x = 0; x < n; ++x) {
            const std::size_t s2 = s ^ (std::size_t(1) << x);
            const double lhs = mu[s] * Q.rate(s, x);
            const double rhs = mu[s2] * Q.rate(s2, x);
            const double viol = std::abs(lhs - rhs) / std::max(lhs, rhs);
            out.max_violation = std::max(out.max_violation, viol);
        }
    }
    out.ok = out.max_violation <= tol;
    return out;
}

} // namespace nvm
