#include "nvm/ctmc.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "nvm/errors.hpp"

namespace nvm {

namespace {

constexpr double kDefaultTransientTol = 1e-12;
constexpr double kStationaryResidual = 1e-10;
constexpr double kMixingResolution = 1e-4;
// Poisson series weights stay well inside double range for a <= this.
constexpr double kMaxSegmentMean = 350.0;

// out = v * (I + Q / lambda); the uniformized one-step kernel.
void apply_kernel(const GeneratorMatrix& Q, const double* v, double* out, double inv_lambda) {
    const std::size_t dim = Q.dim;
    const int n = Q.n_sites;
    std::fill(out, out + dim, 0.0);
    for (std::size_t s = 0; s < dim; ++s) {
        const double ps = v[s];
        if (ps == 0.0) continue;
        out[s] += ps * (1.0 + Q.diag[s] * inv_lambda);
        const double* r = &Q.rates[s * n];
        for (int b = 0; b < n; ++b) out[s ^ (std::size_t(1) << b)] += ps * r[b] * inv_lambda;
    }
}

// In-place uniformization advance of one distribution by time t.
void advance(const GeneratorMatrix& Q, std::vector<double>& p, double t, double tol) {
    if (t == 0 || Q.max_exit == 0) return;
    const int segments = std::max(1, int(std::ceil(Q.max_exit * t / kMaxSegmentMean)));
    const double tol_seg = tol / segments;
    const double a = Q.max_exit * (t / segments);
    const double inv_lambda = 1.0 / Q.max_exit;

    std::vector<double> acc(Q.dim), cur(Q.dim), nxt(Q.dim);
    for (int seg = 0; seg < segments; ++seg) {
        cur = p;
        double w = std::exp(-a); // Poisson(a) weight at k = 0
        double cum = w;
        for (std::size_t s = 0; s < Q.dim; ++s) acc[s] = w * cur[s];
        // Hard stop far beyond the mode; the cumulative test fires long before.
        const std::size_t k_max = std::size_t(a + 40.0 * std::sqrt(a + 1.0) + 100.0);
        for (std::size_t k = 1; cum < 1.0 - tol_seg && k <= k_max; ++k) {
            apply_kernel(Q, cur.data(), nxt.data(), inv_lambda);
            cur.swap(nxt);
            w *= a / double(k);
            cum += w;
            for (std::size_t s = 0; s < Q.dim; ++s) acc[s] += w * cur[s];
        }
        p = acc;
    }
}

double residual_inf(const GeneratorMatrix& Q, const std::vector<double>& p) {
    // || p Q ||_inf
    std::vector<double> y(Q.dim, 0.0);
    const int n = Q.n_sites;
    for (std::size_t s = 0; s < Q.dim; ++s) {
        const double ps = p[s];
        if (ps == 0.0) continue;
        y[s] += ps * Q.diag[s];
        const double* r = &Q.rates[s * n];
        for (int b = 0; b < n; ++b) y[s ^ (std::size_t(1) << b)] += ps * r[b];
    }
    double m = 0;
    for (double v : y) m = std::max(m, std::abs(v));
    return m;
}

// Irreducibility via BFS over nonzero off-diagonals, forward and backward.
void require_irreducible(const GeneratorMatrix& Q) {
    const std::size_t dim = Q.dim;
    const int n = Q.n_sites;
    auto bfs = [&](bool forward) -> std::size_t {
        std::vector<char> seen(dim, 0);
        std::deque<std::size_t> queue{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!queue.empty()) {
            const std::size_t s = queue.front();
            queue.pop_front();
            for (int b = 0; b < n; ++b) {
                const std::size_t t = s ^ (std::size_t(1) << b);
                const double r = forward ? Q.rate(s, b) : Q.rate(t, b);
                if (r > 0 && !seen[t]) {
                    seen[t] = 1;
                    ++count;
                    queue.push_back(t);
                }
            }
        }
        if (count == dim) return dim;
        for (std::size_t s = 0; s < dim; ++s)
            if (!seen[s]) return s;
        return dim;
    };
    if (std::size_t s = bfs(true); s != dim)
        throw input_error("chain is reducible: state " + std::to_string(s) +
                          " unreachable from state 0");
    if (std::size_t s = bfs(false); s != dim)
        throw input_error("chain is reducible: state 0 unreachable from state " +
                          std::to_string(s));
}

std::vector<double> stationary_direct(const GeneratorMatrix& Q) {
    // Solve A pi = e0 where A = Q^T with the row of state 0 replaced by the
    // normalization equation sum(pi) = 1.
    const std::size_t dim = Q.dim;
    const int n = Q.n_sites;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(dim * (n + 2));
    for (std::size_t s = 0; s < dim; ++s) trip.emplace_back(0, int(s), 1.0);
    for (std::size_t s = 0; s < dim; ++s) {
        if (s != 0) trip.emplace_back(int(s), int(s), Q.diag[s]);
        for (int b = 0; b < n; ++b) {
            const std::size_t t = s ^ (std::size_t(1) << b);
            if (t != 0) trip.emplace_back(int(t), int(s), Q.rate(s, b));
        }
    }
    Eigen::SparseMatrix<double> A(static_cast<int>(dim), static_cast<int>(dim));
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(A);
    lu.factorize(A);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("stationary: sparse factorization failed");
    Eigen::VectorXd b = Eigen::VectorXd::Zero(int(dim));
    b[0] = 1.0;
    Eigen::VectorXd x = lu.solve(b);
    std::vector<double> pi(dim);
    for (std::size_t s = 0; s < dim; ++s) pi[s] = std::max(0.0, x[int(s)]);
    return pi;
}

std::vector<double> stationary_power(const GeneratorMatrix& Q) {
    std::vector<double> p = uniform_distribution(Q.dim);
    double horizon = 1.0;
    for (int it = 0; it < 64; ++it) {
        advance(Q, p, horizon, 1e-13);
        if (residual_inf(Q, p) <= kStationaryResidual) return p;
        horizon = std::min(horizon * 2.0, 1024.0);
    }
    throw std::runtime_error("stationary: power refinement did not reach residual 1e-10");
}

void normalize(std::vector<double>& p) {
    double sum = 0;
    for (double v : p) sum += v;
    for (double& v : p) v /= sum;
}

} // namespace

DistributionVector point_mass(std::size_t dim, std::size_t state) {
    DistributionVector p(dim, 0.0);
    p.at(state) = 1.0;
    return p;
}

DistributionVector uniform_distribution(std::size_t dim) {
    return DistributionVector(dim, 1.0 / double(dim));
}

double tv_distance(const DistributionVector& mu1, const DistributionVector& mu2) {
    if (mu1.size() != mu2.size())
        throw input_error("tv_distance: dimension mismatch " + std::to_string(mu1.size()) +
                          " vs " + std::to_string(mu2.size()));
    double l1 = 0;
    for (std::size_t i = 0; i < mu1.size(); ++i) l1 += std::abs(mu1[i] - mu2[i]);
    return 0.5 * l1;
}

DistributionVector transient(const GeneratorMatrix& Q, const DistributionVector& p0,
                             double t, double tol) {
    if (p0.size() != Q.dim) throw input_error("transient: distribution dimension mismatch");
    if (t < 0) throw input_error("transient: t must be >= 0");
    DistributionVector p = p0;
    advance(Q, p, t, tol);
    return p;
}

DistributionVector stationary(const GeneratorMatrix& Q, std::size_t direct_limit) {
    require_irreducible(Q);
    std::vector<double> pi =
        Q.dim <= direct_limit ? stationary_direct(Q) : stationary_power(Q);
    normalize(pi);
    const double res = residual_inf(Q, pi);
    if (res > kStationaryResidual)
        throw std::runtime_error("stationary: residual " + std::to_string(res) +
                                 " exceeds 1e-10");
    return pi;
}

MixingTimeResult exact_mixing_time(const GeneratorMatrix& Q, double epsilon) {
    if (!(epsilon > 0 && epsilon < 1))
        throw input_error("exact_mixing_time: epsilon must lie in (0, 1)");
    const DistributionVector pi = stationary(Q);

    // Initial point masses to maximize over; TV to pi is convex in the
    // initial law, so point masses are exhaustive.  Beyond 10 sites only the
    // two extreme states are used (flagged in the result).
    std::vector<std::size_t> inits;
    const bool all_states = Q.n_sites <= 10;
    if (all_states)
        for (std::size_t s = 0; s < Q.dim; ++s) inits.push_back(s);
    else
        inits = {0, Q.dim - 1};

    std::vector<std::vector<double>> rows;
    rows.reserve(inits.size());
    for (std::size_t s : inits) rows.push_back(point_mass(Q.dim, s));

    auto advance_all = [&](std::vector<std::vector<double>>& rs, double dt) {
        for (auto& r : rs) advance(Q, r, dt, kDefaultTransientTol);
    };
    auto worst_tv = [&](const std::vector<std::vector<double>>& rs, std::size_t* arg) {
        double m = -1;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const double d = tv_distance(rs[i], pi);
            if (d > m) { m = d; if (arg) *arg = inits[i]; }
        }
        return m;
    };

    MixingTimeResult out;
    out.epsilon = epsilon;
    out.time_resolution = kMixingResolution;
    out.solver_tol = kDefaultTransientTol;
    out.initial_states = all_states ? "all-point-masses" : "extreme-states";

    std::size_t worst = 0;
    if (worst_tv(rows, &worst) <= epsilon) {
        out.t_mix = 0;
        out.worst_state = worst;
        return out;
    }

    // Bracket from the theorem's bound when the parameters allow, otherwise
    // (and as a fallback) grow by doubling.
    double hi = 10.0;
    if (Q.params.symmetric() && Q.params.delta > 0) {
        const double c = 2.0 * Q.params.delta / (2.0 * Q.params.delta + 1.0);
        hi = std::log(double(Q.n_sites) / epsilon) / c + 10.0;
    }
    double lo = 0;
    auto rows_hi = rows;
    advance_all(rows_hi, hi);
    while (worst_tv(rows_hi, nullptr) > epsilon) {
        lo = hi;
        rows = rows_hi;
        advance_all(rows_hi, hi);
        hi *= 2;
    }

    // Bisection; `rows` always holds the distributions at time lo.
    while (hi - lo > kMixingResolution) {
        const double mid = 0.5 * (lo + hi);
        auto rows_mid = rows;
        advance_all(rows_mid, mid - lo);
        if (worst_tv(rows_mid, nullptr) <= epsilon) {
            hi = mid;
        } else {
            lo = mid;
            rows = std::move(rows_mid);
        }
    }
    worst_tv(rows, &worst); // argmax at lo, where TV still exceeds epsilon
    out.t_mix = hi;
    out.worst_state = worst;
    return out;
}

MCurve exact_M_curve(const Graph& g, const ModelParams& p, const std::vector<double>& t_grid) {
    const GeneratorMatrix Q = build_disagreement_generator(g, p);
    for (std::size_t k = 0; k < t_grid.size(); ++k)
        if (t_grid[k] < 0 || (k > 0 && t_grid[k] < t_grid[k - 1]))
            throw input_error("exact_M_curve: time grid must be sorted and nonnegative");

    MCurve out;
    out.times = t_grid;
    out.m.reserve(t_grid.size());
    out.argmax_vertex.reserve(t_grid.size());

    // Tight tolerance: the bound is attained exactly on vertex-transitive
    // graphs, so accumulated truncation error must stay below 1e-10.
    DistributionVector pt = point_mass(Q.dim, Q.dim - 1);
    double prev = 0;
    for (double t : t_grid) {
        advance(Q, pt, t - prev, 1e-13);
        prev = t;
        double m = -1;
        int arg = 0;
        for (int v = 0; v < g.n; ++v) {
            double pv = 0;
            for (std::size_t s = 0; s < Q.dim; ++s)
                if ((s >> v) & 1) pv += pt[s];
            if (pv > m) { m = pv; arg = v; }
        }
        out.m.push_back(m);
        out.argmax_vertex.push_back(arg);
    }
    return out;
}

double master_eq_residual(const Graph& g, const ModelParams& p, int x, double t, double h) {
    if (x < 0 || x >= g.n)
        throw input_error("master_eq_residual: vertex " + std::to_string(x) + " out of range");
    if (!(h > 0)) throw input_error("master_eq_residual: h must be > 0");
    if (t - h < 0) throw input_error("master_eq_residual: need t - h >= 0");
    const GeneratorMatrix Q = build_disagreement_generator(g, p);
    const double tol = 1e-14; // the difference quotient amplifies solver error by 1/(2h)

    DistributionVector pm = transient(Q, point_mass(Q.dim, Q.dim - 1), t - h, tol);
    DistributionVector pt = transient(Q, pm, h, tol);
    DistributionVector pp = transient(Q, pt, h, tol);

    auto p_one = [&](const DistributionVector& d) {
        double s1 = 0;
        for (std::size_t s = 0; s < Q.dim; ++s)
            if ((s >> x) & 1) s1 += d[s];
        return s1;
    };
    const double lhs = (p_one(pp) - p_one(pm)) / (2.0 * h);

    const double c = 2.0 * p.delta / (2.0 * p.delta + 1.0);
    double rhs = -c * p_one(pt);
    const int d = g.degrees[x];
    if (d > 0) {
        double s10 = 0, s01 = 0; // P(Z(x)=1, Z(u)=0) and P(Z(x)=0, Z(u)=1) summed over u ~ x
        for (int u : g.adjacency[x]) {
            for (std::size_t s = 0; s < Q.dim; ++s) {
                const int zx = (s >> x) & 1, zu = (s >> u) & 1;
                if (zx == 1 && zu == 0) s10 += pt[s];
                else if (zx == 0 && zu == 1) s01 += pt[s];
            }
        }
        rhs += (s01 - s10) / ((2.0 * p.delta + 1.0) * d);
    }
    return std::abs(lhs - rhs);
}

} // namespace nvm
