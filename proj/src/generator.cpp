#include "nvm/generator.hpp"

#include <string>

#include "nvm/errors.hpp"

namespace nvm {

namespace {

void check_cap(const Graph& g, int cap, const char* op) {
    if (cap < 1 || cap > kStateCap)
        throw input_error(std::string(op) + ": cap must be in [1, " +
                          std::to_string(kStateCap) + "]");
    if (g.n > cap)
        throw resource_error(std::string(op) + ": " + std::to_string(g.n) +
                             " vertices exceed the exact-state cap of " + std::to_string(cap) +
                             " (2^n states); use the Monte Carlo pipeline instead");
}

void finalize(GeneratorMatrix& Q) {
    Q.max_exit = 0;
    for (std::size_t s = 0; s < Q.dim; ++s) {
        double sum = 0;
        for (int v = 0; v < Q.n_sites; ++v) sum += Q.rates[s * Q.n_sites + v];
        Q.diag[s] = -sum;
        if (sum > Q.max_exit) Q.max_exit = sum;
    }
}

} // namespace

GeneratorMatrix build_generator(const Graph& g, const ModelParams& p,
                                const FrozenBoundary* frozen, int cap) {
    check_cap(g, cap, "build_generator");
    p.require_ergodic("build_generator");
    if (frozen && (static_cast<int>(frozen->ones.size()) != g.n ||
                   static_cast<int>(frozen->degree.size()) != g.n))
        throw input_error("build_generator: frozen boundary field size mismatch");

    GeneratorMatrix Q;
    Q.n_sites = g.n;
    Q.dim = std::size_t(1) << g.n;
    Q.params = p;
    Q.rates.resize(Q.dim * g.n);
    Q.diag.resize(Q.dim);

    const double S = p.total();
    for (std::size_t s = 0; s < Q.dim; ++s) {
        for (int x = 0; x < g.n; ++x) {
            const int sx = (s >> x) & 1;
            int disagree = 0;
            for (int y : g.adjacency[x]) disagree += ((s >> y) & 1) != sx;
            int d = g.degrees[x];
            if (frozen) {
                d += frozen->degree[x];
                disagree += sx ? frozen->degree[x] - frozen->ones[x] : frozen->ones[x];
            }
            const double neighbor_term = d > 0 ? double(disagree) / d : 0.0;
            Q.rates[s * g.n + x] = (neighbor_term + (sx ? p.beta : p.delta)) / S;
        }
    }
    finalize(Q);
    return Q;
}

GeneratorMatrix build_disagreement_generator(const Graph& g, const ModelParams& p, int cap) {
    check_cap(g, cap, "build_disagreement_generator");
    p.require_ergodic("build_disagreement_generator");
    p.require_symmetric("build_disagreement_generator");

    GeneratorMatrix Q;
    Q.n_sites = g.n;
    Q.dim = std::size_t(1) << g.n;
    Q.params = p;
    Q.rates.resize(Q.dim * g.n);
    Q.diag.resize(Q.dim);

    const double noise = 2.0 * p.delta / (2.0 * p.delta + 1.0);
    const double copy = 1.0 / (2.0 * p.delta + 1.0);
    for (std::size_t s = 0; s < Q.dim; ++s) {
        for (int v = 0; v < g.n; ++v) {
            const int sv = (s >> v) & 1;
            int disagree = 0;
            for (int u : g.adjacency[v]) disagree += ((s >> u) & 1) != sv;
            const int d = g.degrees[v];
            double r = sv ? noise : 0.0;
            if (d > 0) r += copy * double(disagree) / d;
            Q.rates[s * g.n + v] = r;
        }
    }
    finalize(Q);
    return Q;
}

} // namespace nvm
