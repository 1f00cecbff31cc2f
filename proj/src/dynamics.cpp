#include "nvm/dynamics.hpp"

#include <cmath>

#include "nvm/errors.hpp"
#include "nvm/rng.hpp"

namespace nvm {

void ModelParams::validate() const {
    if (!(delta >= 0) || !(beta >= 0) || !std::isfinite(delta) || !std::isfinite(beta))
        throw input_error("model parameters must be finite and nonnegative");
}

void ModelParams::require_ergodic(const char* op) const {
    validate();
    if (!ergodic())
        throw input_error(std::string(op) +
                          ": requires delta > 0 and beta > 0 (the pure voter model is not ergodic)");
}

void ModelParams::require_symmetric(const char* op) const {
    validate();
    if (!symmetric())
        throw input_error(std::string(op) + ": requires delta = beta");
}

Configuration flip(const Configuration& config, int x) {
    if (x < 0 || x >= config.size())
        throw input_error("flip: vertex " + std::to_string(x) + " out of range");
    Configuration c = config;
    c.flip(x);
    return c;
}

double flip_rate(int x, const Configuration& config, const Graph& g, const ModelParams& p) {
    if (x < 0 || x >= g.n)
        throw input_error("flip_rate: vertex " + std::to_string(x) + " out of range");
    p.validate();
    const bool sx = config.get(x);
    int disagree = 0;
    for (int y : g.adjacency[x])
        if (config.get(y) != sx) ++disagree;
    const int d = g.degrees[x];
    const double neighbor_term = d > 0 ? double(disagree) / d : 0.0;
    return (neighbor_term + (sx ? p.beta : p.delta)) / p.total();
}

Trajectory simulate(const Graph& g, const ModelParams& p, const Configuration& init,
                    double t_end, std::uint64_t seed, std::uint64_t stream) {
    p.validate();
    if (init.size() != g.n) throw input_error("simulate: initial configuration size mismatch");
    if (t_end < 0) throw input_error("simulate: t_end must be >= 0");

    Trajectory tr;
    tr.initial = init;
    tr.t_end = t_end;
    tr.final_config = init;
    if (g.n == 0 || t_end == 0) return tr;

    const UpdateRule rule(p);
    CounterRng rng(seed, stream);
    Configuration& cfg = tr.final_config;
    double t = 0;
    for (;;) {
        t += -std::log(rng.next_unit_open()) / g.n; // superposed rate-n clock
        if (t > t_end) break;
        const int v = rng.next_below(g.n);
        const UpdateBranch branch = rule.select(rng.next_unit());
        bool spin;
        switch (branch) {
        case UpdateBranch::set_zero: spin = false; break;
        case UpdateBranch::set_one: spin = true; break;
        default:
            if (g.degrees[v] == 0) {
                spin = cfg.get(v); // no neighbor to copy; resample is a no-op
            } else {
                const int u = g.adjacency[v][static_cast<int>(rng.next_unit() * g.degrees[v])];
                spin = cfg.get(u);
            }
        }
        cfg.set(v, spin);
        tr.events.push_back({t, v, spin, branch});
    }
    return tr;
}

} // namespace nvm
