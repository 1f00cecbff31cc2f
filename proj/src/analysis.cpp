#include "nvm/analysis.hpp"

#include <cmath>

#include "nvm/errors.hpp"
#include "nvm/linfit.hpp"

namespace nvm {

TimeWindow default_fit_window(const std::vector<double>& times,
                              const std::vector<double>& values) {
    TimeWindow w{0, 0};
    bool open = false;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (values[i] <= 0.5 && values[i] >= 1e-8) {
            if (!open) { w.t_lo = times[i]; open = true; }
            w.t_hi = times[i];
        }
    }
    if (!open) throw input_error("fit window: no points with value in [1e-8, 0.5]");
    return w;
}

DecayFit fit_decay(const std::vector<double>& times, const std::vector<double>& values,
                   std::optional<TimeWindow> window, const std::string& source) {
    if (times.size() != values.size()) throw input_error("fit_decay: size mismatch");
    const TimeWindow w = window ? *window : default_fit_window(times, values);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] >= w.t_lo && times[i] <= w.t_hi && values[i] > 1e-14) {
            xs.push_back(times[i]);
            ys.push_back(std::log(values[i]));
        }
    }
    if (xs.size() < 4)
        throw input_error("fit_decay: degenerate fit, need >= 4 usable points in the window, got " +
                          std::to_string(xs.size()));
    const LineFit fit = least_squares_line(xs, ys);
    DecayFit out;
    out.C_hat = std::exp(fit.intercept);
    out.c_hat = -fit.slope;
    out.residual = fit.residual_rms;
    out.c_hat_std_error = fit.slope_std_error;
    out.points_used = static_cast<int>(xs.size());
    out.source = source;
    return out;
}

OtmReport otm_bound_check(const Graph& g, const ModelParams& p,
                          const std::vector<double>& t_grid) {
    p.require_symmetric("otm_bound_check");
    const GeneratorMatrix Q = build_generator(g, p);
    for (std::size_t k = 0; k < t_grid.size(); ++k)
        if (t_grid[k] < 0 || (k > 0 && t_grid[k] < t_grid[k - 1]))
            throw input_error("otm_bound_check: time grid must be sorted and nonnegative");

    OtmReport report;
    report.c_used = 2.0 * p.delta / (2.0 * p.delta + 1.0);

    DistributionVector p0 = point_mass(Q.dim, 0);
    DistributionVector p1 = point_mass(Q.dim, Q.dim - 1);
    double prev = 0;
    for (double t : t_grid) {
        p0 = transient(Q, p0, t - prev, 1e-13);
        p1 = transient(Q, p1, t - prev, 1e-13);
        prev = t;
        OtmRow row;
        row.t = t;
        row.tv = tv_distance(p0, p1);
        row.bound = g.n * std::exp(-report.c_used * t);
        row.margin = row.bound - row.tv;
        report.rows.push_back(row);
    }
    return report;
}

const char* family_name(GraphFamily f) {
    switch (f) {
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::path: return "path";
    default: return "square-box";
    }
}

MixingScan mixing_scan(GraphFamily family, const std::vector<int>& n_list,
                       const ModelParams& p, double epsilon) {
    p.require_symmetric("mixing_scan");
    p.require_ergodic("mixing_scan");
    MixingScan scan;
    scan.family = family;
    scan.delta = p.delta;
    scan.epsilon = epsilon;

    std::vector<double> log_n, t_mix;
    for (int n : n_list) {
        Graph g;
        switch (family) {
        case GraphFamily::cycle: g = make_cycle(n); break;
        case GraphFamily::path: g = make_path(n); break;
        default: {
            const int side = static_cast<int>(std::lround(std::sqrt(double(n))));
            if (side * side != n)
                throw input_error("mixing_scan: square-box size " + std::to_string(n) +
                                  " is not a perfect square");
            g = make_grid(side, side);
        }
        }
        const GeneratorMatrix Q = build_generator(g, p);
        const MixingTimeResult r = exact_mixing_time(Q, epsilon);
        ScalingRow row;
        row.n = n;
        row.t_mix = r.t_mix;
        row.bound = (2.0 * p.delta + 1.0) / (2.0 * p.delta) * std::log(double(n) / epsilon);
        scan.rows.push_back(row);
        log_n.push_back(std::log(double(n)));
        t_mix.push_back(r.t_mix);
    }
    if (scan.rows.size() >= 2) {
        const LineFit fit = least_squares_line(log_n, t_mix);
        scan.fit_a = fit.intercept;
        scan.fit_b = fit.slope;
        scan.fit_residual = fit.residual_rms;
    }
    return scan;
}

} // namespace nvm
