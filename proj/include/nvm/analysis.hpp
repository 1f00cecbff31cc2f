#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nvm/ctmc.hpp"

namespace nvm {

struct TimeWindow {
    double t_lo = 0;
    double t_hi = 0;
};

/// Default fit window: the time span on which the curve lies in
/// [1e-8, 0.5], clear of the t ~ 0 transient and of the numerical floor.
TimeWindow default_fit_window(const std::vector<double>& times,
                              const std::vector<double>& values);

struct DecayFit {
    double C_hat = 0;
    double c_hat = 0;            // decay rate, 1/time
    double residual = 0;         // rms residual of the log-linear fit
    double c_hat_std_error = 0;  // regression standard error of the slope
    int points_used = 0;
    std::string source;          // "exact" | "monte-carlo"
};

/// Least-squares line through (t, log value) on the window; requires at
/// least 4 points with value > 1e-14, else a degenerate-fit input_error.
DecayFit fit_decay(const std::vector<double>& times, const std::vector<double>& values,
                   std::optional<TimeWindow> window = std::nullopt,
                   const std::string& source = "exact");

struct OtmRow {
    double t;
    double tv;      // tv between the chains started at all-0 and all-1
    double bound;   // n * exp(-2 delta t / (2 delta + 1))
    double margin;  // bound - tv
};

struct OtmReport {
    std::vector<OtmRow> rows;
    double C_used = 1.0;  // prefactor of the bound
    double c_used = 0;    // decay rate of the bound
};

/// Exact transient check of the optimal-temporal-mixing bound on a grid.
/// Requires delta = beta and the exact engine to apply.
OtmReport otm_bound_check(const Graph& g, const ModelParams& p,
                          const std::vector<double>& t_grid);

enum class GraphFamily { cycle, path, square_box };

const char* family_name(GraphFamily f);

struct ScalingRow {
    int n = 0;        // graph size
    double t_mix = 0;
    double bound = 0; // ((2 delta + 1)/(2 delta)) * log(n / eps)
};

struct MixingScan {
    GraphFamily family{};
    double delta = 0;
    double epsilon = 0;
    std::vector<ScalingRow> rows;
    double fit_a = 0;  // t_mix ~ a + b log n
    double fit_b = 0;
    double fit_residual = 0;
};

/// exact_mixing_time across a graph family.  square_box entries of n_list
/// must be perfect squares (side = sqrt(n)).
MixingScan mixing_scan(GraphFamily family, const std::vector<int>& n_list,
                       const ModelParams& p, double epsilon);

} // namespace nvm
