#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace nvm {

/// Ordinary least-squares line y = intercept + slope * x.
struct LineFit {
    double intercept = 0;
    double slope = 0;
    double residual_rms = 0;
    double slope_std_error = 0;
    std::size_t points = 0;
};

inline LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
    LineFit f;
    f.points = x.size();
    const std::size_t m = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < m; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ss += r * r;
    }
    f.residual_rms = std::sqrt(ss / m);
    if (m > 2) f.slope_std_error = std::sqrt(ss / double(m - 2) / sxx);
    return f;
}

} // namespace nvm
