#pragma once

#include <cstdint>
#include <vector>

#include "nvm/ctmc.hpp"

namespace nvm {

struct ReversibilityVerdict {
    bool reversible = true;
    double max_violation = 0;            // max |forward/backward product - 1|
    std::vector<std::uint64_t> witness;  // worst state cycle, closed (front == back)
    double witness_forward = 0;
    double witness_backward = 0;
};

/// Kolmogorov criterion over simple cycles of the single-flip transition
/// graph, enumerated through the minimal state on each cycle, up to
/// max_cycle_len (>= 3; flip cycles have even length >= 4).  Reversible iff
/// every cycle's forward and backward rate products agree within tol.
/// Capped at 10 sites; the enumeration is exponential.
ReversibilityVerdict kolmogorov_check(const GeneratorMatrix& Q, int max_cycle_len = 6,
                                      double tol = 1e-12);

/// Inverse temperature of the Ising chain matching the cycle dynamics:
/// (1/4) log(1 + 1/delta).
double ising_beta(double delta);

/// Gibbs measure proportional to exp(beta * sum_i sigma_i sigma_{i+1}) on
/// the n-cycle, sigma = 2 eta - 1.
DistributionVector ising_gibbs_measure(int n, double beta);

struct IsingCheckResult {
    double max_violation = 0; // max relative detailed-balance violation
    double beta = 0;          // inverse temperature used
    bool ok = false;          // max_violation <= tol
};

/// Detailed balance of every noisy voter transition on Z/nZ against the
/// Gibbs weights at beta_scale * ising_beta(delta).  beta_scale != 1 serves
/// as a negative control.
IsingCheckResult cycle_ising_equivalence_check(int n, double delta, double tol,
                                               double beta_scale = 1.0);

} // namespace nvm
