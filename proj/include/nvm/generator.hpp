#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nvm/dynamics.hpp"
#include "nvm/graph.hpp"

namespace nvm {

/// Hard cap on exact state spaces: 2^20 states, n * 2^n transition entries.
/// Larger instances must go through the Monte Carlo pipeline.
inline constexpr int kStateCap = 20;

/// Frozen boundary spins folded into interior rates: per interior vertex,
/// how many frozen neighbors it has and how many of them carry spin 1.
/// Interior degrees are then taken in the union of the box and its boundary.
struct FrozenBoundary {
    std::vector<int> ones;
    std::vector<int> degree;
};

/// Sparse rate matrix over the 2^n configuration space.  Only single-flip
/// transitions are nonzero, so the sparsity pattern is implicit: row s has
/// off-diagonal entries exactly at s ^ (1 << v).
struct GeneratorMatrix {
    int n_sites = 0;
    std::size_t dim = 0;        // 1 << n_sites
    std::vector<double> rates;  // rates[s * n_sites + v] = q(s, s ^ (1<<v))
    std::vector<double> diag;   // q(s, s) = -sum of the row's rates
    ModelParams params;         // parameters the generator was built from
    double max_exit = 0;        // max_s -diag[s]; the uniformization rate

    double rate(std::size_t s, int v) const { return rates[s * n_sites + v]; }
};

/// Generator of the spin chain: q(eta, eta^x) = flip_rate(x, eta).  With a
/// frozen boundary, interior vertices see the frozen spins as neighbors
/// (degree taken in the union graph) and boundary spins never flip.
GeneratorMatrix build_generator(const Graph& g, const ModelParams& p,
                                const FrozenBoundary* frozen = nullptr,
                                int cap = kStateCap);

/// Generator of the disagreement chain of the grand coupling:
///
///   q(eta, eta^v) = (2 delta/(2 delta+1)) * 1{eta(v)=1}
///                 + (1/(2 delta+1)) * (1/d(v)) * #{u ~ v : eta(u) != eta(v)},
///
/// empty-sum convention at d(v) = 0.  Requires delta = beta > 0.  Note the
/// all-zero state is absorbing: this chain is not ergodic.
GeneratorMatrix build_disagreement_generator(const Graph& g, const ModelParams& p,
                                             int cap = kStateCap);

} // namespace nvm
