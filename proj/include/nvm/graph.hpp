#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nvm {

using LatticePoint = std::vector<int>;

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
/// Optionally carries an embedding into Z^d (one lattice point per vertex),
/// in which case every edge joins points at L1 distance 1.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adjacency; // sorted neighbor lists
    std::vector<int> degrees;
    std::vector<LatticePoint> coords;        // empty, or one point per vertex

    bool has_coords() const { return !coords.empty(); }
};

/// Canonical graph from an edge list.  Rejects self-loops, out-of-range
/// endpoints and duplicate edges, naming the offending pair.
Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n);

/// Edges back out of a graph, each as (u, v) with u < v, sorted.
std::vector<std::pair<int, int>> edge_list(const Graph& g);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_grid(int w, int h); // w x h box of Z^2, coords attached
Graph make_complete(int n);

/// Text format: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

/// Shorthands: "k2" | "path:N" | "cycle:N" | "grid:WxH".
Graph parse_graph_spec(const std::string& spec);

/// L1 distance between lattice points of equal dimension.
int lattice_dist(const LatticePoint& u, const LatticePoint& v);

/// min over v in H of lattice_dist(u, v); H must be nonempty.
int dist_to_box(const LatticePoint& u, const std::vector<LatticePoint>& H);

/// A finite induced subgraph of Z^d together with its boundary: the lattice
/// points outside the vertex set that neighbor at least one interior vertex.
/// Boundary vertices are kept separate from the interior graph; they only
/// ever enter the dynamics as frozen spins.
struct LatticeBox {
    Graph interior;
    std::vector<LatticePoint> boundary;                // sorted lexicographically
    std::vector<std::vector<int>> boundary_adjacency;  // per boundary vertex: interior ids
};

LatticeBox build_lattice_box(int dim, const std::vector<LatticePoint>& vertices);

/// Cuboid convenience: one inclusive (lo, hi) range per axis.
LatticeBox build_lattice_cuboid(const std::vector<std::pair<int, int>>& axes);

/// Index of a boundary vertex by its coordinates; input_error if absent.
int boundary_index_of(const LatticeBox& box, const LatticePoint& u);

} // namespace nvm
