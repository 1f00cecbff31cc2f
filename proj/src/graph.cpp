#include "nvm/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "nvm/errors.hpp"

namespace nvm {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

std::string point_str(const LatticePoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

} // namespace

Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adjacency.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range: " + pair_str(u, v));
        if (u == v) throw input_error("self-loop rejected: " + pair_str(u, v));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw input_error("duplicate edge rejected: " + pair_str(u, v));
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    g.degrees.resize(n);
    for (int v = 0; v < n; ++v) {
        std::sort(g.adjacency[v].begin(), g.adjacency[v].end());
        g.degrees[v] = static_cast<int>(g.adjacency[v].size());
    }
    return g;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adjacency[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

Graph make_path(int n) {
    if (n < 1) throw input_error("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(e, n);
}

Graph make_cycle(int n) {
    if (n < 3) throw input_error("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(e, n);
}

Graph make_grid(int w, int h) {
    if (w < 1 || h < 1) throw input_error("grid sides must be positive");
    auto vid = [w](int x, int y) { return y * w + x; };
    std::vector<std::pair<int, int>> e;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) e.emplace_back(vid(x, y), vid(x + 1, y));
            if (y + 1 < h) e.emplace_back(vid(x, y), vid(x, y + 1));
        }
    Graph g = build_graph(e, w * h);
    g.coords.resize(g.n);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) g.coords[vid(x, y)] = {x, y};
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw input_error("complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(e, n);
}

Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw input_error("edge list: expected header 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw input_error("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        edges.emplace_back(u, v);
    }
    return build_graph(edges, n);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    auto edges = edge_list(g);
    out << g.n << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

Graph parse_graph_spec(const std::string& spec) {
    if (spec == "k2") return make_complete(2);
    auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw input_error("graph spec '" + spec + "': bad integer '" + s + "'");
        }
    };
    if (kind == "path") return make_path(parse_int(arg));
    if (kind == "cycle") return make_cycle(parse_int(arg));
    if (kind == "grid") {
        auto x = arg.find('x');
        if (x == std::string::npos)
            throw input_error("graph spec '" + spec + "': expected grid:WxH");
        return make_grid(parse_int(arg.substr(0, x)), parse_int(arg.substr(x + 1)));
    }
    throw input_error("unknown graph spec '" + spec +
                      "' (expected k2 | path:N | cycle:N | grid:WxH)");
}

int lattice_dist(const LatticePoint& u, const LatticePoint& v) {
    if (u.size() != v.size())
        throw input_error("lattice_dist: dimension mismatch " + point_str(u) + " vs " +
                          point_str(v));
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += std::abs(u[i] - v[i]);
    return d;
}

int dist_to_box(const LatticePoint& u, const std::vector<LatticePoint>& H) {
    if (H.empty()) throw input_error("dist_to_box: empty vertex set");
    int best = lattice_dist(u, H[0]);
    for (std::size_t i = 1; i < H.size(); ++i) best = std::min(best, lattice_dist(u, H[i]));
    return best;
}

LatticeBox build_lattice_box(int dim, const std::vector<LatticePoint>& vertices) {
    if (dim < 1) throw input_error("lattice dimension must be >= 1");
    if (vertices.empty()) throw input_error("lattice box needs at least one vertex");
    std::map<LatticePoint, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (static_cast<int>(vertices[i].size()) != dim)
            throw input_error("lattice point " + point_str(vertices[i]) +
                              " has wrong dimension");
        if (!index.emplace(vertices[i], static_cast<int>(i)).second)
            throw input_error("duplicate lattice point: " + point_str(vertices[i]));
    }

    // interior = induced subgraph of Z^d on the vertex set
    const int n = static_cast<int>(vertices.size());
    std::vector<std::pair<int, int>> edges;
    std::map<LatticePoint, std::vector<int>> outside; // boundary candidates
    for (int i = 0; i < n; ++i) {
        LatticePoint q = vertices[i];
        for (int ax = 0; ax < dim; ++ax) {
            for (int sgn : {1, -1}) {
                q[ax] += sgn;
                auto it = index.find(q);
                if (it != index.end()) {
                    if (i < it->second) edges.emplace_back(i, it->second);
                } else {
                    outside[q].push_back(i);
                }
                q[ax] -= sgn;
            }
        }
    }

    LatticeBox box;
    box.interior = build_graph(edges, n);
    box.interior.coords = vertices;
    box.boundary.reserve(outside.size());
    box.boundary_adjacency.reserve(outside.size());
    for (auto& [pt, nbrs] : outside) {
        box.boundary.push_back(pt);
        std::sort(nbrs.begin(), nbrs.end());
        box.boundary_adjacency.push_back(nbrs);
    }
    return box;
}

LatticeBox build_lattice_cuboid(const std::vector<std::pair<int, int>>& axes) {
    if (axes.empty()) throw input_error("cuboid needs at least one axis");
    for (auto [lo, hi] : axes)
        if (lo > hi)
            throw input_error("cuboid axis range " + std::to_string(lo) + ".." +
                              std::to_string(hi) + " is empty");
    std::vector<LatticePoint> pts;
    LatticePoint cur(axes.size());
    // odometer over the cuboid
    for (std::size_t i = 0; i < axes.size(); ++i) cur[i] = axes[i].first;
    for (;;) {
        pts.push_back(cur);
        std::size_t ax = 0;
        while (ax < axes.size()) {
            if (++cur[ax] <= axes[ax].second) break;
            cur[ax] = axes[ax].first;
            ++ax;
        }
        if (ax == axes.size()) break;
    }
    return build_lattice_box(static_cast<int>(axes.size()), pts);
}

int boundary_index_of(const LatticeBox& box, const LatticePoint& u) {
    auto it = std::lower_bound(box.boundary.begin(), box.boundary.end(), u);
    if (it == box.boundary.end() || *it != u)
        throw input_error("vertex " + point_str(u) + " is not on the boundary");
    return static_cast<int>(it - box.boundary.begin());
}

} // namespace nvm
