// Dual resolution graphs: weighted vertices (exceptional curves), edges
// (intersection points), derived intersection matrices and cycles.

#ifndef RESGRAPH_GRAPH_HPP
#define RESGRAPH_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resgraph/errors.hpp"
#include "resgraph/rational.hpp"

namespace resgraph {

/// One exceptional curve: E_i with genus g_i and self-intersection e_i = E_i^2.
struct CurveVertex {
    std::string name;
    int genus = 0;
    long long self_intersection = 0;
};

/// Intersection record between two distinct curves. The multiplicity is the
/// number of (transverse) intersection points, E_i . E_j.
struct Edge {
    std::string a;
    std::string b;
    long long multiplicity = 1;
};

/// Symmetric integer matrix (E_i . E_j). Diagonal entries are the
/// self-intersections, off-diagonal entries the edge multiplicities.
class IntersectionMatrix {
public:
    explicit IntersectionMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    std::size_t size() const { return n_; }

    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (at(i, j) != at(j, i)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const IntersectionMatrix& x, const IntersectionMatrix& y) {
        return x.n_ == y.n_ && x.entries_ == y.entries_;
    }

private:
    std::size_t n_;
    IntVector entries_;
};

/// Integer cycle Z = sum z_i E_i, indexed by the graph's vertex order.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(IntVector coefficients) : z_(std::move(coefficients)) {}

    static Cycle zero(std::size_t n) { return Cycle(IntVector(n)); }

    /// The reduced cycle sum E_i (all coefficients 1).
    static Cycle reduced(std::size_t n) { return Cycle(IntVector(n, 1)); }

    /// The single curve E_i as a cycle.
    static Cycle unit(std::size_t n, std::size_t i) {
        IntVector z(n);
        z.at(i) = 1;
        return Cycle(std::move(z));
    }

    std::size_t size() const { return z_.size(); }
    const Int& at(std::size_t i) const { return z_[i]; }
    Int& at(std::size_t i) { return z_[i]; }
    const IntVector& coefficients() const { return z_; }

    bool is_effective() const {
        return std::all_of(z_.begin(), z_.end(), [](const Int& c) { return c >= 0; });
    }

    bool is_nonzero() const {
        return std::any_of(z_.begin(), z_.end(), [](const Int& c) { return c != 0; });
    }

    friend Cycle operator+(const Cycle& x, const Cycle& y) {
        if (x.size() != y.size()) throw DimensionMismatch("cycle sizes differ");
        IntVector z(x.size());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = x.z_[i] + y.z_[i];
        return Cycle(std::move(z));
    }

    friend Cycle operator-(const Cycle& x, const Cycle& y) {
        if (x.size() != y.size()) throw DimensionMismatch("cycle sizes differ");
        IntVector z(x.size());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = x.z_[i] - y.z_[i];
        return Cycle(std::move(z));
    }

    friend bool operator==(const Cycle& x, const Cycle& y) { return x.z_ == y.z_; }

private:
    IntVector z_;
};

/// x <= y in every coordinate.
inline bool dominated_by(const Cycle& x, const Cycle& y) {
    if (x.size() != y.size()) throw DimensionMismatch("cycle sizes differ");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.at(i) > y.at(i)) return false;
    }
    return true;
}

/// The weighted dual graph of a resolution. Vertex order is declaration
/// order and fixes the row/column order of every derived matrix and vector.
/// Immutable after construction; repeated edge records for the same pair
/// aggregate their multiplicities.
class ResolutionGraph {
public:
    /// Internal, index-based edge with i < j.
    struct IndexedEdge {
        std::size_t i;
        std::size_t j;
        long long multiplicity;

        friend bool operator==(const IndexedEdge&, const IndexedEdge&) = default;
    };

    ResolutionGraph(std::vector<CurveVertex> vertices, const std::vector<Edge>& edges)
        : vertices_(std::move(vertices)) {
        if (vertices_.empty()) {
            throw GraphError("graph needs at least one vertex");
        }
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i].genus < 0) {
                throw GraphError("vertex '" + vertices_[i].name + "' has negative genus");
            }
            auto [it, fresh] = index_.emplace(vertices_[i].name, i);
            if (!fresh) {
                throw GraphError("duplicate vertex name '" + vertices_[i].name + "'");
            }
        }
        std::map<std::pair<std::size_t, std::size_t>, long long> mult;
        for (const Edge& e : edges) {
            const std::size_t i = require_index(e.a);
            const std::size_t j = require_index(e.b);
            if (i == j) {
                throw GraphError("self-loop on vertex '" + e.a + "' (components are smooth)");
            }
            if (e.multiplicity < 1) {
                throw GraphError("edge " + e.a + " " + e.b + " has multiplicity < 1");
            }
            mult[std::minmax(i, j)] += e.multiplicity;
        }
        edges_.reserve(mult.size());
        for (const auto& [pair, m] : mult) {
            edges_.push_back({pair.first, pair.second, m});
        }
    }

    std::size_t size() const { return vertices_.size(); }
    const CurveVertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<CurveVertex>& vertices() const { return vertices_; }

    /// Aggregated edges, sorted by index pair. Deterministic.
    const std::vector<IndexedEdge>& edges() const { return edges_; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) {
            throw GraphError("unknown vertex '" + name + "'");
        }
        return it->second;
    }

    long long multiplicity(std::size_t i, std::size_t j) const {
        if (i == j) return 0;
        const auto [lo, hi] = std::minmax(i, j);
        for (const IndexedEdge& e : edges_) {
            if (e.i == lo && e.j == hi) return e.multiplicity;
        }
        return 0;
    }

    /// Total number of intersection points, counting multiplicities.
    long long intersection_point_count() const {
        long long total = 0;
        for (const IndexedEdge& e : edges_) total += e.multiplicity;
        return total;
    }

    friend bool operator==(const ResolutionGraph& x, const ResolutionGraph& y) {
        if (x.size() != y.size() || x.edges_ != y.edges_) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const CurveVertex& a = x.vertices_[i];
            const CurveVertex& b = y.vertices_[i];
            if (a.name != b.name || a.genus != b.genus ||
                a.self_intersection != b.self_intersection) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<CurveVertex> vertices_;
    std::vector<IndexedEdge> edges_;
    std::map<std::string, std::size_t> index_;
};

/// Connected component count (edge multiplicities are irrelevant here).
inline std::size_t component_count(const ResolutionGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::size_t components = n;
    for (const auto& e : g.edges()) {
        const std::size_t a = find(e.i);
        const std::size_t b = find(e.j);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

inline bool is_connected(const ResolutionGraph& g) { return component_count(g) == 1; }

/// Whether the support {i : z_i != 0} induces a connected subgraph.
/// False for empty support.
inline bool support_connected(const Cycle& z, const ResolutionGraph& g) {
    if (z.size() != g.size()) throw DimensionMismatch("cycle does not match graph");
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z.at(i) != 0) support.push_back(i);
    }
    if (support.empty()) return false;
    std::vector<bool> in_support(g.size(), false);
    for (std::size_t i : support) in_support[i] = true;
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> stack{support.front()};
    seen[support.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges()) {
            std::size_t other;
            if (e.i == v) other = e.j;
            else if (e.j == v) other = e.i;
            else continue;
            if (in_support[other] && !seen[other]) {
                seen[other] = true;
                ++reached;
                stack.push_back(other);
            }
        }
    }
    return reached == support.size();
}

/// The intersection matrix of a graph: diagonal e_i, off-diagonal the edge
/// multiplicities. Symmetric by construction.
inline IntersectionMatrix build_matrix(const ResolutionGraph& g) {
    IntersectionMatrix a(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        a.at(i, i) = g.vertex(i).self_intersection;
    }
    for (const auto& e : g.edges()) {
        a.at(e.i, e.j) = e.multiplicity;
        a.at(e.j, e.i) = e.multiplicity;
    }
    return a;
}

/// The bilinear pairing Z1 . Z2 = Z1^T A Z2.
inline Int intersect(const Cycle& z1, const Cycle& z2, const IntersectionMatrix& a) {
    if (z1.size() != a.size() || z2.size() != a.size()) {
        throw DimensionMismatch("cycle/matrix dimensions differ");
    }
    Int total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (z1.at(i) == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (z2.at(j) != 0) row += a.at(i, j) * z2.at(j);
        }
        total += z1.at(i) * row;
    }
    return total;
}

/// All pairings (Z . E_i)_i = A Z at once.
inline IntVector vertex_pairings(const Cycle& z, const IntersectionMatrix& a) {
    if (z.size() != a.size()) {
        throw DimensionMismatch("cycle/matrix dimensions differ");
    }
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (z.at(j) != 0) r[i] += a.at(i, j) * z.at(j);
        }
    }
    return r;
}

/// Canonical intersection numbers k_i = K . E_i = -e_i + 2 g_i - 2
/// (adjunction on each component).
inline IntVector canonical_vector(const ResolutionGraph& g) {
    IntVector k(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        k[i] = Int(-g.vertex(i).self_intersection) + 2 * g.vertex(i).genus - 2;
    }
    return k;
}

/// Star-shaped graph: center C0 joined once to each of `leaves` leaves
/// C1..Cm. All components rational.
inline ResolutionGraph make_star_graph(std::size_t leaves, long long center_self,
                                       long long leaf_self) {
    std::vector<CurveVertex> vertices;
    std::vector<Edge> edges;
    vertices.push_back({"C0", 0, center_self});
    for (std::size_t i = 1; i <= leaves; ++i) {
        const std::string name = "C" + std::to_string(i);
        vertices.push_back({name, 0, leaf_self});
        edges.push_back({"C0", name, 1});
    }
    return ResolutionGraph(std::move(vertices), edges);
}

}  // namespace resgraph

#endif  // RESGRAPH_GRAPH_HPP
