// Topology of the exceptional configuration: first Betti number of the dual
// graph (counting intersection points, not abstract edges), h^1 of the
// structure sheaf, tree-of-rational-curves detection, and the rational
// homology sphere predicate for the singularity link.

#ifndef RESGRAPH_TOPOLOGY_HPP
#define RESGRAPH_TOPOLOGY_HPP

#include <cstddef>

#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/linalg.hpp"

namespace resgraph {

/// b_1 of the configuration: (number of intersection points) - n + (number
/// of connected components). A multiplicity-m edge contributes m points, so
/// curves meeting twice already create a loop.
inline long long first_betti(const ResolutionGraph& g) {
    return g.intersection_point_count() - static_cast<long long>(g.size()) +
           static_cast<long long>(component_count(g));
}

/// h^1(C, O_C) for the reduced curve C = union of the components: the sum of
/// the component genera plus the loop count of the configuration. Additive
/// over connected components.
inline long long h1_structure_sheaf(const ResolutionGraph& g) {
    long long genus_sum = 0;
    for (const CurveVertex& v : g.vertices()) genus_sum += v.genus;
    return genus_sum + first_betti(g);
}

/// True iff the configuration is a connected tree of smooth rational curves
/// meeting transversally in single points: all genera 0, all multiplicities
/// 1, connected, and edge count = vertex count - 1. Equivalent to
/// connectedness together with h1_structure_sheaf == 0.
inline bool is_rational_tree(const ResolutionGraph& g) {
    for (const CurveVertex& v : g.vertices()) {
        if (v.genus != 0) return false;
    }
    for (const auto& e : g.edges()) {
        if (e.multiplicity != 1) return false;
    }
    return is_connected(g) &&
           g.edges().size() == g.size() - 1;
}

/// Whether the link of the singularity obtained by contracting the
/// configuration is a rational homology sphere. For a contractible
/// (negative definite) graph this is equivalent to being a tree of rational
/// curves. Throws NotContractible when there is no singularity to speak of.
inline bool is_qhs_link(const ResolutionGraph& g) {
    if (!is_negative_definite(build_matrix(g))) {
        throw NotContractible("graph is not negative definite, so it has no link");
    }
    return is_rational_tree(g);
}

}  // namespace resgraph

#endif  // RESGRAPH_TOPOLOGY_HPP
