#include <catch2/catch_amalgamated.hpp>

#include "resgraph/topology.hpp"

#include <random>

#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "oracles.hpp"

using namespace resgraph;

namespace {

ResolutionGraph triangle() {
    return ResolutionGraph({{"A", 0, -2}, {"B", 0, -2}, {"C", 0, -2}},
                           {{"A", "B", 1}, {"B", "C", 1}, {"C", "A", 1}});
}

ResolutionGraph double_edge() {
    return ResolutionGraph({{"A", 0, -3}, {"B", 0, -3}}, {{"A", "B", 2}});
}

}  // namespace

TEST_CASE("first_betti counts intersection points minus vertices plus components") {
    CHECK(first_betti(make_star_graph(4, -2, -3)) == 0);
    CHECK(first_betti(triangle()) == 1);
    CHECK(first_betti(double_edge()) == 1);
    CHECK(first_betti(ResolutionGraph({{"A", 0, -2}, {"B", 0, -2}}, {})) == 0);
    CHECK(first_betti(ResolutionGraph({{"A", 3, -2}}, {})) == 0);
}

TEST_CASE("first_betti is invariant under vertex reordering") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 30; ++trial) {
        const ResolutionGraph g = testutil::random_connected_graph(rng, 6, 1, true);
        const auto perm = testutil::random_permutation(rng, g.size());
        std::vector<CurveVertex> vertices;
        for (std::size_t i : perm) vertices.push_back(g.vertex(i));
        std::vector<Edge> edges;
        for (const auto& e : g.edges()) {
            edges.push_back({g.vertex(e.i).name, g.vertex(e.j).name, e.multiplicity});
        }
        const ResolutionGraph shuffled(std::move(vertices), edges);
        CHECK(first_betti(shuffled) == first_betti(g));
        CHECK(h1_structure_sheaf(shuffled) == h1_structure_sheaf(g));
    }
}

TEST_CASE("adding an intersection point raises first_betti by one") {
    std::mt19937_64 rng(607);
    for (int trial = 0; trial < 30; ++trial) {
        const ResolutionGraph g = testutil::random_connected_graph(rng, 6, 1, true);
        if (g.size() < 2) continue;
        std::vector<Edge> edges;
        for (const auto& e : g.edges()) {
            edges.push_back({g.vertex(e.i).name, g.vertex(e.j).name, e.multiplicity});
        }
        // Raise the multiplicity of an existing pair (or join two vertices).
        edges.push_back({g.vertex(0).name, g.vertex(1).name, 1});
        const ResolutionGraph more(g.vertices(), edges);
        CHECK(first_betti(more) == first_betti(g) + 1);
    }
}

TEST_CASE("h1_structure_sheaf adds genera to the loop count") {
    CHECK(h1_structure_sheaf(make_star_graph(4, -2, -3)) == 0);
    CHECK(h1_structure_sheaf(ResolutionGraph({{"E", 1, -1}}, {})) == 1);
    CHECK(h1_structure_sheaf(triangle()) == 1);
    CHECK(h1_structure_sheaf(double_edge()) == 1);
    CHECK(h1_structure_sheaf(ResolutionGraph({{"A", 2, -2}, {"B", 1, -2}}, {{"A", "B", 1}})) ==
          3);
    // Disconnected: sums per component.
    CHECK(h1_structure_sheaf(ResolutionGraph({{"A", 1, -2}, {"B", 1, -2}}, {})) == 2);
}

TEST_CASE("is_rational_tree") {
    CHECK(is_rational_tree(make_star_graph(4, -2, -3)));
    for (long long g = 0; g <= 5; ++g) {
        CHECK(is_rational_tree(make_star_graph(static_cast<std::size_t>(g) + 3, -2, -(g + 3))));
    }
    CHECK(is_rational_tree(ResolutionGraph({{"E", 0, -2}}, {})));
    CHECK_FALSE(is_rational_tree(ResolutionGraph({{"E", 1, -1}}, {})));
    CHECK_FALSE(is_rational_tree(triangle()));
    CHECK_FALSE(is_rational_tree(double_edge()));
    CHECK_FALSE(is_rational_tree(ResolutionGraph({{"A", 0, -2}, {"B", 0, -2}}, {})));
}

TEST_CASE("h1 vanishes exactly on rational trees (connected case)") {
    std::mt19937_64 rng(608);
    for (int trial = 0; trial < 80; ++trial) {
        const ResolutionGraph g = testutil::random_connected_graph(rng, 4, 1, true);
        CHECK((h1_structure_sheaf(g) == 0) == is_rational_tree(g));
    }
}

TEST_CASE("is_qhs_link") {
    CHECK(is_qhs_link(make_star_graph(4, -2, -3)));
    CHECK(is_qhs_link(make_star_graph(5, -2, -5)));
    // A single elliptic curve contracts, but the link is not a QHS.
    CHECK_FALSE(is_qhs_link(ResolutionGraph({{"E", 1, -1}}, {})));
    // Non-contractible input has no link at all.
    CHECK_THROWS_AS(is_qhs_link(ResolutionGraph({{"E", 0, 0}}, {})), NotContractible);
    CHECK_THROWS_AS(is_qhs_link(make_star_graph(4, -2, -2)), NotContractible);
}
