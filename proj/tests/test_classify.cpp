#include <catch2/catch_amalgamated.hpp>

#include "resgraph/classify.hpp"

#include <random>

#include "resgraph/cycles.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/linalg.hpp"
#include "oracles.hpp"

using namespace resgraph;

namespace {

ResolutionGraph star_ex61() { return make_star_graph(4, -2, -3); }

Rational q(long long num, long long den = 1) { return make_rational(num, den); }

}  // namespace

TEST_CASE("discrepancies of the five-curve star") {
    const DiscrepancyVector d = discrepancies(star_ex61());
    REQUIRE(d.values.size() == 5);
    CHECK(d.values[0] == q(-2));
    for (std::size_t i = 1; i < 5; ++i) CHECK(d.values[i] == q(-1));
    CHECK(d.min() == q(-2));
}

TEST_CASE("discrepancies of single curves") {
    const DiscrepancyVector cusp = discrepancies(ResolutionGraph({{"E", 0, -3}}, {}));
    REQUIRE(cusp.values.size() == 1);
    CHECK(cusp.values[0] == q(-1, 3));

    const DiscrepancyVector ade = discrepancies(ResolutionGraph({{"E", 0, -2}}, {}));
    CHECK(ade.values[0] == q(0));

    const DiscrepancyVector exceptional = discrepancies(ResolutionGraph({{"E", 0, -1}}, {}));
    CHECK(exceptional.values[0] == q(1));

    const DiscrepancyVector elliptic = discrepancies(ResolutionGraph({{"E", 1, -4}}, {}));
    CHECK(elliptic.values[0] == q(-1));
}

TEST_CASE("discrepancies require negative definiteness") {
    CHECK_THROWS_AS(discrepancies(ResolutionGraph({{"E", 0, 1}, {"F", 0, -2}}, {})),
                    NotContractible);
    CHECK_THROWS_AS(discrepancies(make_star_graph(4, -2, -2)), NotContractible);
}

TEST_CASE("discrepancies solve the adjunction system exactly") {
    std::mt19937_64 rng(821);
    for (int trial = 0; trial < 40; ++trial) {
        const ResolutionGraph g = testutil::random_connected_nd_graph(rng);
        const DiscrepancyVector d = discrepancies(g);
        const QMatrix a = to_rational_matrix(build_matrix(g));
        const QVector lhs = matrix_vector_product(a, d.values);
        const IntVector k = canonical_vector(g);
        REQUIRE(lhs.size() == k.size());
        for (std::size_t i = 0; i < k.size(); ++i) CHECK(lhs[i] == Rational(k[i]));
    }
}

TEST_CASE("ADE configurations have zero discrepancies") {
    // Any negative definite graph of (-2)-curves of genus 0 solves A*a = 0.
    std::mt19937_64 rng(822);
    int found = 0;
    while (found < 10) {
        ResolutionGraph g = testutil::random_connected_graph(rng, 5, 0, false);
        std::vector<CurveVertex> flat;
        for (std::size_t i = 0; i < g.size(); ++i) {
            flat.push_back({g.vertex(i).name, 0, -2});
        }
        std::vector<Edge> edges;
        for (const auto& e : g.edges()) {
            edges.push_back({g.vertex(e.i).name, g.vertex(e.j).name, e.multiplicity});
        }
        const ResolutionGraph ade(flat, edges);
        if (!is_negative_definite(build_matrix(ade))) continue;
        ++found;
        for (const Rational& value : discrepancies(ade).values) CHECK(value == q(0));
    }
}

TEST_CASE("discrepancy values follow vertices under relabeling") {
    const ResolutionGraph g = star_ex61();
    const ResolutionGraph permuted(
        {{"C2", 0, -3}, {"C0", 0, -2}, {"C4", 0, -3}, {"C1", 0, -3}, {"C3", 0, -3}},
        {{"C0", "C1", 1}, {"C0", "C2", 1}, {"C0", "C3", 1}, {"C0", "C4", 1}});
    const DiscrepancyVector d = discrepancies(permuted);
    CHECK(d.values[permuted.index_of("C0").value()] == q(-2));
    CHECK(d.values[permuted.index_of("C2").value()] == q(-1));
    CHECK(d.min() == discrepancies(g).min());
}

TEST_CASE("classification thresholds") {
    const auto classify_min = [](const Rational& m) {
        DiscrepancyVector d;
        d.values = {m};
        return classify_discrepancies(d);
    };
    CHECK(classify_min(q(0)) == Classification::canonical);
    CHECK(classify_min(q(3)) == Classification::canonical);
    CHECK(classify_min(q(-1, 2)) == Classification::log_terminal);
    CHECK(classify_min(q(-1)) == Classification::log_canonical);
    CHECK(classify_min(q(-3, 2)) == Classification::not_log_canonical);
    CHECK(classify_min(q(-2)) == Classification::not_log_canonical);
}

TEST_CASE("classification names") {
    CHECK(to_string(Classification::canonical) == "Canonical");
    CHECK(to_string(Classification::log_terminal) == "LogTerminal");
    CHECK(to_string(Classification::log_canonical) == "LogCanonical");
    CHECK(to_string(Classification::not_log_canonical) == "NotLogCanonical");
}

TEST_CASE("is_numerically_gorenstein") {
    CHECK(is_numerically_gorenstein(discrepancies(star_ex61())));
    CHECK(is_numerically_gorenstein(discrepancies(ResolutionGraph({{"E", 0, -2}}, {}))));
    CHECK_FALSE(is_numerically_gorenstein(discrepancies(ResolutionGraph({{"E", 0, -3}}, {}))));
    CHECK(is_numerically_gorenstein(discrepancies(ResolutionGraph({{"E", 1, -4}}, {}))));
}

TEST_CASE("full report for the five-curve star") {
    const SingularityReport r = full_report(star_ex61());
    CHECK(r.connected);
    CHECK(r.negative_definite);
    REQUIRE(r.certificate.has_value());
    REQUIRE(r.certificate->size() == 5);
    CHECK((*r.certificate)[0] == q(7, 2));
    CHECK((*r.certificate)[1] == q(3, 2));
    CHECK_FALSE(r.non_minimal_resolution);
    REQUIRE(r.fundamental_cycle.has_value());
    CHECK(*r.fundamental_cycle == Cycle(IntVector{2, 1, 1, 1, 1}));
    REQUIRE(r.chi_fund.has_value());
    CHECK(*r.chi_fund == 0);
    REQUIRE(r.rational.has_value());
    CHECK_FALSE(*r.rational);
    REQUIRE(r.minimally_elliptic.has_value());
    CHECK(*r.minimally_elliptic);
    REQUIRE(r.h1_bound.has_value());
    CHECK(*r.h1_bound == 1);
    REQUIRE(r.min_discrepancy.has_value());
    CHECK(*r.min_discrepancy == q(-2));
    REQUIRE(r.classification.has_value());
    CHECK(*r.classification == Classification::not_log_canonical);
    CHECK(r.canonical.has_value());
    CHECK_FALSE(*r.canonical);
    CHECK_FALSE(*r.log_terminal);
    CHECK_FALSE(*r.log_canonical);
    REQUIRE(r.numerically_gorenstein.has_value());
    CHECK(*r.numerically_gorenstein);
    REQUIRE(r.qhs_link.has_value());
    CHECK(*r.qhs_link);  // a contractible tree of rational curves
}

TEST_CASE("full report flags a non-minimal resolution") {
    const SingularityReport r = full_report(ResolutionGraph({{"E", 0, -1}}, {}));
    CHECK(r.non_minimal_resolution);
    REQUIRE(r.classification.has_value());
    CHECK(*r.classification == Classification::canonical);
    REQUIRE(r.rational.has_value());
    CHECK(*r.rational);
    REQUIRE(r.qhs_link.has_value());
    CHECK(*r.qhs_link);
}

TEST_CASE("full report for a larger star") {
    const SingularityReport r = full_report(make_star_graph(5, -2, -5));
    REQUIRE(r.fundamental_cycle.has_value());
    CHECK(*r.fundamental_cycle == Cycle(IntVector{3, 1, 1, 1, 1, 1}));
    REQUIRE(r.chi_fund.has_value());
    CHECK(*r.chi_fund == -1);
    REQUIRE(r.h1_bound.has_value());
    CHECK(*r.h1_bound == 2);
    REQUIRE(r.minimally_elliptic.has_value());
    CHECK_FALSE(*r.minimally_elliptic);
}

TEST_CASE("full report without negative definiteness") {
    const SingularityReport r = full_report(make_star_graph(4, -2, -2));
    CHECK(r.connected);
    CHECK_FALSE(r.negative_definite);
    CHECK_FALSE(r.certificate.has_value());
    CHECK_FALSE(r.fundamental_cycle.has_value());
    CHECK_FALSE(r.chi_fund.has_value());
    CHECK_FALSE(r.rational.has_value());
    CHECK_FALSE(r.minimally_elliptic.has_value());
    CHECK_FALSE(r.h1_bound.has_value());
    CHECK_FALSE(r.discrepancy_vector.has_value());
    CHECK_FALSE(r.min_discrepancy.has_value());
    CHECK_FALSE(r.classification.has_value());
    CHECK_FALSE(r.qhs_link.has_value());
    CHECK_FALSE(r.numerically_gorenstein.has_value());
}

TEST_CASE("full report for a disconnected negative definite graph") {
    const SingularityReport r =
        full_report(ResolutionGraph({{"A", 0, -2}, {"B", 0, -2}}, {}));
    CHECK_FALSE(r.connected);
    CHECK(r.negative_definite);
    CHECK(r.discrepancy_vector.has_value());
    CHECK(r.classification.has_value());
    CHECK_FALSE(r.fundamental_cycle.has_value());
    CHECK_FALSE(r.chi_fund.has_value());
    CHECK_FALSE(r.h1_bound.has_value());
    REQUIRE(r.qhs_link.has_value());
    CHECK_FALSE(*r.qhs_link);
}

TEST_CASE("classification flag implications") {
    std::mt19937_64 rng(823);
    for (int trial = 0; trial < 40; ++trial) {
        const ResolutionGraph g = testutil::random_connected_nd_graph(rng);
        const SingularityReport r = full_report(g);
        REQUIRE(r.canonical.has_value());
        REQUIRE(r.log_terminal.has_value());
        REQUIRE(r.log_canonical.has_value());
        if (*r.canonical) CHECK(*r.log_terminal);
        if (*r.log_terminal) CHECK(*r.log_canonical);
        const Classification c = *r.classification;
        CHECK(*r.canonical == (c == Classification::canonical));
        CHECK(*r.log_terminal ==
              (c == Classification::canonical || c == Classification::log_terminal));
        CHECK(*r.log_canonical == (c != Classification::not_log_canonical));
    }
}
