// Discrepancies by exact linear solve, singularity classification by the
// minimal discrepancy, the numerical Gorenstein predicate, and the
// aggregate report combining every analysis in this library.

#ifndef RESGRAPH_CLASSIFY_HPP
#define RESGRAPH_CLASSIFY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "resgraph/cycles.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/linalg.hpp"
#include "resgraph/topology.hpp"

namespace resgraph {

/// The discrepancies a_i = a(E_i, X), indexed by vertex order. They are the
/// unique exact solution of A a = k: the pullback of the canonical divisor
/// is orthogonal to every exceptional curve, so K . E_i on the resolution
/// is carried entirely by the exceptional part.
struct DiscrepancyVector {
    QVector values;

    Rational min() const { return *std::min_element(values.begin(), values.end()); }
};

inline DiscrepancyVector discrepancies(const ResolutionGraph& g) {
    const IntersectionMatrix a = build_matrix(g);
    if (!is_negative_definite(a)) {
        throw NotContractible("discrepancies require a negative definite matrix");
    }
    auto solution = solve_linear(to_rational_matrix(a), to_rational_vector(canonical_vector(g)));
    // A negative definite matrix is invertible, so the solve cannot fail.
    return DiscrepancyVector{std::move(*solution)};
}

/// Classification by the minimal discrepancy. Strongest label first:
/// Canonical (min >= 0), LogTerminal (min > -1), LogCanonical (min >= -1),
/// NotLogCanonical otherwise. Terminal is deliberately not asserted.
enum class Classification { canonical, log_terminal, log_canonical, not_log_canonical };

inline Classification classify_discrepancies(const DiscrepancyVector& a) {
    const Rational m = a.min();
    if (m >= 0) return Classification::canonical;
    if (m > -1) return Classification::log_terminal;
    if (m >= -1) return Classification::log_canonical;
    return Classification::not_log_canonical;
}

inline std::string to_string(Classification c) {
    switch (c) {
        case Classification::canonical: return "Canonical";
        case Classification::log_terminal: return "LogTerminal";
        case Classification::log_canonical: return "LogCanonical";
        case Classification::not_log_canonical: return "NotLogCanonical";
    }
    return "NotLogCanonical";
}

/// True iff every discrepancy is an integer (the numerical shadow of the
/// Gorenstein property; the analytic property itself is not graph data).
inline bool is_numerically_gorenstein(const DiscrepancyVector& a) {
    return std::all_of(a.values.begin(), a.values.end(),
                       [](const Rational& q) { return is_integer(q); });
}

/// Aggregate of every analysis. Fields that only make sense under negative
/// definiteness (or connectedness) are absent, not defaulted, when their
/// hypothesis fails; minimally_elliptic is additionally absent when its
/// subcycle box exceeds the enumeration bound.
struct SingularityReport {
    bool connected = false;
    bool negative_definite = false;
    /// Positivity certificate for the negated matrix; present iff
    /// negative_definite.
    std::optional<QVector> certificate;
    /// Warning: some genus-0 vertex has self-intersection -1, so the graph
    /// is not a minimal resolution. Analyses still run on the graph as-is.
    bool non_minimal_resolution = false;

    std::optional<Cycle> fundamental_cycle;
    std::optional<Int> chi_fund;
    std::optional<bool> rational;
    std::optional<bool> minimally_elliptic;
    std::optional<Int> h1_bound;

    std::optional<DiscrepancyVector> discrepancy_vector;
    std::optional<Rational> min_discrepancy;
    std::optional<Classification> classification;
    std::optional<bool> canonical;
    std::optional<bool> log_terminal;
    std::optional<bool> log_canonical;
    std::optional<bool> numerically_gorenstein;

    std::optional<bool> qhs_link;
};

inline SingularityReport full_report(const ResolutionGraph& g,
                                     long long box_bound = kDefaultBoxBound) {
    SingularityReport r;
    r.connected = is_connected(g);
    const IntersectionMatrix a = build_matrix(g);
    r.negative_definite = is_negative_definite(a);
    for (const CurveVertex& v : g.vertices()) {
        if (v.genus == 0 && v.self_intersection == -1) r.non_minimal_resolution = true;
    }

    if (r.negative_definite) {
        // -A has non-positive off-diagonals, so the certificate criterion
        // applies and the search must succeed on a definite matrix.
        CertificateSearch search = find_certificate(to_rational_matrix(a).negated());
        if (search.found()) r.certificate = std::move(search.vector);

        DiscrepancyVector d = discrepancies(g);
        r.min_discrepancy = d.min();
        const Classification c = classify_discrepancies(d);
        r.classification = c;
        r.canonical = (d.min() >= 0);
        r.log_terminal = (d.min() > -1);
        r.log_canonical = (d.min() >= -1);
        r.numerically_gorenstein = is_numerically_gorenstein(d);
        r.discrepancy_vector = std::move(d);

        r.qhs_link = is_rational_tree(g);
    }

    if (r.negative_definite && r.connected) {
        const Cycle z = fundamental_cycle(g);
        const Int chi_z = chi(z, a, canonical_vector(g));
        r.fundamental_cycle = z;
        r.chi_fund = chi_z;
        r.rational = (chi_z == 1);
        try {
            r.minimally_elliptic = is_minimally_elliptic(g, box_bound);
        } catch (const BoxTooLarge&) {
            // Left absent: the exhaustive check is out of reach.
        }
        r.h1_bound = pg_lower_bound(g, z, box_bound);
    }
    return r;
}

}  // namespace resgraph

#endif  // RESGRAPH_CLASSIFY_HPP
