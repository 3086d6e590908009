// Cycle-level invariants: anti-nefness, the Euler characteristic chi(O_Z)
// via adjunction, the fundamental cycle (incremental bump algorithm), minimal
// ellipticity, rationality, and a combinatorial lower bound for the
// geometric genus.

#ifndef RESGRAPH_CYCLES_HPP
#define RESGRAPH_CYCLES_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/linalg.hpp"

namespace resgraph {

/// Guard for exhaustive subcycle enumerations: boxes with more than this
/// many lattice points are refused (BoxTooLarge) rather than ground through.
inline constexpr long long kDefaultBoxBound = 10'000'000;

/// Defensive cap for the bump sequence; never reached on negative
/// definite inputs (the sequence provably terminates there).
inline constexpr long long kBumpIterationCap = 1'000'000;

/// True iff Z . E_i <= 0 for every vertex i. The zero cycle passes
/// vacuously. Expects Z effective (not checked; the formula is total).
inline bool is_antinef(const Cycle& z, const IntersectionMatrix& a) {
    for (const Int& p : vertex_pairings(z, a)) {
        if (p > 0) return false;
    }
    return true;
}

inline bool is_antinef(const Cycle& z, const ResolutionGraph& g) {
    return is_antinef(z, build_matrix(g));
}

/// chi(O_Z) = -(Z.Z + Z.K)/2 with K.E_i from the adjunction formula.
/// The sum is always even for valid graph data; an odd value means the
/// input is corrupt, and that is reported loudly rather than rounded.
inline Int chi(const Cycle& z, const IntersectionMatrix& a, const IntVector& k) {
    if (z.size() != a.size() || k.size() != a.size()) {
        throw DimensionMismatch("cycle/matrix/canonical dimensions differ");
    }
    Int total = intersect(z, z, a);
    for (std::size_t i = 0; i < k.size(); ++i) total += z.at(i) * k[i];
    if (total % 2 != 0) {
        throw ParityViolation("Z.Z + Z.K is odd; graph data is inconsistent");
    }
    return -total / 2;
}

inline Int chi(const Cycle& z, const ResolutionGraph& g) {
    return chi(z, build_matrix(g), canonical_vector(g));
}

namespace detail {

/// Number of lattice points in the box prod_i [0, z_i].
inline Int box_size(const Cycle& z) {
    Int size = 1;
    for (std::size_t i = 0; i < z.size(); ++i) size *= z.at(i) + 1;
    return size;
}

/// Visits every cycle W with 0 <= W <= Z coefficient-wise, in odometer
/// order starting from the zero cycle. The visitor returns false to stop
/// early; the function returns false iff stopped.
template <typename Visitor>
bool for_each_subcycle(const Cycle& z, Visitor&& visit) {
    Cycle w = Cycle::zero(z.size());
    for (;;) {
        if (!visit(static_cast<const Cycle&>(w))) return false;
        std::size_t i = 0;
        while (i < z.size() && w.at(i) == z.at(i)) {
            w.at(i) = 0;
            ++i;
        }
        if (i == z.size()) return true;
        ++w.at(i);
    }
}

}  // namespace detail

/// The fundamental cycle by the incremental bump algorithm, with an explicit vertex
/// scan order (any permutation; the result is provably order-independent).
/// Start from the reduced cycle; while some Z . E_i > 0, add that E_i.
inline Cycle fundamental_cycle(const ResolutionGraph& g,
                               const std::vector<std::size_t>& scan_order) {
    if (!is_connected(g)) {
        throw DisconnectedGraph("fundamental cycle requires a connected graph");
    }
    const IntersectionMatrix a = build_matrix(g);
    if (!is_negative_definite(a)) {
        throw NotContractible("fundamental cycle requires a negative definite matrix");
    }
    if (scan_order.size() != g.size()) {
        throw PreconditionViolation("scan order must be a permutation of the vertices");
    }
    std::vector<bool> seen(g.size(), false);
    for (std::size_t i : scan_order) {
        if (i >= g.size() || seen[i]) {
            throw PreconditionViolation("scan order must be a permutation of the vertices");
        }
        seen[i] = true;
    }

    Cycle z = Cycle::reduced(g.size());
    IntVector pairings = vertex_pairings(z, a);
    for (long long step = 0; step < kBumpIterationCap; ++step) {
        std::size_t next = g.size();
        for (std::size_t i : scan_order) {
            if (pairings[i] > 0) {
                next = i;
                break;
            }
        }
        if (next == g.size()) return z;
        ++z.at(next);
        for (std::size_t j = 0; j < g.size(); ++j) {
            pairings[j] += a.at(j, next);
        }
    }
    throw Error("bump sequence exceeded the iteration cap");
}

/// Default scan order: smallest vertex index first.
inline Cycle fundamental_cycle(const ResolutionGraph& g) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return fundamental_cycle(g, order);
}

/// Minimally elliptic test: chi(Z) = 0 for the fundamental cycle Z while
/// every cycle 0 < Z' < Z has chi(Z') > 0, checked by exhaustive
/// enumeration of the coefficient box.
inline bool is_minimally_elliptic(const ResolutionGraph& g,
                                  long long box_bound = kDefaultBoxBound) {
    const Cycle z = fundamental_cycle(g);
    const IntersectionMatrix a = build_matrix(g);
    const IntVector k = canonical_vector(g);
    if (chi(z, a, k) != 0) return false;
    if (detail::box_size(z) > box_bound) {
        throw BoxTooLarge("subcycle box exceeds the enumeration bound");
    }
    return detail::for_each_subcycle(z, [&](const Cycle& w) {
        if (!w.is_nonzero() || w == z) return true;
        return chi(w, a, k) > 0;
    });
}

/// Rational singularity test: chi of the fundamental cycle equals 1.
inline bool is_rational_singularity(const ResolutionGraph& g) {
    return chi(fundamental_cycle(g), g) == 1;
}

/// Numerical 1-connectedness: every decomposition Z = Z1 + Z2 into nonzero
/// effective cycles has Z1 . Z2 >= 1. For such Z, h^0(O_Z) = 1 by the
/// classical connectedness argument. Checked by exhaustive enumeration.
inline bool is_numerically_connected(const Cycle& z, const IntersectionMatrix& a,
                                     long long box_bound = kDefaultBoxBound) {
    if (z.size() != a.size()) throw DimensionMismatch("cycle/matrix dimensions differ");
    if (!z.is_effective() || !z.is_nonzero()) {
        throw PreconditionViolation("connectedness test needs a nonzero effective cycle");
    }
    if (detail::box_size(z) > box_bound) {
        throw BoxTooLarge("decomposition box exceeds the enumeration bound");
    }
    return detail::for_each_subcycle(z, [&](const Cycle& z1) {
        if (!z1.is_nonzero() || z1 == z) return true;
        return intersect(z1, z - z1, a) >= 1;
    });
}

inline bool is_numerically_connected(const Cycle& z, const ResolutionGraph& g,
                                     long long box_bound = kDefaultBoxBound) {
    return is_numerically_connected(z, build_matrix(g), box_bound);
}

/// Lower bound for the geometric genus read off from a single cycle:
/// max(0, 1 - chi(Z)), which equals h^1(O_Z) whenever h^0(O_Z) = 1.
///
/// The h^0 = 1 hypothesis must be justified from graph data alone, so the
/// cycle is required to be effective, nonzero, with connected support, and
/// either (a) the fundamental cycle (its construction sequence forces
/// h^0 = 1 step by step), or (b) numerically 1-connected. Cycles with
/// neither justification are refused: anti-nefness alone is NOT enough
/// (2E_1 + E_2 on the chain with e = (-1,-2) is anti-nef with connected
/// support, yet chi = 2 forces h^0 >= 2).
inline Int pg_lower_bound(const ResolutionGraph& g, const Cycle& z,
                          long long box_bound = kDefaultBoxBound) {
    if (z.size() != g.size()) throw DimensionMismatch("cycle does not match graph");
    if (!z.is_effective() || !z.is_nonzero()) {
        throw PreconditionViolation("genus bound needs a nonzero effective cycle");
    }
    if (!support_connected(z, g)) {
        throw PreconditionViolation("genus bound needs connected support (h^0 = 1 fails)");
    }
    const IntersectionMatrix a = build_matrix(g);
    bool justified = false;
    if (is_connected(g) && is_negative_definite(a)) {
        justified = (z == fundamental_cycle(g));
    }
    if (!justified) {
        justified = is_numerically_connected(z, a, box_bound);
    }
    if (!justified) {
        throw PreconditionViolation(
            "h^0(O_Z) = 1 is not established: cycle is neither the fundamental "
            "cycle nor numerically 1-connected");
    }
    const Int bound = 1 - chi(z, a, canonical_vector(g));
    return bound > 0 ? bound : Int(0);
}

}  // namespace resgraph

#endif  // RESGRAPH_CYCLES_HPP
