#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radial/graph.hpp"
#include "radial/rational.hpp"

namespace radial {

/// A radial edge drawn as a spiral that is linear in height:
///   angle_at(h) = a_lo + delta * (h - h_lo) / (h_hi - h_lo)
/// Angles are in turns and only compared modulo 1.
struct EdgeCurve {
    EdgeIndex edge = 0;
    std::size_t v_lo = 0;  ///< identity of the lower endpoint (rank or vertex index)
    std::size_t v_hi = 0;
    std::int64_t h_lo = 0;
    std::int64_t h_hi = 0;
    Rational a_lo;
    Rational delta;

    Rational angle_at(const Rational& h) const;
    /// Angular speed in turns per unit height.
    Rational slope() const;
};

/// Number of transversal intersections of two curves strictly inside their
/// common height interval.
///
/// Curves meeting at a shared endpoint vertex do not count as crossing there.
/// Throws Error(Degenerate) when one curve passes through the other's endpoint
/// vertex or the two coincide along an interval.
std::int64_t crossing_count(const EdgeCurve& c1, const EdgeCurve& c2);

/// One concrete radial drawing of an ordered graph: vertex v_i sits at height i.
struct CanonicalDrawing {
    OrderedGraph graph;
    int scheme = 0;
    int perturbation_steps = 0;    ///< how many re-perturbations were needed
    std::vector<Rational> angles;  ///< index rank - 1, each in [0, 1)
    std::vector<EdgeCurve> curves;  ///< one per edge, same order as graph.edges()

    const Rational& angle(int rank) const { return angles.at(static_cast<std::size_t>(rank - 1)); }
};

inline constexpr int kSchemeCount = 5;

/// Base vertex angles of a scheme. Scheme 0 places v_i at i^2 / (n^2 + 1),
/// which keeps every vertex strictly below every chord spanning it. Schemes
/// 1-4 use a seeded permutation of the slots k / n, which gives genuinely
/// different drawings (and different parities).
std::vector<Rational> scheme_angles(int n, int scheme);

/// Drawing with the given vertex angles and each edge taking the
/// counterclockwise displacement in [0, 1). No degeneracy repair.
CanonicalDrawing drawing_from_angles(const OrderedGraph& g, std::vector<Rational> angles, int scheme = -1);

/// Describes the first violation of non-degeneracy, if any: an edge through a
/// vertex that is not one of its endpoints, or an independent pair that is
/// degenerate in the crossing_count sense.
std::optional<std::string> find_degeneracy(const CanonicalDrawing& d);

/// Drawing for `scheme` in [0, kSchemeCount). If the base angles are
/// degenerate, vertex angles are re-perturbed by i^2 * eps_k for a fixed
/// decreasing sequence eps_k until the drawing is clean.
CanonicalDrawing canonical_drawing(const OrderedGraph& g, int scheme = 0);

struct ParityEntry {
    EdgeIndex e = 0;  ///< e < f
    EdgeIndex f = 0;
    bool odd = false;
};

/// Crossing parity for every independent pair of edges whose open height spans
/// overlap, in lexicographic (e, f) order. Other pairs are absent.
struct CrossingParityMatrix {
    std::vector<ParityEntry> entries;

    std::size_t size() const { return entries.size(); }
    std::optional<bool> at(EdgeIndex e, EdgeIndex f) const;
};

/// True iff e and f are independent and their open spans overlap.
bool constrained_pair(const OrderedGraph& g, EdgeIndex e, EdgeIndex f);

CrossingParityMatrix parity_matrix(const CanonicalDrawing& d);

}  // namespace radial
