#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radial/drawing.hpp"
#include "radial/graph.hpp"

namespace radial {

/// Crossing-free radial drawing on a discrete slot grid. Vertex v sits at
/// height level(v) and angle slot[v] / slots; edge e = (lo, hi) turns by
/// r + windings[e], where r is the angle difference taken in (-1/2, 1/2].
struct GeometricEmbedding {
    LeveledGraph graph;
    std::int64_t slots = 8;
    std::vector<std::int64_t> slot;  ///< per vertex
    std::vector<int> windings;       ///< per edge
    std::vector<EdgeCurve> curves;   ///< per edge, v_lo/v_hi are vertex indices

    Rational angle(VertexIndex v) const { return Rational(slot.at(v), slots); }
};

/// Builds the curves for the given placement. Edges must join different levels.
GeometricEmbedding make_embedding(LeveledGraph g, std::int64_t slots, std::vector<std::int64_t> slot,
                                  std::vector<int> windings);

/// Re-verifies a witness with exact rational crossing counts: every pair of
/// curves (adjacent ones included) is crossing-free and non-degenerate, no
/// curve passes through a vertex, and tied vertices use distinct slots.
bool verify_embedding(const GeometricEmbedding& w);

struct SearchOptions {
    std::int64_t slots = 8;
    int max_winding = 2;
    std::uint64_t budget = 100'000'000;  ///< search nodes
};

enum class SearchStatus { Found, NotFound, BudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<GeometricEmbedding> witness;
    std::uint64_t nodes = 0;
};

/// Depth-first search over vertex slots (vertices by ascending level, then
/// declaration order; slots ascending) and edge windings (0, 1, -1, 2, -2, ...),
/// pruning on the first crossing. The lowest vertex is pinned to slot 0, which
/// loses nothing because rotating a drawing keeps it crossing-free.
///
/// One-sided: Found is always a valid witness; NotFound only says no witness
/// exists on this grid with these windings.
SearchResult find_embedding(const LeveledGraph& g, const SearchOptions& options);
SearchResult find_embedding(const OrderedGraph& g, const SearchOptions& options);

struct GeneratorOptions {
    int n = 10;
    int target_m = 15;
    /// Levels are drawn from [1, levels]; 0 means distinct levels 1..n.
    int levels = 0;
    std::int64_t slots = 1024;
    int max_winding = 1;
};

struct GeneratedInstance {
    LeveledGraph graph;
    GeometricEmbedding witness;
};

/// Places vertices at random distinct slots, then repeatedly proposes a random
/// edge with a random winding and keeps it only if it stays crossing-free.
/// May return fewer than target_m edges.
GeneratedInstance generate_planar_instance(std::uint64_t seed, const GeneratorOptions& options);

/// Upper and lower rotation at each vertex, both listed along the clockwise
/// orientation of the circle (decreasing angle just above / below the vertex).
struct RotationSystem {
    std::vector<std::vector<EdgeIndex>> upper;
    std::vector<std::vector<EdgeIndex>> lower;
};

RotationSystem rotation_system(const GeometricEmbedding& w);

struct Dart {
    EdgeIndex edge = 0;
    VertexIndex from = 0;
    VertexIndex to = 0;
};

struct FacialWalk {
    std::vector<Dart> darts;
    std::size_t component = 0;
    bool upper_outer = false;  ///< bounds the face touching the top circle
    bool lower_outer = false;  ///< bounds the face touching the bottom circle
};

/// Face tracing: arriving at v along e, leave along the successor of e in the
/// rotation at v. Every dart is used by exactly one walk. Outer flags are set
/// per connected component.
std::vector<FacialWalk> facial_walks(const GeometricEmbedding& w, const RotationSystem& r);

/// Connected component id per vertex.
std::vector<std::size_t> components(const LeveledGraph& g);

/// Winding number of a cycle given as a closed sequence of edges.
/// Throws Error(NotACycle) if the edges do not form a simple closed walk.
std::int64_t cycle_winding(const GeometricEmbedding& w, const std::vector<EdgeIndex>& cycle);
bool cycle_winding_parity(const GeometricEmbedding& w, const std::vector<EdgeIndex>& cycle);

/// Whether the rotation criterion for essential cycles (the two paths between
/// the cycle's lowest and highest vertex leave in inverse order) agrees with
/// the measured winding parity. Requires a unique highest and lowest vertex.
bool check_lemma1(const GeometricEmbedding& w, const std::vector<EdgeIndex>& cycle);

/// Whether some cycle of the component has odd winding.
bool component_is_essential(const GeometricEmbedding& w, std::size_t component);

/// Two distinct outer walks exactly in components that contain an essential
/// cycle. Checked for every component with at least one edge.
bool check_outer_walks(const GeometricEmbedding& w, const std::vector<FacialWalk>& walks);

/// All simple cycles (length >= 2, parallel edges included), each once, as
/// closed edge sequences. Stops after `limit` cycles.
std::vector<std::vector<EdgeIndex>> simple_cycles(const LeveledGraph& g, std::size_t limit = 100000);

}  // namespace radial
