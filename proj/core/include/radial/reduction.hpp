#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "radial/graph.hpp"

namespace radial {

/// One pendant vertex added next to a source or sink on a shared level.
struct PendantOrigin {
    std::string pendant_id;
    VertexIndex owner = 0;  ///< vertex of the input leveled graph
    bool upper = false;     ///< true for a sink's pendant above the band
    int rank = 0;           ///< rank of the pendant vertex in `ordered`
};

/// Ordered graph equivalent (for radial planarity) to a leveled graph with ties.
///
/// The first `original_edge_count` edges of `ordered` are the input edges in
/// input order; the remaining ones are pendant edges, one per entry of
/// `provenance`.
struct AugmentedInstance {
    static constexpr VertexIndex kPendant = std::numeric_limits<VertexIndex>::max();

    OrderedGraph ordered;
    std::uint64_t seed = 0;
    std::vector<PendantOrigin> provenance;
    /// For each rank (index rank - 1): the input vertex, or kPendant.
    std::vector<VertexIndex> origin_of_rank;
    /// Chosen order inside every level that holds at least two vertices.
    std::vector<std::vector<VertexIndex>> refinement;
    std::size_t original_edge_count = 0;

    bool augmented() const { return !provenance.empty(); }
};

/// On each level with two or more vertices, every sink gets a pendant edge
/// upward and every source a pendant edge downward (isolated vertices get
/// both). Tied vertices are then ordered: seed 0 keeps declaration order,
/// any other seed picks a pseudorandom permutation. Pendants of sinks sit
/// directly above the band of their level, pendants of sources directly below.
///
/// Requires a graph without loops or intra-level edges (Error(InvalidArgument)).
AugmentedInstance augment_and_refine(const LeveledGraph& g, std::uint64_t seed);

/// The augmentation preserves radial planarity in both directions, so the
/// verdict carries over unchanged.
bool lift_verdict(const AugmentedInstance& a, bool verdict);

}  // namespace radial
