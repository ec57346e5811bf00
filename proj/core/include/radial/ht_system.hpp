#pragma once

#include <cstdint>
#include <vector>

#include "radial/drawing.hpp"
#include "radial/gf2.hpp"
#include "radial/graph.hpp"

namespace radial {

/// Dense numbering of the unknowns of the radial Hanani-Tutte system.
///
/// Switch variables x_{e,w} exist for every edge e = uv and every rank w with
/// u < w < v; they are numbered edge by edge, w ascending. One twist variable
/// x_e per edge follows after all switch variables.
class VarIndex {
public:
    VarIndex() = default;
    explicit VarIndex(const OrderedGraph& g);

    std::size_t switch_count() const { return switch_count_; }
    std::size_t size() const { return switch_count_ + base_.size(); }

    /// Throws Error(InvalidArgument) unless w lies strictly inside the span of e.
    std::uint32_t switch_var(EdgeIndex e, int w) const;
    std::uint32_t twist_var(EdgeIndex e) const;

private:
    std::vector<OrderedEdge> edges_;
    std::vector<std::size_t> base_;
    std::size_t switch_count_ = 0;
};

inline VarIndex index_variables(const OrderedGraph& g) {
    return VarIndex(g);
}

/// The pair that produced a row, normalized so that `e` starts lower.
struct RowOrigin {
    EdgeIndex e = 0;
    EdgeIndex f = 0;
    bool nested = false;  ///< f's span lies inside e's span
};

struct HtSystem {
    gf2::GF2System system;
    std::vector<RowOrigin> origin;  ///< one per row
};

/// One row per constrained pair, in the order of the parity matrix. For
/// e = uv, f = wz with u < w < v:
///   nested (z < v):       x_{e,w} + x_{e,z} + x_f = cr(e, f)
///   interleaved (z > v):  x_{e,w} + x_{f,v} + x_e = cr(e, f)
/// Throws Error(Internal) if an entry cannot be normalized this way.
HtSystem build_system(const OrderedGraph& g, const CrossingParityMatrix& cr, const VarIndex& ix);

}  // namespace radial
