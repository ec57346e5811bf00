#include "radial/ht_system.hpp"

#include <string>

#include "radial/error.hpp"

namespace radial {

VarIndex::VarIndex(const OrderedGraph& g) : edges_(g.edges()) {
    base_.reserve(edges_.size());
    for (const OrderedEdge& e : edges_) {
        base_.push_back(switch_count_);
        switch_count_ += static_cast<std::size_t>(e.hi - e.lo - 1);
    }
}

std::uint32_t VarIndex::switch_var(EdgeIndex e, int w) const {
    const OrderedEdge& edge = edges_.at(e);
    if (!edge.spans(w))
        throw Error(ErrorCode::InvalidArgument,
                    "rank " + std::to_string(w) + " is not inside the span of edge e" + std::to_string(e));
    return static_cast<std::uint32_t>(base_[e] + static_cast<std::size_t>(w - edge.lo - 1));
}

std::uint32_t VarIndex::twist_var(EdgeIndex e) const {
    if (e >= base_.size()) throw Error(ErrorCode::InvalidArgument, "edge index out of range");
    return static_cast<std::uint32_t>(switch_count_ + e);
}

HtSystem build_system(const OrderedGraph& g, const CrossingParityMatrix& cr, const VarIndex& ix) {
    HtSystem out;
    out.system.cols = ix.size();
    out.system.rows.reserve(cr.size());
    out.origin.reserve(cr.size());
    for (const ParityEntry& entry : cr.entries) {
        EdgeIndex e = entry.e;
        EdgeIndex f = entry.f;
        if (g.edge(f).lo < g.edge(e).lo) std::swap(e, f);
        const auto [u, v] = g.edge(e);
        const auto [w, z] = g.edge(f);
        if (!(u < w && w < v) || z == v) {
            throw Error(ErrorCode::Internal, "parity entry is not an independent overlapping pair",
                        "e" + std::to_string(entry.e) + ",e" + std::to_string(entry.f));
        }
        gf2::Row row;
        row.rhs = entry.odd;
        const bool nested = z < v;
        if (nested) {
            row.support = {ix.switch_var(e, w), ix.switch_var(e, z), ix.twist_var(f)};
        } else {
            row.support = {ix.switch_var(e, w), ix.switch_var(f, v), ix.twist_var(e)};
        }
        out.system.rows.push_back(std::move(row));
        out.origin.push_back({e, f, nested});
    }
    return out;
}

}  // namespace radial
