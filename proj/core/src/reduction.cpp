#include "radial/reduction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>

#include "radial/error.hpp"

namespace radial {

namespace {

struct Band {
    std::int64_t level = 0;
    std::vector<VertexIndex> members;
};

std::string fresh_id(const std::string& base, std::unordered_set<std::string>& taken) {
    std::string id = base;
    for (int k = 2; taken.contains(id); ++k) id = base + "~" + std::to_string(k);
    taken.insert(id);
    return id;
}

}  // namespace

AugmentedInstance augment_and_refine(const LeveledGraph& g, std::uint64_t seed) {
    std::vector<bool> has_lower(g.vertex_count(), false);
    std::vector<bool> has_upper(g.vertex_count(), false);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if (g.level(e.a) == g.level(e.b))
            throw Error(ErrorCode::InvalidArgument, "edge inside a single level cannot be refined",
                        "/edges/" + std::to_string(i));
        VertexIndex lo = g.level(e.a) < g.level(e.b) ? e.a : e.b;
        VertexIndex hi = lo == e.a ? e.b : e.a;
        has_upper[lo] = true;
        has_lower[hi] = true;
    }

    std::map<std::int64_t, std::vector<VertexIndex>> by_level;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) by_level[g.level(v)].push_back(v);

    // Fisher-Yates with an explicit modulo keeps permutations identical across
    // standard library implementations.
    std::mt19937_64 rng(seed);
    std::vector<Band> bands;
    for (auto& [level, members] : by_level) {
        if (seed != 0 && members.size() > 1) {
            for (std::size_t i = members.size() - 1; i > 0; --i) {
                std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
                std::swap(members[i], members[j]);
            }
        }
        bands.push_back({level, members});
    }

    AugmentedInstance out;
    out.seed = seed;
    out.original_edge_count = g.edge_count();

    std::unordered_set<std::string> taken;
    for (const auto& v : g.vertices()) taken.insert(v.id);

    std::vector<std::string> labels;
    std::vector<int> rank_of(g.vertex_count(), 0);
    auto place = [&](VertexIndex origin, std::string label) {
        labels.push_back(std::move(label));
        out.origin_of_rank.push_back(origin);
        return static_cast<int>(labels.size());
    };

    struct PendingPendant {
        VertexIndex owner;
        bool upper;
        int rank;
    };
    std::vector<PendingPendant> pendants;

    for (const Band& band : bands) {
        const bool shared = band.members.size() > 1;
        if (shared) out.refinement.push_back(band.members);
        if (shared) {
            for (VertexIndex v : band.members) {
                if (has_lower[v]) continue;
                std::string id = fresh_id(g.vertex(v).id + "#lo", taken);
                int r = place(AugmentedInstance::kPendant, id);
                pendants.push_back({v, false, r});
                out.provenance.push_back({id, v, false, r});
            }
        }
        for (VertexIndex v : band.members) rank_of[v] = place(v, g.vertex(v).id);
        if (shared) {
            for (VertexIndex v : band.members) {
                if (has_upper[v]) continue;
                std::string id = fresh_id(g.vertex(v).id + "#hi", taken);
                int r = place(AugmentedInstance::kPendant, id);
                pendants.push_back({v, true, r});
                out.provenance.push_back({id, v, true, r});
            }
        }
    }

    out.ordered = OrderedGraph(std::move(labels));
    for (const auto& e : g.edges()) out.ordered.add_edge(rank_of[e.a], rank_of[e.b]);
    for (const auto& p : pendants) out.ordered.add_edge(rank_of[p.owner], p.rank);
    return out;
}

bool lift_verdict(const AugmentedInstance& /*a*/, bool verdict) {
    return verdict;
}

}  // namespace radial
