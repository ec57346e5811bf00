#include "radial/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "json.hpp"
#include "radial/error.hpp"

namespace radial {

using nlohmann::json;

VertexIndex LeveledGraph::add_vertex(std::string id, std::int64_t level) {
    if (index_.contains(id)) throw Error(ErrorCode::DuplicateVertex, "duplicate vertex id \"" + id + "\"");
    VertexIndex v = vertices_.size();
    index_.emplace(id, v);
    vertices_.push_back({std::move(id), level});
    return v;
}

EdgeIndex LeveledGraph::add_edge(VertexIndex a, VertexIndex b) {
    if (a >= vertices_.size() || b >= vertices_.size())
        throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    edges_.push_back({a, b});
    return edges_.size() - 1;
}

EdgeIndex LeveledGraph::add_edge(std::string_view a, std::string_view b) {
    auto ia = find(a);
    if (!ia) throw Error(ErrorCode::UnknownVertex, "unknown id \"" + std::string(a) + "\"");
    auto ib = find(b);
    if (!ib) throw Error(ErrorCode::UnknownVertex, "unknown id \"" + std::string(b) + "\"");
    return add_edge(*ia, *ib);
}

std::optional<VertexIndex> LeveledGraph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool LeveledGraph::has_ties() const {
    std::vector<std::int64_t> levels;
    levels.reserve(vertices_.size());
    for (const auto& v : vertices_) levels.push_back(v.level);
    std::sort(levels.begin(), levels.end());
    return std::adjacent_find(levels.begin(), levels.end()) != levels.end();
}

namespace {

std::vector<std::pair<VertexIndex, VertexIndex>> sorted_edge_keys(const LeveledGraph& g) {
    std::vector<std::pair<VertexIndex, VertexIndex>> keys;
    keys.reserve(g.edge_count());
    for (const auto& e : g.edges()) keys.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

bool same_graph(const LeveledGraph& a, const LeveledGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    for (std::size_t i = 0; i < a.vertex_count(); ++i) {
        if (a.vertex(i).id != b.vertex(i).id || a.vertex(i).level != b.vertex(i).level) return false;
    }
    return sorted_edge_keys(a) == sorted_edge_keys(b);
}

OrderedGraph::OrderedGraph(int n) {
    labels_.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels_.push_back("v" + std::to_string(i));
}

OrderedGraph::OrderedGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {}

EdgeIndex OrderedGraph::add_edge(int a, int b) {
    if (a == b) throw Error(ErrorCode::Loop, "loop at rank " + std::to_string(a));
    if (a < 1 || b < 1 || a > vertex_count() || b > vertex_count())
        throw Error(ErrorCode::UnknownVertex, "rank out of range");
    edges_.push_back({std::min(a, b), std::max(a, b)});
    return edges_.size() - 1;
}

bool OrderedGraph::independent(EdgeIndex e, EdgeIndex f) const {
    const auto& x = edges_.at(e);
    const auto& y = edges_.at(f);
    return !x.touches(y.lo) && !x.touches(y.hi);
}

bool operator==(const Diagnostic& a, const Diagnostic& b) {
    return a.severity == b.severity && a.code == b.code && a.message == b.message && a.element == b.element;
}

bool operator==(const Diagnostics& a, const Diagnostics& b) {
    return a.items == b.items;
}

bool Diagnostics::has_errors() const {
    return std::any_of(items.begin(), items.end(), [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

bool Diagnostics::forces_verdict() const {
    return std::any_of(items.begin(), items.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::VerdictForcing; });
}

Diagnostics validate(const LeveledGraph& g) {
    Diagnostics out;
    std::vector<std::size_t> degree(g.vertex_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        const std::string element = "/edges/" + std::to_string(i);
        if (e.a == e.b) {
            out.items.push_back({Severity::Error, "LOOP", "loop at vertex \"" + g.vertex(e.a).id + "\"", element});
            continue;
        }
        ++degree[e.a];
        ++degree[e.b];
        if (g.level(e.a) == g.level(e.b)) {
            out.items.push_back({Severity::VerdictForcing, "INTRA-LEVEL-EDGE",
                                 "edge \"" + g.vertex(e.a).id + "\"-\"" + g.vertex(e.b).id + "\" joins two vertices on level " +
                                     std::to_string(g.level(e.a)) + "; NOT-RADIAL-PLANAR",
                                 element});
        }
    }
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (degree[v] == 0) {
            out.items.push_back(
                {Severity::Warning, "ISOLATED-VERTEX", "vertex \"" + g.vertex(v).id + "\" has no edges",
                 "/vertices/" + std::to_string(v)});
        }
    }
    return out;
}

OrderedGraph to_ordered(const LeveledGraph& g) {
    std::vector<VertexIndex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), VertexIndex{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexIndex a, VertexIndex b) { return g.level(a) < g.level(b); });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (g.level(order[i - 1]) == g.level(order[i])) {
            throw Error(ErrorCode::TiesPresent,
                        "vertices \"" + g.vertex(order[i - 1]).id + "\" and \"" + g.vertex(order[i]).id +
                            "\" share level " + std::to_string(g.level(order[i])));
        }
    }
    std::vector<int> rank(g.vertex_count());
    std::vector<std::string> labels;
    labels.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = static_cast<int>(i) + 1;
        labels.push_back(g.vertex(order[i]).id);
    }
    OrderedGraph out(std::move(labels));
    for (const auto& e : g.edges()) out.add_edge(rank[e.a], rank[e.b]);
    return out;
}

LeveledGraph to_leveled(const OrderedGraph& g) {
    LeveledGraph out;
    for (int r = 1; r <= g.vertex_count(); ++r) out.add_vertex(g.label(r), r);
    for (const auto& e : g.edges()) out.add_edge(static_cast<VertexIndex>(e.lo - 1), static_cast<VertexIndex>(e.hi - 1));
    return out;
}

LeveledGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw Error(ErrorCode::MalformedInput, ex.what(), "byte " + std::to_string(ex.byte));
    }
    if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "top level must be an object", "/");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw Error(ErrorCode::MalformedInput, "missing \"vertices\" array", "/vertices");
    if (doc.contains("edges") && !doc["edges"].is_array())
        throw Error(ErrorCode::MalformedInput, "\"edges\" must be an array", "/edges");

    LeveledGraph g;
    const auto& vertices = doc["vertices"];
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "/vertices/" + std::to_string(i);
        const auto& v = vertices[i];
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
            throw Error(ErrorCode::MalformedInput, "vertex needs a string \"id\"", where);
        if (!v.contains("level") || !v["level"].is_number_integer())
            throw Error(ErrorCode::MalformedInput, "vertex needs an integer \"level\"", where + "/level");
        auto level = v["level"].get<std::int64_t>();
        if (level < 1) throw Error(ErrorCode::MalformedInput, "level must be >= 1", where + "/level");
        auto id = v["id"].get<std::string>();
        if (g.find(id)) throw Error(ErrorCode::DuplicateVertex, "duplicate vertex id \"" + id + "\"", where + "/id");
        g.add_vertex(std::move(id), level);
    }
    if (doc.contains("edges")) {
        const auto& edges = doc["edges"];
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string where = "/edges/" + std::to_string(i);
            const auto& e = edges[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw Error(ErrorCode::MalformedInput, "edge must be a pair of id strings", where);
            std::optional<VertexIndex> ends[2];
            for (int k = 0; k < 2; ++k) {
                auto id = e[static_cast<std::size_t>(k)].get<std::string>();
                ends[k] = g.find(id);
                if (!ends[k])
                    throw Error(ErrorCode::UnknownVertex, "unknown id \"" + id + "\"", where + "/" + std::to_string(k));
            }
            g.add_edge(*ends[0], *ends[1]);
        }
    }
    return g;
}

std::string serialize_graph(const LeveledGraph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : g.vertices()) doc["vertices"].push_back({{"id", v.id}, {"level", v.level}});
    doc["edges"] = json::array();
    for (const auto& [a, b] : sorted_edge_keys(g)) doc["edges"].push_back({g.vertex(a).id, g.vertex(b).id});
    return doc.dump();
}

}  // namespace radial
