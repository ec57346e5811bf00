#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace radial {

/// Dense vertex index, assigned in declaration order.
using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Vertex {
    std::string id;
    std::int64_t level = 1;
};

/// Endpoints in the order they were declared; loops are representable so that
/// validation can report them.
struct Edge {
    VertexIndex a = 0;
    VertexIndex b = 0;
};

/// Multigraph whose vertices carry a level. Ties between levels are allowed.
class LeveledGraph {
public:
    /// Throws Error(DuplicateVertex) if `id` is already declared.
    VertexIndex add_vertex(std::string id, std::int64_t level);
    EdgeIndex add_edge(VertexIndex a, VertexIndex b);
    /// Throws Error(UnknownVertex) if either id is undeclared.
    EdgeIndex add_edge(std::string_view a, std::string_view b);

    std::optional<VertexIndex> find(std::string_view id) const;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::int64_t level(VertexIndex v) const { return vertices_.at(v).level; }
    bool has_ties() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexIndex> index_;
};

/// Same vertices in the same declaration order and the same edge multiset.
bool same_graph(const LeveledGraph& a, const LeveledGraph& b);

/// Edge of an ordered graph, stored as 1-based ranks with lo < hi.
struct OrderedEdge {
    int lo = 0;
    int hi = 0;

    bool touches(int rank) const { return lo == rank || hi == rank; }
    /// Rank strictly inside the open span (lo, hi).
    bool spans(int rank) const { return lo < rank && rank < hi; }
};

/// Multigraph on vertices v_1 < ... < v_n. Ranks are 1-based and double as
/// heights on the cylinder.
class OrderedGraph {
public:
    OrderedGraph() = default;
    /// Labels default to "v1" ... "vn".
    explicit OrderedGraph(int n);
    explicit OrderedGraph(std::vector<std::string> labels);

    /// Accepts endpoints in either order; throws Error(Loop) if a == b.
    EdgeIndex add_edge(int a, int b);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<OrderedEdge>& edges() const { return edges_; }
    const OrderedEdge& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::string& label(int rank) const { return labels_.at(static_cast<std::size_t>(rank - 1)); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool independent(EdgeIndex e, EdgeIndex f) const;

private:
    std::vector<std::string> labels_;
    std::vector<OrderedEdge> edges_;
};

enum class Severity { Error, Warning, VerdictForcing };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    std::string element;
};

struct Diagnostics {
    std::vector<Diagnostic> items;

    bool empty() const { return items.empty(); }
    bool has_errors() const;
    bool forces_verdict() const;
    friend bool operator==(const Diagnostics&, const Diagnostics&);
};

bool operator==(const Diagnostic& a, const Diagnostic& b);

/// Loops are errors; an edge between two vertices on the same level forces a
/// NOT-RADIAL-PLANAR verdict; isolated vertices are warnings.
Diagnostics validate(const LeveledGraph& g);

/// Ranks by ascending level. Throws Error(TiesPresent) if two vertices share a
/// level and Error(Loop) on loops.
OrderedGraph to_ordered(const LeveledGraph& g);

/// Levels are the ranks.
LeveledGraph to_leveled(const OrderedGraph& g);

/// Parses the JSON graph schema. Errors carry a JSON pointer location.
LeveledGraph parse_graph(std::string_view text);

/// Canonical form: vertices in declaration order, edges sorted by
/// (lower declaration index, higher declaration index).
std::string serialize_graph(const LeveledGraph& g);

}  // namespace radial
