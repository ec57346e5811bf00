#include "radial/io.hpp"

#include <numeric>

#include "json.hpp"
#include "radial/error.hpp"

namespace radial {

using json = nlohmann::json;

namespace {

json diagnostic_json(const Diagnostic& d) {
    return {{"code", d.code}, {"message", d.message}, {"element", d.element}};
}

json augmentation_json(const AugmentedInstance& a) {
    json pendants = json::array();
    for (const PendantOrigin& p : a.provenance) {
        pendants.push_back({{"id", p.pendant_id},
                            {"owner_index", p.owner},
                            {"side", p.upper ? "upper" : "lower"},
                            {"rank", p.rank}});
    }
    json refinement = json::array();
    for (const auto& level : a.refinement) refinement.push_back(level);
    return {{"refine_seed", a.seed},
            {"original_edge_count", a.original_edge_count},
            {"pendants", pendants},
            {"refinement", refinement}};
}

}  // namespace

std::string verdict_json(const Verdict& v, bool terse) {
    json doc;
    doc["verdict"] = v.radial_planar ? "RADIAL-PLANAR" : "NOT-RADIAL-PLANAR";
    doc["radial_planar"] = v.radial_planar;
    doc["flags"] = {{"scheme", v.options.scheme},
                    {"refine_seed", v.options.refine_seed},
                    {"solver", std::string(gf2::to_string(v.options.solver))},
                    {"seed", v.options.seed},
                    {"trials", v.options.trials},
                    {"terse", terse}};
    doc["forced_by"] = v.forced_by ? diagnostic_json(*v.forced_by) : json(nullptr);
    doc["augmentation"] = v.augmentation ? augmentation_json(*v.augmentation) : json(nullptr);
    if (v.forced_by) return doc.dump(2);

    doc["provenance"] = {{"scheme", v.options.scheme},
                         {"perturbation_steps", v.perturbation_steps},
                         {"refine_seed", v.options.refine_seed},
                         {"engine", std::string(gf2::to_string(v.outcome.engine))},
                         {"sparse_trials", v.outcome.sparse_trials},
                         {"timings_ms",
                          {{"reduction", v.timings.reduction},
                           {"drawing", v.timings.drawing},
                           {"parity", v.timings.parity},
                           {"system", v.timings.system},
                           {"solve", v.timings.solve}}}};
    doc["order"] = v.tested.labels();
    json edges = json::array();
    for (const OrderedEdge& e : v.tested.edges()) edges.push_back({e.lo, e.hi});
    doc["edges"] = edges;

    const gf2::GF2System& s = v.system.system;
    doc["system_size"] = {{"cols", s.cols}, {"rows", s.rows.size()}, {"nnz", s.nonzeros()}};
    if (terse) return doc.dump(2);

    json rows = json::array();
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        const RowOrigin& o = v.system.origin[r];
        rows.push_back({{"vars", s.rows[r].support},
                        {"rhs", s.rows[r].rhs ? 1 : 0},
                        {"pair", {o.e, o.f}},
                        {"form", o.nested ? "nested" : "interleaved"}});
    }
    doc["system"] = {{"cols", s.cols}, {"rows", rows}};
    if (v.radial_planar) {
        doc["certificate"] = {{"kind", "assignment"}, {"bits", v.outcome.assignment.to_string()}};
    } else {
        doc["certificate"] = {{"kind", "left-kernel"}, {"rows", v.outcome.witness.ones()}};
    }
    return doc.dump(2);
}

bool check_verdict_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw Error(ErrorCode::MalformedInput, ex.what(), "byte " + std::to_string(ex.byte));
    }
    if (!doc.contains("radial_planar")) throw Error(ErrorCode::MalformedInput, "missing verdict", "/radial_planar");
    const bool yes = doc["radial_planar"].get<bool>();
    if (doc.contains("forced_by") && !doc["forced_by"].is_null()) return !yes;
    if (!doc.contains("system") || !doc.contains("certificate"))
        throw Error(ErrorCode::MalformedInput, "terse verdicts cannot be re-checked", "/system");
    try {
        gf2::GF2System s;
        s.cols = doc["system"]["cols"].get<std::size_t>();
        for (const auto& row : doc["system"]["rows"]) {
            gf2::Row r;
            r.support = row["vars"].get<std::vector<std::uint32_t>>();
            r.rhs = row["rhs"].get<int>() != 0;
            for (std::uint32_t c : r.support)
                if (c >= s.cols) return false;
            s.rows.push_back(std::move(r));
        }
        const auto& cert = doc["certificate"];
        const std::string kind = cert["kind"].get<std::string>();
        if (yes) {
            if (kind != "assignment") return false;
            const std::string bits = cert["bits"].get<std::string>();
            if (bits.size() != s.cols) return false;
            return gf2::verify_certificate(s, gf2::BitVector::from_string(bits));
        }
        if (kind != "left-kernel") return false;
        gf2::BitVector y(s.rows.size());
        for (auto r : cert["rows"].get<std::vector<std::size_t>>()) {
            if (r >= s.rows.size()) return false;
            y.set(r);
        }
        return gf2::verify_inconsistency(s, y);
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::MalformedInput, ex.what(), "/system");
    }
}

std::string witness_json(const GeometricEmbedding& w) {
    json angles = json::object();
    for (VertexIndex v = 0; v < w.graph.vertex_count(); ++v) {
        const Rational a = w.angle(v);
        angles[w.graph.vertex(v).id] = {a.num(), a.den()};
    }
    json windings = json::object();
    for (EdgeIndex e = 0; e < w.windings.size(); ++e) windings[std::to_string(e)] = w.windings[e];
    return json{{"angles", angles}, {"windings", windings}}.dump(2);
}

GeometricEmbedding parse_witness(std::string_view text, const LeveledGraph& g) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw Error(ErrorCode::MalformedInput, ex.what(), "byte " + std::to_string(ex.byte));
    }
    if (!doc.is_object() || !doc.contains("angles") || !doc["angles"].is_object())
        throw Error(ErrorCode::MalformedInput, "missing \"angles\" object", "/angles");
    if (!doc.contains("windings") || !doc["windings"].is_object())
        throw Error(ErrorCode::MalformedInput, "missing \"windings\" object", "/windings");

    std::vector<Rational> angle(g.vertex_count());
    std::int64_t slots = 1;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const std::string& id = g.vertex(v).id;
        const std::string where = "/angles/" + id;
        if (!doc["angles"].contains(id)) throw Error(ErrorCode::MalformedInput, "no angle for vertex", where);
        const auto& a = doc["angles"][id];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw Error(ErrorCode::MalformedInput, "angle must be [num, den]", where);
        const auto den = a[1].get<std::int64_t>();
        if (den <= 0) throw Error(ErrorCode::MalformedInput, "denominator must be positive", where);
        angle[v] = Rational(a[0].get<std::int64_t>(), den).frac();
        slots = std::lcm(slots, angle[v].den());
    }
    std::vector<std::int64_t> slot(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) slot[v] = (angle[v] * Rational(slots)).num();

    std::vector<int> windings(g.edge_count(), 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const std::string key = std::to_string(e);
        const auto& k = doc["windings"];
        if (!k.contains(key) || !k[key].is_number_integer())
            throw Error(ErrorCode::MalformedInput, "no integer winding for edge", "/windings/" + key);
        windings[e] = k[key].get<int>();
    }
    return make_embedding(g, slots, std::move(slot), std::move(windings));
}

}  // namespace radial
