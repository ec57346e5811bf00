#include "radial/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "radial/error.hpp"

namespace radial {

Rational EdgeCurve::angle_at(const Rational& h) const {
    return a_lo + delta * (h - Rational(h_lo)) / Rational(h_hi - h_lo);
}

Rational EdgeCurve::slope() const {
    return delta / Rational(h_hi - h_lo);
}

namespace {

std::string curve_label(const EdgeCurve& c) {
    return "e" + std::to_string(c.edge);
}

}  // namespace

std::int64_t crossing_count(const EdgeCurve& c1, const EdgeCurve& c2) {
    const std::int64_t a = std::max(c1.h_lo, c2.h_lo);
    const std::int64_t b = std::min(c1.h_hi, c2.h_hi);
    if (a >= b) return 0;

    const Rational da = c1.angle_at(a) - c2.angle_at(a);
    const Rational db = c1.angle_at(b) - c2.angle_at(b);
    const bool shared_a = c1.h_lo == a && c2.h_lo == a && c1.v_lo == c2.v_lo;
    const bool shared_b = c1.h_hi == b && c2.h_hi == b && c1.v_hi == c2.v_hi;
    const std::string where = curve_label(c1) + "," + curve_label(c2);

    if (!shared_a && da.is_integer())
        throw Error(ErrorCode::Degenerate, "curve passes through a vertex at height " + std::to_string(a), where);
    if (!shared_b && db.is_integer())
        throw Error(ErrorCode::Degenerate, "curve passes through a vertex at height " + std::to_string(b), where);
    if (da == db && da.is_integer())
        throw Error(ErrorCode::Degenerate, "curves coincide along their common span", where);

    const Rational& lo = std::min(da, db);
    const Rational& hi = std::max(da, db);
    // Integers strictly inside (lo, hi).
    return std::max<std::int64_t>(0, hi.ceil() - lo.floor() - 1);
}

std::vector<Rational> scheme_angles(int n, int scheme) {
    if (scheme < 0 || scheme >= kSchemeCount)
        throw Error(ErrorCode::InvalidArgument, "scheme must be in 0.." + std::to_string(kSchemeCount - 1));
    std::vector<Rational> angles;
    angles.reserve(static_cast<std::size_t>(n));
    if (scheme == 0) {
        const std::int64_t den = static_cast<std::int64_t>(n) * n + 1;
        for (std::int64_t i = 1; i <= n; ++i) angles.emplace_back(i * i, den);
        return angles;
    }
    std::vector<std::int64_t> slot(static_cast<std::size_t>(n));
    std::iota(slot.begin(), slot.end(), std::int64_t{0});
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(scheme));
    for (std::size_t i = slot.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(slot[i - 1], slot[j]);
    }
    for (std::int64_t s : slot) angles.emplace_back(s, n);
    return angles;
}

CanonicalDrawing drawing_from_angles(const OrderedGraph& g, std::vector<Rational> angles, int scheme) {
    if (angles.size() != static_cast<std::size_t>(g.vertex_count()))
        throw Error(ErrorCode::LengthMismatch, "one angle per vertex required");
    CanonicalDrawing d;
    d.graph = g;
    d.scheme = scheme;
    d.angles = std::move(angles);
    for (auto& a : d.angles) a = a.frac();
    d.curves.reserve(g.edge_count());
    for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
        const OrderedEdge& e = g.edge(i);
        EdgeCurve c;
        c.edge = i;
        c.v_lo = static_cast<std::size_t>(e.lo);
        c.v_hi = static_cast<std::size_t>(e.hi);
        c.h_lo = e.lo;
        c.h_hi = e.hi;
        c.a_lo = d.angle(e.lo);
        c.delta = (d.angle(e.hi) - d.angle(e.lo)).frac();
        d.curves.push_back(c);
    }
    return d;
}

bool constrained_pair(const OrderedGraph& g, EdgeIndex e, EdgeIndex f) {
    if (!g.independent(e, f)) return false;
    const OrderedEdge& x = g.edge(e);
    const OrderedEdge& y = g.edge(f);
    return std::max(x.lo, y.lo) < std::min(x.hi, y.hi);
}

std::optional<std::string> find_degeneracy(const CanonicalDrawing& d) {
    const OrderedGraph& g = d.graph;
    for (const EdgeCurve& c : d.curves) {
        for (std::int64_t w = c.h_lo + 1; w < c.h_hi; ++w) {
            if ((c.angle_at(w) - d.angle(static_cast<int>(w))).is_integer())
                return "edge " + curve_label(c) + " passes through v" + std::to_string(w);
        }
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        for (EdgeIndex f = e + 1; f < g.edge_count(); ++f) {
            if (!g.independent(e, f)) continue;
            try {
                crossing_count(d.curves[e], d.curves[f]);
            } catch (const Error& ex) {
                if (ex.code() != ErrorCode::Degenerate) throw;
                return std::string(ex.what());
            }
        }
    }
    return std::nullopt;
}

CanonicalDrawing canonical_drawing(const OrderedGraph& g, int scheme) {
    const int n = g.vertex_count();
    const std::vector<Rational> base = scheme_angles(n, scheme);
    CanonicalDrawing d = drawing_from_angles(g, base, scheme);
    if (!find_degeneracy(d)) return d;

    // i^2 is not affine in the height, so every coincidence condition depends
    // on eps and fails for all but finitely many values. The bound keeps the
    // total shift below half a slot, so no two vertices trade places.
    const std::int64_t n64 = std::max<std::int64_t>(n, 2);
    const std::int64_t unit = 4 * n64 * n64 * n64 * n64;
    constexpr int kMaxSteps = 256;
    for (int step = 1; step <= kMaxSteps; ++step) {
        const Rational eps(1, unit * (step + 1));
        std::vector<Rational> angles = base;
        for (int i = 1; i <= n; ++i) angles[static_cast<std::size_t>(i - 1)] += Rational(std::int64_t{i} * i) * eps;
        d = drawing_from_angles(g, std::move(angles), scheme);
        d.perturbation_steps = step;
        if (!find_degeneracy(d)) return d;
    }
    throw Error(ErrorCode::Internal, "perturbation sequence did not clear degeneracy");
}

std::optional<bool> CrossingParityMatrix::at(EdgeIndex e, EdgeIndex f) const {
    if (e > f) std::swap(e, f);
    auto it = std::lower_bound(entries.begin(), entries.end(), std::pair{e, f}, [](const ParityEntry& p, const auto& key) {
        return std::pair{p.e, p.f} < key;
    });
    if (it == entries.end() || it->e != e || it->f != f) return std::nullopt;
    return it->odd;
}

CrossingParityMatrix parity_matrix(const CanonicalDrawing& d) {
    const OrderedGraph& g = d.graph;
    CrossingParityMatrix out;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        for (EdgeIndex f = e + 1; f < g.edge_count(); ++f) {
            if (!g.independent(e, f)) continue;
            const std::int64_t count = crossing_count(d.curves[e], d.curves[f]);
            if (constrained_pair(g, e, f)) {
                out.entries.push_back({e, f, (count & 1) != 0});
            } else if (count != 0) {
                throw Error(ErrorCode::Internal, "edges with disjoint spans reported a crossing",
                            curve_label(d.curves[e]) + "," + curve_label(d.curves[f]));
            }
        }
    }
    return out;
}

}  // namespace radial
