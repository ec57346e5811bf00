#include "radial/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace radial {

namespace {

struct Dot {
    double angle = 0;
    double height = 0;
    std::string label;
};

constexpr double kWidth = 640;
constexpr double kRowGap = 48;
constexpr double kMargin = 40;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string render(const std::vector<Dot>& dots, const std::vector<EdgeCurve>& curves) {
    double h_min = 0, h_max = 1;
    if (!dots.empty()) {
        h_min = h_max = dots.front().height;
        for (const Dot& d : dots) {
            h_min = std::min(h_min, d.height);
            h_max = std::max(h_max, d.height);
        }
    }
    const double height = std::max(1.0, h_max - h_min) * kRowGap;
    auto x_of = [](double a) { return kMargin + (a - std::floor(a)) * kWidth; };
    auto y_of = [&](double h) { return kMargin + (h_max - h) * kRowGap; };

    std::ostringstream svg;
    svg.precision(6);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth + 2 * kMargin << "\" height=\""
        << height + 2 * kMargin << "\">\n";
    svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth << "\" height=\"" << height
        << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";

    for (const EdgeCurve& c : curves) {
        const double a0 = c.a_lo.to_double();
        const double da = c.delta.to_double();
        const auto h0 = static_cast<double>(c.h_lo);
        const auto dh = static_cast<double>(c.h_hi - c.h_lo);
        // Cut points where the curve meets the seam, then one straight piece
        // between consecutive cuts.
        std::vector<double> cuts{0.0, 1.0};
        const double lo = std::min(a0, a0 + da);
        const double hi = std::max(a0, a0 + da);
        for (double k = std::floor(lo) + 1; k < hi; k += 1) cuts.push_back((k - a0) / da);
        std::sort(cuts.begin(), cuts.end());
        svg << "<g stroke=\"#246\" stroke-width=\"1.5\" data-edge=\"" << c.edge << "\">";
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double t0 = cuts[i];
            const double t1 = cuts[i + 1];
            if (t1 - t0 < 1e-12) continue;
            const double mid = a0 + da * (t0 + t1) / 2;
            const double base = std::floor(mid);
            auto x = [&](double t) { return kMargin + (a0 + da * t - base) * kWidth; };
            svg << "<line x1=\"" << x(t0) << "\" y1=\"" << y_of(h0 + dh * t0) << "\" x2=\"" << x(t1) << "\" y2=\""
                << y_of(h0 + dh * t1) << "\"/>";
        }
        svg << "</g>\n";
    }
    for (const Dot& d : dots) {
        svg << "<circle cx=\"" << x_of(d.angle) << "\" cy=\"" << y_of(d.height) << "\" r=\"4\" fill=\"#c30\"/>";
        svg << "<text x=\"" << x_of(d.angle) + 6 << "\" y=\"" << y_of(d.height) - 6
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(d.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string render_svg(const CanonicalDrawing& d) {
    std::vector<Dot> dots;
    for (int r = 1; r <= d.graph.vertex_count(); ++r)
        dots.push_back({d.angle(r).to_double(), static_cast<double>(r), d.graph.label(r)});
    return render(dots, d.curves);
}

std::string render_svg(const GeometricEmbedding& w) {
    std::vector<Dot> dots;
    for (VertexIndex v = 0; v < w.graph.vertex_count(); ++v)
        dots.push_back({w.angle(v).to_double(), static_cast<double>(w.graph.level(v)), w.graph.vertex(v).id});
    return render(dots, w.curves);
}

}  // namespace radial
