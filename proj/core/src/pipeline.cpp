#include "radial/pipeline.hpp"

#include <chrono>

#include "radial/error.hpp"

namespace radial {

namespace {

template <class F>
auto stage(const char* name, double& elapsed, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    struct Stop {
        double& out;
        std::chrono::steady_clock::time_point start;
        ~Stop() { out = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count(); }
    } stop{elapsed, start};
    try {
        return body();
    } catch (const Error& e) {
        throw Error(e.code(), std::string(name) + ": " + e.message(), e.location());
    } catch (const std::overflow_error& e) {
        throw Error(ErrorCode::Internal, std::string(name) + ": " + e.what());
    }
}

}  // namespace

Verdict decide(const LeveledGraph& g, const DecideOptions& options) {
    if (options.scheme < 0 || options.scheme >= kSchemeCount)
        throw Error(ErrorCode::InvalidArgument, "scheme must be in 0.." + std::to_string(kSchemeCount - 1));
    if (options.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");

    Verdict out;
    out.options = options;

    const Diagnostics diag = validate(g);
    for (const Diagnostic& d : diag.items)
        if (d.severity == Severity::Error) throw Error(ErrorCode::InvalidArgument, d.code + ": " + d.message, d.element);
    for (const Diagnostic& d : diag.items) {
        if (d.severity == Severity::VerdictForcing) {
            out.radial_planar = false;
            out.forced_by = d;
            return out;
        }
    }

    out.tested = stage("reduction", out.timings.reduction, [&] {
        if (!g.has_ties()) return to_ordered(g);
        out.augmentation = augment_and_refine(g, options.refine_seed);
        return out.augmentation->ordered;
    });
    const CanonicalDrawing drawing =
        stage("drawing", out.timings.drawing, [&] { return canonical_drawing(out.tested, options.scheme); });
    out.perturbation_steps = drawing.perturbation_steps;
    const CrossingParityMatrix cr = stage("parity", out.timings.parity, [&] { return parity_matrix(drawing); });
    out.system = stage("system", out.timings.system, [&] { return build_system(out.tested, cr, VarIndex(out.tested)); });
    out.outcome = stage("solve", out.timings.solve, [&] {
        return gf2::solve(out.system.system, options.solver, options.seed, options.trials);
    });
    if (out.outcome.status == gf2::Status::Unknown)
        throw Error(ErrorCode::Internal, "solve: no engine reached a verdict");
    const bool solvable = out.outcome.status == gf2::Status::Solvable;
    out.radial_planar = out.augmentation ? lift_verdict(*out.augmentation, solvable) : solvable;
    return out;
}

bool verify_verdict(const Verdict& v) {
    if (v.forced_by) return !v.radial_planar;
    if (v.radial_planar) {
        return v.outcome.status == gf2::Status::Solvable && verify_certificate(v.system.system, v.outcome.assignment);
    }
    return v.outcome.status == gf2::Status::Inconsistent && verify_inconsistency(v.system.system, v.outcome.witness);
}

}  // namespace radial
