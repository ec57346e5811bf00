#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "radial/drawing.hpp"
#include "radial/gf2.hpp"
#include "radial/graph.hpp"
#include "radial/ht_system.hpp"
#include "radial/reduction.hpp"

namespace radial {

struct DecideOptions {
    int scheme = 0;
    std::uint64_t refine_seed = 0;
    gf2::Strategy solver = gf2::Strategy::Dense;
    std::uint64_t seed = 0;  ///< sparse engine
    int trials = 8;
};

/// Wall time per stage in milliseconds.
struct StageTimings {
    double reduction = 0;
    double drawing = 0;
    double parity = 0;
    double system = 0;
    double solve = 0;

    double total() const { return reduction + drawing + parity + system + solve; }
};

struct Verdict {
    bool radial_planar = false;
    /// Set when validation alone decided the verdict; nothing else is then.
    std::optional<Diagnostic> forced_by;
    DecideOptions options;
    /// Present when the input had ties and was augmented.
    std::optional<AugmentedInstance> augmentation;
    OrderedGraph tested;
    int perturbation_steps = 0;
    HtSystem system;
    gf2::SolveOutcome outcome;
    StageTimings timings;
};

/// The whole decision: validate, short-circuit on forced verdicts, reduce ties,
/// draw, collect crossing parities, build and solve the system. Errors from a
/// stage are rethrown with the stage name prepended to the message; invalid
/// input throws Error(InvalidArgument) carrying the first error diagnostic.
Verdict decide(const LeveledGraph& g, const DecideOptions& options = {});

/// Re-checks the certificate against the emitted system.
bool verify_verdict(const Verdict& v);

}  // namespace radial
