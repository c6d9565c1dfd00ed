#pragma once

#include "chx/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

// Deduction traces: each pipeline conclusion is recorded as a list of steps,
// every step carrying one claim, one justification tag and the exact numbers
// it rests on.  Traces are plain data, compare exactly, and replay: running
// the named pipeline on the named subject must reproduce the trace verbatim.

namespace chx {

enum class Justification {
    pontrjagin_invariance,  // rational Pontrjagin classes are topological
    sw_invariance,          // Stiefel-Whitney classes are topological
    hodge_symmetry,         // diamond symmetries and Betti/Hodge bookkeeping
    serre_duality,
    kodaira_vanishing,
    rr,  // Riemann-Roch
    integrality,
    divisibility,
    fujiki,   // the quartic intersection-form relation (E^4) = c q(E)^2
    miyaoka,  // pseudo-effectivity of 3 c_2 - c_1^2 against nef classes
    bb_decomposition,
    lefschetz,  // hard Lefschetz / middle-cohomology structure
};

[[nodiscard]] std::string_view to_string(Justification j);
[[nodiscard]] Justification justification_from_string(std::string_view text);

struct TraceValue {
    std::string label;
    Rational value;
    friend bool operator==(const TraceValue&, const TraceValue&) = default;
};

struct TraceStep {
    std::string claim;
    Justification tag = Justification::integrality;
    std::vector<TraceValue> values;
    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Verdict {
    std::string statement;
    std::vector<std::string> solutions;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct DeductionTrace {
    std::string pipeline;
    std::string subject;
    std::vector<TraceStep> steps;
    Verdict verdict;
    friend bool operator==(const DeductionTrace&, const DeductionTrace&) = default;
};

}  // namespace chx
