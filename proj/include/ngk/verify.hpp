#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ngk/coloring.hpp"
#include "ngk/graph.hpp"

namespace ngk {

// What a verification run is asked to establish about a graph.
struct Expectations {
    std::optional<int> girth;      // exact girth
    std::optional<int> chromatic;  // exact chromatic number
    bool critical = false;         // vertex-critical (uses `chromatic` as k)
    bool triangleFree = false;
};

enum class CheckVerdict { Confirmed, Refuted, Indeterminate, Skipped };

struct TimedCheck {
    CheckVerdict verdict = CheckVerdict::Skipped;
    double seconds = 0;
    std::string detail;
};

// One record per verified input. Every populated claim is backed by a
// completed computation; anything cut short by budget stays Indeterminate.
struct VerificationReport {
    std::uint64_t inputHash = 0;
    int order = 0;
    int size = 0;
    GirthValue girthValue;
    DegreeSummary degrees;

    TimedCheck girthCheck;
    TimedCheck triangleFreeCheck;
    TimedCheck chromaticCheck;
    TimedCheck crossCheck;  // secondary exact method, when requested and in range
    TimedCheck criticalCheck;

    std::optional<int> chromaticExact;
    std::optional<Coloring> chromaticWitness;

    // 0 all confirmed, 1 something refuted, 2 something indeterminate.
    int exitStatus() const;
};

struct VerifyOptions {
    ColorBudget budget = ColorBudget::unlimited();
    bool crossCheck = false;
    int crossCheckMaxOrder = 34;  // plain backtracking is hopeless far above this
    int jobs = 1;
};

VerificationReport runVerification(const Graph& g, const Expectations& expect,
                                   const VerifyOptions& options = {});

std::string renderReportText(const VerificationReport& r);
std::string renderReportJson(const VerificationReport& r);

}  // namespace ngk
