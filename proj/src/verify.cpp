#include "ngk/verify.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace ngk {

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch {
    Clock::time_point start = Clock::now();
    double lap() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

const char* verdictName(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::Confirmed: return "confirmed";
        case CheckVerdict::Refuted: return "refuted";
        case CheckVerdict::Indeterminate: return "indeterminate";
        default: return "skipped";
    }
}

}  // namespace

int VerificationReport::exitStatus() const {
    int status = 0;
    for (const TimedCheck* c :
         {&girthCheck, &triangleFreeCheck, &chromaticCheck, &crossCheck, &criticalCheck}) {
        if (c->verdict == CheckVerdict::Refuted) return 1;
        if (c->verdict == CheckVerdict::Indeterminate) status = 2;
    }
    return status;
}

VerificationReport runVerification(const Graph& g, const Expectations& expect,
                                   const VerifyOptions& options) {
    VerificationReport r;
    r.inputHash = edgeSetHash(g);
    r.order = g.order();
    r.size = g.edgeCount();
    r.girthValue = girth(g);
    r.degrees = degreeSummary(g);

    if (expect.girth) {
        Stopwatch w;
        r.girthCheck.verdict = (r.girthValue && *r.girthValue == *expect.girth)
                                   ? CheckVerdict::Confirmed
                                   : CheckVerdict::Refuted;
        r.girthCheck.detail = r.girthValue ? std::to_string(*r.girthValue) : "acyclic";
        r.girthCheck.seconds = w.lap();
    }

    if (expect.triangleFree) {
        Stopwatch w;
        const bool ok = !r.girthValue || *r.girthValue >= 4;
        r.triangleFreeCheck.verdict = ok ? CheckVerdict::Confirmed : CheckVerdict::Refuted;
        r.triangleFreeCheck.seconds = w.lap();
    }

    if (expect.chromatic) {
        const int k = *expect.chromatic;
        Stopwatch w;
        ColorDecision atK = decideKColorable(g, k, nullptr, options.budget);
        ColorDecision below = k >= 1
                                  ? decideKColorable(g, k - 1, nullptr, options.budget)
                                  : ColorDecision{ColorStatus::NotColorable, std::nullopt, 0};
        if (atK.status == ColorStatus::Colorable && below.status == ColorStatus::NotColorable) {
            r.chromaticCheck.verdict = CheckVerdict::Confirmed;
            r.chromaticExact = k;
            r.chromaticWitness = atK.witness;
            r.chromaticCheck.detail = "chi = " + std::to_string(k);
        } else if (atK.status == ColorStatus::NotColorable ||
                   below.status == ColorStatus::Colorable) {
            r.chromaticCheck.verdict = CheckVerdict::Refuted;
            if (atK.status == ColorStatus::NotColorable)
                r.chromaticCheck.detail = "not " + std::to_string(k) + "-colorable";
            else
                r.chromaticCheck.detail = std::to_string(k - 1) + "-colorable";
        } else {
            r.chromaticCheck.verdict = CheckVerdict::Indeterminate;
            r.chromaticCheck.detail = "budget exhausted";
        }
        r.chromaticCheck.seconds = w.lap();

        if (options.crossCheck && r.chromaticCheck.verdict != CheckVerdict::Indeterminate) {
            Stopwatch w2;
            if (g.order() > options.crossCheckMaxOrder) {
                r.crossCheck.verdict = CheckVerdict::Skipped;
                r.crossCheck.detail = "instance above cross-check cutoff";
            } else {
                ColorDecision atK2 = decideKColorable(g, k, nullptr, options.budget, true);
                ColorDecision below2 =
                    k >= 1 ? decideKColorable(g, k - 1, nullptr, options.budget, true)
                           : ColorDecision{ColorStatus::NotColorable, std::nullopt, 0};
                const bool agree = atK2.status == atK.status && below2.status == below.status;
                if (atK2.status == ColorStatus::BudgetExhausted ||
                    below2.status == ColorStatus::BudgetExhausted) {
                    r.crossCheck.verdict = CheckVerdict::Indeterminate;
                    r.crossCheck.detail = "budget exhausted";
                } else {
                    r.crossCheck.verdict =
                        agree ? CheckVerdict::Confirmed : CheckVerdict::Refuted;
                    r.crossCheck.detail = agree ? "both methods agree" : "methods disagree";
                }
            }
            r.crossCheck.seconds = w2.lap();
        }
    }

    if (expect.critical) {
        Stopwatch w;
        if (!expect.chromatic || r.chromaticCheck.verdict != CheckVerdict::Confirmed) {
            r.criticalCheck.verdict = CheckVerdict::Indeterminate;
            r.criticalCheck.detail = "needs a confirmed chromatic number first";
        } else {
            switch (isVertexCritical(g, *expect.chromatic, options.budget, options.jobs)) {
                case CriticalityStatus::Critical:
                    r.criticalCheck.verdict = CheckVerdict::Confirmed;
                    break;
                case CriticalityStatus::NotCritical:
                    r.criticalCheck.verdict = CheckVerdict::Refuted;
                    break;
                default:
                    r.criticalCheck.verdict = CheckVerdict::Indeterminate;
                    r.criticalCheck.detail = "budget exhausted";
            }
        }
        r.criticalCheck.seconds = w.lap();
    }

    return r;
}

std::string renderReportText(const VerificationReport& r) {
    std::ostringstream out;
    out << "input: hash=" << std::hex << r.inputHash << std::dec << " order=" << r.order
        << " size=" << r.size << '\n';
    out << "girth: " << (r.girthValue ? std::to_string(*r.girthValue) : "acyclic")
        << "  degrees: " << r.degrees.minDegree << ".." << r.degrees.maxDegree
        << (r.degrees.isRegular ? " (regular)" : "") << '\n';
    auto line = [&](const char* name, const TimedCheck& c) {
        if (c.verdict == CheckVerdict::Skipped && c.detail.empty()) return;
        out << name << ": " << verdictName(c.verdict);
        if (!c.detail.empty()) out << " (" << c.detail << ')';
        out << "  [" << c.seconds << "s]\n";
    };
    line("girth check", r.girthCheck);
    line("triangle-free", r.triangleFreeCheck);
    line("chromatic", r.chromaticCheck);
    line("cross-check", r.crossCheck);
    line("vertex-critical", r.criticalCheck);
    return out.str();
}

std::string renderReportJson(const VerificationReport& r) {
    nlohmann::json j;
    j["hash"] = r.inputHash;
    j["order"] = r.order;
    j["size"] = r.size;
    if (r.girthValue)
        j["girth"] = *r.girthValue;
    else
        j["girth"] = nullptr;
    j["min_degree"] = r.degrees.minDegree;
    j["max_degree"] = r.degrees.maxDegree;
    j["regular"] = r.degrees.isRegular;
    auto put = [&](const char* name, const TimedCheck& c) {
        if (c.verdict == CheckVerdict::Skipped && c.detail.empty()) return;
        j[name] = {{"verdict", verdictName(c.verdict)},
                   {"seconds", c.seconds},
                   {"detail", c.detail}};
    };
    put("girth_check", r.girthCheck);
    put("triangle_free", r.triangleFreeCheck);
    put("chromatic", r.chromaticCheck);
    put("cross_check", r.crossCheck);
    put("critical", r.criticalCheck);
    if (r.chromaticExact) j["chromatic_exact"] = *r.chromaticExact;
    return j.dump();
}

}  // namespace ngk
