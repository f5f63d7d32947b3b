#include "doctest.h"
#include "ngk/verify.hpp"
#include "oracles.hpp"

using namespace ngk;

namespace {

Graph grotzsch() {
    Graph c5 = oracle::cycle(5);
    Graph m(11);
    for (auto [u, v] : c5.edges()) {
        m.addEdge(u, v);
        m.addEdge(5 + u, v);
        m.addEdge(5 + v, u);
    }
    for (int i = 0; i < 5; ++i) m.addEdge(5 + i, 10);
    return m;
}

}  // namespace

TEST_CASE("confirmed expectations across all checks") {
    Expectations expect;
    expect.girth = 4;
    expect.chromatic = 4;
    expect.critical = true;
    expect.triangleFree = true;
    VerifyOptions opt;
    opt.crossCheck = true;
    VerificationReport r = runVerification(grotzsch(), expect, opt);
    CHECK(r.order == 11);
    CHECK(r.size == 20);
    CHECK(r.girthCheck.verdict == CheckVerdict::Confirmed);
    CHECK(r.triangleFreeCheck.verdict == CheckVerdict::Confirmed);
    CHECK(r.chromaticCheck.verdict == CheckVerdict::Confirmed);
    CHECK(r.crossCheck.verdict == CheckVerdict::Confirmed);
    CHECK(r.criticalCheck.verdict == CheckVerdict::Confirmed);
    CHECK(r.chromaticExact == 4);
    REQUIRE(r.chromaticWitness.has_value());
    CHECK(isProperColoring(grotzsch(), *r.chromaticWitness));
    CHECK(r.exitStatus() == 0);
    CHECK(renderReportText(r).find("confirmed") != std::string::npos);
    CHECK(renderReportJson(r).find("\"verdict\":\"confirmed\"") != std::string::npos);
}

TEST_CASE("refuted expectations set exit status 1") {
    Expectations expect;
    expect.chromatic = 4;  // C5 is 3-chromatic
    VerificationReport r = runVerification(oracle::cycle(5), expect, {});
    CHECK(r.chromaticCheck.verdict == CheckVerdict::Refuted);
    CHECK(r.exitStatus() == 1);

    Expectations girthWrong;
    girthWrong.girth = 6;
    CHECK(runVerification(oracle::cycle(5), girthWrong, {}).exitStatus() == 1);

    Expectations triangles;
    triangles.triangleFree = true;
    CHECK(runVerification(oracle::complete(4), triangles, {}).exitStatus() == 1);
}

TEST_CASE("budget exhaustion reports indeterminate, exit status 2") {
    Expectations expect;
    expect.chromatic = 4;
    VerifyOptions opt;
    opt.budget = ColorBudget::nodes(1);
    VerificationReport r = runVerification(grotzsch(), expect, opt);
    CHECK(r.chromaticCheck.verdict == CheckVerdict::Indeterminate);
    CHECK_FALSE(r.chromaticExact.has_value());
    CHECK(r.exitStatus() == 2);
}

TEST_CASE("criticality without a confirmed chromatic number stays indeterminate") {
    Expectations expect;
    expect.critical = true;  // no chromatic expectation given
    VerificationReport r = runVerification(oracle::cycle(5), expect, {});
    CHECK(r.criticalCheck.verdict == CheckVerdict::Indeterminate);
    CHECK(r.exitStatus() == 2);
}

TEST_CASE("criticality refutation") {
    Graph g(6);  // C5 plus an isolated vertex: 3-chromatic, not critical
    for (int i = 0; i < 5; ++i) g.addEdge(i, (i + 1) % 5);
    Expectations expect;
    expect.chromatic = 3;
    expect.critical = true;
    VerificationReport r = runVerification(g, expect, {});
    CHECK(r.chromaticCheck.verdict == CheckVerdict::Confirmed);
    CHECK(r.criticalCheck.verdict == CheckVerdict::Refuted);
    CHECK(r.exitStatus() == 1);
}

TEST_CASE("cross-check skips above its order cutoff") {
    Expectations expect;
    expect.chromatic = 3;
    VerifyOptions opt;
    opt.crossCheck = true;
    opt.crossCheckMaxOrder = 4;
    VerificationReport r = runVerification(oracle::cycle(5), expect, opt);
    CHECK(r.chromaticCheck.verdict == CheckVerdict::Confirmed);
    CHECK(r.crossCheck.verdict == CheckVerdict::Skipped);
    CHECK(r.exitStatus() == 0);
}

TEST_CASE("skipped checks stay out of the verdicts") {
    VerificationReport r = runVerification(oracle::cycle(5), {}, {});
    CHECK(r.girthCheck.verdict == CheckVerdict::Skipped);
    CHECK(r.chromaticCheck.verdict == CheckVerdict::Skipped);
    CHECK(r.exitStatus() == 0);
    CHECK(r.girthValue == 5);
    CHECK(r.inputHash == edgeSetHash(oracle::cycle(5)));
}
