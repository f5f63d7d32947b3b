#include <fstream>
#include <future>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ngk/bounds.hpp"
#include "ngk/codecs.hpp"
#include "ngk/coloring.hpp"
#include "ngk/constructions.hpp"
#include "ngk/enumerate.hpp"
#include "ngk/graph.hpp"
#include "ngk/lcf.hpp"
#include "ngk/verify.hpp"

namespace {

constexpr int kExitConfirmed = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string extensionOf(const std::string& path) {
    auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    return path.substr(dot + 1);
}

// Auto-detected by extension unless --input-format is given. LCF tables do
// not carry their cycle length, so those need --cycle-length.
ngk::Graph loadGraph(const std::string& path, std::string format, std::optional<int> cycleLength,
                     std::optional<int> declaredOrder) {
    if (format.empty()) {
        std::string ext = extensionOf(path);
        if (ext == "g6" || ext == "graph6")
            format = "g6";
        else if (ext == "lcf")
            format = "lcf";
        else
            format = "adj";
    }
    const std::string text = readFile(path);
    if (format == "g6") {
        // first non-empty line
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) return ngk::decodeGraph6(line);
        throw DataError("no graph6 line in " + path);
    }
    if (format == "lcf") {
        if (!cycleLength)
            throw CLI::ValidationError("--cycle-length is required for LCF input");
        return ngk::realize(ngk::parseLcfTable(text, *cycleLength));
    }
    if (format == "adj") return ngk::parseAdjacencyList(text, declaredOrder);
    throw CLI::ValidationError("unknown input format '" + format + "'");
}

struct BudgetFlags {
    double seconds = 0;
    std::uint64_t nodes = 0;

    ngk::ColorBudget toBudget() const {
        ngk::ColorBudget b;
        if (seconds > 0) b.timeLimitSeconds = seconds;
        if (nodes > 0) b.nodeLimit = nodes;
        return b;
    }
};

void addInputFlags(CLI::App* cmd, std::string& path, std::string& format,
                   std::optional<int>& cycleLength, std::optional<int>& declaredOrder) {
    cmd->add_option("input", path, "input graph file (graph6, adjacency list, or LCF table)")
        ->required();
    cmd->add_option("--input-format", format, "g6 | adj | lcf (default: by extension)");
    cmd->add_option("--cycle-length,--s", cycleLength, "cycle length s for LCF input");
    cmd->add_option("--order", declaredOrder, "declared order for adjacency-list input");
}

void addBudgetFlags(CLI::App* cmd, BudgetFlags& b) {
    cmd->add_option("--budget-seconds", b.seconds, "wall-clock limit per exact decision");
    cmd->add_option("--budget-nodes", b.nodes, "search-node limit per exact decision");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, search for, and verify small graphs with given girth and chromatic number"};
    app.require_subcommand(1);
    int exitCode = kExitConfirmed;

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check properties of a graph file");
    {
        static std::string path, format, outFormat = "text";
        static std::optional<int> cycleLength, declaredOrder;
        static std::optional<int> expectGirth, expectChromatic;
        static bool critical = false, triangleFree = false, crossCheck = false;
        static bool printColoring = false;
        static BudgetFlags budget;
        static int jobs = 1;
        addInputFlags(verify, path, format, cycleLength, declaredOrder);
        verify->add_option("--girth", expectGirth, "expected exact girth");
        verify->add_option("--chromatic", expectChromatic, "expected exact chromatic number");
        verify->add_flag("--critical", critical, "expect vertex-criticality");
        verify->add_flag("--triangle-free", triangleFree, "expect no triangles");
        verify->add_flag("--cross-check", crossCheck,
                         "rerun chromatic decisions with the plain backtracking method");
        verify->add_flag("--print-coloring", printColoring,
                         "emit the witness coloring as 'vertex color' lines");
        verify->add_option("--jobs", jobs, "parallel workers for criticality deletions");
        verify->add_option("--format", outFormat, "text | json");
        addBudgetFlags(verify, budget);
        verify->callback([&] {
            ngk::Graph g = loadGraph(path, format, cycleLength, declaredOrder);
            ngk::Expectations expect;
            expect.girth = expectGirth;
            expect.chromatic = expectChromatic;
            expect.critical = critical;
            expect.triangleFree = triangleFree;
            ngk::VerifyOptions opt;
            opt.budget = budget.toBudget();
            opt.crossCheck = crossCheck;
            opt.jobs = jobs;
            ngk::VerificationReport report = ngk::runVerification(g, expect, opt);
            std::cout << (outFormat == "json" ? ngk::renderReportJson(report) + "\n"
                                              : ngk::renderReportText(report));
            if (printColoring && report.chromaticWitness)
                for (std::size_t v = 0; v < report.chromaticWitness->assignment.size(); ++v)
                    std::cout << v << ' ' << report.chromaticWitness->assignment[v] << '\n';
            exitCode = report.exitStatus();
        });
    }

    // ---- bounds ----------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "render the lower/upper bound grid for n_g(k)");
    {
        static int gmax = 7, kmax = 8;
        static std::string anchorsPath, outFormat = "grid";
        bounds->add_option("--gmax", gmax, "largest girth column");
        bounds->add_option("--kmax", kmax, "largest chromatic row");
        bounds->add_option("--anchors", anchorsPath, "anchor JSON file (default: built-in set)");
        bounds->add_option("--format", outFormat, "grid | records");
        bounds->callback([&] {
            ngk::AnchorSet anchors = anchorsPath.empty()
                                         ? ngk::AnchorSet::defaults()
                                         : ngk::AnchorSet::fromJsonFile(anchorsPath);
            ngk::BoundsTable table = ngk::buildBoundsTable(anchors, gmax, kmax);
            std::cout << (outFormat == "records" ? ngk::renderBoundsRecords(table)
                                                 : ngk::renderBoundsTable(table));
        });
    }

    // ---- construct -------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "apply a construction to an input graph");
    construct->require_subcommand(1);
    {
        auto* myc = construct->add_subcommand("mycielski", "double the graph plus an apex");
        static std::string path, format;
        static std::optional<int> cycleLength, declaredOrder;
        addInputFlags(myc, path, format, cycleLength, declaredOrder);
        myc->callback([&] {
            ngk::Graph g = loadGraph(path, format, cycleLength, declaredOrder);
            std::cout << ngk::encodeGraph6(ngk::mycielski(g)) << '\n';
        });

        auto* droog = construct->add_subcommand(
            "droogendijk", "double the graph over an independent set");
        static std::string dPath, dFormat, setSpec;
        static std::optional<int> dCycleLength, dDeclaredOrder;
        addInputFlags(droog, dPath, dFormat, dCycleLength, dDeclaredOrder);
        droog->add_option("--set", setSpec, "independent set, e.g. \"0,3\"")->required();
        droog->callback([&] {
            ngk::Graph g = loadGraph(dPath, dFormat, dCycleLength, dDeclaredOrder);
            std::vector<int> s;
            std::istringstream in(setSpec);
            std::string tok;
            while (std::getline(in, tok, ',')) s.push_back(std::stoi(tok));
            std::cout << ngk::encodeGraph6(ngk::droogendijkConstruct(g, s)) << '\n';
        });
    }

    // ---- search ----------------------------------------------------------
    auto* search = app.add_subcommand("search", "randomized searches over candidate graphs");
    search->require_subcommand(1);
    {
        auto* droog = search->add_subcommand(
            "droogendijk", "scan independent sets for qualifying constructions");
        static std::string path, format, sidecarPath;
        static std::optional<int> cycleLength, declaredOrder;
        static int k = 0, maxSet = 1;
        static std::uint64_t seed = 0, maxCandidates = 0;
        static double seconds = 0;
        static bool skipEmptyB = false, confirmedOnly = false;
        static BudgetFlags budget;
        addInputFlags(droog, path, format, cycleLength, declaredOrder);
        droog->add_option("--k", k, "chromatic number of the input graph")->required();
        droog->add_option("--max-set", maxSet, "largest independent set size to try");
        droog->add_option("--seed", seed, "RNG seed (printed for reproducibility)")->required();
        droog->add_option("--max-candidates", maxCandidates, "stop after this many emissions");
        droog->add_option("--seconds", seconds, "wall-clock limit");
        droog->add_option("--sidecar", sidecarPath,
                          "provenance JSONL file (default: stderr)");
        droog->add_flag("--skip-empty-b", skipEmptyB,
                        "skip sets whose neighbourhood covers all other vertices");
        droog->add_flag("--confirmed-only", confirmedOnly,
                        "print graph6 only for confirmed (k+1)-chromatic outputs");
        addBudgetFlags(droog, budget);
        droog->callback([&] {
            ngk::Graph g = loadGraph(path, format, cycleLength, declaredOrder);
            std::cerr << "seed: " << seed << '\n';
            std::ofstream sidecarFile;
            std::ostream* sidecar = &std::cerr;
            if (!sidecarPath.empty()) {
                sidecarFile.open(sidecarPath);
                if (!sidecarFile) throw DataError("cannot open " + sidecarPath);
                sidecar = &sidecarFile;
            }
            ngk::StreamLimits limits;
            if (maxCandidates > 0) limits.maxEmitted = maxCandidates;
            if (seconds > 0) limits.wallClockSeconds = seconds;
            limits.perDecision = budget.toBudget();
            const std::uint64_t inputHash = ngk::edgeSetHash(g);
            std::uint64_t confirmed = 0;
            auto outcome = ngk::searchQualifyingSets(
                g, k, maxSet, limits, seed,
                [&](const ngk::QualifyingCandidate& cand) {
                    nlohmann::json j;
                    j["input_hash"] = inputHash;
                    j["set"] = cand.set;
                    j["order"] = cand.constructed.order();
                    switch (cand.verdict) {
                        case ngk::QualifyingCandidate::Verdict::Confirmed:
                            j["verdict"] = "confirmed";
                            break;
                        case ngk::QualifyingCandidate::Verdict::Refuted:
                            j["verdict"] = "refuted";
                            break;
                        default:
                            j["verdict"] = "indeterminate";
                    }
                    if (cand.chromatic) j["chromatic"] = *cand.chromatic;
                    j["graph6"] = ngk::encodeGraph6(cand.constructed);
                    *sidecar << j.dump() << '\n';
                    const bool isConfirmed =
                        cand.verdict == ngk::QualifyingCandidate::Verdict::Confirmed;
                    if (isConfirmed) ++confirmed;
                    if (!confirmedOnly || isConfirmed)
                        std::cout << ngk::encodeGraph6(cand.constructed) << '\n';
                    return true;
                },
                skipEmptyB);
            if (outcome.status == ngk::StreamStatus::BudgetExhausted) {
                std::cerr << "budget exhausted after " << outcome.emitted << " candidates\n";
                exitCode = kExitIndeterminate;
            } else {
                exitCode = confirmed > 0 ? kExitConfirmed : kExitRefuted;
            }
        });

        auto* perturb = search->add_subcommand(
            "perturb", "explore single-edge changes preserving girth and chromatic number");
        static std::string pPath, pFormat;
        static std::optional<int> pCycleLength, pDeclaredOrder;
        static int pK = 0, pGirth = 4, pDepth = 1;
        static std::uint64_t pSeed = 0, pMax = 0;
        static double pSeconds = 0;
        static BudgetFlags pBudget;
        addInputFlags(perturb, pPath, pFormat, pCycleLength, pDeclaredOrder);
        perturb->add_option("--k", pK, "chromatic number to preserve")->required();
        perturb->add_option("--gmin", pGirth, "minimum girth to preserve");
        perturb->add_option("--depth", pDepth, "edit distance from the start graph");
        perturb->add_option("--seed", pSeed, "RNG seed (printed)")->required();
        perturb->add_option("--max-graphs", pMax, "stop after this many emissions");
        perturb->add_option("--seconds", pSeconds, "wall-clock limit");
        addBudgetFlags(perturb, pBudget);
        perturb->callback([&] {
            ngk::Graph g = loadGraph(pPath, pFormat, pCycleLength, pDeclaredOrder);
            std::cerr << "seed: " << pSeed << '\n';
            ngk::StreamLimits limits;
            if (pMax > 0) limits.maxEmitted = pMax;
            if (pSeconds > 0) limits.wallClockSeconds = pSeconds;
            limits.perDecision = pBudget.toBudget();
            auto outcome = ngk::exploreEdgePerturbations(
                g, pK, pGirth, pDepth, limits, pSeed, [&](const ngk::Graph& h) {
                    std::cout << ngk::encodeGraph6(h) << '\n';
                    return true;
                });
            exitCode = outcome.status == ngk::StreamStatus::BudgetExhausted
                           ? kExitIndeterminate
                           : kExitConfirmed;
        });
    }

    // ---- lcf -------------------------------------------------------------
    auto* lcf = app.add_subcommand("lcf", "semiregular-orbit graphs");
    lcf->require_subcommand(1);
    {
        auto* realizeCmd = lcf->add_subcommand("realize", "expand an LCF table into a graph");
        static std::string path;
        static int s = 0;
        static std::string to = "g6";
        realizeCmd->add_option("input", path, "LCF table file")->required();
        realizeCmd->add_option("--cycle-length,--s", s, "cycle length s")->required();
        realizeCmd->add_option("--to", to, "g6 | adj");
        realizeCmd->callback([&] {
            ngk::Graph g = ngk::realize(ngk::parseLcfTable(readFile(path), s));
            if (to == "adj")
                std::cout << ngk::emitAdjacencyList(g);
            else
                std::cout << ngk::encodeGraph6(g) << '\n';
        });

        auto* searchCmd = lcf->add_subcommand("search", "randomized orbit-placement search");
        static std::string algo = "basic", screenLogPath;
        static int g = 6, r = 1, sLen = 2, k = 3;
        static std::uint64_t seed = 0, iters = 0;
        static double seconds = 0, randomFrac = 0.25;
        static std::optional<int> oddThreshold;
        static int restarts = 4, jobs = 1;
        searchCmd->add_option("--algo", algo, "basic | even | exhaustive (rs <= 24)")
            ->required();
        searchCmd->add_option("--g", g, "minimum girth")->required();
        searchCmd->add_option("--r", r, "row count r")->required();
        searchCmd->add_option("--s", sLen, "cycle length s")->required();
        searchCmd->add_option("--k", k, "colors the randomized colorer must fail with");
        searchCmd->add_option("--seed", seed, "RNG seed (printed)")->required();
        searchCmd->add_option("--iters", iters, "outer iteration limit");
        searchCmd->add_option("--seconds", seconds, "wall-clock limit");
        searchCmd->add_option("--random-frac", randomFrac,
                              "fraction of picks taken uniformly instead of by cycle count");
        searchCmd->add_option("--odd-threshold", oddThreshold,
                              "edge count after which a bipartite build restarts");
        searchCmd->add_option("--color-restarts", restarts, "randomized colorer restarts");
        searchCmd->add_option("--jobs", jobs, "independent workers on distinct seeds");
        searchCmd->add_option("--screen-log", screenLogPath,
                              "JSONL log of every screened build and its verdict");
        searchCmd->callback([&] {
            std::cerr << "seed: " << seed << '\n';
            ngk::LocalSearchEffort effort;
            effort.restarts = restarts;

            std::ofstream logFile;
            std::mutex logMutex;
            ngk::SearchLogger logger;
            if (!screenLogPath.empty()) {
                logFile.open(screenLogPath);
                if (!logFile) throw DataError("cannot open " + screenLogPath);
                logger = [&](const ngk::SearchScreenLog& entry) {
                    nlohmann::json j;
                    j["iteration"] = entry.iteration;
                    j["edges"] = entry.edgeCount;
                    j["heuristic"] = entry.heuristicFound ? "found" : "not_found";
                    j["seed"] = entry.seed;
                    std::lock_guard<std::mutex> lock(logMutex);
                    logFile << j.dump() << '\n';
                };
            }

            if (algo == "exhaustive") {
                std::uint64_t emitted = 0;
                std::uint64_t screened = ngk::exhaustiveSearch(
                    g, r, sLen, k,
                    [&](const ngk::LcfSearchResult& res) {
                        ++emitted;
                        std::cout << ngk::encodeGraph6(res.graph) << '\n';
                        std::cerr << "candidate orbits:\n" << ngk::emitLcfTable(res.scheme);
                        return true;
                    },
                    seed, effort, logger);
                std::cerr << "screened " << screened << " maximal builds, " << emitted
                          << " candidates\n";
                exitCode = emitted > 0 ? kExitConfirmed : kExitRefuted;
                return;
            }

            auto runWorker = [&](std::uint64_t workerSeed) {
                ngk::SearchBudget budget;
                budget.seed = workerSeed;
                if (iters > 0) budget.maxOuterIterations = iters;
                if (seconds > 0) budget.wallClockSeconds = seconds;
                if (algo == "even") {
                    ngk::EvenGirthHeuristics h;
                    h.randomPickFraction = randomFrac;
                    h.earlyOddCycleEdgeThreshold = oddThreshold;
                    return ngk::evenGirthSearch(g, r, sLen, k, budget, h, effort, logger);
                }
                return ngk::basicSearch(g, r, sLen, k, budget, effort, logger);
            };

            std::vector<std::optional<ngk::LcfSearchResult>> results;
            if (jobs <= 1) {
                results.push_back(runWorker(seed));
            } else {
                std::vector<std::future<std::optional<ngk::LcfSearchResult>>> futures;
                for (int j = 0; j < jobs; ++j)
                    futures.push_back(
                        std::async(std::launch::async, runWorker, seed + j));
                for (auto& f : futures) results.push_back(f.get());
            }

            // workers may rediscover the same edge set; emit each once
            std::set<std::uint64_t> seen;
            bool any = false;
            for (std::size_t j = 0; j < results.size(); ++j) {
                if (!results[j]) continue;
                if (!seen.insert(ngk::edgeSetHash(results[j]->graph)).second) continue;
                any = true;
                std::cout << ngk::encodeGraph6(results[j]->graph) << '\n';
                std::cerr << "worker " << j << " (seed " << seed + j << "): candidate after "
                          << results[j]->outerIterations << " outer iterations; placed orbits:\n"
                          << ngk::emitLcfTable(results[j]->scheme);
            }
            if (!any) {
                std::cerr << "no candidate within budget\n";
                exitCode = kExitIndeterminate;
            }
        });
    }

    // ---- convert ---------------------------------------------------------
    auto* convert = app.add_subcommand("convert", "translate between graph formats");
    {
        static std::string path, format, to = "g6";
        static std::optional<int> cycleLength, declaredOrder;
        addInputFlags(convert, path, format, cycleLength, declaredOrder);
        convert->add_option("--to", to, "g6 | adj")->required();
        convert->callback([&] {
            ngk::Graph g = loadGraph(path, format, cycleLength, declaredOrder);
            if (to == "adj")
                std::cout << ngk::emitAdjacencyList(g);
            else if (to == "g6")
                std::cout << ngk::encodeGraph6(g) << '\n';
            else
                throw CLI::ValidationError("unknown target format '" + to + "'");
        });
    }

    // ---- enumerate -------------------------------------------------------
    auto* enumerate = app.add_subcommand(
        "enumerate", "exhaustive isomorph-free generation at small orders");
    {
        static int maxN = 1, girthMin = 3, minDeg = 0, maxDeg = 15, cap = 11;
        static std::optional<int> assertColorable;
        static bool print = false;
        enumerate->add_option("--max-n", maxN, "target order (runs all orders up to it)")
            ->required();
        enumerate->add_option("--girth", girthMin, "minimum girth");
        enumerate->add_option("--min-deg", minDeg, "minimum degree");
        enumerate->add_option("--max-deg", maxDeg, "maximum degree");
        enumerate->add_option("--cap", cap, "safety cap on the order (hard limit 16)");
        enumerate->add_option("--assert-colorable", assertColorable,
                              "fail if some generated graph is not k-colorable");
        enumerate->add_flag("--print", print, "emit graph6 for every generated graph");
        enumerate->callback([&] {
            bool failed = false;
            for (int n = 1; n <= maxN && !failed; ++n) {
                if (minDeg >= n) {
                    std::cout << "n=" << n << " count=0\n";
                    continue;
                }
                ngk::GenerationConstraints c;
                c.maxOrder = n;
                c.girthMin = girthMin;
                c.minDegree = minDeg;
                c.maxDegree = maxDeg;
                std::uint64_t count = 0;
                if (assertColorable) {
                    ngk::CertifyResult res = ngk::certifyAllColorable(c, *assertColorable, cap);
                    count = res.visited;
                    if (!res.allColorable) {
                        std::cout << "n=" << n << " counterexample="
                                  << ngk::encodeGraph6(*res.counterexample) << '\n';
                        exitCode = kExitRefuted;
                        failed = true;
                        break;
                    }
                } else {
                    count = ngk::generate(
                        c,
                        [&](const ngk::Graph& g) {
                            if (print) std::cout << ngk::encodeGraph6(g) << '\n';
                            return true;
                        },
                        cap);
                }
                std::cout << "n=" << n << " count=" << count << '\n';
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const ngk::CodecError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitData;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return exitCode;
}
