// Command-line front end: recognize/realize unit OC interval orders from the
// poset text format, with the brute-force oracle and the differential suite
// alongside.
//
// Exit codes: 0 unit OC, 1 certified non-member, 2 not an interval order,
// 64 usage error, 65 input/data error, 70 internal failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "ocio/builder.hpp"
#include "ocio/io.hpp"
#include "ocio/recognizer.hpp"
#include "ocio/testkit.hpp"
#include "ocio/unitizer.hpp"

namespace {

constexpr int kExitUnitOC = 0;
constexpr int kExitForbidden = 1;
constexpr int kExitNotIntervalOrder = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct Options {
    std::string mode = "general";
    bool json = false;
    bool traceOn = false;
    std::uint64_t seed = 0;
};

std::string readInput(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ocio::Poset loadPoset(const std::string& path) { return ocio::toPoset(ocio::parsePoset(readInput(path))); }

int verdictExit(const std::string& verdict) {
    if (verdict == "unit-oc") return kExitUnitOC;
    if (verdict == "not-unit-oc") return kExitForbidden;
    return kExitNotIntervalOrder;
}

struct Result {
    std::string verdict;
    std::optional<ocio::Representation> representation;
    std::optional<ocio::Certificate> certificate;
};

Result recognize(const ocio::Poset& p, const Options& opt, ocio::TraceLog* log) {
    Result r;
    std::variant<ocio::Representation, ocio::Certificate> outcome =
        opt.mode == "twin-free"
            ? [&] {
                  auto tf = ocio::recognizeTwinFree(p, log);
                  if (auto* rep = std::get_if<ocio::Representation>(&tf))
                      return std::variant<ocio::Representation, ocio::Certificate>(
                          ocio::strictToUnit(p, *rep));
                  return std::variant<ocio::Representation, ocio::Certificate>(
                      std::get<ocio::Certificate>(tf));
              }()
            : ocio::recognizeGeneral(p, log);

    if (auto* rep = std::get_if<ocio::Representation>(&outcome)) {
        // never emit an unverified representation
        if (!ocio::realizes(p, *rep) || !ocio::isUnit(*rep))
            throw std::logic_error("emitted representation failed re-verification");
        r.verdict = "unit-oc";
        r.representation = std::move(*rep);
    } else {
        auto& cert = std::get<ocio::Certificate>(outcome);
        if (!ocio::verifyCertificate(p, cert))
            throw std::logic_error("emitted certificate failed re-verification");
        r.verdict = cert.kind == ocio::ForbiddenKind::TwoPlusTwo ? "not-interval-order"
                                                                 : "not-unit-oc";
        r.certificate = std::move(cert);
    }
    return r;
}

void printResult(const Result& r, const Options& opt, const ocio::TraceLog& log,
                 bool withRepresentation, bool render) {
    if (opt.json) {
        ocio::Json doc = {{"verdict", r.verdict}, {"mode", opt.mode}};
        if (withRepresentation && r.representation)
            doc["representation"] = ocio::representationToJson(*r.representation);
        if (r.certificate) doc["certificate"] = ocio::certificateToJson(*r.certificate);
        if (opt.traceOn) doc["trace"] = log;
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::cout << "verdict: " << r.verdict << '\n';
    if (r.certificate) {
        std::cout << "certificate: " << ocio::kindName(r.certificate->kind) << '\n';
        for (const auto& [pat, host] : r.certificate->embedding)
            std::cout << "  " << pat << " -> " << host << '\n';
    }
    if (withRepresentation && r.representation) {
        if (render) {
            std::cout << ocio::renderRepresentation(*r.representation);
        } else {
            for (int i = 0; i < r.representation->size(); ++i) {
                const auto& iv = r.representation->intervals[i];
                const bool open = iv.style == ocio::Style::Open;
                std::cout << "  " << r.representation->elements[i] << " = " << (open ? '(' : '[')
                          << iv.left.str() << ", " << iv.right.str() << (open ? ')' : ']') << '\n';
            }
        }
    }
    if (opt.traceOn)
        for (const auto& line : log) std::cout << "trace: " << line << '\n';
}

int runCheckLike(const std::string& file, const Options& opt, bool withRepresentation, bool render) {
    ocio::Poset p = loadPoset(file);
    ocio::TraceLog log;
    Result r = recognize(p, opt, opt.traceOn ? &log : nullptr);
    printResult(r, opt, log, withRepresentation, render);
    return verdictExit(r.verdict);
}

int runOracle(const std::string& file, const Options& opt, int bound) {
    ocio::Poset p = loadPoset(file);
    Result r;
    if (ocio::findInducedCopy(p, ocio::catalogPoset(ocio::ForbiddenKind::TwoPlusTwo))) {
        r.verdict = "not-interval-order";
        r.certificate = *ocio::findForbidden(p, ocio::CatalogChoice::TwoTwoOnly, bound);
    } else if (auto cert = ocio::findForbidden(p, ocio::CatalogChoice::T, bound)) {
        r.verdict = "not-unit-oc";
        r.certificate = *cert;
    } else {
        r.verdict = "unit-oc";
    }
    printResult(r, opt, {}, false, false);
    return verdictExit(r.verdict);
}

int runDiff(int n, int fuzz, const Options& opt) {
    ocio::EnumerationReport report = ocio::differentialSuite(n);

    long fuzzFailures = 0;
    ocio::SplitMix64 rng(opt.seed);
    for (int i = 0; i < fuzz; ++i) {
        const int size = 1 + int(rng.next() % 30);
        ocio::Poset p = ocio::randomIntervalOrder(size, rng.next());
        auto outcome = ocio::recognizeGeneral(p);
        if (auto* rep = std::get_if<ocio::Representation>(&outcome)) {
            if (!ocio::realizes(p, *rep) || !ocio::isUnit(*rep)) ++fuzzFailures;
        } else {
            if (!ocio::verifyCertificate(p, std::get<ocio::Certificate>(outcome))) ++fuzzFailures;
        }
    }

    if (opt.json) {
        ocio::Json doc = {{"n", report.n},
                          {"total_labeled", report.total_labeled},
                          {"agreements", report.agreements},
                          {"disagreements", report.disagreements},
                          {"disagreement_samples", report.disagreement_samples}};
        if (fuzz) doc["fuzz"] = {{"runs", fuzz}, {"failures", fuzzFailures}, {"seed", opt.seed}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "enumerated " << report.total_labeled << " posets up to n=" << report.n
                  << ": " << report.agreements << " agreements, " << report.disagreements
                  << " disagreements\n";
        for (const auto& s : report.disagreement_samples) std::cout << "disagreement:\n" << s;
        if (fuzz)
            std::cout << "fuzz: " << fuzz << " runs, " << fuzzFailures << " failures (seed "
                      << opt.seed << ")\n";
    }
    return report.disagreements == 0 && fuzzFailures == 0 ? 0 : kExitInternal;
}

int runDumpTables(const std::string& file, const Options& opt) {
    ocio::Poset p = loadPoset(file);
    for (const auto& cls : ocio::twinClasses(p))
        if (cls.size() > 1)
            throw std::invalid_argument("dump-tables requires a twin-free poset (twins " + cls[0] +
                                        ", " + cls[1] + ")");
    auto chainOrWitness = ocio::downUpChain(p);
    if (std::holds_alternative<ocio::TwoPlusTwoWitness>(chainOrWitness)) {
        const auto& w = std::get<ocio::TwoPlusTwoWitness>(chainOrWitness);
        std::cout << "verdict: not-interval-order\ncertificate: 2+2\n  " << w.x << "<" << w.a
                  << ", " << w.y << "<" << w.b << '\n';
        return kExitNotIntervalOrder;
    }
    const auto& chain = std::get<ocio::DownSetChain>(chainOrWitness);
    ocio::Representation rep = ocio::peekingRefinement(ocio::greenoughRepresentation(p, chain), p);
    ocio::Tables t = ocio::buildTables(rep);
    std::cout << ocio::formatEndpointTable(t.endpoints, rep);
    (void)opt;
    return kExitUnitOC;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit open/closed interval order recognizer and realizer"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--mode", opt.mode, "twin-free | general")
        ->check(CLI::IsMember({"twin-free", "general"}))
        ->capture_default_str();
    app.add_flag("--json", opt.json, "emit JSON result documents");
    app.add_flag("--trace", opt.traceOn, "include the recognizer event log");
    app.add_option("--seed", opt.seed, "PRNG seed for randomized legs");

    std::string file;
    int diffN = 5, fuzz = 0, bound = ocio::kDefaultOracleBound;

    auto* check = app.add_subcommand("check", "verdict only");
    check->add_option("file", file, "poset file ('-' for stdin)")->required();
    auto* realize = app.add_subcommand("realize", "verdict plus representation or certificate");
    realize->add_option("file", file)->required();
    auto* oracle = app.add_subcommand("oracle", "brute-force verdict (small posets)");
    oracle->add_option("file", file)->required();
    oracle->add_option("--bound", bound, "oracle size bound")->capture_default_str();
    auto* diff = app.add_subcommand("diff", "differential suite against the oracle");
    diff->add_option("--n", diffN, "enumerate all posets up to this size")->capture_default_str();
    diff->add_option("--fuzz", fuzz, "additional random fuzz runs")->capture_default_str();
    auto* render = app.add_subcommand("render", "ASCII interval diagram");
    render->add_option("file", file)->required();
    auto* dump = app.add_subcommand("dump-tables", "Stage-1 endpoint table");
    dump->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) return runCheckLike(file, opt, false, false);
        if (realize->parsed()) return runCheckLike(file, opt, true, false);
        if (render->parsed()) return runCheckLike(file, opt, true, true);
        if (oracle->parsed()) return runOracle(file, opt, bound);
        if (diff->parsed()) return runDiff(diffN, fuzz, opt);
        if (dump->parsed()) return runDumpTables(file, opt);
    } catch (const ocio::ParseError& e) {
        std::cerr << "ocio: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ocio: " << e.what() << '\n';
        return kExitData;
    } catch (const std::logic_error& e) {
        std::cerr << "ocio: internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "ocio: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
