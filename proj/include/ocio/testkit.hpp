#ifndef OCIO_TESTKIT_HPP
#define OCIO_TESTKIT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "ocio/catalog.hpp"
#include "ocio/interval.hpp"
#include "ocio/io.hpp"
#include "ocio/poset.hpp"
#include "ocio/unitizer.hpp"

namespace ocio {

inline constexpr int kMaxEnumerationSize = 7;

// Visits every labeled strict partial order on n elements exactly once.
// Backtracking over element pairs with transitive-closure propagation, so
// each leaf is already a closed relation.
inline void enumeratePosets(int n, const std::function<void(const Poset&)>& visit) {
    if (n < 0 || n > kMaxEnumerationSize)
        throw std::invalid_argument("enumeratePosets supports 0 <= n <= " +
                                    std::to_string(kMaxEnumerationSize));
    static const char* kNames = "abcdefg";
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.emplace_back(1, kNames[i]);
    if (n == 0) {
        visit(Poset());
        return;
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<Bitset> up(n, Bitset(n)), down(n, Bitset(n));
    std::vector<Bitset> incomp(n, Bitset(n));

    // Adds x < y together with everything transitivity forces; records the
    // added pairs on the trail.  Fails on a conflict with a decided pair.
    auto propagate = [&](int x, int y, std::vector<std::pair<int, int>>& trail) -> bool {
        std::vector<int> srcs = down[x].toIndices();
        srcs.push_back(x);
        std::vector<int> dsts = up[y].toIndices();
        dsts.push_back(y);
        for (int a : srcs) {
            for (int b : dsts) {
                if (a == b) return false;
                if (up[a].test(b)) continue;
                if (up[b].test(a) || incomp[a].test(b)) return false;
                up[a].set(b);
                down[b].set(a);
                trail.emplace_back(a, b);
            }
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == pairs.size()) {
            visit(Poset::fromClosedRelation(names, up, false));
            return;
        }
        auto [i, j] = pairs[t];
        if (up[i].test(j) || up[j].test(i)) {  // forced earlier
            rec(t + 1);
            return;
        }
        incomp[i].set(j);
        incomp[j].set(i);
        rec(t + 1);
        incomp[i].reset(j);
        incomp[j].reset(i);

        for (auto [x, y] : {std::make_pair(i, j), std::make_pair(j, i)}) {
            std::vector<std::pair<int, int>> trail;
            if (propagate(x, y, trail)) rec(t + 1);
            for (auto [a, b] : trail) {
                up[a].reset(b);
                down[b].reset(a);
            }
        }
    };
    rec(0);
}

inline long countPosets(int n) {
    long c = 0;
    enumeratePosets(n, [&](const Poset&) { ++c; });
    return c;
}

// Independent ground truth: unit OC membership by pure induced-subposet
// search (no staged recognizer involved).
inline bool oracleIsUnitOC(const Poset& p, int oracle_bound = kDefaultOracleBound) {
    if (p.size() > oracle_bound)
        throw std::invalid_argument("poset exceeds oracle bound of " + std::to_string(oracle_bound));
    if (findInducedCopy(p, catalogPoset(ForbiddenKind::TwoPlusTwo))) return false;
    return !findForbidden(p, CatalogChoice::T, oracle_bound).has_value();
}

struct EnumerationReport {
    int n = 0;  // maximum element count enumerated
    long total_labeled = 0;
    long agreements = 0;
    long disagreements = 0;
    std::vector<std::string> disagreement_samples;  // poset text format
};

// Every labeled poset on <= n_max elements, differentially tested:
// recognizeGeneral against oracleIsUnitOC, representations re-verified,
// certificates re-verified, twin-free posets additionally run through
// recognizeTwinFree against the F catalog.
inline EnumerationReport differentialSuite(int n_max = 6) {
    EnumerationReport report;
    report.n = n_max;
    constexpr int kSampleCap = 10;

    for (int n = 0; n <= n_max; ++n) {
        enumeratePosets(n, [&](const Poset& p) {
            ++report.total_labeled;
            bool ok = true;

            auto outcome = recognizeGeneral(p);
            const bool oracle = oracleIsUnitOC(p);
            if (auto* rep = std::get_if<Representation>(&outcome)) {
                ok = oracle && bool(realizes(p, *rep)) && isUnit(*rep);
                // twins must receive identical intervals
                for (const auto& cls : twinClasses(p))
                    for (std::size_t i = 1; i < cls.size() && ok; ++i)
                        if (!(rep->at(cls[i]) == rep->at(cls[0]))) ok = false;
            } else {
                const auto& cert = std::get<Certificate>(outcome);
                ok = !oracle && verifyCertificate(p, cert);
            }

            if (ok && twinClasses(p).size() == std::size_t(p.size())) {
                auto tfOutcome = recognizeTwinFree(p);
                const bool tfAccepts = std::holds_alternative<Representation>(tfOutcome);
                const bool fFree = !findForbidden(p, CatalogChoice::F).has_value() &&
                                   !findInducedCopy(p, catalogPoset(ForbiddenKind::TwoPlusTwo));
                if (tfAccepts != fFree) ok = false;
                if (ok && tfAccepts) {
                    const auto& strict = std::get<Representation>(tfOutcome);
                    if (!realizes(p, strict) || !isStrict(strict)) ok = false;
                    if (ok) {
                        Representation unit = strictToUnit(p, strict);
                        if (!realizes(p, unit) || !isUnit(unit)) ok = false;
                    }
                } else if (ok) {
                    if (!verifyCertificate(p, std::get<Certificate>(tfOutcome))) ok = false;
                }
            }

            if (ok) {
                ++report.agreements;
            } else {
                ++report.disagreements;
                if (int(report.disagreement_samples.size()) < kSampleCap)
                    report.disagreement_samples.push_back(serializePoset(p));
            }
        });
    }
    return report;
}

// ---------------------------------------------------------------------------
// Seeded random interval orders (for scaling and fuzz tests).

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// n unit intervals with distinct rational left endpoints: integer draws
// perturbed by i/(n+1).  The closed-semantics order is read off directly.
inline Poset randomIntervalOrder(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("randomIntervalOrder requires n >= 1");
    SplitMix64 rng(seed);
    // key encodes left endpoint a_i + i/(n+1) as a_i*(n+1) + i; unit length
    // corresponds to n+1 in key space
    std::vector<std::int64_t> key(n);
    for (int i = 0; i < n; ++i)
        key[i] = std::int64_t(rng.next() % std::uint64_t(2 * n)) * (n + 1) + i;

    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<Bitset> up(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (key[i] + (n + 1) < key[j]) up[i].set(j);
    return Poset::fromClosedRelation(std::move(names), std::move(up), false);
}

}  // namespace ocio

#endif
