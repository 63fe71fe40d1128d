#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ocio/catalog.hpp"
#include "ocio/io.hpp"
#include "ocio/recognizer.hpp"
#include "ocio/testkit.hpp"

using namespace ocio;
using namespace ocio::test;

namespace {
Tables preparedTables(const Poset& p, Representation& refinedOut) {
    auto r = downUpChain(p);
    REQUIRE(std::holds_alternative<DownSetChain>(r));
    refinedOut = peekingRefinement(greenoughRepresentation(p, std::get<DownSetChain>(r)), p);
    return buildTables(refinedOut);
}
}  // namespace

TEST_CASE("stage 2 records the single strict inclusion of the five-element example") {
    Poset p = posetN();
    Representation rep;
    Tables t = preparedTables(p, rep);
    auto cert = stage2Scan(t, rep, p, nullptr);
    CHECK_FALSE(cert.has_value());
    const int b = int(std::find(rep.elements.begin(), rep.elements.end(), "b") -
                      rep.elements.begin());
    const int e = int(std::find(rep.elements.begin(), rep.elements.end(), "e") -
                      rep.elements.begin());
    CHECK(t.elements.containers[b] == std::vector<int>{e});
    CHECK(t.elements.contained[e] == std::vector<int>{b});
    for (int i = 0; i < rep.size(); ++i) {
        CHECK(t.elements.containers[i].size() <= 1);
        CHECK(t.elements.contained[i].size() <= 1);
    }
}

TEST_CASE("peeker location on the five-element example") {
    Poset p = posetN();
    Representation rep;
    Tables t = preparedTables(p, rep);
    REQUIRE_FALSE(stage2Scan(t, rep, p, nullptr).has_value());
    const int a = int(std::find(rep.elements.begin(), rep.elements.end(), "a") -
                      rep.elements.begin());
    const int b = int(std::find(rep.elements.begin(), rep.elements.end(), "b") -
                      rep.elements.begin());
    const int c = int(std::find(rep.elements.begin(), rep.elements.end(), "c") -
                      rep.elements.begin());
    const int e = int(std::find(rep.elements.begin(), rep.elements.end(), "e") -
                      rep.elements.begin());
    CHECK(locatePeekers(t, b, e, PeekSide::Left) == std::vector<int>{a});
    CHECK(locatePeekers(t, b, e, PeekSide::Right) == std::vector<int>{c});
    CHECK_THROWS_AS(locatePeekers(t, b, b, PeekSide::Left), std::invalid_argument);
}

TEST_CASE("stage 3 retraction and expansion on the five-element example") {
    Poset p = posetN();
    Representation rep;
    Tables t = preparedTables(p, rep);
    REQUIRE_FALSE(stage2Scan(t, rep, p, nullptr).has_value());
    auto zc = stage3Retract(t, rep, p, nullptr);
    CHECK_FALSE(zc.has_value());
    CHECK(rep.at("a").right == rep.at("e").left);
    CHECK(rep.at("c").left == rep.at("e").right);
    CHECK(realizes(p, rep));

    Representation strict = stage3Expand(t, rep);
    CHECK(strict.at("b").style == Style::Open);
    CHECK(strict.at("b").left == strict.at("e").left);
    CHECK(strict.at("b").right == strict.at("e").right);
    CHECK(realizes(p, strict));
    CHECK(isStrict(strict));
}

TEST_CASE("stage 3 leaves inclusion-free representations unchanged") {
    Poset p = chain({"a", "b", "c"});
    Representation rep;
    Tables t = preparedTables(p, rep);
    REQUIRE_FALSE(stage2Scan(t, rep, p, nullptr).has_value());
    Representation before = rep;
    CHECK_FALSE(stage3Retract(t, rep, p, nullptr).has_value());
    for (int i = 0; i < rep.size(); ++i) {
        CHECK(rep.intervals[i].left == before.intervals[i].left);
        CHECK(rep.intervals[i].right == before.intervals[i].right);
    }
    Representation out = stage3Expand(t, rep);
    for (const auto& iv : out.intervals) CHECK(iv.style == Style::Closed);
}

TEST_CASE("full twin-free recognition on the canonical patterns") {
    SECTION("3+1 is accepted with the middle interval open") {
        auto outcome = recognizeTwinFree(threePlusOne());
        REQUIRE(std::holds_alternative<Representation>(outcome));
        const auto& rep = std::get<Representation>(outcome);
        CHECK(realizes(threePlusOne(), rep));
        CHECK(isStrict(rep));
        CHECK(rep.at("b").style == Style::Open);
        CHECK(rep.at("b").left == rep.at("x").left);
        CHECK(rep.at("b").right == rep.at("x").right);
    }
    SECTION("no forbidden pattern is ever assigned a representation") {
        // Patterns that contain twins are rejected up front as a usage
        // error; the twin-free ones must come back with a verified
        // certificate.  Neither path may yield a representation.
        for (ForbiddenKind k : catalogF()) {
            const Poset& p = catalogPoset(k);
            const bool twinFree = twinClasses(p).size() == std::size_t(p.size());
            if (!twinFree) {
                CHECK_THROWS_AS(recognizeTwinFree(p), std::invalid_argument);
                continue;
            }
            auto outcome = recognizeTwinFree(p);
            REQUIRE(std::holds_alternative<Certificate>(outcome));
            const auto& cert = std::get<Certificate>(outcome);
            CHECK(verifyCertificate(p, cert));
        }
    }
    SECTION("two incomparable chains yield the minimal non-interval-order certificate") {
        auto outcome = recognizeTwinFree(twoPlusTwo());
        REQUIRE(std::holds_alternative<Certificate>(outcome));
        const auto& cert = std::get<Certificate>(outcome);
        CHECK(cert.kind == ForbiddenKind::TwoPlusTwo);
        CHECK(verifyCertificate(twoPlusTwo(), cert));
    }
    SECTION("twinned inputs are rejected as a usage error") {
        CHECK_THROWS_AS(recognizeTwinFree(antichain({"a", "b"})), std::invalid_argument);
    }
}

TEST_CASE("certificate kinds reported by stage 2 match the embedded pattern") {
    SECTION("the 3-chain-plus-two-points pattern") {
        const Poset& p = catalogPoset(ForbiddenKind::ThreePlusOnePlusOne);
        // twinned as given (x,y are twins), so embed it in a twin-free host:
        // distinguish x from y by a point above y only... simplest: test via
        // the general path in test_unitizer; here use a twin-free host
        // containing the pattern.
        Poset host = covers({"a", "b", "c", "x", "y", "t"},
                            {{"a", "b"}, {"b", "c"}, {"y", "t"}, {"c", "t"}});
        REQUIRE(twinClasses(host).size() == std::size_t(host.size()));
        REQUIRE(findInducedCopy(host, p).has_value());
        auto outcome = recognizeTwinFree(host);
        REQUIRE(std::holds_alternative<Certificate>(outcome));
        CHECK(verifyCertificate(host, std::get<Certificate>(outcome)));
    }
    SECTION("trace log records scan events when requested") {
        TraceLog log;
        recognizeTwinFree(posetN(), &log);
        CHECK_FALSE(log.empty());
    }
}

TEST_CASE("twin-free recognition agrees with the brute-force catalogs on all small posets") {
    // the decisive equivalence: representation exists iff no forbidden pattern
    for (int n = 1; n <= 5; ++n) {
        enumeratePosets(n, [&](const Poset& p) {
            if (twinClasses(p).size() != std::size_t(p.size())) return;
            const bool clean =
                !findForbidden(p, CatalogChoice::F).has_value() &&
                !findInducedCopy(p, catalogPoset(ForbiddenKind::TwoPlusTwo)).has_value();
            auto outcome = recognizeTwinFree(p);
            if (std::holds_alternative<Representation>(outcome)) {
                const auto& rep = std::get<Representation>(outcome);
                if (!clean || !realizes(p, rep) || !isStrict(rep)) {
                    CAPTURE(serializePoset(p));
                    FAIL("accepted a forbidden poset or emitted a bad representation");
                }
            } else {
                const auto& cert = std::get<Certificate>(outcome);
                if (clean || !verifyCertificate(p, cert)) {
                    CAPTURE(serializePoset(p), kindName(cert.kind));
                    FAIL("rejected a representable poset or emitted a bad certificate");
                }
            }
        });
    }
}
