#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "ocio/catalog.hpp"
#include "ocio/poset.hpp"

using namespace ocio;
using namespace ocio::test;

TEST_CASE("building from covers takes the transitive closure") {
    Poset p = chain({"a", "b", "c"});
    CHECK(p.less("a", "b"));
    CHECK(p.less("b", "c"));
    CHECK(p.less("a", "c"));
    CHECK(p.relationPairs().size() == 3);
}

TEST_CASE("reflexive pairs are rejected") {
    CHECK_THROWS_AS(covers({"a"}, {{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("cycles are rejected") {
    CHECK_THROWS_AS(covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), std::invalid_argument);
}

TEST_CASE("full-relation mode validates closedness") {
    CHECK_THROWS_AS(
        Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, RelationInput::FullRelation),
        std::invalid_argument);
    Poset p = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}},
                           RelationInput::FullRelation);
    CHECK(p.less("a", "c"));
}

TEST_CASE("a chain plus two isolated points leaves the extras incomparable to everything") {
    Poset p = covers({"a", "b", "c", "d", "x"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.incomparable(p.indexOf("x"), p.indexOf("a")));
    CHECK(p.incomparable(p.indexOf("x"), p.indexOf("d")));
    CHECK(p.less("a", "c"));
}

TEST_CASE("down/up chain of a 3-chain") {
    Poset p = chain({"a", "b", "c"});
    auto result = downUpChain(p);
    REQUIRE(std::holds_alternative<DownSetChain>(result));
    const auto& c = std::get<DownSetChain>(result);
    REQUIRE(c.down_sets.size() == 3);
    CHECK(c.down_sets[0].empty());
    CHECK(c.down_sets[1] == std::vector<int>{p.indexOf("a")});
    CHECK(c.down_sets[2].size() == 2);
    CHECK(c.left_index[p.indexOf("a")] == 1);
    CHECK(c.left_index[p.indexOf("b")] == 2);
    CHECK(c.left_index[p.indexOf("c")] == 3);
    CHECK(c.up_sets.size() == c.down_sets.size());
    for (int i = 0; i < p.size(); ++i) CHECK(c.left_index[i] <= c.right_index[i]);
}

TEST_CASE("down/up chain of an antichain collapses to one empty down set") {
    Poset p = antichain({"a", "b"});
    auto result = downUpChain(p);
    REQUIRE(std::holds_alternative<DownSetChain>(result));
    const auto& c = std::get<DownSetChain>(result);
    CHECK(c.down_sets.size() == 1);
    CHECK(c.left_index[0] == 1);
    CHECK(c.left_index[1] == 1);
}

TEST_CASE("incomparable down sets yield a 2+2 witness") {
    Poset p = twoPlusTwo();
    auto result = downUpChain(p);
    REQUIRE(std::holds_alternative<TwoPlusTwoWitness>(result));
    const auto& w = std::get<TwoPlusTwoWitness>(result);
    CHECK(p.less(w.x, w.a));
    CHECK(p.less(w.y, w.b));
    for (auto [u, v] : {std::pair{w.x, w.y}, {w.x, w.b}, {w.y, w.a}, {w.a, w.b}})
        CHECK(p.incomparable(p.indexOf(u), p.indexOf(v)));
}

TEST_CASE("dual reverses the relation and is an involution") {
    Poset p = chain({"a", "b"});
    Poset d = dual(p);
    CHECK(d.less("b", "a"));
    CHECK_FALSE(d.less("a", "b"));
    CHECK(dual(d) == p);

    Poset anti = antichain({"a", "b", "c"});
    CHECK(dual(anti) == anti);

    CHECK(dual(catalogPoset(ForbiddenKind::Y)) == catalogPoset(ForbiddenKind::YDual));
}

TEST_CASE("induced restriction") {
    Poset four = chain({"a", "b", "c", "d"});
    Poset sub = induced(four, {"a", "c"});
    CHECK(sub.size() == 2);
    CHECK(sub.less("a", "c"));

    Poset tpo = induced(covers({"a", "b", "c", "x", "y"}, {{"a", "b"}, {"b", "c"}}),
                        {"a", "b", "c", "x"});
    CHECK(tpo == threePlusOne());

    CHECK(induced(four, {}).size() == 0);
    CHECK_THROWS_AS(induced(four, {"nope"}), std::invalid_argument);
}

TEST_CASE("twin classes group elements with identical comparability profiles") {
    CHECK(twinClasses(antichain({"a", "b", "c"})) ==
          std::vector<std::vector<std::string>>{{"a", "b", "c"}});

    auto yClasses = twinClasses(catalogPoset(ForbiddenKind::Y));
    std::set<std::vector<std::string>> got(yClasses.begin(), yClasses.end());
    CHECK(got == std::set<std::vector<std::string>>{{"a"}, {"b", "c"}, {"d"}, {"x"}});

    CHECK(twinClasses(chain({"a", "b", "c", "d"})).size() == 4);
}

TEST_CASE("twin reduction produces a twin-free induced quotient") {
    SECTION("antichain collapses to a point") {
        auto r = reduceTwins(antichain({"a", "b", "c"}));
        CHECK(r.quotient.size() == 1);
        CHECK(r.representative.at("a") == r.representative.at("b"));
        CHECK(r.representative.at("b") == r.representative.at("c"));
    }
    SECTION("twin-free input is a fixpoint") {
        Poset p = chain({"a", "b", "c"});
        auto r = reduceTwins(p);
        CHECK(r.quotient == p);
        for (const auto& id : p.elements()) CHECK(r.representative.at(id) == id);
    }
    SECTION("a 3-chain with two isolated points reduces to a 3-chain with one") {
        Poset p = covers({"a", "b", "c", "x", "y"}, {{"a", "b"}, {"b", "c"}});
        auto r = reduceTwins(p);
        CHECK(r.quotient == threePlusOne());
        CHECK(r.representative.at("y") == "x");
    }
    SECTION("quotient relation agrees with the original on representatives") {
        Poset p = covers({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}});
        auto r = reduceTwins(p);
        for (const auto& u : r.quotient.elements())
            for (const auto& v : r.quotient.elements())
                if (u != v) CHECK(r.quotient.less(u, v) == p.less(u, v));
        CHECK(twinClasses(r.quotient).size() == std::size_t(r.quotient.size()));
    }
}

TEST_CASE("induced-copy search") {
    SECTION("a 3-chain plus isolated point embeds into 4+1") {
        auto emb = findInducedCopy(catalogPoset(ForbiddenKind::FourPlusOne), threePlusOne());
        REQUIRE(emb.has_value());
        CHECK(isInducedEmbedding(catalogPoset(ForbiddenKind::FourPlusOne), threePlusOne(), *emb));
    }
    SECTION("a chain contains no incomparable pairs") {
        CHECK_FALSE(findInducedCopy(chain({"a", "b", "c"}), twoPlusTwo()));
    }
    SECTION("the six-element pattern with two pendant points has no 4+1") {
        CHECK_FALSE(
            findInducedCopy(catalogPoset(ForbiddenKind::Z), catalogPoset(ForbiddenKind::FourPlusOne)));
    }
    SECTION("pattern size bound is enforced") {
        CHECK_THROWS_AS(findInducedCopy(chain({"a"}), chain({"a", "b", "c", "d", "e", "f", "g", "h"})),
                        std::invalid_argument);
    }
    SECTION("every returned embedding passes the independent induced check") {
        Poset host = covers({"p", "q", "r", "s", "t"}, {{"p", "q"}, {"q", "r"}, {"s", "t"}});
        auto emb = findInducedCopy(host, twoPlusTwo());
        REQUIRE(emb.has_value());
        CHECK(isInducedEmbedding(host, twoPlusTwo(), *emb));
    }
}
