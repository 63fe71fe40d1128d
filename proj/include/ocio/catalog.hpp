#ifndef OCIO_CATALOG_HPP
#define OCIO_CATALOG_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocio/poset.hpp"

namespace ocio {

enum class ForbiddenKind {
    TwoPlusTwo,
    FourPlusOne,
    ThreePlusOnePlusOne,
    Z,
    D,
    Y,
    YDual,
    DStar,
    DStarDual,
    YStar,
    YStarDual,
    YStarStar,
    YStarStarDual,
};

inline const char* kindName(ForbiddenKind k) {
    switch (k) {
        case ForbiddenKind::TwoPlusTwo: return "2+2";
        case ForbiddenKind::FourPlusOne: return "4+1";
        case ForbiddenKind::ThreePlusOnePlusOne: return "3+1+1";
        case ForbiddenKind::Z: return "Z";
        case ForbiddenKind::D: return "D";
        case ForbiddenKind::Y: return "Y";
        case ForbiddenKind::YDual: return "Y-dual";
        case ForbiddenKind::DStar: return "D*";
        case ForbiddenKind::DStarDual: return "D*-dual";
        case ForbiddenKind::YStar: return "Y*";
        case ForbiddenKind::YStarDual: return "Y*-dual";
        case ForbiddenKind::YStarStar: return "Y**";
        case ForbiddenKind::YStarStarDual: return "Y**-dual";
    }
    throw std::logic_error("unreachable");
}

inline std::optional<ForbiddenKind> kindFromName(const std::string& s) {
    for (ForbiddenKind k :
         {ForbiddenKind::TwoPlusTwo, ForbiddenKind::FourPlusOne, ForbiddenKind::ThreePlusOnePlusOne,
          ForbiddenKind::Z, ForbiddenKind::D, ForbiddenKind::Y, ForbiddenKind::YDual,
          ForbiddenKind::DStar, ForbiddenKind::DStarDual, ForbiddenKind::YStar,
          ForbiddenKind::YStarDual, ForbiddenKind::YStarStar, ForbiddenKind::YStarStarDual})
        if (s == kindName(k)) return k;
    return std::nullopt;
}

// The twin-free catalog and the general catalog.
inline const std::vector<ForbiddenKind>& catalogF() {
    static const std::vector<ForbiddenKind> f = {
        ForbiddenKind::FourPlusOne, ForbiddenKind::ThreePlusOnePlusOne, ForbiddenKind::Z,
        ForbiddenKind::D,           ForbiddenKind::Y,                   ForbiddenKind::YDual};
    return f;
}
inline const std::vector<ForbiddenKind>& catalogT() {
    static const std::vector<ForbiddenKind> t = {
        ForbiddenKind::FourPlusOne, ForbiddenKind::Z,          ForbiddenKind::DStar,
        ForbiddenKind::DStarDual,   ForbiddenKind::YStar,      ForbiddenKind::YStarDual,
        ForbiddenKind::YStarStar,   ForbiddenKind::YStarStarDual};
    return t;
}

namespace detail {
inline Poset buildCatalogPoset(ForbiddenKind kind);
}

// Canonical grounded copies of the forbidden posets, element names as in the
// catalog's defining comparability lists (covers; closures are computed).
inline const Poset& catalogPoset(ForbiddenKind kind) {
    static const std::array<Poset, 13> cache = [] {
        std::array<Poset, 13> a;
        for (int i = 0; i < 13; ++i) a[i] = detail::buildCatalogPoset(ForbiddenKind(i));
        return a;
    }();
    return cache[int(kind)];
}

namespace detail {
inline Poset buildCatalogPoset(ForbiddenKind kind) {
    using P = std::vector<std::pair<std::string, std::string>>;
    auto mk = [](std::vector<std::string> els, P covers) {
        return Poset::build(els, covers, RelationInput::Covers);
    };
    switch (kind) {
        case ForbiddenKind::TwoPlusTwo:
            return mk({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
        case ForbiddenKind::FourPlusOne:
            return mk({"a", "b", "c", "d", "x"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
        case ForbiddenKind::ThreePlusOnePlusOne:
            return mk({"a", "b", "c", "x", "y"}, {{"a", "b"}, {"b", "c"}});
        case ForbiddenKind::Z:
            return mk({"a", "b", "c", "d", "x", "y"},
                      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"x", "d"}, {"a", "y"}});
        case ForbiddenKind::D:
            return mk({"a", "b", "c", "d", "x"}, {{"a", "b"}, {"b", "d"}, {"a", "c"}, {"c", "d"}});
        case ForbiddenKind::Y:
            return mk({"a", "b", "c", "d", "x"}, {{"a", "d"}, {"d", "b"}, {"d", "c"}});
        case ForbiddenKind::YDual:
            return mk({"a", "b", "c", "d", "x"}, {{"b", "d"}, {"c", "d"}, {"d", "a"}});
        case ForbiddenKind::DStar:
            // D extended by y with y < c (y incomparable to a, b, x).
            return mk({"a", "b", "c", "d", "x", "y"},
                      {{"a", "b"}, {"b", "d"}, {"a", "c"}, {"c", "d"}, {"y", "c"}});
        case ForbiddenKind::DStarDual:
            return dual(buildCatalogPoset(ForbiddenKind::DStar));
        case ForbiddenKind::YStar:
            // Y extended by y with c < y and x < y (y incomparable to b).
            return mk({"a", "b", "c", "d", "x", "y"},
                      {{"a", "d"}, {"d", "b"}, {"d", "c"}, {"c", "y"}, {"x", "y"}});
        case ForbiddenKind::YStarDual:
            return dual(buildCatalogPoset(ForbiddenKind::YStar));
        case ForbiddenKind::YStarStar:
            // Y extended by y with y < c only.
            return mk({"a", "b", "c", "d", "x", "y"},
                      {{"a", "d"}, {"d", "b"}, {"d", "c"}, {"y", "c"}});
        case ForbiddenKind::YStarStarDual:
            return dual(buildCatalogPoset(ForbiddenKind::YStarStar));
    }
    throw std::logic_error("unreachable");
}
}  // namespace detail

struct Certificate {
    ForbiddenKind kind;
    Embedding embedding;  // catalog element -> input element
};

inline bool verifyCertificate(const Poset& p, const Certificate& c) {
    return isInducedEmbedding(p, catalogPoset(c.kind), c.embedding);
}

enum class CatalogChoice { F, T, TwoTwoOnly };

inline constexpr int kDefaultOracleBound = 9;

// Brute-force forbidden-poset search; the independent oracle, not the staged
// recognizer.  Deterministic: smaller patterns first, then fixed tag order.
inline std::optional<Certificate> findForbidden(const Poset& p, CatalogChoice which,
                                                int oracle_bound = kDefaultOracleBound) {
    if (p.size() > oracle_bound)
        throw std::invalid_argument("poset exceeds oracle bound of " + std::to_string(oracle_bound));
    std::vector<ForbiddenKind> kinds;
    switch (which) {
        case CatalogChoice::F: kinds = catalogF(); break;
        case CatalogChoice::T: kinds = catalogT(); break;
        case CatalogChoice::TwoTwoOnly: kinds = {ForbiddenKind::TwoPlusTwo}; break;
    }
    std::stable_sort(kinds.begin(), kinds.end(), [](ForbiddenKind a, ForbiddenKind b) {
        return catalogPoset(a).size() < catalogPoset(b).size();
    });
    for (ForbiddenKind k : kinds) {
        if (auto emb = findInducedCopy(p, catalogPoset(k))) return Certificate{k, *emb};
    }
    return std::nullopt;
}

}  // namespace ocio

#endif
