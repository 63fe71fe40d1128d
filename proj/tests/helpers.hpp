#ifndef OCIO_TEST_HELPERS_HPP
#define OCIO_TEST_HELPERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ocio/poset.hpp"

namespace ocio::test {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline Poset covers(const std::vector<std::string>& elems, const Pairs& pairs) {
    return Poset::build(elems, pairs, RelationInput::Covers);
}

inline Poset chain(const std::vector<std::string>& elems) {
    Pairs pairs;
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) pairs.emplace_back(elems[i], elems[i + 1]);
    return covers(elems, pairs);
}

inline Poset antichain(const std::vector<std::string>& elems) { return covers(elems, {}); }

// a<b and c<d with all cross pairs incomparable
inline Poset twoPlusTwo() { return covers({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }

// 3-chain plus one incomparable element
inline Poset threePlusOne() { return covers({"a", "b", "c", "x"}, {{"a", "b"}, {"b", "c"}}); }

// The 5-element poset whose endpoint table the builder tests pin down:
// d below e, b, c; a below b, c; b below c.
inline Poset posetN() {
    return covers({"a", "b", "c", "d", "e"}, {{"d", "e"}, {"d", "b"}, {"a", "b"}, {"b", "c"}});
}

}  // namespace ocio::test

#endif
