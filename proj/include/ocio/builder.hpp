#ifndef OCIO_BUILDER_HPP
#define OCIO_BUILDER_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocio/interval.hpp"
#include "ocio/poset.hpp"

namespace ocio {

// The storage matrix A: one column per endpoint, sorted by ascending value.
// Columns are addressed 1-based throughout, matching the index vocabulary of
// the element table.
struct EndpointTable {
    std::vector<int> element;  // element position in the representation
    std::vector<bool> is_left;
    std::vector<int> partner;  // 1-based column of the element's other endpoint

    int columns() const { return int(element.size()); }
    int elementAt(int j) const { return element[j - 1]; }
    bool isLeft(int j) const { return is_left[j - 1]; }
    int partnerOf(int j) const { return partner[j - 1]; }
};

// The inclusion matrix B: per element its endpoint indices plus the
// containment sets filled in by Stage 2.
struct ElementTable {
    std::vector<std::pair<int, int>> index_pair;  // <i, j>: columns of L(x), R(x)
    std::vector<std::vector<int>> containers;     // elements whose intervals contain I(x)
    std::vector<std::vector<int>> contained;      // elements whose intervals I(x) contains
};

struct Tables {
    EndpointTable endpoints;
    ElementTable elements;
};

// Canonical integer-endpoint representation from the down/up-set chain:
// I(x) = [i, j] with D(x) = D_i and U(x) = U_j.
inline Representation greenoughRepresentation(const Poset& p, const DownSetChain& chain) {
    Representation rep;
    rep.semantics = Semantics::ClosedOnly;
    for (int x = 0; x < p.size(); ++x)
        rep.push(p.name(x),
                 Interval(Rational(chain.left_index[x]), Rational(chain.right_index[x]), Style::Closed));
    return rep;
}

// Distinct-endpoint refinement: [j, j+k] becomes [j - 1/(k+3), j+k + 1/(k+3)].
// Left endpoints land at fractional part (k+2)/(k+3) and right endpoints at
// 1/(k+3), so on a twin-free input all 2|X| values are distinct.
inline Representation peekingRefinement(const Representation& rep, const Poset& p) {
    if (rep.size() != p.size()) throw std::invalid_argument("representation not total on the poset");
    Representation out;
    out.semantics = Semantics::ClosedOnly;
    std::vector<std::pair<Rational, Rational>> seen;
    for (int i = 0; i < rep.size(); ++i) {
        const Interval& iv = rep.intervals[i];
        if (!iv.left.is_integer() || !iv.right.is_integer())
            throw std::invalid_argument("peekingRefinement expects integer endpoints");
        seen.emplace_back(iv.left, iv.right);
        Rational margin(BigInt(1), (iv.right - iv.left).num() + 3);
        out.push(rep.elements[i], Interval(iv.left - margin, iv.right + margin, Style::Closed));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("twin detected: two elements share an interval");
    return out;
}

// Stage-1 table construction; refuses endpoint ties rather than breaking them.
inline Tables buildTables(const Representation& rep) {
    const int n = rep.size();
    struct Point {
        Rational value;
        int element;
        bool is_left;
    };
    std::vector<Point> pts;
    pts.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        pts.push_back({rep.intervals[i].left, i, true});
        pts.push_back({rep.intervals[i].right, i, false});
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.value < b.value; });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i].value == pts[i + 1].value)
            throw std::invalid_argument("duplicate endpoint value " + pts[i].value.str());

    Tables t;
    t.endpoints.element.resize(2 * n);
    t.endpoints.is_left.resize(2 * n);
    t.endpoints.partner.resize(2 * n);
    t.elements.index_pair.assign(n, {0, 0});
    t.elements.containers.assign(n, {});
    t.elements.contained.assign(n, {});

    for (int j = 1; j <= 2 * n; ++j) {
        const Point& pt = pts[j - 1];
        t.endpoints.element[j - 1] = pt.element;
        t.endpoints.is_left[j - 1] = pt.is_left;
        if (pt.is_left)
            t.elements.index_pair[pt.element].first = j;
        else
            t.elements.index_pair[pt.element].second = j;
    }
    for (int x = 0; x < n; ++x) {
        auto [i, j] = t.elements.index_pair[x];
        t.endpoints.partner[i - 1] = j;
        t.endpoints.partner[j - 1] = i;
    }
    return t;
}

// Table-1-style dump: index header plus element, L/R and partner rows.
inline std::string formatEndpointTable(const EndpointTable& a, const Representation& rep) {
    const int m = a.columns();
    std::vector<std::vector<std::string>> rows(4);
    rows[0].push_back("Index");
    rows[1].push_back("Element");
    rows[2].push_back("L/R");
    rows[3].push_back("Other end");
    for (int j = 1; j <= m; ++j) {
        rows[0].push_back(std::to_string(j));
        rows[1].push_back(rep.elements[a.elementAt(j)]);
        rows[2].push_back(a.isLeft(j) ? "L" : "R");
        rows[3].push_back(std::to_string(a.partnerOf(j)));
    }
    std::vector<std::size_t> width(m + 1, 0);
    for (const auto& row : rows)
        for (int c = 0; c <= m; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : rows) {
        for (int c = 0; c <= m; ++c) {
            if (c) os << "  ";
            os << row[c];
            if (c < m) os << std::string(width[c] - row[c].size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace ocio

#endif
