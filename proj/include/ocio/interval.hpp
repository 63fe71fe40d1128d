#ifndef OCIO_INTERVAL_HPP
#define OCIO_INTERVAL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocio/poset.hpp"
#include "ocio/rational.hpp"

namespace ocio {

enum class Style { Open, Closed };

// A real interval with exact rational endpoints, wholly open or wholly
// closed.  Degenerate closed points are allowed; open intervals must be
// nonempty.
struct Interval {
    Rational left;
    Rational right;
    Style style = Style::Closed;

    Interval() = default;
    Interval(Rational l, Rational r, Style s) : left(std::move(l)), right(std::move(r)), style(s) {
        if (style == Style::Closed ? left > right : left >= right)
            throw std::invalid_argument("empty interval [" + left.str() + "," + right.str() + "]");
    }

    Rational length() const { return right - left; }
    bool sameEndpoints(const Interval& o) const { return left == o.left && right == o.right; }

    bool containsPoint(const Rational& p) const {
        if (style == Style::Closed) return left <= p && p <= right;
        return left < p && p < right;
    }

    // Point-set containment of `inner` in *this, respecting styles.
    bool containsSet(const Interval& inner) const {
        bool leftOk = left < inner.left ||
                      (left == inner.left && (style == Style::Closed || inner.style == Style::Open));
        bool rightOk = inner.right < right ||
                       (inner.right == right && (style == Style::Closed || inner.style == Style::Open));
        return leftOk && rightOk;
    }

    bool sameSet(const Interval& o) const { return containsSet(o) && o.containsSet(*this); }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.left == b.left && a.right == b.right && a.style == b.style;
    }
};

// Every point of I is less than every point of J.  At a shared endpoint this
// holds unless both intervals are closed there.
inline bool precedesOC(const Interval& i, const Interval& j) {
    if (i.right < j.left) return true;
    if (i.right == j.left) return i.style == Style::Open || j.style == Style::Open;
    return false;
}

inline bool intervalsIntersect(const Interval& a, const Interval& b) {
    return !precedesOC(a, b) && !precedesOC(b, a);
}

enum class Semantics { ClosedOnly, OC };

// Total map from a poset's elements to intervals.
struct Representation {
    std::vector<std::string> elements;
    std::vector<Interval> intervals;
    Semantics semantics = Semantics::ClosedOnly;
    std::optional<Rational> unit_length;

    int size() const { return int(elements.size()); }

    const Interval& at(const std::string& id) const {
        for (int i = 0; i < size(); ++i)
            if (elements[i] == id) return intervals[i];
        throw std::invalid_argument("representation missing element: " + id);
    }

    void push(const std::string& id, Interval iv) {
        if (semantics == Semantics::ClosedOnly && iv.style != Style::Closed)
            throw std::invalid_argument("open interval in closed-only representation");
        elements.push_back(id);
        intervals.push_back(std::move(iv));
    }
};

struct Mismatch {
    std::string a, b;
    bool in_poset;  // a < b in the poset; in_poset==false: precedence only in the representation
};

struct RealizesResult {
    bool ok = true;
    std::vector<Mismatch> mismatches;
    explicit operator bool() const { return ok; }
};

// Does the representation realize P?  Under ClosedOnly semantics precedence
// is R(x) < L(y); under OC semantics it is precedesOC.
inline RealizesResult realizes(const Poset& p, const Representation& rep) {
    const int n = p.size();
    if (rep.size() != n) throw std::invalid_argument("representation not total on the poset");
    std::vector<const Interval*> iv(n);
    for (int i = 0; i < rep.size(); ++i) iv[p.indexOf(rep.elements[i])] = &rep.intervals[i];

    RealizesResult res;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            bool prec = rep.semantics == Semantics::OC ? precedesOC(*iv[a], *iv[b])
                                                       : iv[a]->right < iv[b]->left;
            if (prec != p.less(a, b)) {
                res.ok = false;
                res.mismatches.push_back({p.name(a), p.name(b), p.less(a, b)});
            }
        }
    }
    return res;
}

inline bool isUnit(const Representation& rep) {
    for (int i = 1; i < rep.size(); ++i)
        if (rep.intervals[i].length() != rep.intervals[0].length()) return false;
    return true;
}

inline bool strictlyContains(const Interval& outer, const Interval& inner) {
    return outer.containsSet(inner) && !outer.sameEndpoints(inner);
}

// No interval strictly contained in another (same-endpoint open-in-closed
// nesting is allowed).
inline bool isStrict(const Representation& rep) {
    for (int i = 0; i < rep.size(); ++i)
        for (int j = 0; j < rep.size(); ++j)
            if (i != j && strictlyContains(rep.intervals[j], rep.intervals[i])) return false;
    return true;
}

// No proper point-set containment at all.
inline bool isProper(const Representation& rep) {
    for (int i = 0; i < rep.size(); ++i)
        for (int j = 0; j < rep.size(); ++j) {
            if (i == j) continue;
            const Interval& u = rep.intervals[i];
            const Interval& v = rep.intervals[j];
            if (v.containsSet(u) && !v.sameSet(u)) return false;
        }
    return true;
}

inline bool hasDistinctEndpoints(const Representation& rep) {
    std::vector<Rational> pts;
    for (const auto& iv : rep.intervals) {
        pts.push_back(iv.left);
        pts.push_back(iv.right);
    }
    std::sort(pts.begin(), pts.end());
    return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

// ---------------------------------------------------------------------------
// Open/closed to closed-only conversion (the x_uv construction).

// For each incomparable pair pick a shared point; each element's closed
// interval spans its picked points.  Elements incomparable to nothing get a
// degenerate interval at the midpoint of their original interval.
inline Representation ocToClosed(const Poset& p, const Representation& rep) {
    if (!realizes(p, rep)) throw std::invalid_argument("representation does not realize the poset");
    const int n = p.size();
    std::vector<const Interval*> iv(n);
    for (int i = 0; i < rep.size(); ++i) iv[p.indexOf(rep.elements[i])] = &rep.intervals[i];

    auto sharedPoint = [](const Interval& a, const Interval& b) {
        Rational lo = std::max(a.left, b.left);
        Rational hi = std::min(a.right, b.right);
        Rational mid = (lo + hi) / Rational(2);
        if (a.containsPoint(mid) && b.containsPoint(mid)) return mid;
        // An open endpoint was selected; nudge inward by a quarter of the
        // intersection length.
        Rational quarter = (hi - lo) / Rational(4);
        Rational nudged = mid == lo ? mid + quarter : mid - quarter;
        if (!a.containsPoint(nudged) || !b.containsPoint(nudged))
            throw std::logic_error("no interior point in a nonempty intersection");
        return nudged;
    };

    Representation out;
    out.semantics = Semantics::ClosedOnly;
    for (int x = 0; x < n; ++x) {
        std::optional<Rational> lo, hi;
        for (int u = 0; u < n; ++u) {
            if (u == x || !p.incomparable(x, u)) continue;
            Rational pt = sharedPoint(*iv[x], *iv[u]);
            if (!lo || pt < *lo) lo = pt;
            if (!hi || pt > *hi) hi = pt;
        }
        if (!lo) {
            Rational mid = (iv[x]->left + iv[x]->right) / Rational(2);
            lo = hi = mid;
        }
        out.push(p.name(x), Interval(*lo, *hi, Style::Closed));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Closure + dedupe (first half of the strict-to-unit route).

struct ClosureDedupe {
    Representation proper;  // closed representatives, one per closure class
    std::map<std::string, std::string> representative;
};

inline ClosureDedupe closureDedupe(const Representation& rep) {
    if (!isStrict(rep)) throw std::invalid_argument("closureDedupe requires a strict representation");
    ClosureDedupe out;
    out.proper.semantics = Semantics::ClosedOnly;
    std::map<std::pair<Rational, Rational>, std::string> firstSeen;
    for (int i = 0; i < rep.size(); ++i) {
        auto key = std::make_pair(rep.intervals[i].left, rep.intervals[i].right);
        auto it = firstSeen.find(key);
        if (it == firstSeen.end()) {
            firstSeen.emplace(key, rep.elements[i]);
            out.representative[rep.elements[i]] = rep.elements[i];
            out.proper.push(rep.elements[i], Interval(key.first, key.second, Style::Closed));
        } else {
            out.representative[rep.elements[i]] = it->second;
        }
    }
    return out;
}

}  // namespace ocio

#endif
