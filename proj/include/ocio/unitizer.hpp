#ifndef OCIO_UNITIZER_HPP
#define OCIO_UNITIZER_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ocio/catalog.hpp"
#include "ocio/interval.hpp"
#include "ocio/poset.hpp"
#include "ocio/recognizer.hpp"

namespace ocio {

// One difference constraint between the left-endpoint unknowns of two
// representatives, x listed before y in left-endpoint order.
struct UnitConstraint {
    enum class Kind { Eq1, Gt1, Between01 };
    int x, y;  // positions in left-endpoint order
    Kind kind;
};

struct UnitConstraintSystem {
    std::vector<std::string> variables;  // representatives, ascending left endpoint
    std::vector<UnitConstraint> constraints;
};

namespace detail {

inline UnitConstraintSystem deriveConstraints(const Representation& properRep,
                                              std::vector<int>& order) {
    const int n = properRep.size();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return properRep.intervals[a].left < properRep.intervals[b].left;
    });
    for (int i = 0; i + 1 < n; ++i)
        if (properRep.intervals[order[i]].left == properRep.intervals[order[i + 1]].left)
            throw std::invalid_argument("properToUnit: left endpoints not distinct");

    UnitConstraintSystem sys;
    for (int i = 0; i < n; ++i) sys.variables.push_back(properRep.elements[order[i]]);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Interval& a = properRep.intervals[order[i]];
            const Interval& b = properRep.intervals[order[j]];
            UnitConstraint::Kind k = a.right < b.left    ? UnitConstraint::Kind::Gt1
                                     : a.right == b.left ? UnitConstraint::Kind::Eq1
                                                         : UnitConstraint::Kind::Between01;
            sys.constraints.push_back({i, j, k});
        }
    }
    return sys;
}

}  // namespace detail

// Unit representation of a proper, deduplicated closed family, preserving
// every endpoint coincidence R(u) = L(v) exactly (and introducing none).
// A single left-to-right sweep over the distinct endpoint values builds a
// strictly increasing mapping g: each right endpoint is forced to its own
// left endpoint's image plus one, and every other value takes the midpoint
// between the previous image and the tightest pending upper bound (the
// forced image of the earliest still-open interval's right endpoint).
// Properness makes the open intervals a FIFO queue, which keeps the forced
// values increasing, so the sweep never runs out of room; the resulting
// difference constraints are still checked afterwards as a safety net.
inline Representation properToUnit(const Representation& properRep) {
    if (!isProper(properRep)) throw std::invalid_argument("properToUnit requires a proper family");
    const int n = properRep.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (properRep.intervals[i].sameEndpoints(properRep.intervals[j]))
                throw std::invalid_argument("properToUnit requires deduplicated intervals");

    std::vector<int> order;
    UnitConstraintSystem sys = detail::deriveConstraints(properRep, order);
    const Rational one(1);
    const Rational two(2);

    // Degenerate points share no endpoint value with any other interval in a
    // proper deduplicated family, so widening one by less than half the gap
    // to its nearest neighbouring value preserves every endpoint comparison.
    std::vector<Interval> ivs = properRep.intervals;
    {
        std::vector<Rational> values;
        for (const Interval& iv : ivs) {
            values.push_back(iv.left);
            values.push_back(iv.right);
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (Interval& iv : ivs) {
            if (iv.left != iv.right) continue;
            Rational gap = one;
            for (const Rational& v : values)
                if (v != iv.left) gap = std::min(gap, (v > iv.left ? v - iv.left : iv.left - v));
            iv = Interval(iv.left, iv.left + gap / two, iv.style);
        }
    }

    // value -> {element whose L it is, element whose R it is} (-1 if none);
    // properness guarantees at most one of each.
    std::map<Rational, std::pair<int, int>> events;
    for (int i = 0; i < n; ++i) {
        auto& l = events.emplace(ivs[i].left, std::pair{-1, -1}).first->second;
        if (l.first >= 0) throw std::logic_error("properToUnit: duplicate left endpoint");
        l.first = i;
        auto& r = events.emplace(ivs[i].right, std::pair{-1, -1}).first->second;
        if (r.second >= 0) throw std::logic_error("properToUnit: duplicate right endpoint");
        r.second = i;
    }

    std::vector<Rational> leftImage(n);
    std::vector<int> open;  // FIFO of open intervals, earliest left first
    std::size_t head = 0;
    Rational prev;
    bool first = true;
    for (const auto& [value, ev] : events) {
        const auto [opens, closes] = ev;
        Rational image;
        if (closes >= 0) {
            image = leftImage[closes] + one;
        } else if (first) {
            image = Rational(0);
        } else {
            const Rational upper = head < open.size() ? leftImage[open[head]] + one : prev + one;
            image = (prev + upper) / two;
        }
        if (!first && !(image > prev))
            throw std::logic_error("properToUnit: sweep produced a non-increasing image");
        if (closes >= 0) {
            if (head >= open.size() || open[head] != closes)
                throw std::logic_error("properToUnit: closing interval is not the earliest open one");
            ++head;
        }
        if (opens >= 0) {
            leftImage[opens] = image;
            open.push_back(opens);
        }
        prev = image;
        first = false;
    }

    std::vector<Rational> left(n);
    for (int i = 0; i < n; ++i) left[i] = leftImage[order[i]];
    for (const auto& c : sys.constraints) {
        const Rational d = left[c.y] - left[c.x];
        const bool ok = c.kind == UnitConstraint::Kind::Eq1   ? d == one
                        : c.kind == UnitConstraint::Kind::Gt1 ? d > one
                                                              : (Rational(0) < d && d < one);
        if (!ok) throw std::logic_error("properToUnit: constraint system infeasible (internal error)");
    }

    std::vector<Rational> byElement(n);
    for (int i = 0; i < n; ++i) byElement[i] = leftImage[i];
    Representation out;
    out.semantics = Semantics::ClosedOnly;
    out.unit_length = one;
    for (int i = 0; i < n; ++i)
        out.push(properRep.elements[i], Interval(byElement[i], byElement[i] + one, Style::Closed));
    return out;
}

// Strict OC to unit OC: close and deduplicate, unitize the representatives,
// then give every element its representative's endpoints with its own
// original style.
inline Representation strictToUnit(const Poset& p, const Representation& strictRep) {
    if (strictRep.semantics != Semantics::OC || !isStrict(strictRep))
        throw std::invalid_argument("strictToUnit requires a strict OC representation");
    if (!realizes(p, strictRep))
        throw std::invalid_argument("strictToUnit input does not realize the poset");

    ClosureDedupe cd = closureDedupe(strictRep);
    Representation unitReps = properToUnit(cd.proper);

    std::map<std::string, const Interval*> byRep;
    for (int i = 0; i < unitReps.size(); ++i) byRep[unitReps.elements[i]] = &unitReps.intervals[i];

    Representation out;
    out.semantics = Semantics::OC;
    out.unit_length = Rational(1);
    for (int i = 0; i < strictRep.size(); ++i) {
        const Interval* base = byRep.at(cd.representative.at(strictRep.elements[i]));
        out.push(strictRep.elements[i],
                 Interval(base->left, base->right, strictRep.intervals[i].style));
    }
    return out;
}

// Lift an F-certificate on the twin reduction to a T-certificate on the
// original poset.  Fast path: search the witnesses plus a few elements
// distinguishing witness pairs; fall back to an exhaustive catalog search.
inline Certificate liftCertificate(const Poset& p, const std::map<std::string, std::string>& twin_map,
                                   const Certificate& fcert, TraceLog* log = nullptr) {
    (void)twin_map;  // witnesses already name elements of p
    constexpr int kDistinguishersPerPair = 3;

    std::vector<std::string> pool;
    for (const auto& [_, host] : fcert.embedding) pool.push_back(host);
    const std::vector<std::string> witnesses = pool;

    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
            int found = 0;
            const int a = p.indexOf(witnesses[i]);
            const int b = p.indexOf(witnesses[j]);
            for (int z = 0; z < p.size() && found < kDistinguishersPerPair; ++z) {
                if (z == a || z == b) continue;
                if (p.less(z, a) == p.less(z, b) && p.less(a, z) == p.less(b, z)) continue;
                if (std::find(pool.begin(), pool.end(), p.name(z)) != pool.end()) continue;
                pool.push_back(p.name(z));
                ++found;
            }
        }
    }

    Poset sub = induced(p, pool);
    if (auto cert = findForbidden(sub, CatalogChoice::T, sub.size())) {
        if (verifyCertificate(p, *cert)) return *cert;
    }

    detail::trace(log, "lift-fallback");
    for (ForbiddenKind k : catalogT())
        if (auto emb = findInducedCopy(p, catalogPoset(k))) return Certificate{k, *emb};
    throw std::logic_error("liftCertificate: no T member found (internal error)");
}

// Entry point for arbitrary posets: twin-reduce, run the twin-free
// algorithm, then either unitize (twins copy their representative's interval
// verbatim) or lift the certificate.
inline std::variant<Representation, Certificate> recognizeGeneral(const Poset& p,
                                                                  TraceLog* log = nullptr) {
    TwinReduction tr = reduceTwins(p);
    RecognizerOutcome outcome = recognizeTwinFree(tr.quotient, log);

    if (auto* cert = std::get_if<Certificate>(&outcome)) {
        if (cert->kind == ForbiddenKind::TwoPlusTwo || cert->kind == ForbiddenKind::FourPlusOne ||
            cert->kind == ForbiddenKind::Z)
            return *cert;  // already a T (or 2+2) certificate, valid in p as-is
        return liftCertificate(p, tr.representative, *cert, log);
    }

    Representation unitQuotient = strictToUnit(tr.quotient, std::get<Representation>(outcome));
    std::map<std::string, const Interval*> byRep;
    for (int i = 0; i < unitQuotient.size(); ++i)
        byRep[unitQuotient.elements[i]] = &unitQuotient.intervals[i];

    Representation out;
    out.semantics = Semantics::OC;
    out.unit_length = Rational(1);
    for (const auto& id : p.elements()) out.push(id, *byRep.at(tr.representative.at(id)));
    return out;
}

}  // namespace ocio

#endif
