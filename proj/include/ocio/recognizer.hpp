#ifndef OCIO_RECOGNIZER_HPP
#define OCIO_RECOGNIZER_HPP

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ocio/builder.hpp"
#include "ocio/catalog.hpp"
#include "ocio/interval.hpp"
#include "ocio/poset.hpp"

namespace ocio {

// Either a strict OC representation or a verified certificate from
// F ∪ {2+2}.
using RecognizerOutcome = std::variant<Representation, Certificate>;

using TraceLog = std::vector<std::string>;

namespace detail {

inline void trace(TraceLog* log, const std::string& line) {
    if (log) log->push_back(line);
}

// Doubly linked queue over table columns; O(1) removal from any position.
class IndexQueue {
public:
    explicit IndexQueue(int max_index) : next_(max_index + 1, -1), prev_(max_index + 1, -1) {
        next_[0] = 0;  // sentinel
        prev_[0] = 0;
    }
    void pushBack(int j) {
        int last = prev_[0];
        next_[last] = j;
        prev_[j] = last;
        next_[j] = 0;
        prev_[0] = j;
    }
    void remove(int j) {
        next_[prev_[j]] = next_[j];
        prev_[next_[j]] = prev_[j];
        next_[j] = prev_[j] = -1;
    }
    int front() const { return next_[0]; }
    int after(int j) const { return next_[j]; }
    bool empty() const { return next_[0] == 0; }
    // Number of entries strictly in front of j; -1 if j is absent.
    int countAhead(int j) const {
        int c = 0;
        for (int cur = next_[0]; cur != 0; cur = next_[cur]) {
            if (cur == j) return c;
            ++c;
        }
        return -1;
    }

private:
    std::vector<int> next_, prev_;
};

// Verify an assembled certificate; on failure (not expected) flag loudly and
// fall back to the brute-force catalog search.
inline Certificate certifyOrFallback(const Poset& p, Certificate cert, TraceLog* log) {
    if (verifyCertificate(p, cert)) {
        trace(log, std::string("certificate ") + kindName(cert.kind));
        return cert;
    }
    std::cerr << "ocio: assembled " << kindName(cert.kind)
              << " certificate failed verification; falling back to exhaustive search\n";
    trace(log, "certificate-fallback");
    std::vector<ForbiddenKind> kinds = {ForbiddenKind::TwoPlusTwo};
    kinds.insert(kinds.end(), catalogF().begin(), catalogF().end());
    for (ForbiddenKind k : kinds)
        if (auto emb = findInducedCopy(p, catalogPoset(k))) return Certificate{k, *emb};
    throw std::logic_error("certificate fallback found no forbidden poset");
}

}  // namespace detail

enum class PeekSide { Left, Right };

// Subroutine Locate Peekers.  Left side: scan columns strictly between the
// outer and inner left endpoints, back from the inner one, collecting right
// endpoints.  Right side is the mirror image.
inline std::vector<int> locatePeekers(const Tables& t, int inner, int outer, PeekSide side,
                                      int limit = 2) {
    auto [il, ir] = t.elements.index_pair[inner];
    auto [ol, orr] = t.elements.index_pair[outer];
    if (inner == outer || ol >= il || orr <= ir)
        throw std::invalid_argument("locatePeekers: no containment between the given elements");
    std::vector<int> found;
    if (side == PeekSide::Left) {
        for (int idx = il - 1; idx > ol && int(found.size()) < limit; --idx)
            if (!t.endpoints.isLeft(idx)) found.push_back(t.endpoints.elementAt(idx));
    } else {
        for (int idx = ir + 1; idx < orr && int(found.size()) < limit; ++idx)
            if (t.endpoints.isLeft(idx)) found.push_back(t.endpoints.elementAt(idx));
    }
    if (found.empty())
        throw std::logic_error("locatePeekers: none found; peeking property violated");
    return found;
}

// Stage 2: queue-driven discovery of strict inclusions, or extraction of a
// forbidden poset in {4+1, 3+1+1, D, Y, Y-dual}.  On success the element
// table records every strict inclusion and the representation satisfies the
// uniqueness properties Stage 3 relies on.
inline std::optional<Certificate> stage2Scan(Tables& t, const Representation& rep, const Poset& p,
                                             TraceLog* log = nullptr) {
    const int m = t.endpoints.columns();
    detail::IndexQueue q(m);

    auto nameOf = [&](int e) { return rep.elements[e]; };

    for (int j = 1; j <= m; ++j) {
        if (t.endpoints.isLeft(j)) {
            q.pushBack(j);
            detail::trace(log, "push " + std::to_string(j));
            continue;
        }
        const int x = t.endpoints.elementAt(j);
        const int i = t.endpoints.partnerOf(j);
        const int ahead = q.countAhead(i);
        if (ahead < 0) throw std::logic_error("stage2Scan: left index missing from queue");

        if (ahead == 0) {
            q.remove(i);
            detail::trace(log, "pop " + std::to_string(i));
            continue;
        }

        if (ahead >= 2) {
            // I(x) sits inside two earlier-opened intervals: a 3+1+1.
            const int k1 = q.front();
            const int k2 = q.after(k1);
            const int v1 = t.endpoints.elementAt(k1);
            const int v2 = t.endpoints.elementAt(k2);
            const int k3 = t.endpoints.partnerOf(k1);
            const int k4 = t.endpoints.partnerOf(k2);
            const int u1 = locatePeekers(t, x, v2, PeekSide::Left, 1).front();
            const int u2 = locatePeekers(t, x, k3 < k4 ? v1 : v2, PeekSide::Right, 1).front();
            Certificate cert{ForbiddenKind::ThreePlusOnePlusOne,
                             {{"a", nameOf(u1)},
                              {"b", nameOf(x)},
                              {"c", nameOf(u2)},
                              {"x", nameOf(v1)},
                              {"y", nameOf(v2)}}};
            return detail::certifyOrFallback(p, std::move(cert), log);
        }

        // Exactly one index ahead: record the inclusion I(x) ⊂ I(w).
        const int k = q.front();
        const int w = t.endpoints.elementAt(k);
        t.elements.containers[x].push_back(w);
        t.elements.contained[w].push_back(x);
        detail::trace(log, "inclusion " + nameOf(x) + " in " + nameOf(w));

        if (t.elements.contained[w].size() >= 2) {
            const int y = t.elements.contained[w].front();
            const int u1 = locatePeekers(t, y, w, PeekSide::Left, 1).front();
            const int u2 = locatePeekers(t, x, w, PeekSide::Right, 1).front();
            const bool disjoint = precedesOC(rep.intervals[y], rep.intervals[x]) ||
                                  precedesOC(rep.intervals[x], rep.intervals[y]);
            Certificate cert{disjoint ? ForbiddenKind::FourPlusOne : ForbiddenKind::D,
                             {{"a", nameOf(u1)},
                              {"b", nameOf(y)},
                              {"c", nameOf(x)},
                              {"d", nameOf(u2)},
                              {"x", nameOf(w)}}};
            return detail::certifyOrFallback(p, std::move(cert), log);
        }

        const auto lefts = locatePeekers(t, x, w, PeekSide::Left, 2);
        const auto rights = locatePeekers(t, x, w, PeekSide::Right, 2);
        // Two peekers on the same side of the inclusion form a Y (or its
        // dual) when incomparable; when comparable they extend the chain
        // through the contained interval into a 4+1 instead.
        if (lefts.size() >= 2) {
            int lo = lefts[0], hi = lefts[1];
            if (p.less(nameOf(hi), nameOf(lo))) std::swap(lo, hi);
            Certificate cert =
                p.incomparable(p.indexOf(nameOf(lo)), p.indexOf(nameOf(hi)))
                    ? Certificate{ForbiddenKind::YDual,
                                  {{"b", nameOf(lo)},
                                   {"c", nameOf(hi)},
                                   {"d", nameOf(x)},
                                   {"a", nameOf(rights[0])},
                                   {"x", nameOf(w)}}}
                    : Certificate{ForbiddenKind::FourPlusOne,
                                  {{"a", nameOf(lo)},
                                   {"b", nameOf(hi)},
                                   {"c", nameOf(x)},
                                   {"d", nameOf(rights[0])},
                                   {"x", nameOf(w)}}};
            return detail::certifyOrFallback(p, std::move(cert), log);
        }
        if (rights.size() >= 2) {
            int lo = rights[0], hi = rights[1];
            if (p.less(nameOf(hi), nameOf(lo))) std::swap(lo, hi);
            Certificate cert =
                p.incomparable(p.indexOf(nameOf(lo)), p.indexOf(nameOf(hi)))
                    ? Certificate{ForbiddenKind::Y,
                                  {{"a", nameOf(lefts[0])},
                                   {"d", nameOf(x)},
                                   {"b", nameOf(lo)},
                                   {"c", nameOf(hi)},
                                   {"x", nameOf(w)}}}
                    : Certificate{ForbiddenKind::FourPlusOne,
                                  {{"a", nameOf(lefts[0])},
                                   {"b", nameOf(x)},
                                   {"c", nameOf(lo)},
                                   {"d", nameOf(hi)},
                                   {"x", nameOf(w)}}};
            return detail::certifyOrFallback(p, std::move(cert), log);
        }
        q.remove(i);
        detail::trace(log, "pop " + std::to_string(i));
    }
    return std::nullopt;
}

// Stage 3a: retract the unique left/right peeker of every inclusion, or find
// an induced Z via the intersecting-outer-intervals scan.
inline std::optional<Certificate> stage3Retract(const Tables& t, Representation& rep, const Poset& p,
                                                TraceLog* log = nullptr) {
    const int m = t.endpoints.columns();
    detail::IndexQueue outerQueue(m);
    auto nameOf = [&](int e) { return rep.elements[e]; };
    auto intersect = [&](int a, int b) {  // closed arithmetic on current endpoints
        return rep.intervals[a].left <= rep.intervals[b].right &&
               rep.intervals[b].left <= rep.intervals[a].right;
    };

    for (int j = 1; j <= m; ++j) {
        const int v = t.endpoints.elementAt(j);
        if (t.elements.contained[v].empty()) continue;
        const int u = t.elements.contained[v].front();

        if (t.endpoints.isLeft(j)) {
            for (int i = outerQueue.front(); i != 0; i = outerQueue.after(i)) {
                const int vp = t.endpoints.elementAt(i);
                const int up = t.elements.contained[vp].front();
                if (intersect(vp, u) && !intersect(u, up)) {
                    // Subroutine Locate Z.
                    const int w1 = locatePeekers(t, up, vp, PeekSide::Left, 1).front();
                    const int w2 = locatePeekers(t, u, v, PeekSide::Right, 1).front();
                    Certificate cert{ForbiddenKind::Z,
                                     {{"a", nameOf(w1)},
                                      {"b", nameOf(up)},
                                      {"c", nameOf(u)},
                                      {"d", nameOf(w2)},
                                      {"x", nameOf(vp)},
                                      {"y", nameOf(v)}}};
                    return detail::certifyOrFallback(p, std::move(cert), log);
                }
            }
            outerQueue.pushBack(j);
        } else {
            outerQueue.remove(t.endpoints.partnerOf(j));
            const int x = locatePeekers(t, u, v, PeekSide::Left, 1).front();
            const int y = locatePeekers(t, u, v, PeekSide::Right, 1).front();
            rep.intervals[x].right = rep.intervals[v].left;
            rep.intervals[y].left = rep.intervals[v].right;
            detail::trace(log, "retract " + nameOf(x) + " and " + nameOf(y) + " around " + nameOf(v));
        }
    }
    return std::nullopt;
}

// Stage 3b: every inner interval becomes the open interval with its outer's
// endpoints.
inline Representation stage3Expand(const Tables& t, const Representation& rep) {
    Representation out;
    out.semantics = Semantics::OC;
    for (int x = 0; x < rep.size(); ++x) {
        if (t.elements.containers[x].empty()) {
            out.push(rep.elements[x], rep.intervals[x]);
        } else {
            const int v = t.elements.containers[x].front();
            out.push(rep.elements[x],
                     Interval(rep.intervals[v].left, rep.intervals[v].right, Style::Open));
        }
    }
    return out;
}

// Algorithm OC Interval Order, Stages 1-3.  Rejects twinned input.
inline RecognizerOutcome recognizeTwinFree(const Poset& p, TraceLog* log = nullptr) {
    for (const auto& cls : twinClasses(p))
        if (cls.size() > 1)
            throw std::invalid_argument("input has twins (" + cls[0] + ", " + cls[1] +
                                        "); use recognizeGeneral");

    auto chainOrWitness = downUpChain(p);
    if (auto* w = std::get_if<TwoPlusTwoWitness>(&chainOrWitness)) {
        Certificate cert{ForbiddenKind::TwoPlusTwo,
                         {{"a", w->x}, {"b", w->a}, {"c", w->y}, {"d", w->b}}};
        return detail::certifyOrFallback(p, std::move(cert), log);
    }

    const auto& chain = std::get<DownSetChain>(chainOrWitness);
    Representation rep = peekingRefinement(greenoughRepresentation(p, chain), p);
    Tables tables = buildTables(rep);

    if (auto cert = stage2Scan(tables, rep, p, log)) return *cert;
    if (auto cert = stage3Retract(tables, rep, p, log)) return *cert;
    return stage3Expand(tables, rep);
}

}  // namespace ocio

#endif
