#ifndef OCIO_POSET_HPP
#define OCIO_POSET_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace ocio {

// Fixed-width bitset sized at runtime; rows of the relation matrices.
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool isSubsetOf(const Bitset& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~other.w_[i]) return false;
        return true;
    }
    void orWith(const Bitset& other) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
    }
    // First index set here but not in `other`, or -1.
    int firstDifference(const Bitset& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t d = w_[i] & ~other.w_[i];
            if (d) return int(i) * 64 + __builtin_ctzll(d);
        }
        return -1;
    }
    std::vector<int> toIndices() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }
    friend bool operator==(const Bitset& a, const Bitset& b) { return a.w_ == b.w_; }
    friend bool operator<(const Bitset& a, const Bitset& b) { return a.w_ < b.w_; }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

enum class RelationInput { Covers, FullRelation };

class Poset;
Poset dual(const Poset& p);

// Finite strict partial order over opaque string identifiers.  The relation
// is stored transitively closed, both as down-rows and up-rows so that
// down/up-set operations are word-parallel.
class Poset {
public:
    Poset() = default;

    static Poset build(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& pairs,
                       RelationInput mode) {
        Poset p;
        p.initElements(elements);
        const int n = p.size();
        std::vector<Bitset> up(n, Bitset(n));
        for (const auto& [lo, hi] : pairs) {
            int a = p.indexOf(lo);
            int b = p.indexOf(hi);
            if (a == b) throw std::invalid_argument("reflexive pair: " + lo + " < " + hi);
            up[a].set(b);
        }
        if (mode == RelationInput::Covers) {
            transitiveClose(up, p.elements_);
        } else {
            validateClosed(up, p.elements_);
        }
        p.adoptUp(std::move(up));
        return p;
    }

    // Trusted constructor for relations already known to be transitively
    // closed (enumerator, random generator).  Validates only when asked.
    static Poset fromClosedRelation(std::vector<std::string> elements, std::vector<Bitset> up,
                                    bool validate = true) {
        Poset p;
        p.initElements(elements);
        if (validate) validateClosed(up, p.elements_);
        p.adoptUp(std::move(up));
        return p;
    }

    int size() const { return int(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(int i) const { return elements_[i]; }

    int indexOf(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("unknown element: " + id);
        return it->second;
    }
    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    bool less(int a, int b) const { return up_[a].test(b); }
    bool less(const std::string& a, const std::string& b) const {
        return less(indexOf(a), indexOf(b));
    }
    bool incomparable(int a, int b) const { return a != b && !less(a, b) && !less(b, a); }

    const Bitset& upSet(int i) const { return up_[i]; }
    const Bitset& downSet(int i) const { return down_[i]; }
    int upDegree(int i) const { return up_[i].count(); }
    int downDegree(int i) const { return down_[i].count(); }

    std::vector<std::pair<std::string, std::string>> relationPairs() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (less(a, b)) out.emplace_back(elements_[a], elements_[b]);
        return out;
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.elements_ == b.elements_ && a.up_ == b.up_;
    }

private:
    friend Poset dual(const Poset& p);

    void initElements(const std::vector<std::string>& elements) {
        elements_ = elements;
        for (int i = 0; i < int(elements_.size()); ++i) {
            if (!index_.emplace(elements_[i], i).second)
                throw std::invalid_argument("duplicate element: " + elements_[i]);
        }
    }

    void adoptUp(std::vector<Bitset> up) {
        up_ = std::move(up);
        const int n = size();
        down_.assign(n, Bitset(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (up_[a].test(b)) down_[b].set(a);
    }

    static void transitiveClose(std::vector<Bitset>& up, const std::vector<std::string>& names) {
        const int n = int(up.size());
        // DFS closure with cycle detection; 0 = unvisited, 1 = on stack, 2 = done.
        std::vector<int> state(n, 0);
        std::function<void(int)> close = [&](int v) {
            state[v] = 1;
            Bitset reach(n);
            for (int w = 0; w < n; ++w) {
                if (!up[v].test(w)) continue;
                if (state[w] == 1) throw std::invalid_argument("cycle detected through " + names[w]);
                if (state[w] == 0) close(w);
                reach.set(w);
                reach.orWith(up[w]);
            }
            if (reach.test(v)) throw std::invalid_argument("cycle detected through " + names[v]);
            up[v] = reach;
            state[v] = 2;
        };
        for (int v = 0; v < n; ++v)
            if (state[v] == 0) close(v);
    }

    static void validateClosed(const std::vector<Bitset>& up, const std::vector<std::string>& names) {
        const int n = int(up.size());
        for (int a = 0; a < n; ++a) {
            if (up[a].test(a)) throw std::invalid_argument("reflexive pair: " + names[a]);
            for (int b = 0; b < n; ++b) {
                if (!up[a].test(b)) continue;
                if (up[b].test(a))
                    throw std::invalid_argument("relation not antisymmetric on " + names[a] + ", " +
                                                names[b]);
                if (!up[b].isSubsetOf(up[a]))
                    throw std::invalid_argument("relation not transitively closed at " + names[a] +
                                                " < " + names[b]);
            }
        }
    }

    std::vector<std::string> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<Bitset> up_;    // up_[x] = { y : x < y }
    std::vector<Bitset> down_;  // down_[x] = { y : y < x }
};

inline Poset dual(const Poset& p) {
    Poset q;
    q.elements_ = p.elements_;
    q.index_ = p.index_;
    q.up_ = p.down_;
    q.down_ = p.up_;
    return q;
}

inline Poset induced(const Poset& p, const std::vector<std::string>& keep) {
    std::vector<int> idx;
    idx.reserve(keep.size());
    for (const auto& id : keep) idx.push_back(p.indexOf(id));
    const int m = int(idx.size());
    std::vector<Bitset> up(m, Bitset(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (p.less(idx[a], idx[b])) up[a].set(b);
    return Poset::fromClosedRelation(keep, std::move(up), false);
}

// ---------------------------------------------------------------------------
// Down/up-set chains (the Stage-1 structure) and the 2+2 fallout.

struct TwoPlusTwoWitness {
    // x < a and y < b with all cross pairs incomparable.
    std::string x, y, a, b;
};

struct DownSetChain {
    std::vector<std::vector<int>> down_sets;  // D_1 = empty, increasing by inclusion
    std::vector<std::vector<int>> up_sets;    // U_1 largest, U_k = empty
    std::vector<int> left_index;              // 1-based: D(x) = D_i
    std::vector<int> right_index;             // 1-based: U(x) = U_j
};

// Orders the distinct down sets by size (ties broken lexicographically by
// element identifier, which only matters on the failure path) and checks
// that they form an inclusion chain.  On failure extracts the four elements
// of an induced 2+2 exactly as in Stage 1.
inline std::variant<DownSetChain, TwoPlusTwoWitness> downUpChain(const Poset& p) {
    const int n = p.size();

    struct SetEntry {
        Bitset bits;
        int witness;  // some element whose down/up set this is
    };
    auto distinctSorted = [&](bool down) {
        std::vector<SetEntry> out;
        std::map<Bitset, int> seen;
        for (int x = 0; x < n; ++x) {
            const Bitset& s = down ? p.downSet(x) : p.upSet(x);
            if (seen.emplace(s, x).second) out.push_back({s, x});
        }
        auto lexNames = [&](const Bitset& s) {
            std::vector<std::string> names;
            for (int i : s.toIndices()) names.push_back(p.name(i));
            std::sort(names.begin(), names.end());
            return names;
        };
        std::sort(out.begin(), out.end(), [&](const SetEntry& a, const SetEntry& b) {
            int ca = a.bits.count(), cb = b.bits.count();
            if (ca != cb) return ca < cb;
            return lexNames(a.bits) < lexNames(b.bits);
        });
        return out;
    };

    auto downs = distinctSorted(true);
    for (std::size_t i = 0; i + 1 < downs.size(); ++i) {
        if (!downs[i].bits.isSubsetOf(downs[i + 1].bits)) {
            TwoPlusTwoWitness w;
            w.x = p.name(downs[i].bits.firstDifference(downs[i + 1].bits));
            w.y = p.name(downs[i + 1].bits.firstDifference(downs[i].bits));
            w.a = p.name(downs[i].witness);
            w.b = p.name(downs[i + 1].witness);
            return w;
        }
    }

    auto ups = distinctSorted(false);
    std::reverse(ups.begin(), ups.end());  // largest first
    for (std::size_t i = 0; i + 1 < ups.size(); ++i) {
        if (!ups[i + 1].bits.isSubsetOf(ups[i].bits))
            throw std::logic_error("up sets not a chain although down sets are");
    }
    if (n > 0 && downs.size() != ups.size())
        throw std::logic_error("down/up set counts differ on an interval order");

    DownSetChain chain;
    std::map<Bitset, int> downPos, upPos;
    for (std::size_t i = 0; i < downs.size(); ++i) {
        chain.down_sets.push_back(downs[i].bits.toIndices());
        downPos[downs[i].bits] = int(i) + 1;
    }
    for (std::size_t i = 0; i < ups.size(); ++i) {
        chain.up_sets.push_back(ups[i].bits.toIndices());
        upPos[ups[i].bits] = int(i) + 1;
    }
    chain.left_index.resize(n);
    chain.right_index.resize(n);
    for (int x = 0; x < n; ++x) {
        chain.left_index[x] = downPos.at(p.downSet(x));
        chain.right_index[x] = upPos.at(p.upSet(x));
        if (chain.left_index[x] > chain.right_index[x])
            throw std::logic_error("left index exceeds right index");
    }
    return chain;
}

// ---------------------------------------------------------------------------
// Twins.

// Partition of the elements into twin classes: x and y share a class iff
// they are incomparable and have identical comparabilities to everything else.
inline std::vector<std::vector<std::string>> twinClasses(const Poset& p) {
    const int n = p.size();
    std::vector<std::vector<std::string>> classes;
    std::map<std::pair<Bitset, Bitset>, int> byProfile;
    for (int x = 0; x < n; ++x) {
        auto key = std::make_pair(p.downSet(x), p.upSet(x));
        auto it = byProfile.find(key);
        if (it == byProfile.end()) {
            byProfile.emplace(key, int(classes.size()));
            classes.push_back({p.name(x)});
        } else {
            classes[it->second].push_back(p.name(x));
        }
    }
    return classes;
}

struct TwinReduction {
    Poset quotient;  // induced on one representative per class
    std::map<std::string, std::string> representative;
};

inline TwinReduction reduceTwins(const Poset& p) {
    TwinReduction out;
    std::vector<std::string> reps;
    for (const auto& cls : twinClasses(p)) {
        // classes list members in declared order; first member represents
        for (const auto& member : cls) out.representative[member] = cls.front();
    }
    for (const auto& id : p.elements())
        if (out.representative.at(id) == id) reps.push_back(id);
    out.quotient = induced(p, reps);
    return out;
}

// ---------------------------------------------------------------------------
// Induced-copy search (the brute-force oracle primitive).

using Embedding = std::map<std::string, std::string>;  // pattern id -> host id

inline bool isInducedEmbedding(const Poset& host, const Poset& pattern, const Embedding& emb) {
    if (int(emb.size()) != pattern.size()) return false;
    std::vector<int> img(pattern.size(), -1);
    std::vector<bool> used(host.size(), false);
    for (int i = 0; i < pattern.size(); ++i) {
        auto it = emb.find(pattern.name(i));
        if (it == emb.end() || !host.contains(it->second)) return false;
        int h = host.indexOf(it->second);
        if (used[h]) return false;
        used[h] = true;
        img[i] = h;
    }
    for (int a = 0; a < pattern.size(); ++a)
        for (int b = 0; b < pattern.size(); ++b)
            if (a != b && pattern.less(a, b) != host.less(img[a], img[b])) return false;
    return true;
}

inline constexpr int kDefaultPatternBound = 7;

// Exhaustive backtracking over injective assignments, pruned by up/down
// degree profiles.  No false negatives.
inline std::optional<Embedding> findInducedCopy(const Poset& host, const Poset& pattern,
                                                int pattern_bound = kDefaultPatternBound) {
    const int m = pattern.size();
    if (m > pattern_bound)
        throw std::invalid_argument("pattern exceeds configured bound of " +
                                    std::to_string(pattern_bound));
    const int n = host.size();
    if (m > n) return std::nullopt;
    if (m == 0) return Embedding{};

    std::vector<int> img(m, -1);
    std::vector<bool> used(n, false);

    std::function<bool(int)> place = [&](int a) -> bool {
        if (a == m) return true;
        for (int h = 0; h < n; ++h) {
            if (used[h]) continue;
            if (host.downDegree(h) < pattern.downDegree(a)) continue;
            if (host.upDegree(h) < pattern.upDegree(a)) continue;
            bool ok = true;
            for (int b = 0; b < a && ok; ++b) {
                if (pattern.less(a, b) != host.less(h, img[b])) ok = false;
                if (ok && pattern.less(b, a) != host.less(img[b], h)) ok = false;
            }
            if (!ok) continue;
            img[a] = h;
            used[h] = true;
            if (place(a + 1)) return true;
            used[h] = false;
            img[a] = -1;
        }
        return false;
    };

    if (!place(0)) return std::nullopt;
    Embedding emb;
    for (int a = 0; a < m; ++a) emb[pattern.name(a)] = host.name(img[a]);
    return emb;
}

}  // namespace ocio

#endif
