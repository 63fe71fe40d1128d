#ifndef OCIO_IO_HPP
#define OCIO_IO_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ocio/catalog.hpp"
#include "ocio/interval.hpp"
#include "ocio/poset.hpp"

namespace ocio {

// Line-oriented poset text format:
//   # comment
//   name <label>
//   elem a b c
//   rel a<b b<c
//   kind covers|full
struct PosetDocument {
    std::optional<std::string> name;
    std::vector<std::string> elements;
    struct Relation {
        std::string lo, hi;
        int line;
    };
    std::vector<Relation> relations;
    RelationInput relation_kind = RelationInput::Covers;

    friend bool operator==(const PosetDocument& a, const PosetDocument& b) {
        if (a.name != b.name || a.elements != b.elements ||
            a.relation_kind != b.relation_kind || a.relations.size() != b.relations.size())
            return false;
        for (std::size_t i = 0; i < a.relations.size(); ++i)
            if (a.relations[i].lo != b.relations[i].lo || a.relations[i].hi != b.relations[i].hi)
                return false;
        return true;
    }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

inline PosetDocument parsePoset(const std::string& text) {
    PosetDocument doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool sawKind = false;
    auto declared = [&](const std::string& id) {
        return std::find(doc.elements.begin(), doc.elements.end(), id) != doc.elements.end();
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string directive;
        if (!(ls >> directive) || directive[0] == '#') continue;
        if (directive == "name") {
            std::string rest;
            std::getline(ls, rest);
            const auto start = rest.find_first_not_of(" \t");
            if (start == std::string::npos) throw ParseError(lineno, "name directive without a label");
            doc.name = rest.substr(start);
        } else if (directive == "elem") {
            std::string id;
            while (ls >> id) {
                if (declared(id)) throw ParseError(lineno, "duplicate element: " + id);
                doc.elements.push_back(id);
            }
        } else if (directive == "rel") {
            std::string tok;
            while (ls >> tok) {
                const auto lt = tok.find('<');
                if (lt == std::string::npos || lt == 0 || lt + 1 == tok.size())
                    throw ParseError(lineno, "malformed relation token: " + tok);
                PosetDocument::Relation r{tok.substr(0, lt), tok.substr(lt + 1), lineno};
                if (!declared(r.lo)) throw ParseError(lineno, "undeclared element: " + r.lo);
                if (!declared(r.hi)) throw ParseError(lineno, "undeclared element: " + r.hi);
                doc.relations.push_back(std::move(r));
            }
        } else if (directive == "kind") {
            std::string k;
            ls >> k;
            if (k == "covers")
                doc.relation_kind = RelationInput::Covers;
            else if (k == "full")
                doc.relation_kind = RelationInput::FullRelation;
            else
                throw ParseError(lineno, "kind must be 'covers' or 'full'");
            sawKind = true;
        } else {
            throw ParseError(lineno, "unknown directive: " + directive);
        }
    }
    (void)sawKind;
    return doc;
}

// Build the poset, attaching the offending line to reflexive-pair errors.
inline Poset toPoset(const PosetDocument& doc) {
    for (const auto& r : doc.relations)
        if (r.lo == r.hi) throw ParseError(r.line, "reflexive pair: " + r.lo + "<" + r.hi);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& r : doc.relations) pairs.emplace_back(r.lo, r.hi);
    return Poset::build(doc.elements, pairs, doc.relation_kind);
}

inline std::string serializePoset(const PosetDocument& doc) {
    std::ostringstream os;
    if (doc.name) os << "name " << *doc.name << '\n';
    os << "elem";
    for (const auto& e : doc.elements) os << ' ' << e;
    os << '\n';
    os << "kind " << (doc.relation_kind == RelationInput::Covers ? "covers" : "full") << '\n';
    if (!doc.relations.empty()) {
        os << "rel";
        for (const auto& r : doc.relations) os << ' ' << r.lo << '<' << r.hi;
        os << '\n';
    }
    return os.str();
}

inline PosetDocument toDocument(const Poset& p, std::optional<std::string> name = std::nullopt) {
    PosetDocument doc;
    doc.name = std::move(name);
    doc.elements = p.elements();
    doc.relation_kind = RelationInput::FullRelation;
    for (const auto& [lo, hi] : p.relationPairs()) doc.relations.push_back({lo, hi, 0});
    return doc;
}

inline std::string serializePoset(const Poset& p) { return serializePoset(toDocument(p)); }

// ---------------------------------------------------------------------------
// JSON output.

using Json = nlohmann::json;

inline Json representationToJson(const Representation& rep) {
    Json out = Json::object();
    for (int i = 0; i < rep.size(); ++i) {
        const Interval& iv = rep.intervals[i];
        out[rep.elements[i]] = {{"left", iv.left.str()},
                                {"right", iv.right.str()},
                                {"style", iv.style == Style::Open ? "open" : "closed"}};
    }
    return out;
}

inline Representation representationFromJson(const Json& j, Semantics semantics) {
    Representation rep;
    rep.semantics = semantics;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& e = it.value();
        const std::string style = e.at("style").get<std::string>();
        if (style != "open" && style != "closed")
            throw std::invalid_argument("style must be 'open' or 'closed'");
        const std::string ls = e.at("left").get<std::string>();
        const std::string rs = e.at("right").get<std::string>();
        if (ls.find('.') != std::string::npos || rs.find('.') != std::string::npos)
            throw std::invalid_argument("decimal endpoints rejected; use integer-pair rationals p/q");
        rep.push(it.key(), Interval(Rational::parse(ls), Rational::parse(rs),
                                    style == "open" ? Style::Open : Style::Closed));
    }
    return rep;
}

inline Json certificateToJson(const Certificate& cert) {
    Json elements = Json::object();
    for (const auto& [pat, host] : cert.embedding) elements[pat] = host;
    return {{"kind", kindName(cert.kind)}, {"elements", elements}};
}

// ---------------------------------------------------------------------------
// ASCII rendering of a representation.

inline std::string renderRepresentation(const Representation& rep, int width = 72) {
    if (rep.size() == 0) return "";
    Rational lo = rep.intervals[0].left, hi = rep.intervals[0].right;
    std::size_t nameWidth = 0;
    for (int i = 0; i < rep.size(); ++i) {
        lo = std::min(lo, rep.intervals[i].left);
        hi = std::max(hi, rep.intervals[i].right);
        nameWidth = std::max(nameWidth, rep.elements[i].size());
    }
    const Rational span = hi == lo ? Rational(1) : hi - lo;
    auto column = [&](const Rational& x) {
        // floor((x - lo) / span * (width - 1))
        Rational t = (x - lo) / span * Rational(width - 1);
        BigInt q = t.num() / t.den();
        if (t.num() < 0 && t.num() % t.den() != 0) --q;
        return int(q.convert_to<long>());
    };

    std::vector<int> order(rep.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (rep.intervals[a].left != rep.intervals[b].left)
            return rep.intervals[a].left < rep.intervals[b].left;
        return rep.intervals[a].right < rep.intervals[b].right;
    });

    std::ostringstream os;
    for (int i : order) {
        const Interval& iv = rep.intervals[i];
        const int c1 = column(iv.left);
        const int c2 = std::max(column(iv.right), c1 + 1);
        std::string row(std::size_t(c2) + 1, ' ');
        const bool open = iv.style == Style::Open;
        for (int c = c1; c <= c2; ++c) row[c] = open ? '-' : '=';
        row[c1] = open ? '(' : '[';
        row[c2] = open ? ')' : ']';
        os << rep.elements[i] << std::string(nameWidth - rep.elements[i].size() + 2, ' ') << row
           << '\n';
    }
    return os.str();
}

}  // namespace ocio

#endif
