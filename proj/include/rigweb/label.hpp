#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigweb {

/// Structured web labels. The constructors mirror how the web was built:
/// pairs for tensor/arrow webs, tags for additive webs, multisets for the
/// exponential. Multisets are kept as sorted label vectors with repeats.
class Label {
public:
    enum class Kind : std::uint8_t { Unit, Atom, Pair, Tag, MSet };

    static Label unit() { return Label(Kind::Unit, 0, {}); }
    static Label atom(std::uint32_t i) { return Label(Kind::Atom, i, {}); }
    static Label pair(Label l, Label r) {
        return Label(Kind::Pair, 0, {std::move(l), std::move(r)});
    }
    static Label tag(std::uint32_t i, Label inner) {
        return Label(Kind::Tag, i, {std::move(inner)});
    }
    static Label mset(std::vector<Label> elems) {
        std::sort(elems.begin(), elems.end());
        return Label(Kind::MSet, 0, std::move(elems));
    }

    Kind kind() const { return kind_; }
    std::uint32_t index() const { return n_; }
    const std::vector<Label>& kids() const { return kids_; }

    const Label& left() const { return kids_.at(0); }
    const Label& right() const { return kids_.at(1); }
    const Label& inner() const { return kids_.at(0); }

    std::size_t degree() const { return kids_.size(); } // multiset size

    friend bool operator==(const Label& a, const Label& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.kids_ == b.kids_;
    }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
    friend bool operator<(const Label& a, const Label& b) {
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return std::lexicographical_compare(a.kids_.begin(), a.kids_.end(),
                                            b.kids_.begin(), b.kids_.end());
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Unit: return "*";
            case Kind::Atom: return std::to_string(n_);
            case Kind::Pair: return "(" + left().str() + "," + right().str() + ")";
            case Kind::Tag: return "#" + std::to_string(n_) + "(" + inner().str() + ")";
            case Kind::MSet: {
                std::string out = "[";
                for (std::size_t i = 0; i < kids_.size(); ++i) {
                    if (i) out += ",";
                    out += kids_[i].str();
                }
                return out + "]";
            }
        }
        return "?";
    }

    static Label parse(const std::string& s) {
        std::size_t pos = 0;
        Label l = parse_at(s, pos);
        if (pos != s.size()) throw std::invalid_argument("label: trailing input in " + s);
        return l;
    }

private:
    Label(Kind k, std::uint32_t n, std::vector<Label> kids)
        : kind_(k), n_(n), kids_(std::move(kids)) {}

    static Label parse_at(const std::string& s, std::size_t& pos) {
        if (pos >= s.size()) throw std::invalid_argument("label: unexpected end");
        char c = s[pos];
        if (c == '*') { ++pos; return unit(); }
        if (c >= '0' && c <= '9') {
            std::uint32_t v = 0;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
                v = v * 10 + static_cast<std::uint32_t>(s[pos++] - '0');
            return atom(v);
        }
        if (c == '(') {
            ++pos;
            Label l = parse_at(s, pos);
            expect(s, pos, ',');
            Label r = parse_at(s, pos);
            expect(s, pos, ')');
            return pair(std::move(l), std::move(r));
        }
        if (c == '#') {
            ++pos;
            std::uint32_t v = 0;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
                v = v * 10 + static_cast<std::uint32_t>(s[pos++] - '0');
            expect(s, pos, '(');
            Label inner = parse_at(s, pos);
            expect(s, pos, ')');
            return tag(v, std::move(inner));
        }
        if (c == '[') {
            ++pos;
            std::vector<Label> elems;
            if (pos < s.size() && s[pos] == ']') { ++pos; return mset({}); }
            while (true) {
                elems.push_back(parse_at(s, pos));
                if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
                expect(s, pos, ']');
                break;
            }
            return mset(std::move(elems));
        }
        throw std::invalid_argument(std::string("label: bad character '") + c + "'");
    }

    static void expect(const std::string& s, std::size_t& pos, char c) {
        if (pos >= s.size() || s[pos] != c)
            throw std::invalid_argument(std::string("label: expected '") + c + "' in " + s);
        ++pos;
    }

    Kind kind_;
    std::uint32_t n_;
    std::vector<Label> kids_;
};

// -- multiset helpers (multisets are MSet labels) ----------------------------

inline Label mset_add(const Label& a, const Label& b) {
    std::vector<Label> elems = a.kids();
    elems.insert(elems.end(), b.kids().begin(), b.kids().end());
    return Label::mset(std::move(elems));
}

inline std::vector<Label> mset_support(const Label& m) {
    std::vector<Label> out;
    for (auto& e : m.kids())
        if (out.empty() || !(out.back() == e)) out.push_back(e);
    return out;
}

inline std::map<Label, int> mset_multiplicities(const Label& m) {
    std::map<Label, int> out;
    for (auto& e : m.kids()) out[e]++;
    return out;
}

/// m! as a plain integer: the product of the factorials of the
/// multiplicities. Always a positive integer; 128-bit is ample at desk
/// scale (degrees stay in single digits).
inline unsigned long long mset_factorial(const Label& m) {
    unsigned long long out = 1;
    for (auto& [e, k] : mset_multiplicities(m))
        for (int i = 2; i <= k; ++i) out *= static_cast<unsigned long long>(i);
    return out;
}

/// All distinct orderings of a multiset (its enumerations). Bounded use
/// only: degrees <= 4 or so.
inline std::vector<std::vector<Label>> mset_enumerations(const Label& m) {
    std::vector<Label> sorted = m.kids();
    std::vector<std::vector<Label>> out;
    if (sorted.empty()) return {{}};
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

/// All ways to split m into exactly k (possibly empty) unordered parts,
/// each part a multiset. Used by the digging matrix.
inline std::vector<std::vector<Label>> mset_partitions_into(const Label& m, int k) {
    // Assign each element of m to one of k bins, then canonicalize the
    // unordered bin list and dedupe.
    if (k <= 0) {
        if (m.kids().empty() && k == 0) return {{}};
        return {};
    }
    std::vector<std::vector<Label>> results;
    std::vector<int> assign(m.kids().size(), 0);
    std::vector<std::vector<Label>> seen;
    while (true) {
        std::vector<std::vector<Label>> bins(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < assign.size(); ++i)
            bins[static_cast<std::size_t>(assign[i])].push_back(m.kids()[i]);
        std::vector<Label> parts;
        for (auto& b : bins) parts.push_back(Label::mset(b));
        std::sort(parts.begin(), parts.end());
        Label canon = Label::mset(parts);
        bool fresh = true;
        for (auto& s : seen)
            if (Label::mset(s) == canon) { fresh = false; break; }
        if (fresh) {
            seen.push_back(parts);
            results.push_back(parts);
        }
        // next assignment
        std::size_t i = 0;
        for (; i < assign.size(); ++i) {
            if (++assign[i] < k) break;
            assign[i] = 0;
        }
        if (i == assign.size()) break;
    }
    return results;
}

} // namespace rigweb
