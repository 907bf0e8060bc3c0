#pragma once

#include <memory>
#include <set>
#include <vector>

#include "rigweb/label.hpp"

namespace rigweb {

/// A finite web: the sorted label list of an index set. Shared and
/// immutable; matrices built against huge iterated webs may leave their
/// codomain web implicit instead (see Mat).
struct Web {
    std::vector<Label> labels; // sorted, distinct

    bool contains(const Label& l) const {
        return std::binary_search(labels.begin(), labels.end(), l);
    }
    std::size_t size() const { return labels.size(); }
};

using WebPtr = std::shared_ptr<const Web>;

inline WebPtr make_web(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto w = std::make_shared<Web>();
    w->labels = std::move(labels);
    return w;
}

inline WebPtr base_web(std::uint32_t n) {
    std::vector<Label> ls;
    for (std::uint32_t i = 0; i < n; ++i) ls.push_back(Label::atom(i));
    return make_web(std::move(ls));
}

inline WebPtr unit_web() { return make_web({Label::unit()}); }
inline WebPtr empty_web() { return make_web({}); }

inline WebPtr product_web(const Web& a, const Web& b) {
    std::vector<Label> ls;
    ls.reserve(a.size() * b.size());
    for (auto& x : a.labels)
        for (auto& y : b.labels) ls.push_back(Label::pair(x, y));
    return make_web(std::move(ls));
}

inline WebPtr tagged_web(const std::vector<WebPtr>& parts) {
    std::vector<Label> ls;
    for (std::uint32_t i = 0; i < parts.size(); ++i)
        for (auto& x : parts[i]->labels) ls.push_back(Label::tag(i, x));
    return make_web(std::move(ls));
}

/// Web of pairs (i, a) for i < n: the index web of the summability
/// functor applied to `a`'s web.
inline WebPtr indexed_web(std::uint32_t n, const Web& a) {
    std::vector<Label> ls;
    for (std::uint32_t i = 0; i < n; ++i)
        for (auto& x : a.labels) ls.push_back(Label::pair(Label::atom(i), x));
    return make_web(std::move(ls));
}

inline bool same_web(const WebPtr& a, const WebPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->labels == b->labels;
}

/// All multisets over `base` of degree <= d that pass the filter.
template <class Keep>
inline std::vector<Label> multisets_upto(const std::vector<Label>& base, int d, Keep keep) {
    std::vector<Label> out;
    std::vector<Label> cur;
    // depth-first over nondecreasing element choices
    auto rec = [&](auto&& self, std::size_t start) -> void {
        Label m = Label::mset(cur);
        if (keep(m)) out.push_back(m);
        if (static_cast<int>(cur.size()) == d) return;
        for (std::size_t i = start; i < base.size(); ++i) {
            cur.push_back(base[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace rigweb
