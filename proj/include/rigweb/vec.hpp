#pragma once

#include <functional>
#include <map>
#include <optional>

#include "rigweb/family.hpp"
#include "rigweb/web.hpp"

namespace rigweb {

/// Result of a partial operation: either a value or the index path that
/// witnessed the undefined sum.
template <class T>
struct Partial {
    std::optional<T> val;
    std::string why; // witness when undefined

    bool ok() const { return val.has_value(); }
    const T& value() const { return *val; }

    static Partial of(T v) { return Partial{std::move(v), ""}; }
    static Partial undef(std::string why) { return Partial{std::nullopt, std::move(why)}; }
};

using CertFn = std::function<bool(const Label&)>;

inline CertFn cert_all() {
    return [](const Label&) { return true; };
}
inline CertFn cert_none() {
    return [](const Label&) { return false; };
}

/// Sparse web-indexed vector. Absent labels are 0; stored entries are
/// nonzero and share one carrier. `exact` records which coordinates are
/// unaffected by web truncation (everything, for untruncated webs).
struct Vec {
    WebPtr web;
    Carrier carrier;
    std::map<Label, Scalar> entries;
    CertFn exact = cert_all();

    Scalar at(const Label& l) const {
        auto it = entries.find(l);
        return it == entries.end() ? zero(carrier) : it->second;
    }

    void set(const Label& l, const Scalar& s) {
        if (s.carrier != carrier) throw std::invalid_argument("Vec::set: carrier mismatch");
        if (s.is_zero())
            entries.erase(l);
        else
            entries[l] = s;
    }

    bool is_zero_vec() const { return entries.empty(); }

    /// Entry-set equality (certificates are metadata, not value).
    friend bool operator==(const Vec& a, const Vec& b) {
        return a.carrier == b.carrier && a.entries == b.entries;
    }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
};

inline Vec zero_vec(WebPtr web, Carrier c) { return Vec{std::move(web), c, {}, cert_all()}; }

inline Vec basis_vec(WebPtr web, Carrier c, const Label& l) {
    if (!web->contains(l)) throw std::invalid_argument("basis_vec: label not in web");
    Vec v = zero_vec(std::move(web), c);
    v.set(l, one(c));
    return v;
}

/// All-ones vector (entries are the multiplicative unit).
inline Vec diag_vec(WebPtr web, Carrier c) {
    Vec v = zero_vec(web, c);
    for (auto& l : web->labels) v.set(l, one(c));
    return v;
}

inline Vec scale_vec(const Scalar& r, const Vec& x) {
    Vec out = zero_vec(x.web, x.carrier);
    out.exact = x.exact;
    for (auto& [l, v] : x.entries) out.set(l, mul(r, v));
    return out;
}

/// Partial scalar product <x, y> over a shared web.
inline SumOutcome scalar_product(const Vec& x, const Vec& y) {
    if (x.carrier != y.carrier) throw std::invalid_argument("scalar_product: carrier mismatch");
    if (!same_web(x.web, y.web)) throw std::invalid_argument("scalar_product: web mismatch");
    std::vector<Scalar> terms;
    for (auto& [l, v] : x.entries) {
        auto it = y.entries.find(l);
        if (it != y.entries.end()) terms.push_back(mul(v, it->second));
    }
    return try_sum(x.carrier, terms);
}

/// Pointwise partial sum of finitely many vectors.
inline Partial<Vec> add_vecs(const std::vector<Vec>& xs) {
    if (xs.empty()) throw std::invalid_argument("add_vecs: need a web, give at least one");
    Vec out = zero_vec(xs.front().web, xs.front().carrier);
    std::map<Label, std::vector<Scalar>> cols;
    for (auto& x : xs) {
        if (!same_web(x.web, out.web) || x.carrier != out.carrier)
            throw std::invalid_argument("add_vecs: mismatch");
        for (auto& [l, v] : x.entries) cols[l].push_back(v);
    }
    for (auto& [l, terms] : cols) {
        SumOutcome s = try_sum(out.carrier, terms);
        if (!s.defined) return Partial<Vec>::undef("entry " + l.str());
        out.set(l, s.sum);
    }
    return Partial<Vec>::of(std::move(out));
}

inline Vec tensor_vec(const Vec& x, const Vec& y) {
    if (x.carrier != y.carrier) throw std::invalid_argument("tensor_vec: carrier mismatch");
    Vec out = zero_vec(product_web(*x.web, *y.web), x.carrier);
    for (auto& [a, v] : x.entries)
        for (auto& [b, w] : y.entries) out.set(Label::pair(a, b), mul(v, w));
    CertFn xe = x.exact, ye = y.exact;
    out.exact = [xe, ye](const Label& l) { return xe(l.left()) && ye(l.right()); };
    return out;
}

/// Pushforward along an injective relabelling; zero off the image.
inline Vec reindex_vec(const std::map<Label, Label>& phi, const Vec& x, WebPtr target) {
    std::set<Label> image;
    for (auto& [a, b] : phi)
        if (!image.insert(b).second) throw std::invalid_argument("reindex_vec: not injective");
    Vec out = zero_vec(std::move(target), x.carrier);
    for (auto& [l, v] : x.entries) out.set(phi.at(l), v);
    return out;
}

/// Compares two vectors on the coordinates both certify exact.
struct VecCompare {
    bool equal = true;
    std::string witness;
    int compared = 0;
    int skipped = 0;
};

inline VecCompare compare_vec_on_valid(const Vec& a, const Vec& b) {
    VecCompare out;
    std::set<Label> keys;
    for (auto& [l, v] : a.entries) keys.insert(l);
    for (auto& [l, v] : b.entries) keys.insert(l);
    for (auto& l : keys) {
        if (!a.exact(l) || !b.exact(l)) {
            ++out.skipped;
            continue;
        }
        ++out.compared;
        if (!(a.at(l) == b.at(l))) {
            out.equal = false;
            out.witness = "entry " + l.str() + ": " + scalar_str(a.at(l)) + " vs " +
                          scalar_str(b.at(l));
            return out;
        }
    }
    return out;
}

inline Vec abs_vec(const Vec& x) {
    Vec out = zero_vec(x.web, positive_counterpart(x.carrier));
    out.exact = x.exact;
    for (auto& [l, v] : x.entries) out.set(l, abs_val(v));
    return out;
}

} // namespace rigweb
