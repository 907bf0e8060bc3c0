#pragma once

#include <memory>

#include "rigweb/vec.hpp"

namespace rigweb {

using SparseRow = std::map<Label, Scalar>;
using RowMap = std::map<Label, SparseRow>;

/// Sparse web-indexed matrix, domain label first: s maps X to Y with
/// entries s[a][b] for a in |X|, b in |Y|, and (s . x)_b = sum_a s_ab x_a.
///
/// Truncated webs make some composites inexact, so every matrix carries
/// two certificates:
///   row_exact(a): row a holds every untruncated-nonzero entry, exactly;
///   col_exact(b): same for column b.
/// Composition intersects them through the sparse supports; an entry of a
/// composite is trustworthy iff its row or its column certificate holds.
/// The codomain web may be left null when it is too large to materialize
/// (iterated exponential webs); only entrywise operations work then.
struct Mat {
    WebPtr dom;
    WebPtr cod; // may be null: implicit codomain
    Carrier carrier;
    std::shared_ptr<const RowMap> rows = std::make_shared<RowMap>();
    std::shared_ptr<const RowMap> cols = std::make_shared<RowMap>(); // transposed view
    CertFn row_exact = cert_all();
    CertFn col_exact = cert_all();

    Scalar at(const Label& a, const Label& b) const {
        auto ri = rows->find(a);
        if (ri == rows->end()) return zero(carrier);
        auto ci = ri->second.find(b);
        return ci == ri->second.end() ? zero(carrier) : ci->second;
    }

    bool exact_at(const Label& a, const Label& b) const {
        return row_exact(a) || col_exact(b);
    }

    std::size_t entry_count() const {
        std::size_t n = 0;
        for (auto& [a, row] : *rows) n += row.size();
        return n;
    }

    /// Entry-set equality; webs and certificates are not compared.
    friend bool operator==(const Mat& s, const Mat& t) {
        return s.carrier == t.carrier && *s.rows == *t.rows;
    }
    friend bool operator!=(const Mat& s, const Mat& t) { return !(s == t); }
};

/// Accumulates entries, then freezes them into an immutable Mat.
class MatBuilder {
public:
    MatBuilder(WebPtr dom, WebPtr cod, Carrier c)
        : dom_(std::move(dom)), cod_(std::move(cod)), carrier_(c) {}

    void set(const Label& a, const Label& b, const Scalar& s) {
        if (s.carrier != carrier_) throw std::invalid_argument("MatBuilder: carrier mismatch");
        if (s.is_zero()) {
            rows_[a].erase(b);
            cols_[b].erase(a);
            return;
        }
        rows_[a][b] = s;
        cols_[b][a] = s;
    }

    Scalar at(const Label& a, const Label& b) const {
        auto ri = rows_.find(a);
        if (ri == rows_.end()) return zero(carrier_);
        auto ci = ri->second.find(b);
        return ci == ri->second.end() ? zero(carrier_) : ci->second;
    }

    Mat build(CertFn row_exact = cert_all(), CertFn col_exact = cert_all()) {
        Mat m;
        m.dom = dom_;
        m.cod = cod_;
        m.carrier = carrier_;
        // prune empty rows/cols left by set(..., 0)
        for (auto it = rows_.begin(); it != rows_.end();)
            it = it->second.empty() ? rows_.erase(it) : std::next(it);
        for (auto it = cols_.begin(); it != cols_.end();)
            it = it->second.empty() ? cols_.erase(it) : std::next(it);
        m.rows = std::make_shared<RowMap>(std::move(rows_));
        m.cols = std::make_shared<RowMap>(std::move(cols_));
        m.row_exact = std::move(row_exact);
        m.col_exact = std::move(col_exact);
        return m;
    }

private:
    WebPtr dom_, cod_;
    Carrier carrier_;
    RowMap rows_, cols_;
};

inline Mat zero_mat(WebPtr dom, WebPtr cod, Carrier c) {
    return MatBuilder(std::move(dom), std::move(cod), c).build();
}

inline Mat identity_mat(WebPtr web, Carrier c) {
    MatBuilder b(web, web, c);
    for (auto& l : web->labels) b.set(l, l, one(c));
    return b.build();
}

inline Mat transpose(const Mat& s) {
    Mat t;
    t.dom = s.cod;
    t.cod = s.dom;
    t.carrier = s.carrier;
    t.rows = s.cols;
    t.cols = s.rows;
    t.row_exact = s.col_exact;
    t.col_exact = s.row_exact;
    return t;
}

/// (s . x)_b = sum_a s_ab x_a, eagerly Undefined on the first bad entry.
inline Partial<Vec> mat_apply(const Mat& s, const Vec& x) {
    if (s.carrier != x.carrier) throw std::invalid_argument("mat_apply: carrier mismatch");
    if (s.dom && !same_web(s.dom, x.web)) throw std::invalid_argument("mat_apply: web mismatch");
    std::map<Label, std::vector<Scalar>> acc;
    for (auto& [a, xv] : x.entries) {
        auto ri = s.rows->find(a);
        if (ri == s.rows->end()) continue;
        for (auto& [b, sv] : ri->second) acc[b].push_back(mul(sv, xv));
    }
    Vec out = zero_vec(s.cod ? s.cod : x.web, x.carrier);
    for (auto& [b, terms] : acc) {
        SumOutcome o = try_sum(x.carrier, terms);
        if (!o.defined) return Partial<Vec>::undef("entry " + b.str());
        out.set(b, o.sum);
    }
    auto scols = s.cols;
    CertFn sc = s.col_exact, xe = x.exact;
    out.exact = [scols, sc, xe](const Label& b) {
        if (!sc(b)) return false;
        auto ci = scols->find(b);
        if (ci == scols->end()) return true;
        for (auto& [a, v] : ci->second)
            if (!xe(a)) return false;
        return true;
    };
    return Partial<Vec>::of(std::move(out));
}

/// Matrix product "after . first": (after ∘ first)_{a,c} =
/// sum_b first_{a,b} after_{b,c}. Middle webs must agree.
inline Partial<Mat> compose(const Mat& after, const Mat& first) {
    if (after.carrier != first.carrier) throw std::invalid_argument("compose: carrier mismatch");
    if (first.cod && after.dom && !same_web(first.cod, after.dom))
        throw std::invalid_argument("compose: middle web mismatch");
    MatBuilder b(first.dom, after.cod, first.carrier);
    std::map<std::pair<Label, Label>, std::vector<Scalar>> acc;
    for (auto& [a, row] : *first.rows) {
        for (auto& [mid, sv] : row) {
            auto ri = after.rows->find(mid);
            if (ri == after.rows->end()) continue;
            for (auto& [c, tv] : ri->second) acc[{a, c}].push_back(mul(sv, tv));
        }
    }
    for (auto& [ac, terms] : acc) {
        SumOutcome o = try_sum(first.carrier, terms);
        if (!o.defined)
            return Partial<Mat>::undef("entry (" + ac.first.str() + ";" + ac.second.str() + ")");
        b.set(ac.first, ac.second, o.sum);
    }
    auto frows = first.rows;
    auto tcols = after.cols;
    CertFn fre = first.row_exact, tre = after.row_exact;
    CertFn fce = first.col_exact, tce = after.col_exact;
    CertFn row_exact = [frows, fre, tre](const Label& a) {
        if (!fre(a)) return false;
        auto ri = frows->find(a);
        if (ri == frows->end()) return true;
        for (auto& [mid, v] : ri->second)
            if (!tre(mid)) return false;
        return true;
    };
    CertFn col_exact = [tcols, tce, fce](const Label& c) {
        if (!tce(c)) return false;
        auto ci = tcols->find(c);
        if (ci == tcols->end()) return true;
        for (auto& [mid, v] : ci->second)
            if (!fce(mid)) return false;
        return true;
    };
    return Partial<Mat>::of(b.build(row_exact, col_exact));
}

/// Entrywise partial sum of matrices over matching webs.
inline Partial<Mat> add_mats(const std::vector<Mat>& ms) {
    if (ms.empty()) throw std::invalid_argument("add_mats: give at least one");
    MatBuilder b(ms.front().dom, ms.front().cod, ms.front().carrier);
    std::map<std::pair<Label, Label>, std::vector<Scalar>> acc;
    for (auto& m : ms)
        for (auto& [a, row] : *m.rows)
            for (auto& [c, v] : row) acc[{a, c}].push_back(v);
    for (auto& [ac, terms] : acc) {
        SumOutcome o = try_sum(ms.front().carrier, terms);
        if (!o.defined)
            return Partial<Mat>::undef("entry (" + ac.first.str() + ";" + ac.second.str() + ")");
        b.set(ac.first, ac.second, o.sum);
    }
    std::vector<CertFn> res, ces;
    for (auto& m : ms) { res.push_back(m.row_exact); ces.push_back(m.col_exact); }
    CertFn re = [res](const Label& a) {
        for (auto& f : res)
            if (!f(a)) return false;
        return true;
    };
    CertFn ce = [ces](const Label& c) {
        for (auto& f : ces)
            if (!f(c)) return false;
        return true;
    };
    return Partial<Mat>::of(b.build(re, ce));
}

inline Mat scale_mat(const Scalar& r, const Mat& s) {
    MatBuilder b(s.dom, s.cod, s.carrier);
    for (auto& [a, row] : *s.rows)
        for (auto& [c, v] : row) b.set(a, c, mul(r, v));
    return b.build(s.row_exact, s.col_exact);
}

/// (s tensor t)_{(a,a'),(b,b')} = s_{a,b} t_{a',b'}; total.
inline Mat tensor_mat(const Mat& s, const Mat& t) {
    if (s.carrier != t.carrier) throw std::invalid_argument("tensor_mat: carrier mismatch");
    WebPtr dom = (s.dom && t.dom) ? product_web(*s.dom, *t.dom) : nullptr;
    WebPtr cod = (s.cod && t.cod) ? product_web(*s.cod, *t.cod) : nullptr;
    MatBuilder b(dom, cod, s.carrier);
    for (auto& [a, row] : *s.rows)
        for (auto& [a2, row2] : *t.rows)
            for (auto& [c, v] : row)
                for (auto& [c2, v2] : row2)
                    b.set(Label::pair(a, a2), Label::pair(c, c2), mul(v, v2));
    CertFn sre = s.row_exact, tre = t.row_exact, sce = s.col_exact, tce = t.col_exact;
    return b.build(
        [sre, tre](const Label& l) { return sre(l.left()) && tre(l.right()); },
        [sce, tce](const Label& l) { return sce(l.left()) && tce(l.right()); });
}

/// Rank-one matrix x (x tensor y viewed in |X| -o |Y|).
inline Mat rank_one(const Vec& x, const Vec& y) {
    MatBuilder b(x.web, y.web, x.carrier);
    for (auto& [a, v] : x.entries)
        for (auto& [c, w] : y.entries) b.set(a, c, mul(v, w));
    return b.build();
}

/// Entrywise carrier embedding (0/1 structural matrices into a signed
/// module carrier, positive values into their module).
inline Mat cast_mat(const Mat& s, Carrier target) {
    if (s.carrier == target) return s;
    MatBuilder b(s.dom, s.cod, target);
    for (auto& [a, row] : *s.rows)
        for (auto& [c, v] : row) b.set(a, c, cast_scalar(v, target));
    return b.build(s.row_exact, s.col_exact);
}

inline Mat abs_mat(const Mat& s) {
    MatBuilder b(s.dom, s.cod, positive_counterpart(s.carrier));
    for (auto& [a, row] : *s.rows)
        for (auto& [c, v] : row) b.set(a, c, abs_val(v));
    return b.build(s.row_exact, s.col_exact);
}

/// Result of comparing two matrices on the region both certify exact.
/// Entries outside the valid region are skipped, not judged; absent
/// entries on both sides agree by sparsity and are not counted.
struct ValidCompare {
    bool equal = true;
    std::string witness;
    int compared = 0;
    int skipped = 0;
};

inline ValidCompare compare_on_valid(const Mat& a, const Mat& b) {
    ValidCompare out;
    std::set<std::pair<Label, Label>> keys;
    for (auto& [r, row] : *a.rows)
        for (auto& [c, v] : row) keys.insert({r, c});
    for (auto& [r, row] : *b.rows)
        for (auto& [c, v] : row) keys.insert({r, c});
    for (auto& [r, c] : keys) {
        if (!a.exact_at(r, c) || !b.exact_at(r, c)) {
            ++out.skipped;
            continue;
        }
        ++out.compared;
        Scalar va = a.at(r, c), vb = b.at(r, c);
        if (!(va == vb)) {
            out.equal = false;
            out.witness = "entry (" + r.str() + ";" + c.str() + "): " + scalar_str(va) +
                          " vs " + scalar_str(vb);
            return out;
        }
    }
    return out;
}

/// View a matrix as the vector over the product web |X| x |Y| (the web of
/// X -o Y); pairings of morphisms against p tensor q go through this.
inline Vec mat_as_vec(const Mat& s, WebPtr arrow_web) {
    Vec v = zero_vec(std::move(arrow_web), s.carrier);
    for (auto& [a, row] : *s.rows)
        for (auto& [c, val] : row) v.set(Label::pair(a, c), val);
    CertFn re = s.row_exact, ce = s.col_exact;
    v.exact = [re, ce](const Label& l) { return re(l.left()) || ce(l.right()); };
    return v;
}

inline Mat vec_as_mat(const Vec& v, WebPtr dom, WebPtr cod) {
    MatBuilder b(std::move(dom), std::move(cod), v.carrier);
    for (auto& [l, val] : v.entries) b.set(l.left(), l.right(), val);
    return b.build();
}

} // namespace rigweb
