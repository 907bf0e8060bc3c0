#pragma once

#include "rigweb/ll.hpp"

namespace rigweb {

/// The summation object at index bound N: the l-infinity style space on
/// {0..N-1}, predual the diagonal, dual predual the basis. Exact for
/// every built-in model: orth(Diag) generates the points and each basis
/// vector sits under Diag (downward closure).
inline SpaceRepr d_space(int n, const std::string& model) {
    if (n < 1) throw std::invalid_argument("d_space: need N >= 1");
    const ModelInfo& mi = model_info(model);
    SpaceRepr D;
    D.model = model;
    D.pcr = mi.positive;
    D.web = base_web(static_cast<std::uint32_t>(n));
    D.name = "D" + std::to_string(n);
    D.P = {diag_vec(D.web, mi.positive.carrier)};
    for (auto& l : D.web->labels) D.Q.push_back(basis_vec(D.web, mi.positive.carrier, l));
    D.q_certified = true;
    return D;
}

/// S X = D -o X; the web is {0..N-1} x |X| and the Q probes are
/// Diag tensor Q_X, which is the summability test itself.
inline SpaceRepr s_space(const SpaceRepr& X, const TruncCfg& cfg) {
    SpaceRepr S = linarrow_space(d_space(cfg.s_bound, X.model), X);
    S.name = "S" + X.name;
    return S;
}

// -- summability structure matrices ------------------------------------------

namespace detail {
inline int idx_of(const Label& l) { return static_cast<int>(l.left().index()); }
} // namespace detail

/// pi_i : S X -> X.
inline Mat pi_mat(int i, const SpaceRepr& X, int n) {
    Carrier c = X.pcr.carrier;
    if (i < 0 || i >= n) throw std::invalid_argument("pi_mat: index out of bounds");
    MatBuilder b(product_web(*base_web(static_cast<std::uint32_t>(n)), *X.web), X.web, c);
    for (auto& a : X.web->labels)
        b.set(Label::pair(Label::atom(static_cast<std::uint32_t>(i)), a), a, one(c));
    return b.build();
}

/// sigma : S X -> X, the sum. Columns are never exact: a column gathers
/// every index, and truncation cut the indices at N.
inline Mat sigma_mat(const SpaceRepr& X, int n) {
    Carrier c = X.pcr.carrier;
    MatBuilder b(product_web(*base_web(static_cast<std::uint32_t>(n)), *X.web), X.web, c);
    for (int i = 0; i < n; ++i)
        for (auto& a : X.web->labels)
            b.set(Label::pair(Label::atom(static_cast<std::uint32_t>(i)), a), a, one(c));
    return b.build(cert_all(), cert_none());
}

/// iota_i : X -> S X.
inline Mat iota_mat(int i, const SpaceRepr& X, int n) {
    if (i < 0 || i >= n) throw std::invalid_argument("iota_mat: index out of bounds");
    Carrier c = X.pcr.carrier;
    MatBuilder b(X.web, product_web(*base_web(static_cast<std::uint32_t>(n)), *X.web), c);
    for (auto& a : X.web->labels)
        b.set(a, Label::pair(Label::atom(static_cast<std::uint32_t>(i)), a), one(c));
    return b.build();
}

/// tau : S S X -> S X, Cauchy sum of indices. A row (i,(j,a)) is exact
/// only while i + j survives the bound.
inline Mat tau_mat(const SpaceRepr& X, int n) {
    Carrier c = X.pcr.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    auto sweb = product_web(*dweb, *X.web);
    auto ssweb = product_web(*dweb, *sweb);
    MatBuilder b(ssweb, sweb, c);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i + j >= n) continue;
            for (auto& a : X.web->labels)
                b.set(Label::pair(Label::atom(static_cast<std::uint32_t>(i)),
                                  Label::pair(Label::atom(static_cast<std::uint32_t>(j)), a)),
                      Label::pair(Label::atom(static_cast<std::uint32_t>(i + j)), a), one(c));
        }
    CertFn row = [n](const Label& l) {
        return detail::idx_of(l) + detail::idx_of(l.right()) <= n - 1;
    };
    return b.build(row, cert_all());
}

/// theta : S X -> S S X, the diagonal lift.
inline Mat theta_mat(const SpaceRepr& X, int n) {
    Carrier c = X.pcr.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    auto sweb = product_web(*dweb, *X.web);
    MatBuilder b(sweb, product_web(*dweb, *sweb), c);
    for (int i = 0; i < n; ++i)
        for (auto& a : X.web->labels) {
            Label ia = Label::pair(Label::atom(static_cast<std::uint32_t>(i)), a);
            b.set(ia, Label::pair(Label::atom(static_cast<std::uint32_t>(i)), ia), one(c));
        }
    return b.build();
}

/// c : S S X -> S S X, index swap.
inline Mat sswap_mat(const SpaceRepr& X, int n) {
    Carrier c = X.pcr.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    auto ssweb = product_web(*dweb, *product_web(*dweb, *X.web));
    MatBuilder b(ssweb, ssweb, c);
    for (auto& l : ssweb->labels) {
        Label i = l.left(), j = l.right().left(), a = l.right().right();
        b.set(l, Label::pair(j, Label::pair(i, a)), one(c));
    }
    return b.build();
}

/// phiR : S X (x) Y -> S (X (x) Y) and phiL : X (x) S Y -> S (X (x) Y).
inline Mat strength_r_mat(const SpaceRepr& X, const SpaceRepr& Y, int n) {
    Carrier c = X.pcr.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    auto dom = product_web(*product_web(*dweb, *X.web), *Y.web);
    auto cod = product_web(*dweb, *product_web(*X.web, *Y.web));
    MatBuilder b(dom, cod, c);
    for (auto& l : dom->labels) {
        Label i = l.left().left(), a = l.left().right(), y = l.right();
        b.set(l, Label::pair(i, Label::pair(a, y)), one(c));
    }
    return b.build();
}

inline Mat strength_l_mat(const SpaceRepr& X, const SpaceRepr& Y, int n) {
    Carrier c = X.pcr.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    auto dom = product_web(*X.web, *product_web(*dweb, *Y.web));
    auto cod = product_web(*dweb, *product_web(*X.web, *Y.web));
    MatBuilder b(dom, cod, c);
    for (auto& l : dom->labels) {
        Label a = l.left(), i = l.right().left(), y = l.right().right();
        b.set(l, Label::pair(i, Label::pair(a, y)), one(c));
    }
    return b.build();
}

/// psi : S X (x) S Y -> S (X (x) Y), the lax monoidal Cauchy mix.
inline Mat lax_psi_mat(const SpaceRepr& X, const SpaceRepr& Y, int n) {
    Carrier c = X.pcr.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    auto dom = product_web(*product_web(*dweb, *X.web), *product_web(*dweb, *Y.web));
    auto cod = product_web(*dweb, *product_web(*X.web, *Y.web));
    MatBuilder b(dom, cod, c);
    for (auto& l : dom->labels) {
        int i = detail::idx_of(l.left());
        int j = detail::idx_of(l.right());
        if (i + j >= n) continue;
        Label a = l.left().right(), y = l.right().right();
        b.set(l, Label::pair(Label::atom(static_cast<std::uint32_t>(i + j)), Label::pair(a, y)),
              one(c));
    }
    CertFn row = [n](const Label& l) {
        return detail::idx_of(l.left()) + detail::idx_of(l.right()) <= n - 1;
    };
    return b.build(row, cert_all());
}

/// with_iso : S X & S Y -> S (X & Y), inverse is its transpose.
inline Mat with_iso_mat(const SpaceRepr& X, const SpaceRepr& Y, int n) {
    Carrier c = X.pcr.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    auto sx = product_web(*dweb, *X.web);
    auto sy = product_web(*dweb, *Y.web);
    auto dom = tagged_web({sx, sy});
    auto xy = tagged_web({X.web, Y.web});
    auto cod = product_web(*dweb, *xy);
    MatBuilder b(dom, cod, c);
    for (auto& l : dom->labels) {
        Label ia = l.inner();
        b.set(l, Label::pair(ia.left(), Label::tag(l.index(), ia.right())), one(c));
    }
    return b.build();
}

// -- the D-side bimonoid ------------------------------------------------------

/// mbar : D (x) D -> D, Kronecker diagonal.
inline Mat mbar_mat(int n, const std::string& model) {
    Carrier c = model_info(model).positive.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    MatBuilder b(product_web(*dweb, *dweb), dweb, c);
    for (auto& l : dweb->labels) b.set(Label::pair(l, l), l, one(c));
    return b.build();
}

/// cbar : D -> D (x) D, index comultiplication n -> sum of (i, j) with
/// i + j = n. A column (i,j) is exact while i + j survives the bound.
inline Mat cbar_mat(int n, const std::string& model) {
    Carrier c = model_info(model).positive.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    MatBuilder b(dweb, product_web(*dweb, *dweb), c);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i <= k; ++i)
            b.set(Label::atom(static_cast<std::uint32_t>(k)),
                  Label::pair(Label::atom(static_cast<std::uint32_t>(i)),
                              Label::atom(static_cast<std::uint32_t>(k - i))),
                  one(c));
    CertFn col = [n](const Label& l) {
        return static_cast<int>(l.left().index() + l.right().index()) <= n - 1;
    };
    return b.build(cert_all(), col);
}

/// pbar_i : D -> 1.
inline Mat dproj_mat(int i, int n, const std::string& model) {
    Carrier c = model_info(model).positive.carrier;
    MatBuilder b(base_web(static_cast<std::uint32_t>(n)), unit_web(), c);
    b.set(Label::atom(static_cast<std::uint32_t>(i)), Label::unit(), one(c));
    return b.build();
}

/// The diagonal as a morphism 1 -> D (the monoid unit). Its single row is
/// never exact: the untruncated diagonal hits every index.
inline Mat ddiag_mat(int n, const std::string& model) {
    Carrier c = model_info(model).positive.carrier;
    MatBuilder b(unit_web(), base_web(static_cast<std::uint32_t>(n)), c);
    for (int i = 0; i < n; ++i)
        b.set(Label::unit(), Label::atom(static_cast<std::uint32_t>(i)), one(c));
    return b.build(cert_none(), cert_all());
}

/// The basis iota_i as a morphism 1 -> D.
inline Mat dbasis_mat(int i, int n, const std::string& model) {
    Carrier c = model_info(model).positive.carrier;
    MatBuilder b(unit_web(), base_web(static_cast<std::uint32_t>(n)), c);
    b.set(Label::unit(), Label::atom(static_cast<std::uint32_t>(i)), one(c));
    return b.build();
}

/// S on linear maps: (Sf)_{(i,a),(j,b)} = [i=j] f_{a,b}.
inline Mat s_functor_mat(const Mat& f, int n) {
    Carrier c = f.carrier;
    auto dweb = base_web(static_cast<std::uint32_t>(n));
    WebPtr dom = f.dom ? product_web(*dweb, *f.dom) : nullptr;
    WebPtr cod = f.cod ? product_web(*dweb, *f.cod) : nullptr;
    MatBuilder b(dom, cod, c);
    for (int i = 0; i < n; ++i)
        for (auto& [a, row] : *f.rows)
            for (auto& [y, v] : row)
                b.set(Label::pair(Label::atom(static_cast<std::uint32_t>(i)), a),
                      Label::pair(Label::atom(static_cast<std::uint32_t>(i)), y), v);
    CertFn re = f.row_exact, ce = f.col_exact;
    return b.build([re](const Label& l) { return re(l.right()); },
                   [ce](const Label& l) { return ce(l.right()); });
}

/// Stacks a family (f_i : X -> Y) into its witness X -> S Y, the matrix
/// with pi_i . witness = f_i.
inline Mat witness_mat(const std::vector<Mat>& fs, const SpaceRepr& Y, int n) {
    if (fs.empty()) throw std::invalid_argument("witness_mat: empty family");
    if (static_cast<int>(fs.size()) > n)
        throw std::invalid_argument("witness_mat: family longer than the bound");
    Carrier c = fs.front().carrier;
    auto cod = product_web(*base_web(static_cast<std::uint32_t>(n)), *Y.web);
    MatBuilder b(fs.front().dom, cod, c);
    for (std::uint32_t i = 0; i < fs.size(); ++i)
        for (auto& [a, row] : *fs[i].rows)
            for (auto& [y, v] : row) b.set(a, Label::pair(Label::atom(i), y), v);
    std::vector<CertFn> res, ces;
    for (auto& f : fs) { res.push_back(f.row_exact); ces.push_back(f.col_exact); }
    CertFn row = [res](const Label& a) {
        for (auto& f : res)
            if (!f(a)) return false;
        return true;
    };
    std::size_t k = fs.size();
    CertFn col = [ces, k](const Label& iy) {
        std::size_t i = iy.left().index();
        return i >= k || ces[i](iy.right());
    };
    return b.build(row, col);
}

} // namespace rigweb
