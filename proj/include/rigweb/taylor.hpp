#pragma once

#include "rigweb/summability.hpp"

namespace rigweb {

inline std::vector<Label> col_support(const Mat& m) {
    std::vector<Label> out;
    for (auto& [c, col] : *m.cols) out.push_back(c);
    return out;
}

/// The analytic coalgebra hbar : D -> !D, entries [i = sum of the
/// multiset indices]. Rows are never exact (index-zero padding escapes
/// any degree bound); a column m is exact iff its index sum is in range.
inline Mat hbar_mat(const BangSpace& BD, int n) {
    Carrier c = BD.base.pcr.carrier;
    MatBuilder b(BD.base.web, BD.space.web, c);
    for (auto& m : BD.space.web->labels) {
        int sum = 0;
        for (auto& e : m.kids()) sum += static_cast<int>(e.index());
        if (sum < n) b.set(Label::atom(static_cast<std::uint32_t>(sum)), m, one(c));
    }
    CertFn col = [n](const Label& m) {
        int sum = 0;
        for (auto& e : m.kids()) sum += static_cast<int>(e.index());
        return sum <= n - 1;
    };
    return b.build(cert_none(), col);
}

/// The canonical coalgebra on the tensor unit, 1 -> !1: the promotion of
/// the unit point, an all-ones row.
inline Mat one_coalgebra_mat(const BangSpace& Bone) {
    Carrier c = Bone.base.pcr.carrier;
    MatBuilder b(unit_web(), Bone.space.web, c);
    for (auto& m : Bone.space.web->labels) b.set(Label::unit(), m, one(c));
    return b.build(cert_none(), cert_all());
}

/// A morphism of the !-Kleisli category: a matrix !X -o Y together with
/// the spaces, bang web and membership verdict it was checked against.
struct KleisliMor {
    SpaceRepr X, Y;
    BangSpace BX;
    Mat mat; // |!X| -> |Y|
    TruncCfg cfg;
    MembershipVerdict verdict{MembershipVerdict::Kind::ProbeSound, 0, ""};
};

inline KleisliMor make_kleisli(const SpaceRepr& X, const SpaceRepr& Y, const BangSpace& BX,
                               const Mat& m, const TruncCfg& cfg) {
    KleisliMor k{X, Y, BX, m, cfg, {MembershipVerdict::Kind::ProbeSound, 0, ""}};
    k.verdict = carrier_is_absolute(m.carrier) ? member_semimod_hom(BX.space, Y, m)
                                               : member_hom(BX.space, Y, m);
    return k;
}

/// The canonical functor from linear maps: f becomes f . der.
inline Partial<Mat> der_functor_mat(const Mat& f, const BangSpace& BX) {
    return compose(f, cast_mat(der_mat(BX), f.carrier));
}

namespace detail {
inline std::vector<Label> sub_multisets(const Label& m) {
    std::vector<Label> out;
    std::size_t k = m.kids().size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        std::vector<Label> sub;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1u) sub.push_back(m.kids()[i]);
        out.push_back(Label::mset(sub));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}
} // namespace detail

/// Kleisli composition t . !s . dig; the middle bang matrix is built
/// lazily over the columns the digging actually reaches.
///
/// The generic certificate propagation cannot see that digging a row m
/// only reaches partitions of m, whose parts are sub-multisets of m and
/// therefore inside the truncated web. With that argument the composite
/// row m is exact whenever s is exact on the sub-multisets of m and t is
/// exact on every row it can reach, which the returned certificate
/// encodes directly.
inline Partial<Mat> kleisli_bang_compose(const Mat& t, const Mat& s, const BangSpace& BX,
                                         const BangSpace& BY) {
    Mat dig = cast_mat(dig_mat(BX), s.carrier);
    auto bang_s = bang_mat(s, col_support(dig), nullptr, BY.space.web);
    if (!bang_s.ok()) return Partial<Mat>::undef(bang_s.why);
    auto mid = compose(bang_s.value(), dig);
    if (!mid.ok()) return Partial<Mat>::undef(mid.why);
    auto out = compose(t, mid.value());
    if (!out.ok()) return out;
    CertFn sre = s.row_exact;
    CertFn tre = t.row_exact;
    auto mid_rows = mid.value().rows;
    CertFn row = [sre, tre, mid_rows](const Label& m) {
        for (auto& u : detail::sub_multisets(m))
            if (!sre(u)) return false;
        auto ri = mid_rows->find(m);
        if (ri != mid_rows->end())
            for (auto& [z, v] : ri->second)
                if (!tre(z)) return false;
        return true;
    };
    Mat fixed = out.value();
    fixed.row_exact = row;
    return Partial<Mat>::of(std::move(fixed));
}

/// Kleisli composition of the S-monad: tau . Sg . f, the Cauchy product
/// of the power series f : X -> S Y and g : Y -> S Z.
inline Partial<Mat> kleisli_s_compose(const Mat& g, const Mat& f, const SpaceRepr& Z, int n) {
    auto sg = s_functor_mat(g, n);
    auto mid = compose(sg, f);
    if (!mid.ok()) return Partial<Mat>::undef(mid.why);
    return compose(cast_mat(tau_mat(Z, n), f.carrier), mid.value());
}

/// Lax monoidal structure of the exponential,
///   m2 : !A (x) !B -> !(A (x) B),
/// assembled from its definition: seely2, dig, !(seely2^-1) and
/// !(der (x) der), with every primitive cast into the requested carrier
/// first (module coefficients must accumulate real multiplicities, not
/// collapse in the boolean positive carrier). The Seely stage mixes the
/// two degrees, so the intermediate bang web is truncated at their sum;
/// every bang stage is built over the rows the previous stage reaches.
inline Partial<Mat> lax_bang_monoidal(const SpaceRepr& A, const SpaceRepr& B, const BangSpace& BA,
                                      const BangSpace& BB, const BangSpace& BAB,
                                      const TruncCfg& cfg, Carrier mc) {
    SpaceRepr W = additive_space(AdditiveKind::With, {A, B});
    TruncCfg mixed = cfg;
    mixed.bang_degree = 2 * cfg.bang_degree;
    BangSpace BW = bang_space(W, mixed);
    Mat s2 = cast_mat(seely2_mat(BA, BB, BW), mc);
    Mat dg = cast_mat(dig_mat(BW, col_support(s2), cfg.bang_degree), mc);
    auto c1 = compose(dg, s2);
    if (!c1.ok()) return Partial<Mat>::undef(c1.why);
    Mat s2inv = cast_mat(seely2_inv_mat(BA, BB, BW), mc);
    auto bang_s2inv = bang_mat(s2inv, col_support(c1.value()), nullptr, nullptr);
    if (!bang_s2inv.ok()) return Partial<Mat>::undef(bang_s2inv.why);
    auto c2 = compose(bang_s2inv.value(), c1.value());
    if (!c2.ok()) return Partial<Mat>::undef(c2.why);
    Mat ders = cast_mat(tensor_mat(der_mat(BA), der_mat(BB)), mc);
    auto bang_ders = bang_mat(ders, col_support(c2.value()), nullptr, BAB.space.web);
    if (!bang_ders.ok()) return Partial<Mat>::undef(bang_ders.why);
    return compose(bang_ders.value(), c2.value());
}

/// Closed form of the Taylor functor on a Kleisli matrix s : !X -o Y:
///   (T s)_{[(i1,a1)..(ik,ak)], (j,b)} =
///       [i1+..+ik = j] * (m! / rho!) * s_{m, b},   m = [a1..ak].
/// The integer ratio goes through nat_embed; entries it cannot realize
/// (possible only in the Coherence carrier) are recorded, not silently
/// dropped into zeros.
struct TaylorBuild {
    Mat mat;
    std::vector<std::string> undefined_entries;
};

inline TaylorBuild taylor_closed_mat(const Mat& s, const BangSpace& BSX, const SpaceRepr& Y,
                                     int n) {
    Carrier c = s.carrier;
    auto sy_web = product_web(*base_web(static_cast<std::uint32_t>(n)), *Y.web);
    MatBuilder b(BSX.space.web, sy_web, c);
    std::vector<std::string> undef;
    for (auto& rho : BSX.space.web->labels) {
        int j = 0;
        std::vector<Label> proj;
        for (auto& e : rho.kids()) {
            j += static_cast<int>(e.left().index());
            proj.push_back(e.right());
        }
        if (j >= n) continue;
        Label m = Label::mset(proj);
        auto ri = s.rows->find(m);
        if (ri == s.rows->end()) continue;
        unsigned long long ratio = mset_factorial(m) / mset_factorial(rho);
        SumOutcome k = nat_embed(c, ratio);
        for (auto& [y, v] : ri->second) {
            if (!k.defined) {
                undef.push_back("(" + rho.str() + ";(" + std::to_string(j) + "," + y.str() + "))");
                continue;
            }
            b.set(rho, Label::pair(Label::atom(static_cast<std::uint32_t>(j)), y), mul(k.sum, v));
        }
    }
    CertFn sre = s.row_exact;
    CertFn row = [n, sre](const Label& rho) {
        int j = 0;
        std::vector<Label> proj;
        for (auto& e : rho.kids()) {
            j += static_cast<int>(e.left().index());
            proj.push_back(e.right());
        }
        return j <= n - 1 && sre(Label::mset(proj));
    };
    auto scols = s.cols;
    CertFn sce = s.col_exact;
    auto bsweb = BSX.space.web;
    CertFn col = [scols, sce, bsweb, n](const Label& jy) {
        if (!sce(jy.right())) return false;
        int j = static_cast<int>(jy.left().index());
        auto ci = scols->find(jy.right());
        if (ci == scols->end()) return true;
        for (auto& [m, v] : ci->second) {
            // every index assignment of m with sum j must have survived
            std::vector<Label> cur;
            bool ok = true;
            auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
                if (!ok) return;
                if (pos == m.kids().size()) {
                    if (left == 0 && !bsweb->contains(Label::mset(cur))) ok = false;
                    return;
                }
                for (int i = 0; i <= left && i < n; ++i) {
                    cur.push_back(Label::pair(Label::atom(static_cast<std::uint32_t>(i)),
                                              m.kids()[pos]));
                    self(self, pos + 1, left - i);
                    cur.pop_back();
                }
            };
            rec(rec, 0, j);
            if (!ok) return false;
        }
        return true;
    };
    return {b.build(row, col), std::move(undef)};
}

/// The same functor assembled from the analytic coalgebra and the LL
/// matrices: T s = cur( s . !ev . m2 . (!(S X) (x) hbar) ). The closed
/// form above must agree with this composite wherever both are exact.
///
/// Precondition: s is the whole morphism (zero beyond its support), not a
/// truncation. Then every contribution the truncated pipeline drops
/// routes through an s-row above the bang degree, which is zero, so the
/// composite is exact at every row whose index sum survives the bound.
inline Partial<Mat> taylor_composite_mat(const Mat& s, const SpaceRepr& X, const SpaceRepr& SX,
                                         const BangSpace& BSX, const SpaceRepr& Y,
                                         const TruncCfg& cfg) {
    int n = cfg.s_bound;
    Carrier mc = s.carrier;
    SpaceRepr D = d_space(n, X.model);
    BangSpace BD = bang_space(D, cfg);
    Mat hb = cast_mat(hbar_mat(BD, n), mc);
    Mat id_bsx = identity_mat(BSX.space.web, mc);
    Mat start = tensor_mat(id_bsx, hb); // !(SX) (x) D -> !(SX) (x) !D
    SpaceRepr TX = tensor_space(SX, D); // web of SX (x) D
    BangSpace BTX = bang_space(TX, cfg);
    auto m2 = lax_bang_monoidal(SX, D, BSX, BD, BTX, cfg, mc);
    if (!m2.ok()) return Partial<Mat>::undef(m2.why);
    auto c1 = compose(m2.value(), start);
    if (!c1.ok()) return Partial<Mat>::undef(c1.why);
    Mat ev = cast_mat(eval_mat(D, X), mc); // (D -o X) (x) D -> X, SX = D -o X
    auto bang_ev = bang_mat(ev, col_support(c1.value()), nullptr, s.dom);
    if (!bang_ev.ok()) return Partial<Mat>::undef(bang_ev.why);
    auto c2 = compose(bang_ev.value(), c1.value());
    if (!c2.ok()) return Partial<Mat>::undef(c2.why);
    auto u = compose(s, c2.value()); // !(SX) (x) D -> Y
    if (!u.ok()) return Partial<Mat>::undef(u.why);
    // curry: (rho, i) rows become rho with column (i, b)
    auto sy_web = product_web(*base_web(static_cast<std::uint32_t>(n)), *Y.web);
    MatBuilder b(BSX.space.web, sy_web, mc);
    for (auto& [ri, row] : *u.value().rows)
        for (auto& [y, v] : row)
            b.set(ri.left(), Label::pair(ri.right(), y), v);
    CertFn row = [n](const Label& rho) {
        int j = 0;
        for (auto& e : rho.kids()) j += static_cast<int>(e.left().index());
        return j <= n - 1;
    };
    return Partial<Mat>::of(b.build(row, cert_none()));
}

/// Applies the Taylor matrix of f to the promotion of an interleaved
/// sequence of inputs and splits the result into degree components.
inline Partial<std::vector<Vec>> taylor_apply_series(const Mat& taylor, const BangSpace& BSX,
                                                     const SpaceRepr& Y,
                                                     const std::vector<Vec>& xs, int n) {
    auto sx_web = BSX.base.web;
    Vec xi = zero_vec(sx_web, taylor.carrier);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (auto& [a, v] : xs[i].entries)
            xi.set(Label::pair(Label::atom(static_cast<std::uint32_t>(i)), a), v);
    Vec prom = promote_unchecked(xi, BSX.space.web);
    auto out = mat_apply(taylor, prom);
    if (!out.ok()) return Partial<std::vector<Vec>>::undef(out.why);
    std::vector<Vec> comps;
    for (int j = 0; j < n; ++j) {
        Vec cj = zero_vec(Y.web, taylor.carrier);
        for (auto& [jy, v] : out.value().entries)
            if (static_cast<int>(jy.left().index()) == j) cj.set(jy.right(), v);
        comps.push_back(std::move(cj));
    }
    return Partial<std::vector<Vec>>::of(std::move(comps));
}

} // namespace rigweb
