#pragma once

#include "rigweb/space.hpp"

namespace rigweb {

/// Desk-scale truncation bounds: multiset degree for the exponential web,
/// index bound for the summability web.
struct TruncCfg {
    int bang_degree = 2;
    int s_bound = 2;
};

// -- multiplicative and additive space constructors ---------------------------

inline SpaceRepr one_space(const std::string& model) {
    const ModelInfo& mi = model_info(model);
    SpaceRepr X;
    X.model = model;
    X.pcr = mi.positive;
    X.web = unit_web();
    X.name = "1";
    Vec e = basis_vec(X.web, mi.positive.carrier, Label::unit());
    X.P = {e};
    X.Q = {e};
    X.q_certified = true;
    return X;
}

inline SpaceRepr bot_space(const std::string& model) {
    SpaceRepr X = dual(one_space(model));
    X.name = "bot";
    return X;
}

inline SpaceRepr top_space(const std::string& model) {
    const ModelInfo& mi = model_info(model);
    SpaceRepr X;
    X.model = model;
    X.pcr = mi.positive;
    X.web = empty_web();
    X.name = "top";
    X.P = {zero_vec(X.web, mi.positive.carrier)};
    X.Q = {zero_vec(X.web, mi.positive.carrier)};
    X.q_certified = true;
    return X;
}

/// Tensor of spaces: generators tensor pairwise. The Q side is only a
/// sound probe set in general (no finite dual predual for a tensor is
/// known); total models stay certified since every vector is a point.
inline SpaceRepr tensor_space(const SpaceRepr& X, const SpaceRepr& Y) {
    if (X.model != Y.model) throw std::invalid_argument("tensor_space: model mismatch");
    SpaceRepr T;
    T.model = X.model;
    T.pcr = X.pcr;
    T.web = product_web(*X.web, *Y.web);
    T.name = "(" + X.name + "*" + Y.name + ")";
    for (auto& p : X.P)
        for (auto& p2 : Y.P) T.P.push_back(tensor_vec(p, p2));
    for (auto& q : X.Q)
        for (auto& q2 : Y.Q) T.Q.push_back(tensor_vec(q, q2));
    T.q_certified = model_info(X.model).total && X.q_certified && Y.q_certified;
    return T;
}

/// X -o Y as dual(X tensor dual(Y)). Its Q generators are P_X tensor Q_Y,
/// so member_hom against them is the predual morphism test; the space
/// flag itself stays conservative (certified only on total models).
inline SpaceRepr linarrow_space(const SpaceRepr& X, const SpaceRepr& Y) {
    SpaceRepr A = dual(tensor_space(X, dual(Y)));
    A.name = "(" + X.name + "-o" + Y.name + ")";
    return A;
}

/// Additive spaces. For `with`, Q embeds componentwise and P sums one
/// generator per component; for `plus` the roles swap. The plus side is
/// certified on total models and whenever exhaustive verification at
/// micro scale can settle it (finite carriers, small webs); `with` is
/// certified when all components are.
enum class AdditiveKind { With, Plus };

inline SpaceRepr additive_space(AdditiveKind kind, const std::vector<SpaceRepr>& parts) {
    if (parts.empty()) throw std::invalid_argument("additive_space: give the model via top_space for empty");
    SpaceRepr A;
    A.model = parts.front().model;
    A.pcr = parts.front().pcr;
    Carrier c = A.pcr.carrier;
    std::vector<WebPtr> webs;
    bool all_cert = true;
    for (auto& p : parts) {
        if (p.model != A.model) throw std::invalid_argument("additive_space: model mismatch");
        webs.push_back(p.web);
        all_cert = all_cert && p.q_certified;
    }
    A.web = tagged_web(webs);
    A.name = (kind == AdditiveKind::With ? "&(" : "+(");
    for (auto& p : parts) A.name += p.name + ",";
    A.name += ")";

    auto embed = [&](std::uint32_t i, const Vec& v) {
        Vec out = zero_vec(A.web, c);
        for (auto& [l, val] : v.entries) out.set(Label::tag(i, l), val);
        return out;
    };
    auto combos = [&](bool from_p) {
        // one generator from each component, summed (supports are disjoint)
        std::vector<Vec> out;
        std::vector<std::size_t> idx(parts.size(), 0);
        while (true) {
            Vec acc = zero_vec(A.web, c);
            for (std::uint32_t i = 0; i < parts.size(); ++i) {
                const auto& gens = from_p ? parts[i].P : parts[i].Q;
                if (!gens.empty())
                    for (auto& [l, val] : gens[idx[i]].entries) acc.set(Label::tag(i, l), val);
            }
            out.push_back(std::move(acc));
            std::size_t k = 0;
            for (; k < parts.size(); ++k) {
                const auto& gens = from_p ? parts[k].P : parts[k].Q;
                if (++idx[k] < std::max<std::size_t>(gens.size(), 1)) break;
                idx[k] = 0;
            }
            if (k == parts.size()) break;
        }
        return out;
    };

    if (kind == AdditiveKind::With) {
        for (std::uint32_t i = 0; i < parts.size(); ++i)
            for (auto& q : parts[i].Q) A.Q.push_back(embed(i, q));
        A.P = combos(true);
        A.q_certified = all_cert;
    } else {
        for (std::uint32_t i = 0; i < parts.size(); ++i)
            for (auto& p : parts[i].P) A.P.push_back(embed(i, p));
        A.Q = combos(false);
        if (model_info(A.model).total) {
            A.q_certified = all_cert;
        } else if (all_cert && A.pcr.carrier == Carrier::NonnegRat &&
                   A.pcr.ball == PcrInstance::Ball::UnitInterval) {
            // pcoh: <x, sum inj q_i> = sum_i <x_i, q_i>, so orth(Q) is the
            // unit ball of the summed component norms, which is biorth(P).
            A.q_certified = true;
        } else if (all_cert && (c == Carrier::Bool || c == Carrier::FinBool ||
                                c == Carrier::Coherence) &&
                   A.web->size() <= 10) {
            SpaceRepr probe = A;
            probe.q_certified = false;
            A.q_certified = verify_certification(probe);
        } else {
            A.q_certified = false;
        }
    }
    return A;
}

/// Injection matrix X_i -> plus-web (also the section of proj_i).
inline Mat inj_mat(const std::vector<SpaceRepr>& parts, std::uint32_t i, const WebPtr& sum_web) {
    Carrier c = parts.at(i).pcr.carrier;
    MatBuilder b(parts[i].web, sum_web, c);
    for (auto& l : parts[i].web->labels) b.set(l, Label::tag(i, l), one(c));
    return b.build();
}

inline Mat proj_mat(const std::vector<SpaceRepr>& parts, std::uint32_t i, const WebPtr& sum_web) {
    Carrier c = parts.at(i).pcr.carrier;
    MatBuilder b(sum_web, parts[i].web, c);
    for (auto& l : parts[i].web->labels) b.set(Label::tag(i, l), l, one(c));
    return b.build();
}

// -- the truncated exponential ------------------------------------------------

/// A bang space remembers how it was built: admissibility witnesses and
/// the degree bound, so matrices over it can reason about truncation.
struct BangSpace {
    SpaceRepr space;
    SpaceRepr base;
    int degree = 0;
};

/// (x^!)_m = product of x_a over m, on the truncated web.
inline Vec promote_unchecked(const Vec& x, const WebPtr& bang_web) {
    Vec out = zero_vec(bang_web, x.carrier);
    for (auto& m : bang_web->labels) {
        Scalar acc = one(x.carrier);
        bool zero_hit = false;
        for (auto& a : m.kids()) {
            Scalar v = x.at(a);
            if (v.is_zero()) { zero_hit = true; break; }
            acc = mul(acc, v);
        }
        if (!zero_hit) out.set(m, acc);
    }
    return out;
}

namespace detail {

inline bool invertible_on_support(const Vec& w, const Label& m) {
    for (auto& a : mset_support(m))
        if (!is_invertible(w.at(a))) return false;
    return true;
}

/// Admissibility witnesses for multisets: vectors v such that a multiset
/// is in the web iff some v is invertible on its support, each paired
/// with the number of P generators summed into it. Exact for the finite
/// carriers by full point enumeration (cliques, for coherence); for the
/// others, the closure of P under defined pairwise sums -- supports of
/// actual points for every built-in model, by convexity (pcoh) or
/// totality.
inline std::vector<std::pair<Vec, int>> admissibility_witnesses(const SpaceRepr& X) {
    Carrier c = X.pcr.carrier;
    if ((c == Carrier::Bool || c == Carrier::FinBool || c == Carrier::Coherence) &&
        X.web->size() <= 12) {
        auto universe = enumerate_vectors(X.web, c);
        auto porth = orth_set(X.pcr, universe, X.P);
        std::vector<std::pair<Vec, int>> out;
        for (auto& v : orth_set(X.pcr, universe, porth)) out.emplace_back(v, 1);
        return out; // exactly the points
    }
    std::vector<std::pair<Vec, int>> out;
    for (auto& p : X.P) out.emplace_back(p, 1);
    auto grow = [&]() {
        std::vector<std::pair<Vec, int>> fresh;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i; j < out.size(); ++j) {
                auto s = add_vecs({out[i].first, out[j].first});
                if (!s.ok()) continue;
                bool dup = false;
                for (auto& [v, k] : out)
                    if (v == s.value()) { dup = true; break; }
                for (auto& [v, k] : fresh)
                    if (v == s.value()) { dup = true; break; }
                if (!dup) fresh.emplace_back(std::move(*s.val), out[i].second + out[j].second);
            }
        bool grew = !fresh.empty();
        for (auto& v : fresh) out.push_back(std::move(v));
        return grew;
    };
    for (int round = 0; round < 3 && out.size() < 200; ++round)
        if (!grow()) break;
    return out;
}

/// Turns an admissibility witness into an honest point with the same
/// invertibility pattern: identity on total models and finite carriers,
/// the convex combination (1/k) * (sum of k point generators) for pcoh.
inline Vec witness_point(const SpaceRepr& X, const Vec& w, int count) {
    if (X.pcr.carrier == Carrier::NonnegRat && X.pcr.ball == PcrInstance::Ball::UnitInterval &&
        count > 1)
        return scale_vec(make_scalar(X.pcr.carrier, Rat(1, count)), w);
    return w;
}

} // namespace detail

/// Web of !X at degree <= d: multisets whose support admits an invertible
/// point, per the model's exact rule. Outside the Coherence carrier every
/// finite sum is defined, so summing covering generators (convexly
/// rescaled where the ball bites) always yields a point invertible on any
/// support: every multiset is admissible and only the coherence carrier
/// needs its witness enumeration.
inline BangSpace bang_space(const SpaceRepr& X, const TruncCfg& cfg) {
    bool coherent = X.pcr.carrier == Carrier::Coherence;
    std::vector<std::pair<Vec, int>> witnesses;
    if (coherent) witnesses = detail::admissibility_witnesses(X);
    auto keep = [&](const Label& m) {
        if (!coherent || m.kids().empty()) return true;
        for (auto& [w, k] : witnesses)
            if (detail::invertible_on_support(w, m)) return true;
        return false;
    };
    BangSpace B;
    B.base = X;
    B.degree = cfg.bang_degree;
    SpaceRepr& S = B.space;
    S.model = X.model;
    S.pcr = X.pcr;
    S.web = make_web(multisets_upto(X.web->labels, cfg.bang_degree, keep));
    S.name = "!" + X.name;
    // promotion generators: P itself plus point-rescaled witnesses (the
    // full covering sum, outside coherence), so the covering invariant
    // holds on the whole bang web
    std::vector<Vec> gens = X.P;
    if (coherent) {
        for (auto& [w, k] : witnesses) {
            Vec p = detail::witness_point(X, w, k);
            bool dup = false;
            for (auto& g : gens)
                if (g == p) { dup = true; break; }
            if (!dup) gens.push_back(p);
        }
    } else if (!X.P.empty()) {
        auto total = add_vecs(X.P);
        if (total.ok())
            gens.push_back(detail::witness_point(X, total.value(),
                                                 static_cast<int>(X.P.size())));
    }
    for (auto& g : gens) S.P.push_back(promote_unchecked(g, S.web));
    // sound probes: basis vectors (point-entry products stay in the ball
    // for every built-in model) and Q pushed through the dereliction
    for (auto& m : S.web->labels) S.Q.push_back(basis_vec(S.web, X.pcr.carrier, m));
    for (auto& q : X.Q) {
        Vec der_q = zero_vec(S.web, X.pcr.carrier);
        for (auto& [a, v] : q.entries) {
            Label m = Label::mset({a});
            if (S.web->contains(m)) der_q.set(m, v);
        }
        S.Q.push_back(std::move(der_q));
    }
    S.q_certified = model_info(X.model).total && X.q_certified;
    return B;
}

/// Promotion of a checked point (probe mode allowed on uncertified spaces).
inline Vec promote(const Vec& x, const BangSpace& B) {
    auto verdict = member_point(B.base, x);
    if (verdict.refuted())
        throw std::invalid_argument("promote: vector refuted as a point: " + verdict.witness);
    return promote_unchecked(x, B.space.web);
}

// -- structural matrices ------------------------------------------------------

/// last unitor/associator/symmetry/closure matrices are pure Kronecker
/// relabelings; they stay exact under truncation.

inline Mat unitor_left(const SpaceRepr& X) { // 1 (x) X -> X
    Carrier c = X.pcr.carrier;
    MatBuilder b(product_web(*unit_web(), *X.web), X.web, c);
    for (auto& a : X.web->labels) b.set(Label::pair(Label::unit(), a), a, one(c));
    return b.build();
}

inline Mat unitor_right(const SpaceRepr& X) { // X (x) 1 -> X
    Carrier c = X.pcr.carrier;
    MatBuilder b(product_web(*X.web, *unit_web()), X.web, c);
    for (auto& a : X.web->labels) b.set(Label::pair(a, Label::unit()), a, one(c));
    return b.build();
}

inline Mat associator(const SpaceRepr& X, const SpaceRepr& Y, const SpaceRepr& Z) {
    Carrier c = X.pcr.carrier;
    auto lhs = product_web(*product_web(*X.web, *Y.web), *Z.web);
    auto rhs = product_web(*X.web, *product_web(*Y.web, *Z.web));
    MatBuilder b(lhs, rhs, c);
    for (auto& a : X.web->labels)
        for (auto& y : Y.web->labels)
            for (auto& z : Z.web->labels)
                b.set(Label::pair(Label::pair(a, y), z), Label::pair(a, Label::pair(y, z)), one(c));
    return b.build();
}

inline Mat symmetry(const SpaceRepr& X, const SpaceRepr& Y) {
    Carrier c = X.pcr.carrier;
    MatBuilder b(product_web(*X.web, *Y.web), product_web(*Y.web, *X.web), c);
    for (auto& a : X.web->labels)
        for (auto& y : Y.web->labels) b.set(Label::pair(a, y), Label::pair(y, a), one(c));
    return b.build();
}

inline Mat eval_mat(const SpaceRepr& X, const SpaceRepr& Y) { // (X -o Y) (x) X -> Y
    Carrier c = X.pcr.carrier;
    auto arrow = product_web(*X.web, *Y.web);
    MatBuilder b(product_web(*arrow, *X.web), Y.web, c);
    for (auto& a : X.web->labels)
        for (auto& y : Y.web->labels)
            b.set(Label::pair(Label::pair(a, y), a), y, one(c));
    return b.build();
}

/// cur(s) for s : X (x) Y -> Z is the reshaping X -> (Y -o Z).
inline Mat cur_mat(const Mat& s, const SpaceRepr& X, const SpaceRepr& Y, const SpaceRepr& Z) {
    auto arrow = product_web(*Y.web, *Z.web);
    MatBuilder b(X.web, arrow, s.carrier);
    for (auto& [ab, row] : *s.rows)
        for (auto& [z, v] : row)
            b.set(ab.left(), Label::pair(ab.right(), z), v);
    CertFn re = s.row_exact, ce = s.col_exact;
    // entry (a,(b,c)) mirrors ((a,b),c); a row here gathers several rows
    // of s, so certify it only when all of them were exact
    auto srows = s.rows;
    CertFn row2 = [srows, re](const Label& a) {
        for (auto& [ab, row] : *srows)
            if (ab.left() == a && !re(ab)) return false;
        return true;
    };
    CertFn col2 = [ce](const Label& bc) { return ce(bc.right()); };
    return b.build(row2, col2);
}

inline Mat uncur_mat(const Mat& s, const SpaceRepr& X, const SpaceRepr& Y, const SpaceRepr& Z) {
    // inverse reshape: X -> (Y -o Z) becomes X (x) Y -> Z
    auto dom = product_web(*X.web, *Y.web);
    MatBuilder b(dom, Z.web, s.carrier);
    for (auto& [a, row] : *s.rows)
        for (auto& [bc, v] : row)
            b.set(Label::pair(a, bc.left()), bc.right(), v);
    CertFn re = s.row_exact;
    auto scols = s.cols;
    CertFn ce = s.col_exact;
    CertFn row2 = [re](const Label& ab) { return re(ab.left()); };
    CertFn col2 = [scols, ce](const Label& c) {
        for (auto& [bc, col] : *scols)
            if (bc.right() == c && !ce(bc)) return false;
        return true;
    };
    return b.build(row2, col2);
}

/// der : !X -> X, supported on singleton multisets.
inline Mat der_mat(const BangSpace& BX) {
    Carrier c = BX.base.pcr.carrier;
    MatBuilder b(BX.space.web, BX.base.web, c);
    for (auto& a : BX.base.web->labels) {
        Label m = Label::mset({a});
        if (BX.space.web->contains(m)) b.set(m, a, one(c));
    }
    bool deg_ok = BX.degree >= 1;
    return b.build(cert_all(), [deg_ok](const Label&) { return deg_ok; });
}

/// dig : !X -> !!X with entries [m = sum M]. Rows can never be exact (a
/// row has arbitrarily padded columns in the untruncated web); a column M
/// is exact iff its unique row sum(M) survived truncation. Built over the
/// given rows; the codomain web is left implicit.
inline Mat dig_mat(const BangSpace& BX, const std::vector<Label>& rows, int outer_degree) {
    Carrier c = BX.base.pcr.carrier;
    MatBuilder b(BX.space.web, nullptr, c);
    auto web = BX.space.web;
    auto built = std::make_shared<std::set<Label>>(rows.begin(), rows.end());
    for (auto& m : rows) {
        for (int k = 0; k <= outer_degree; ++k) {
            for (auto& parts : mset_partitions_into(m, k)) {
                // parts may include empties only while the outer degree allows
                bool ok = true;
                for (auto& part : parts)
                    if (!web->contains(part)) { ok = false; break; }
                if (!ok) continue;
                b.set(m, Label::mset(parts), one(c));
            }
        }
    }
    CertFn col = [built, web](const Label& M) {
        std::vector<Label> all;
        for (auto& part : M.kids()) {
            if (!web->contains(part)) return false;
            all.insert(all.end(), part.kids().begin(), part.kids().end());
        }
        Label sum = Label::mset(all);
        return web->contains(sum) && built->count(sum) > 0;
    };
    return b.build(cert_none(), col);
}

inline Mat dig_mat(const BangSpace& BX) {
    return dig_mat(BX, BX.space.web->labels, BX.degree);
}

/// Functorial action (!t)_{m,[b...]} = sum over enumerations of m of
/// entry products, built over the given rows. Columns land in cod_web
/// when provided (the truncated target bang web), else stay implicit.
inline Partial<Mat> bang_mat(const Mat& t, const std::vector<Label>& rows, WebPtr dom_web,
                             WebPtr cod_web) {
    Carrier c = t.carrier;
    MatBuilder b(dom_web, cod_web, c);
    auto built = std::make_shared<std::set<Label>>(rows.begin(), rows.end());
    for (auto& m : rows) {
        // candidate codomain multisets from the sparse rows of t
        std::vector<Label> cands;
        {
            std::vector<Label> cur;
            auto rec = [&](auto&& self, std::size_t pos) -> void {
                if (pos == m.kids().size()) {
                    cands.push_back(Label::mset(cur));
                    return;
                }
                auto ri = t.rows->find(m.kids()[pos]);
                if (ri == t.rows->end()) return;
                for (auto& [bb, v] : ri->second) {
                    cur.push_back(bb);
                    self(self, pos + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        }
        auto perms = mset_enumerations(m);
        for (auto& p : cands) {
            if (cod_web && !cod_web->contains(p)) continue;
            const auto& bs = p.kids(); // fixed enumeration of the column
            std::vector<Scalar> terms;
            for (auto& as : perms) {
                Scalar prod = one(c);
                bool dead = false;
                for (std::size_t i = 0; i < as.size(); ++i) {
                    Scalar v = t.at(as[i], bs[i]);
                    if (v.is_zero()) { dead = true; break; }
                    prod = mul(prod, v);
                }
                if (!dead) terms.push_back(prod);
            }
            SumOutcome o = try_sum(c, terms);
            if (!o.defined)
                return Partial<Mat>::undef("bang entry (" + m.str() + ";" + p.str() + ")");
            b.set(m, p, o.sum);
        }
    }
    CertFn tre = t.row_exact, tce = t.col_exact;
    CertFn row = [built, tre](const Label& m) {
        if (!built->count(m)) return false;
        for (auto& a : m.kids())
            if (!tre(a)) return false;
        return true;
    };
    auto tcols = t.cols;
    CertFn col = [built, tcols, tce](const Label& p) {
        for (auto& bb : p.kids())
            if (!tce(bb)) return false;
        // every untruncated contributing row must have been built
        std::vector<Label> cur;
        bool ok = true;
        auto rec = [&](auto&& self, std::size_t pos) -> void {
            if (!ok) return;
            if (pos == p.kids().size()) {
                if (!built->count(Label::mset(cur))) ok = false;
                return;
            }
            auto ci = tcols->find(p.kids()[pos]);
            if (ci == tcols->end()) return;
            for (auto& [aa, v] : ci->second) {
                cur.push_back(aa);
                self(self, pos + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return ok;
    };
    return Partial<Mat>::of(b.build(row, col));
}

inline Partial<Mat> bang_mat(const Mat& t, const BangSpace& from, const BangSpace& to) {
    return bang_mat(t, from.space.web->labels, from.space.web, to.space.web);
}

/// seely0 : 1 -> !top (both webs are singletons).
inline Mat seely0_mat(const std::string& model, const BangSpace& Btop) {
    Carrier c = model_info(model).positive.carrier;
    MatBuilder b(unit_web(), Btop.space.web, c);
    b.set(Label::unit(), Label::mset({}), one(c));
    return b.build();
}

inline Mat seely0_inv_mat(const std::string& model, const BangSpace& Btop) {
    return transpose(seely0_mat(model, Btop));
}

namespace detail {
inline Label mix_multiset(const Label& m1, const Label& m2) {
    std::vector<Label> elems;
    for (auto& a : m1.kids()) elems.push_back(Label::tag(0, a));
    for (auto& b : m2.kids()) elems.push_back(Label::tag(1, b));
    return Label::mset(std::move(elems));
}
} // namespace detail

/// seely2 : !X (x) !Y -> !(X & Y), the Kronecker on m = 1*m1 + 2*m2.
/// A row (m1, m2) is exact iff the mixed multiset survived truncation.
inline Mat seely2_mat(const BangSpace& BX, const BangSpace& BY, const BangSpace& BXY) {
    Carrier c = BX.base.pcr.carrier;
    auto dom = product_web(*BX.space.web, *BY.space.web);
    MatBuilder b(dom, BXY.space.web, c);
    for (auto& m1 : BX.space.web->labels)
        for (auto& m2 : BY.space.web->labels) {
            Label mixed = detail::mix_multiset(m1, m2);
            if (BXY.space.web->contains(mixed))
                b.set(Label::pair(m1, m2), mixed, one(c));
        }
    auto codweb = BXY.space.web;
    CertFn row = [codweb](const Label& mm) {
        return codweb->contains(detail::mix_multiset(mm.left(), mm.right()));
    };
    auto w1 = BX.space.web;
    auto w2 = BY.space.web;
    CertFn col = [w1, w2](const Label& m) {
        std::vector<Label> k1, k2;
        for (auto& e : m.kids())
            (e.index() == 0 ? k1 : k2).push_back(e.inner());
        return w1->contains(Label::mset(k1)) && w2->contains(Label::mset(k2));
    };
    return b.build(row, col);
}

inline Mat seely2_inv_mat(const BangSpace& BX, const BangSpace& BY, const BangSpace& BXY) {
    return transpose(seely2_mat(BX, BY, BXY));
}

/// Pairing matrix <f, g> : X -> Y1 & Y2 and the componentwise functor
/// f & g : X1 & X2 -> Y1 & Y2.
inline Mat pairing_mat(const Mat& f, const Mat& g, const WebPtr& with_web) {
    MatBuilder b(f.dom, with_web, f.carrier);
    for (auto& [a, row] : *f.rows)
        for (auto& [y, v] : row) b.set(a, Label::tag(0, y), v);
    for (auto& [a, row] : *g.rows)
        for (auto& [y, v] : row) b.set(a, Label::tag(1, y), v);
    CertFn fre = f.row_exact, gre = g.row_exact, fce = f.col_exact, gce = g.col_exact;
    return b.build([fre, gre](const Label& a) { return fre(a) && gre(a); },
                   [fce, gce](const Label& ty) {
                       return ty.index() == 0 ? fce(ty.inner()) : gce(ty.inner());
                   });
}

inline Mat with_functor_mat(const Mat& f, const Mat& g, const WebPtr& dom_with,
                            const WebPtr& cod_with) {
    MatBuilder b(dom_with, cod_with, f.carrier);
    for (auto& [a, row] : *f.rows)
        for (auto& [y, v] : row) b.set(Label::tag(0, a), Label::tag(0, y), v);
    for (auto& [a, row] : *g.rows)
        for (auto& [y, v] : row) b.set(Label::tag(1, a), Label::tag(1, y), v);
    CertFn fre = f.row_exact, gre = g.row_exact, fce = f.col_exact, gce = g.col_exact;
    return b.build(
        [fre, gre](const Label& ta) { return ta.index() == 0 ? fre(ta.inner()) : gre(ta.inner()); },
        [fce, gce](const Label& ty) { return ty.index() == 0 ? fce(ty.inner()) : gce(ty.inner()); });
}

} // namespace rigweb
