#pragma once

// Law suites for the linear-logic structure: monoidal, closure,
// exponential, comonad, Seely, additives, and the membership sweep of
// every structural matrix. Included by suites.hpp.

namespace rigweb {

namespace detail {

inline void record_cmp(SuiteSink& sink, const std::string& id, const ValidCompare& cmp) {
    if (!cmp.equal) {
        sink.fail(id, cmp.witness);
        return;
    }
    sink.pass(id);
}

inline void record_partial_cmp(SuiteSink& sink, const std::string& id, const Partial<Mat>& lhs,
                               const Partial<Mat>& rhs) {
    if (!lhs.ok()) { sink.undef(id, lhs.why); return; }
    if (!rhs.ok()) { sink.undef(id, rhs.why); return; }
    record_cmp(sink, id, compare_on_valid(lhs.value(), rhs.value()));
}

} // namespace detail

inline SuiteReport run_ll_monoidal_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("ll.monoidal");
    samp::SpaceCtx ctx(samp::scenario_spaces(sc));
    auto& spaces = ctx.spaces;
    Carrier c = model_info(sc.model).positive.carrier;
    auto one = one_space(sc.model);

    for (int it = 0; it < std::max(1, sc.cases / 5); ++it) {
        std::size_t xi = rng.below(spaces.size());
        std::size_t yi = rng.below(spaces.size());
        std::size_t zi = rng.below(spaces.size());
        auto& X = spaces[xi];
        auto& Y = spaces[yi];
        auto& Z = spaces[zi];
        std::string tag = std::to_string(it);
        Vec x = samp::sample_point(X, rng);
        Vec y = samp::sample_point(Y, rng);
        Vec z = samp::sample_point(Z, rng);
        Vec r = samp::sample_point(one, rng);
        Scalar rs = r.at(Label::unit());

        auto lam = unitor_left(X);
        auto a1 = mat_apply(lam, tensor_vec(r, x));
        if (a1.ok())
            sink.check("unitor-left-action/" + tag, a1.value() == scale_vec(rs, x), "lambda");
        else
            sink.undef("unitor-left-action/" + tag, a1.why);

        auto rho = unitor_right(X);
        auto a2 = mat_apply(rho, tensor_vec(x, r));
        if (a2.ok())
            sink.check("unitor-right-action/" + tag, a2.value() == scale_vec(rs, x), "rho");
        else
            sink.undef("unitor-right-action/" + tag, a2.why);

        auto al = associator(X, Y, Z);
        auto a3 = mat_apply(al, tensor_vec(tensor_vec(x, y), z));
        if (a3.ok())
            sink.check("assoc-action/" + tag, a3.value() == tensor_vec(x, tensor_vec(y, z)),
                       "alpha");
        else
            sink.undef("assoc-action/" + tag, a3.why);

        auto sym = symmetry(X, Y);
        auto a4 = mat_apply(sym, tensor_vec(x, y));
        if (a4.ok())
            sink.check("symmetry-action/" + tag, a4.value() == tensor_vec(y, x), "gamma");
        else
            sink.undef("symmetry-action/" + tag, a4.why);

        // unitor isomorphisms
        detail::record_partial_cmp(sink, "unitor-left-iso/" + tag,
                                   compose(lam, transpose(lam)),
                                   Partial<Mat>::of(identity_mat(X.web, c)));
        detail::record_partial_cmp(sink, "unitor-right-iso/" + tag,
                                   compose(rho, transpose(rho)),
                                   Partial<Mat>::of(identity_mat(X.web, c)));
        detail::record_partial_cmp(sink, "symmetry-involution/" + tag,
                                   compose(symmetry(Y, X), sym),
                                   Partial<Mat>::of(identity_mat(product_web(*X.web, *Y.web), c)));

        // triangle
        auto tri_l = compose(tensor_mat(identity_mat(X.web, c), unitor_left(Y)),
                             associator(X, one, Y));
        detail::record_partial_cmp(
            sink, "triangle/" + tag, tri_l,
            Partial<Mat>::of(tensor_mat(unitor_right(X), identity_mat(Y.web, c))));

        // tensor of morphisms acts componentwise
        Mat s = ctx.hom(xi, yi).sample(rng);
        Mat t = ctx.hom(zi, zi).sample(rng);
        auto sx = mat_apply(s, x);
        auto tz = mat_apply(t, z);
        auto both = mat_apply(tensor_mat(s, t), tensor_vec(x, z));
        if (sx.ok() && tz.ok() && both.ok())
            sink.check("tensor-action/" + tag,
                       both.value() == tensor_vec(sx.value(), tz.value()), "(s@t).(x@z)");
        else if (!both.ok())
            sink.undef("tensor-action/" + tag, both.why);
    }

    // pentagon once per scenario on the two smallest spaces
    if (spaces.size() >= 2) {
        auto& A = spaces[0];
        auto& B = spaces[spaces.size() > 1 ? 1 : 0];
        auto lhs = compose(associator(A, B, tensor_space(A, B)),
                           associator(tensor_space(A, B), A, B));
        auto s1 = tensor_mat(associator(A, B, A), identity_mat(B.web, c));
        auto s2 = associator(A, tensor_space(B, A), B);
        auto s3 = tensor_mat(identity_mat(A.web, c), associator(B, A, B));
        auto rhs = compose(s3, compose(s2, s1).value());
        detail::record_partial_cmp(sink, "pentagon", lhs, rhs);
    }
    return sink.take();
}

inline SuiteReport run_ll_closure_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("ll.closure");
    samp::SpaceCtx ctx(samp::scenario_spaces(sc));
    auto& spaces = ctx.spaces;
    // tensor spaces are appended per pair on demand so their hom samplers
    // memoize like the rest
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> tensor_at;
    auto tensor_index = [&](std::size_t i, std::size_t j) {
        auto key = std::make_pair(i, j);
        auto it = tensor_at.find(key);
        if (it == tensor_at.end()) {
            ctx.spaces.push_back(tensor_space(ctx.spaces[i], ctx.spaces[j]));
            it = tensor_at.emplace(key, ctx.spaces.size() - 1).first;
        }
        return it->second;
    };
    Carrier c = model_info(sc.model).positive.carrier;
    std::size_t base_count = spaces.size();
    for (int it = 0; it < std::max(1, sc.cases / 5); ++it) {
        std::size_t xi = rng.below(base_count);
        std::size_t yi = rng.below(base_count);
        std::size_t zi = rng.below(base_count);
        std::size_t xyi = tensor_index(xi, yi);
        // copies: tensor_index may grow the vector and move the elements
        SpaceRepr X = spaces[xi];
        SpaceRepr Y = spaces[yi];
        SpaceRepr Z = spaces[zi];
        SpaceRepr XY = spaces[xyi];
        std::string tag = std::to_string(it);
        Mat s = ctx.hom(xyi, zi).sample(rng);
        auto cs = cur_mat(s, X, Y, Z);
        sink.check("cur-uncur/" + tag, uncur_mat(cs, X, Y, Z) == s, "reshape roundtrip");

        auto ev = eval_mat(Y, Z);
        auto beta = compose(ev, tensor_mat(cs, identity_mat(Y.web, c)));
        detail::record_partial_cmp(sink, "beta/" + tag, beta, Partial<Mat>::of(s));

        auto arrow = linarrow_space(Y, Z);
        sink.check("eta/" + tag, cur_mat(ev, arrow, Y, Z) == identity_mat(arrow.web, c),
                   "cur(ev)");

        Vec x = samp::sample_point(X, rng);
        Vec y = samp::sample_point(Y, rng);
        auto curx = mat_apply(cs, x);
        if (!curx.ok()) { sink.undef("cur-action/" + tag, curx.why); continue; }
        auto applied = mat_apply(vec_as_mat(curx.value(), Y.web, Z.web), y);
        auto direct = mat_apply(s, tensor_vec(x, y));
        if (applied.ok() && direct.ok())
            sink.check("cur-action/" + tag, applied.value() == direct.value(),
                       "(cur s . x) . y vs s . (x@y)");
        else if (!applied.ok())
            sink.undef("cur-action/" + tag, applied.why);
        else
            sink.undef("cur-action/" + tag, direct.why);

        // ev action: ev . (m (x) x) = m . x for a sampled morphism m
        Mat m = ctx.hom(xi, yi).sample(rng);
        auto arrow_xy = product_web(*X.web, *Y.web);
        auto mv = mat_as_vec(m, arrow_xy);
        auto evm = mat_apply(eval_mat(X, Y), tensor_vec(mv, x));
        auto mx = mat_apply(m, x);
        if (evm.ok() && mx.ok())
            sink.check("ev-action/" + tag, evm.value() == mx.value(), "ev . (s@x)");
        else if (!evm.ok())
            sink.undef("ev-action/" + tag, evm.why);
    }
    return sink.take();
}

inline SuiteReport run_ll_exponential_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("ll.exponential");
    samp::SpaceCtx ctx(samp::scenario_spaces(sc));
    auto& spaces = ctx.spaces;
    Carrier c = model_info(sc.model).positive.carrier;
    std::map<std::size_t, BangSpace> bangs;
    std::map<std::size_t, BangSpace> bang_bangs;
    auto bang_at = [&](std::size_t i) -> BangSpace& {
        auto it = bangs.find(i);
        if (it == bangs.end()) it = bangs.emplace(i, bang_space(spaces[i], sc.cfg)).first;
        return it->second;
    };
    auto bang_bang_at = [&](std::size_t i) -> BangSpace& {
        auto it = bang_bangs.find(i);
        if (it == bang_bangs.end())
            it = bang_bangs.emplace(i, bang_space(bang_at(i).space, sc.cfg)).first;
        return it->second;
    };
    for (int it = 0; it < std::max(1, sc.cases / 10); ++it) {
        std::size_t xi = rng.below(std::min<std::size_t>(spaces.size(), 4));
        std::size_t yi = rng.below(std::min<std::size_t>(spaces.size(), 4));
        auto& X = spaces[xi];
        std::string tag = std::to_string(it);
        auto& BX = bang_at(xi);
        auto& BY = bang_at(yi);
        if (!is_covering(BX.space.P, *BX.space.web)) {
            sink.fail("bang-covering/" + tag, "promotion generators fail the covering invariant");
            continue;
        }

        Vec x = samp::sample_point(X, rng);
        Vec xb = promote(x, BX);

        auto got = mat_apply(der_mat(BX), xb);
        if (got.ok())
            sink.check("der-action/" + tag, got.value() == x, "der . x^!");
        else
            sink.undef("der-action/" + tag, got.why);

        auto dig = dig_mat(BX);
        auto lhs = mat_apply(dig, xb);
        if (lhs.ok()) {
            auto& bb = bang_bang_at(xi);
            auto rhs = promote_unchecked(xb, bb.space.web);
            int compared = 0;
            bool ok = true;
            std::string wit;
            std::set<Label> keys;
            for (auto& [l, v] : lhs.value().entries) keys.insert(l);
            for (auto& [l, v] : rhs.entries) keys.insert(l);
            for (auto& l : keys) {
                if (!lhs.value().exact(l) || !bb.space.web->contains(l)) continue;
                ++compared;
                if (!(lhs.value().at(l) == rhs.at(l))) {
                    ok = false;
                    wit = "entry " + l.str();
                    break;
                }
            }
            sink.check("dig-action/" + tag, ok && (compared > 0 || xb.is_zero_vec()), wit);
        } else {
            sink.undef("dig-action/" + tag, lhs.why);
        }

        Mat s = ctx.hom(xi, yi).sample(rng);
        auto bs = bang_mat(s, BX, BY);
        if (!bs.ok()) { sink.undef("bang-action/" + tag, bs.why); continue; }
        auto lhs2 = mat_apply(bs.value(), xb);
        auto sx = mat_apply(s, x);
        if (lhs2.ok() && sx.ok()) {
            auto rhs2 = promote_unchecked(sx.value(), BY.space.web);
            auto cmp = compare_vec_on_valid(lhs2.value(), rhs2);
            sink.check("bang-action/" + tag, cmp.equal, cmp.witness);
        } else if (!lhs2.ok()) {
            sink.undef("bang-action/" + tag, lhs2.why);
        }

        // functoriality
        sink.check("bang-id/" + tag,
                   bang_mat(identity_mat(X.web, c), BX, BX).value() ==
                       identity_mat(BX.space.web, c),
                   "!id");
        Mat t = ctx.hom(yi, xi).sample(rng);
        auto ts = compose(t, s);
        if (ts.ok()) {
            auto lhs3 = bang_mat(ts.value(), BX, BX);
            auto bt = bang_mat(t, BY, BX);
            if (lhs3.ok() && bt.ok()) {
                auto rhs3 = compose(bt.value(), bs.value());
                detail::record_partial_cmp(sink, "bang-compose/" + tag, lhs3, rhs3);
            } else {
                sink.undef("bang-compose/" + tag, lhs3.ok() ? bt.why : lhs3.why);
            }
        } else {
            sink.undef("bang-compose/" + tag, ts.why);
        }
    }
    return sink.take();
}

inline SuiteReport run_ll_comonad_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("ll.comonad");
    auto spaces = samp::scenario_spaces(sc);
    Carrier c = model_info(sc.model).positive.carrier;
    std::size_t limit = std::min<std::size_t>(spaces.size(), 4);
    for (std::size_t si = 0; si < limit; ++si) {
        auto& X = spaces[si];
        std::string tag = X.name;
        auto BX = bang_space(X, sc.cfg);
        auto dig = dig_mat(BX);
        auto bb = bang_space(BX.space, sc.cfg);

        auto lhs = compose(der_mat(bb), dig);
        detail::record_partial_cmp(sink, "counit-left/" + tag, lhs,
                                   Partial<Mat>::of(identity_mat(BX.space.web, c)));

        auto bang_der = bang_mat(der_mat(BX), col_support(dig), nullptr, BX.space.web);
        if (bang_der.ok())
            detail::record_partial_cmp(sink, "counit-right/" + tag,
                                       compose(bang_der.value(), dig),
                                       Partial<Mat>::of(identity_mat(BX.space.web, c)));
        else
            sink.undef("counit-right/" + tag, bang_der.why);

        auto dig2 = dig_mat(bb, col_support(dig), sc.cfg.bang_degree);
        auto lhs3 = compose(dig2, dig);
        auto bang_dig = bang_mat(dig, col_support(dig), nullptr, nullptr);
        if (lhs3.ok() && bang_dig.ok()) {
            auto rhs3 = compose(bang_dig.value(), dig);
            detail::record_partial_cmp(sink, "coassoc/" + tag, lhs3, rhs3);
        } else {
            sink.undef("coassoc/" + tag, lhs3.ok() ? bang_dig.why : lhs3.why);
        }
    }
    (void)rng;
    return sink.take();
}

inline SuiteReport run_ll_seely_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("ll.seely");
    auto spaces = samp::scenario_spaces(sc);
    Carrier c = model_info(sc.model).positive.carrier;
    auto& X = spaces[0];
    auto& Y = spaces.size() > 1 ? spaces[1] : spaces[0];
    auto W = additive_space(AdditiveKind::With, {X, Y});
    auto BX = bang_space(X, sc.cfg);
    auto BY = bang_space(Y, sc.cfg);
    auto BW = bang_space(W, sc.cfg);

    auto s2 = seely2_mat(BX, BY, BW);
    auto s2i = seely2_inv_mat(BX, BY, BW);
    auto dom = product_web(*BX.space.web, *BY.space.web);
    detail::record_partial_cmp(sink, "seely2-left-inverse", compose(s2i, s2),
                               Partial<Mat>::of(identity_mat(dom, c)));
    detail::record_partial_cmp(sink, "seely2-right-inverse", compose(s2, s2i),
                               Partial<Mat>::of(identity_mat(BW.space.web, c)));

    auto T = top_space(sc.model);
    auto BT = bang_space(T, sc.cfg);
    auto s0 = seely0_mat(sc.model, BT);
    auto s0i = seely0_inv_mat(sc.model, BT);
    detail::record_partial_cmp(sink, "seely0-left-inverse", compose(s0i, s0),
                               Partial<Mat>::of(identity_mat(unit_web(), c)));
    detail::record_partial_cmp(sink, "seely0-right-inverse", compose(s0, s0i),
                               Partial<Mat>::of(identity_mat(BT.space.web, c)));
    {
        auto one = one_space(sc.model);
        Vec r = samp::sample_point(one, rng);
        auto got = mat_apply(s0, r);
        bool ok = got.ok() && got.value().at(Label::mset({})) == r.at(Label::unit());
        sink.check("seely0-action", ok, "seely0 . r");
    }

    for (int it = 0; it < std::max(1, sc.cases / 10); ++it) {
        std::string tag = std::to_string(it);
        Vec x = samp::sample_point(X, rng);
        Vec y = samp::sample_point(Y, rng);
        auto lhs = mat_apply(s2, tensor_vec(promote(x, BX), promote(y, BY)));
        if (!lhs.ok()) { sink.undef("seely2-action/" + tag, lhs.why); continue; }
        Vec paired = zero_vec(W.web, c);
        for (auto& [l, v] : x.entries) paired.set(Label::tag(0, l), v);
        for (auto& [l, v] : y.entries) paired.set(Label::tag(1, l), v);
        auto rhs = promote_unchecked(paired, BW.space.web);
        auto cmp = compare_vec_on_valid(lhs.value(), rhs);
        sink.check("seely2-action/" + tag, cmp.equal, cmp.witness);

        // and the inverse action: seely2^-1 . (<x,y>)^! = x^! (x) y^!
        auto back = mat_apply(s2i, rhs);
        if (back.ok()) {
            auto want = tensor_vec(promote(x, BX), promote(y, BY));
            auto cmp2 = compare_vec_on_valid(back.value(), want);
            sink.check("seely2-inv-action/" + tag, cmp2.equal, cmp2.witness);
        } else {
            sink.undef("seely2-inv-action/" + tag, back.why);
        }
    }

    // naturality sample: seely2 . (!f (x) !g) = !(f & g) . seely2
    samp::HomSampler hf = samp::HomSampler::make(X, X);
    samp::HomSampler hg = samp::HomSampler::make(Y, Y);
    for (int it = 0; it < 5; ++it) {
        Mat f = hf.sample(rng);
        Mat g = hg.sample(rng);
        auto bf = bang_mat(f, BX, BX);
        auto bg = bang_mat(g, BY, BY);
        if (!bf.ok() || !bg.ok()) {
            sink.undef("seely2-naturality/" + std::to_string(it), bf.ok() ? bg.why : bf.why);
            continue;
        }
        auto lhs = compose(s2, tensor_mat(bf.value(), bg.value()));
        auto fg = with_functor_mat(f, g, W.web, W.web);
        auto bfg = bang_mat(fg, BW, BW);
        if (!bfg.ok()) { sink.undef("seely2-naturality/" + std::to_string(it), bfg.why); continue; }
        auto rhs = compose(bfg.value(), s2);
        detail::record_partial_cmp(sink, "seely2-naturality/" + std::to_string(it), lhs, rhs);
    }
    return sink.take();
}

inline SuiteReport run_ll_additive_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("ll.additive");
    auto spaces = samp::scenario_spaces(sc);
    Carrier c = model_info(sc.model).positive.carrier;
    std::vector<SpaceRepr> parts = {spaces[0], spaces.size() > 1 ? spaces[1] : spaces[0]};
    auto plus = additive_space(AdditiveKind::Plus, parts);
    auto with = additive_space(AdditiveKind::With, parts);

    for (std::uint32_t i = 0; i < parts.size(); ++i)
        for (std::uint32_t j = 0; j < parts.size(); ++j) {
            auto comp = compose(proj_mat(parts, i, with.web), inj_mat(parts, j, with.web));
            if (!comp.ok()) { sink.undef("proj-inj", comp.why); continue; }
            bool want_id = i == j;
            bool got = want_id ? comp.value() == identity_mat(parts[i].web, c)
                               : comp.value().entry_count() == 0;
            sink.check("proj-inj/" + std::to_string(i) + std::to_string(j), got, "Kronecker");
        }

    // injected points are points of the plus; plus points sit inside with
    int strict = 0;
    for (int it = 0; it < sc.cases; ++it) {
        std::uint32_t i = static_cast<std::uint32_t>(rng.below(parts.size()));
        Vec xi = samp::sample_point(parts[i], rng);
        auto inj = mat_apply(inj_mat(parts, i, plus.web), xi);
        if (!inj.ok()) { sink.undef("inj-point", inj.why); continue; }
        sink.check("inj-point/" + std::to_string(it),
                   !member_point(plus, inj.value()).refuted(), "injected point refuted");

        Vec v = zero_vec(plus.web, c);
        auto pool = samp::carrier_pool(c);
        for (auto& l : plus.web->labels)
            if (rng.chance(1, 2)) v.set(l, rng.pick(pool));
        bool in_plus = !member_point(plus, v).refuted();
        bool in_with = !member_point(with, v).refuted();
        if (in_plus && !in_with)
            sink.fail("plus-in-with/" + std::to_string(it), "plus point outside with");
        else
            sink.pass("plus-in-with/" + std::to_string(it));
        if (in_with && !in_plus) ++strict;

        // with-membership is componentwise: v is a point iff every
        // projection is
        bool componentwise = true;
        for (std::uint32_t i = 0; i < parts.size(); ++i) {
            auto pv = mat_apply(proj_mat(parts, i, with.web), v);
            if (!pv.ok() || member_point(parts[i], pv.value()).refuted()) componentwise = false;
        }
        sink.check("with-componentwise/" + std::to_string(it), in_with == componentwise,
                   "projections disagree with the with verdict");
    }
    if (!model_info(sc.model).total)
        sink.check("plus-strictly-inside-with", strict > 0,
                   "no separating vector sampled");
    return sink.take();
}

inline SuiteReport run_ll_membership_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("ll.membership");
    auto spaces = samp::scenario_spaces(sc);
    auto& X = spaces[0];
    auto& Y = spaces.size() > 1 ? spaces[1] : spaces[0];
    auto one = one_space(sc.model);
    auto BX = bang_space(X, sc.cfg);

    auto expect_hom = [&](const std::string& id, const SpaceRepr& A, const SpaceRepr& B,
                          const Mat& m) {
        auto v = member_hom(A, B, m);
        sink.check(id, !v.refuted(), v.witness);
        if (B.q_certified && !v.refuted())
            sink.check(id + "/certified", v.certified(), "expected a certified verdict");
    };

    expect_hom("unitor-left", tensor_space(one, X), X, unitor_left(X));
    expect_hom("unitor-right", tensor_space(X, one), X, unitor_right(X));
    expect_hom("symmetry", tensor_space(X, Y), tensor_space(Y, X), symmetry(X, Y));
    expect_hom("associator", tensor_space(tensor_space(X, Y), X),
               tensor_space(X, tensor_space(Y, X)), associator(X, Y, X));
    expect_hom("eval", tensor_space(linarrow_space(X, Y), X), Y, eval_mat(X, Y));
    expect_hom("der", BX.space, X, der_mat(BX));
    expect_hom("identity", X, X, identity_mat(X.web, X.pcr.carrier));
    expect_hom("zero", X, Y, zero_mat(X.web, Y.web, X.pcr.carrier));

    // dig lands in the bang of the bang
    auto bb = bang_space(BX.space, sc.cfg);
    auto vdig = member_hom(BX.space, bb.space, dig_mat(BX));
    sink.check("dig", !vdig.refuted(), vdig.witness);

    // end to end: certified composites stay certified
    samp::HomSampler hs = samp::HomSampler::make(X, Y);
    samp::HomSampler hs2 = samp::HomSampler::make(Y, X);
    for (int it = 0; it < std::max(1, sc.cases / 10); ++it) {
        Mat s = hs.sample(rng);
        Mat t = hs2.sample(rng);
        auto vs = member_hom(X, Y, s);
        auto vt = member_hom(Y, X, t);
        if (vs.refuted() || vt.refuted()) {
            sink.fail("sampled-morphism/" + std::to_string(it), "sampler produced a non-point");
            continue;
        }
        auto ts = compose(t, s);
        if (!ts.ok()) { sink.undef("compose/" + std::to_string(it), ts.why); continue; }
        auto v = member_hom(X, X, ts.value());
        sink.check("compose/" + std::to_string(it), !v.refuted(), v.witness);
        if (X.q_certified && vs.certified() && vt.certified())
            sink.check("compose-certified/" + std::to_string(it), v.certified(), "lost certification");
    }
    return sink.take();
}

} // namespace rigweb
