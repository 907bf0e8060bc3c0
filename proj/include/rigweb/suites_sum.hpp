#pragma once

// Law suites for the summability structure: the S-sum axioms, the bimonad
// characterizations, the D bimonoid, and representability. Included by
// suites.hpp.

namespace rigweb {

inline SuiteReport run_sum_ss_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("sum.ss");
    int n = sc.cfg.s_bound;
    Carrier c = model_info(sc.model).positive.carrier;
    auto spaces = samp::scenario_spaces(sc);
    auto& X = spaces[0];
    auto& Y = spaces.size() > 1 ? spaces[1] : spaces[0];
    auto D = d_space(n, sc.model);
    auto SY = s_space(Y, sc.cfg);

    sink.check("d-coverings", is_covering(D.P, *D.web) && is_covering(D.Q, *D.web),
               "D generators fail the covering invariant");

    // truncated factorization: sum of iota_i . pi_i is the identity
    {
        std::vector<Mat> pieces;
        bool all_ok = true;
        for (int i = 0; i < n; ++i) {
            auto p = compose(iota_mat(i, X, n), pi_mat(i, X, n));
            if (!p.ok()) { all_ok = false; break; }
            pieces.push_back(p.value());
        }
        auto total = all_ok ? add_mats(pieces) : Partial<Mat>::undef("piece undefined");
        auto SX = s_space(X, sc.cfg);
        if (total.ok())
            sink.check("factorization", total.value() == identity_mat(SX.web, c),
                       "sum of iota.pi is not the identity");
        else
            sink.undef("factorization", total.why);
    }

    // joint monicity probed on witnesses: if all projections agree, the
    // stacked matrices agree
    auto hs = samp::HomSampler::make(X, Y);
    for (int it = 0; it < std::max(1, sc.cases / 5); ++it) {
        std::string tag = std::to_string(it);
        std::vector<Mat> fam, fam2;
        for (int i = 0; i < n; ++i) {
            fam.push_back(hs.sample(rng));
            fam2.push_back(fam.back());
        }
        auto w1 = witness_mat(fam, Y, n);
        auto w2 = witness_mat(fam2, Y, n);
        bool proj_agree = true;
        for (int i = 0; i < n; ++i) {
            auto p1 = compose(pi_mat(i, Y, n), w1);
            auto p2 = compose(pi_mat(i, Y, n), w2);
            if (!p1.ok() || !p2.ok() || !(p1.value() == p2.value())) proj_agree = false;
        }
        sink.check("joint-monic/" + tag, !proj_agree || w1 == w2, "witnesses differ");

        // roundtrip: projections recover components, sigma gives the sum
        bool recovered = true;
        for (int i = 0; i < n; ++i) {
            auto back = compose(pi_mat(i, Y, n), w1);
            if (!back.ok() || !(back.value() == fam[static_cast<std::size_t>(i)]))
                recovered = false;
        }
        sink.check("witness-roundtrip/" + tag, recovered, "projection lost a component");
        auto via_sigma = compose(sigma_mat(Y, n), w1);
        auto direct = add_mats(fam);
        if (via_sigma.ok() && direct.ok())
            detail::record_cmp(sink, "witness-sum/" + tag,
                               compare_on_valid(via_sigma.value(), direct.value()));
        else if (!via_sigma.ok())
            sink.undef("witness-sum/" + tag, via_sigma.why);
        else
            sink.undef("witness-sum/" + tag, direct.why);

        // summability through the predual: the witness is a morphism into
        // S Y exactly when the pointwise sum pairs into the ball
        auto v = member_hom(X, SY, w1);
        bool pair_ok = true;
        if (direct.ok()) {
            auto vsum = member_hom(X, Y, direct.value());
            pair_ok = !vsum.refuted();
        } else {
            pair_ok = false;
        }
        sink.check("summability-predual/" + tag, v.refuted() == !pair_ok,
                   std::string("witness ") + (v.refuted() ? "refuted" : "accepted") +
                       ", pointwise sum " + (pair_ok ? "in" : "out"));
    }

    // a family of points is summable iff the pointwise sum pairs into the
    // ball against every dual generator
    for (int it = 0; it < std::max(1, sc.cases / 5); ++it) {
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(samp::sample_point(Y, rng));
        auto sum = add_vecs(pts);
        bool summable_decl = false;
        if (sum.ok()) {
            summable_decl = true;
            for (auto& q : Y.Q)
                if (!orth_rel(Y.pcr, sum.value(), q)) summable_decl = false;
        }
        bool member = sum.ok() && !member_point(Y, sum.value()).refuted();
        sink.check("pointwise-summable/" + std::to_string(it), summable_decl == member,
                   "predual test disagrees with membership");
    }
    return sink.take();
}

inline SuiteReport run_sum_bimonad_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("sum.bimonad");
    int n = sc.cfg.s_bound;
    Carrier c = model_info(sc.model).positive.carrier;
    auto spaces = samp::scenario_spaces(sc);
    auto& X = spaces[0];
    auto SX = s_space(X, sc.cfg);
    auto tau = tau_mat(X, n);
    auto theta = theta_mat(X, n);
    auto cswap = sswap_mat(X, n);
    auto id_sx = identity_mat(SX.web, c);

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto comp = compose(pi_mat(j, X, n), iota_mat(i, X, n));
            if (!comp.ok()) { sink.undef("pi-iota", comp.why); continue; }
            bool good = (i == j) ? comp.value() == identity_mat(X.web, c)
                                 : comp.value().entry_count() == 0;
            sink.check("pi-iota/" + std::to_string(i) + std::to_string(j), good, "Kronecker");
        }
        auto unary = compose(sigma_mat(X, n), iota_mat(i, X, n));
        if (unary.ok())
            sink.check("sigma-iota/" + std::to_string(i),
                       unary.value() == identity_mat(X.web, c), "unary sum");
        else
            sink.undef("sigma-iota/" + std::to_string(i), unary.why);

        // tau characterization
        auto lhs = compose(pi_mat(i, X, n), tau);
        std::vector<Mat> pieces;
        for (int j = 0; j <= i; ++j) {
            auto inner = compose(pi_mat(i - j, X, n), pi_mat(j, SX, n));
            if (inner.ok()) pieces.push_back(inner.value());
        }
        auto rhs = add_mats(pieces);
        if (lhs.ok() && rhs.ok())
            detail::record_cmp(sink, "tau-char/" + std::to_string(i),
                               compare_on_valid(lhs.value(), rhs.value()));
        else
            sink.undef("tau-char/" + std::to_string(i), lhs.ok() ? rhs.why : lhs.why);

        for (int j = 0; j < n; ++j) {
            auto th = compose(pi_mat(i, X, n), compose(pi_mat(j, SX, n), theta).value());
            if (!th.ok()) { sink.undef("theta-char", th.why); continue; }
            bool good = (i == j) ? th.value() == pi_mat(i, X, n) : th.value().entry_count() == 0;
            sink.check("theta-char/" + std::to_string(i) + std::to_string(j), good, "diagonal");

            auto sw = compose(pi_mat(i, X, n), compose(pi_mat(j, SX, n), cswap).value());
            auto direct = compose(pi_mat(j, X, n), pi_mat(i, SX, n));
            if (sw.ok() && direct.ok())
                sink.check("swap-char/" + std::to_string(i) + std::to_string(j),
                           sw.value() == direct.value(), "index swap");
        }
    }

    // monad and comonad laws
    detail::record_partial_cmp(sink, "monad-unit-left", compose(tau, iota_mat(0, SX, n)),
                               Partial<Mat>::of(id_sx));
    detail::record_partial_cmp(sink, "monad-unit-right",
                               compose(tau, s_functor_mat(iota_mat(0, X, n), n)),
                               Partial<Mat>::of(id_sx));
    detail::record_partial_cmp(sink, "monad-assoc", compose(tau, s_functor_mat(tau, n)),
                               compose(tau, tau_mat(SX, n)));
    detail::record_partial_cmp(sink, "comonad-counit-left", compose(sigma_mat(SX, n), theta),
                               Partial<Mat>::of(id_sx));
    detail::record_partial_cmp(sink, "comonad-counit-right",
                               compose(s_functor_mat(sigma_mat(X, n), n), theta),
                               Partial<Mat>::of(id_sx));
    detail::record_partial_cmp(sink, "comonad-coassoc", compose(theta_mat(SX, n), theta),
                               compose(s_functor_mat(theta, n), theta));

    // swap is a distributive law between the two: check the mixed law
    // tau . S sigma = sigma . tau at SS X against the swap route
    detail::record_partial_cmp(sink, "swap-involution", compose(cswap, cswap),
                               Partial<Mat>::of(identity_mat(cswap.dom, c)));
    (void)rng;
    return sink.take();
}

inline SuiteReport run_sum_bimonoid_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("sum.bimonoid");
    int n = sc.cfg.s_bound;
    std::string model = sc.model;
    Carrier c = model_info(model).positive.carrier;
    auto D = d_space(n, model);
    auto dd = product_web(*D.web, *D.web);
    auto mb = mbar_mat(n, model);
    auto cb = cbar_mat(n, model);
    auto id_d = identity_mat(D.web, c);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto pairm = tensor_mat(dbasis_mat(i, n, model), dbasis_mat(j, n, model));
            auto comp = compose(mb, pairm);
            if (!comp.ok()) { sink.undef("mbar-char", comp.why); continue; }
            bool good = (i == j)
                            ? comp.value().entry_count() == 1 &&
                                  comp.value().at(Label::pair(Label::unit(), Label::unit()),
                                                  Label::atom(static_cast<std::uint32_t>(i))) ==
                                      one(c)
                            : comp.value().entry_count() == 0;
            sink.check("mbar-char/" + std::to_string(i) + std::to_string(j), good, "Kronecker");
        }

    for (int k = 0; k < n; ++k) {
        auto comp = compose(cb, dbasis_mat(k, n, model));
        if (!comp.ok()) { sink.undef("cbar-char", comp.why); continue; }
        bool good = comp.value().entry_count() == static_cast<std::size_t>(k + 1);
        for (int i = 0; i <= k && good; ++i)
            good = comp.value().at(Label::unit(),
                                   Label::pair(Label::atom(static_cast<std::uint32_t>(i)),
                                               Label::atom(static_cast<std::uint32_t>(k - i)))) ==
                   one(c);
        sink.check("cbar-char/" + std::to_string(k), good, "antidiagonal");
    }

    auto lam = [&]() {
        MatBuilder b(product_web(*unit_web(), *D.web), D.web, c);
        for (auto& l : D.web->labels) b.set(Label::pair(Label::unit(), l), l, one(c));
        return b.build();
    }();
    detail::record_partial_cmp(sink, "monoid-unit", compose(mb, tensor_mat(ddiag_mat(n, model), id_d)),
                               Partial<Mat>::of(lam));
    detail::record_partial_cmp(sink, "comonoid-counit",
                               compose(tensor_mat(dproj_mat(0, n, model), id_d), cb),
                               Partial<Mat>::of(transpose(lam)));

    MatBuilder symb(dd, dd, c);
    for (auto& l : dd->labels) symb.set(l, Label::pair(l.right(), l.left()), one(c));
    auto sym = symb.build();
    detail::record_partial_cmp(sink, "commutative", compose(mb, sym), Partial<Mat>::of(mb));
    detail::record_partial_cmp(sink, "cocommutative", compose(sym, cb), Partial<Mat>::of(cb));

    // associativity and coassociativity (rebracketed)
    auto ddd_l = product_web(*dd, *D.web);
    auto ddd_r = product_web(*D.web, *dd);
    MatBuilder ab(ddd_l, ddd_r, c);
    for (auto& l : ddd_l->labels)
        ab.set(l, Label::pair(l.left().left(), Label::pair(l.left().right(), l.right())), one(c));
    auto rebr = ab.build();
    {
        auto lhs = compose(mb, tensor_mat(mb, id_d));
        auto rhs0 = compose(mb, tensor_mat(id_d, mb));
        auto rhs = rhs0.ok() ? compose(rhs0.value(), rebr) : rhs0;
        detail::record_partial_cmp(sink, "monoid-assoc", lhs, rhs);
    }
    {
        auto l1 = compose(tensor_mat(cb, id_d), cb);
        auto l2 = compose(tensor_mat(id_d, cb), cb);
        auto l1r = l1.ok() ? compose(rebr, l1.value()) : l1;
        detail::record_partial_cmp(sink, "comonoid-coassoc", l1r, l2);
    }

    // bimonoid compatibility: p0 . diag = id_1 and
    // cbar . mbar = (mbar (x) mbar) . mid-swap . (cbar (x) cbar)
    {
        auto pd = compose(dproj_mat(0, n, model), ddiag_mat(n, model));
        if (pd.ok())
            sink.check("counit-unit", pd.value() == identity_mat(unit_web(), c), "p0 . diag");
        else
            sink.undef("counit-unit", pd.why);
    }
    {
        auto lhs = compose(cb, mb);
        // (D (x) D) (x) (D (x) D) with the middle pair swapped
        auto d4 = product_web(*dd, *dd);
        MatBuilder swb(d4, d4, c);
        for (auto& l : d4->labels) {
            Label a = l.left().left(), b2 = l.left().right();
            Label e = l.right().left(), f = l.right().right();
            swb.set(l, Label::pair(Label::pair(a, e), Label::pair(b2, f)), one(c));
        }
        auto mid = swb.build();
        auto stage = compose(mid, tensor_mat(cb, cb));
        auto rhs = stage.ok() ? compose(tensor_mat(mb, mb), stage.value()) : stage;
        detail::record_partial_cmp(sink, "bimonoid-compat", lhs, rhs);
    }

    // the mate shadow: pi_i rebuilt from the representable definition
    auto spaces = samp::scenario_spaces(sc);
    auto& X = spaces[0];
    auto SX = s_space(X, sc.cfg);
    MatBuilder rb(SX.web, product_web(*SX.web, *unit_web()), c);
    for (auto& l : SX.web->labels) rb.set(l, Label::pair(l, Label::unit()), one(c));
    auto rho_inv = rb.build();
    auto ev = eval_mat(D, X);
    bool mate_ok = true;
    std::string mate_wit;
    for (int i = 0; i < n; ++i) {
        auto stage = compose(tensor_mat(identity_mat(SX.web, c), dbasis_mat(i, n, model)), rho_inv);
        auto built = stage.ok() ? compose(ev, stage.value()) : stage;
        if (!built.ok() || !(built.value() == pi_mat(i, X, n))) {
            mate_ok = false;
            mate_wit = "pi_" + std::to_string(i);
        }
    }
    sink.check("mate-shadow-pi", mate_ok, mate_wit);
    {
        auto stage = compose(tensor_mat(identity_mat(SX.web, c), ddiag_mat(n, model)), rho_inv);
        auto built = stage.ok() ? compose(ev, stage.value()) : stage;
        if (built.ok())
            detail::record_cmp(sink, "mate-shadow-sigma",
                               compare_on_valid(built.value(), sigma_mat(X, n)));
        else
            sink.undef("mate-shadow-sigma", built.why);
    }

    // iterated diagonal: points of D (x) D are biorth of the big diagonal;
    // probe from inside orth(Diag)
    {
        auto DD = tensor_space(D, D);
        bool ok = true;
        std::string wit;
        for (int it = 0; it < std::max(1, sc.cases / 4) && ok; ++it) {
            Vec v = samp::sample_point(DD, rng);
            if (member_point(DD, v).refuted()) { ok = false; wit = "sampled point refuted"; }
            for (auto& q : DD.Q)
                if (!orth_rel(DD.pcr, v, q)) { ok = false; wit = "point escapes a probe"; }
        }
        sink.check("iterated-diagonal", ok, wit);
    }
    return sink.take();
}

inline SuiteReport run_sum_representable_suite(const Scenario& sc, Rng& rng) {
    SuiteSink sink("sum.representable");
    int n = sc.cfg.s_bound;
    std::string model = sc.model;
    Carrier c = model_info(model).positive.carrier;
    auto spaces = samp::scenario_spaces(sc);
    auto& X = spaces[0];
    auto& Y = spaces.size() > 1 ? spaces[1] : spaces[0];
    auto D = d_space(n, model);

    auto rho_inv = [&](const WebPtr& web) {
        MatBuilder b(web, product_web(*web, *unit_web()), c);
        for (auto& l : web->labels) b.set(l, Label::pair(l, Label::unit()), one(c));
        return b.build();
    };

    auto hs = samp::HomSampler::make(X, Y);
    for (int it = 0; it < std::max(1, sc.cases / 10); ++it) {
        std::string tag = std::to_string(it);
        // k = 1
        std::vector<Mat> fam;
        for (int i = 0; i < n; ++i) fam.push_back(hs.sample(rng));
        MatBuilder hb(product_web(*X.web, *D.web), Y.web, c);
        for (int i = 0; i < n; ++i)
            for (auto& [a, row] : *fam[static_cast<std::size_t>(i)].rows)
                for (auto& [y, v] : row)
                    hb.set(Label::pair(a, Label::atom(static_cast<std::uint32_t>(i))), y, v);
        auto h = hb.build();
        bool recover = true;
        auto idx = identity_mat(X.web, c);
        for (int i = 0; i < n; ++i) {
            auto stage = compose(tensor_mat(idx, dbasis_mat(i, n, model)), rho_inv(X.web));
            auto got = stage.ok() ? compose(h, stage.value()) : stage;
            if (!got.ok() || !(got.value() == fam[static_cast<std::size_t>(i)])) recover = false;
        }
        sink.check("uncurry-k1-components/" + tag, recover, "basis stage lost a component");
        auto stage = compose(tensor_mat(idx, ddiag_mat(n, model)), rho_inv(X.web));
        auto viadiag = stage.ok() ? compose(h, stage.value()) : stage;
        auto direct = add_mats(fam);
        if (viadiag.ok() && direct.ok())
            detail::record_cmp(sink, "uncurry-k1-sum/" + tag,
                               compare_on_valid(viadiag.value(), direct.value()));
        else if (!viadiag.ok())
            sink.undef("uncurry-k1-sum/" + tag, viadiag.why);
        else
            sink.undef("uncurry-k1-sum/" + tag, direct.why);

        // k = 2 on a doubly indexed family
        std::map<std::pair<int, int>, Mat> fam2;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) fam2.insert({{i, j}, hs.sample(rng)});
        MatBuilder h2b(product_web(*product_web(*X.web, *D.web), *D.web), Y.web, c);
        for (auto& [ij, f] : fam2)
            for (auto& [a, row] : *f.rows)
                for (auto& [y, v] : row)
                    h2b.set(Label::pair(Label::pair(a, Label::atom(static_cast<std::uint32_t>(
                                                           ij.second))),
                                        Label::atom(static_cast<std::uint32_t>(ij.first))),
                            y, v);
        auto h2 = h2b.build();
        auto xd_web = product_web(*X.web, *D.web);
        bool recover2 = true;
        for (auto& [ij, f] : fam2) {
            auto s1 = compose(tensor_mat(idx, dbasis_mat(ij.second, n, model)), rho_inv(X.web));
            auto s2 = s1.ok() ? compose(compose(tensor_mat(identity_mat(xd_web, c),
                                                           dbasis_mat(ij.first, n, model)),
                                                rho_inv(xd_web))
                                            .value(),
                                        s1.value())
                              : s1;
            auto got = s2.ok() ? compose(h2, s2.value()) : s2;
            if (!got.ok() || !(got.value() == f)) recover2 = false;
        }
        sink.check("uncurry-k2-components/" + tag, recover2, "basis stages lost a component");
        std::vector<Mat> all2;
        for (auto& [ij, f] : fam2) all2.push_back(f);
        auto sum2 = add_mats(all2);
        auto d1 = compose(tensor_mat(idx, ddiag_mat(n, model)), rho_inv(X.web));
        auto d2 = d1.ok() ? compose(compose(tensor_mat(identity_mat(xd_web, c), ddiag_mat(n, model)),
                                            rho_inv(xd_web))
                                        .value(),
                                    d1.value())
                          : d1;
        auto diag2 = d2.ok() ? compose(h2, d2.value()) : d2;
        if (diag2.ok() && sum2.ok())
            detail::record_cmp(sink, "uncurry-k2-sum/" + tag,
                               compare_on_valid(diag2.value(), sum2.value()));
        else if (!diag2.ok())
            sink.undef("uncurry-k2-sum/" + tag, diag2.why);
        else
            sink.undef("uncurry-k2-sum/" + tag, sum2.why);
    }

    // strength coherence and the lax/with structure
    {
        auto XY = tensor_space(X, Y);
        auto phir = strength_r_mat(X, Y, n);
        detail::record_partial_cmp(sink, "strength-r", compose(sigma_mat(XY, n), phir),
                                   Partial<Mat>::of(tensor_mat(sigma_mat(X, n),
                                                               identity_mat(Y.web, c))));
        // the defining characterization: pi_i . phiR = pi_i (x) Y
        bool phir_char = true;
        std::string phir_wit;
        for (int i = 0; i < n; ++i) {
            auto lhs = compose(pi_mat(i, XY, n), phir);
            auto rhs = tensor_mat(pi_mat(i, X, n), identity_mat(Y.web, c));
            if (!lhs.ok() || !(lhs.value() == rhs)) {
                phir_char = false;
                phir_wit = "pi_" + std::to_string(i);
            }
        }
        sink.check("strength-r-char", phir_char, phir_wit);
        auto phil = strength_l_mat(X, Y, n);
        detail::record_partial_cmp(sink, "strength-l", compose(sigma_mat(XY, n), phil),
                                   Partial<Mat>::of(tensor_mat(identity_mat(X.web, c),
                                                               sigma_mat(Y, n))));
        auto psi = lax_psi_mat(X, Y, n);
        bool psi_ok = true;
        std::string psi_wit;
        for (int i = 0; i < n; ++i) {
            auto lhs = compose(pi_mat(i, XY, n), psi);
            std::vector<Mat> pieces;
            for (int i1 = 0; i1 <= i; ++i1)
                pieces.push_back(tensor_mat(pi_mat(i1, X, n), pi_mat(i - i1, Y, n)));
            auto rhs = add_mats(pieces);
            if (!lhs.ok() || !rhs.ok()) { psi_ok = false; psi_wit = "undefined"; continue; }
            auto cmp = compare_on_valid(lhs.value(), rhs.value());
            if (!cmp.equal) { psi_ok = false; psi_wit = cmp.witness; }
        }
        sink.check("lax-psi-char", psi_ok, psi_wit);

        auto wi = with_iso_mat(X, Y, n);
        auto winv = transpose(wi);
        auto a = compose(winv, wi);
        auto b = compose(wi, winv);
        if (a.ok() && b.ok())
            sink.check("with-iso",
                       a.value() == identity_mat(wi.dom, c) &&
                           b.value() == identity_mat(wi.cod, c),
                       "with-iso not mutually inverse");
        else
            sink.undef("with-iso", a.ok() ? b.why : a.why);
    }

    // total models collapse plus/with into biproducts
    if (model_info(model).total) {
        std::vector<SpaceRepr> parts = {X, X, X};
        auto plus = additive_space(AdditiveKind::Plus, parts);
        auto with = additive_space(AdditiveKind::With, parts);
        bool agree = true;
        for (int it = 0; it < std::max(1, sc.cases / 4); ++it) {
            Vec v = zero_vec(plus.web, c);
            auto pool = samp::carrier_pool(c);
            for (auto& l : plus.web->labels)
                if (rng.chance(1, 2)) v.set(l, rng.pick(pool));
            if (member_point(plus, v).refuted() != member_point(with, v).refuted()) agree = false;
        }
        sink.check("biproduct-collapse-points", agree, "plus and with disagree");
        std::vector<Mat> idpieces;
        bool built = true;
        for (std::uint32_t i = 0; i < parts.size(); ++i) {
            auto section = compose(inj_mat(parts, i, plus.web), proj_mat(parts, i, plus.web));
            if (!section.ok()) { built = false; break; }
            idpieces.push_back(section.value());
        }
        auto total = built ? add_mats(idpieces) : Partial<Mat>::undef("section undefined");
        if (total.ok())
            sink.check("biproduct-collapse-matrix",
                       total.value() == identity_mat(plus.web, c),
                       "sum of inj.proj is not the identity");
        else
            sink.undef("biproduct-collapse-matrix", total.why);
    }
    return sink.take();
}

} // namespace rigweb
