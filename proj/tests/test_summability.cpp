#include <catch2/catch.hpp>

#include "rigweb/summability.hpp"
#include "rigweb/sampler.hpp"

using namespace rigweb;

namespace {

Scalar q(std::int64_t n, std::int64_t d = 1) { return make_scalar(Carrier::NonnegRat, Rat(n, d)); }

Vec vec_of(WebPtr w, Carrier c, std::vector<Scalar> vals) {
    Vec v = zero_vec(w, c);
    std::size_t i = 0;
    for (auto& l : w->labels) v.set(l, vals.at(i++));
    return v;
}

} // namespace

TEST_CASE("d_space per model") {
    // pcoh: points of D are [0,1]^N
    auto D = d_space(2, "pcoh");
    REQUIRE(D.q_certified);
    CHECK(is_covering(D.P, *D.web));
    CHECK(is_covering(D.Q, *D.web));
    CHECK(member_point(D, vec_of(D.web, Carrier::NonnegRat, {q(1), q(1)})).certified());
    CHECK(member_point(D, vec_of(D.web, Carrier::NonnegRat, {q(3, 2), q(0)})).refuted());

    // basis against basis-duals is Kronecker
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto iota = basis_vec(D.web, Carrier::NonnegRat, Label::atom(i));
            auto o = scalar_product(iota, D.Q[j]);
            REQUIRE(o.defined);
            CHECK(o.sum == (i == j ? q(1) : q(0)));
        }

    // kothe: every rational pair lands in the semimodule
    auto K = d_space(2, "kothe");
    Rng rng(9);
    for (int it = 0; it < 40; ++it) {
        Vec x = zero_vec(K.web, Carrier::Rat);
        for (auto& l : K.web->labels)
            x.set(l, make_scalar(Carrier::Rat, Rat(rng.range(-9, 9), rng.range(1, 4))));
        CHECK(member_semimod(K, x).certified());
    }

    // fin: all pairs on a finite web
    auto F = d_space(2, "fin");
    for (auto& v : enumerate_vectors(F.web, Carrier::FinBool))
        CHECK(member_point(F, v).certified());

    // micro-scale certification for the finite carriers
    CHECK(verify_certification(d_space(3, "rel")));
    CHECK(verify_certification(d_space(3, "fin")));
    CHECK(verify_certification(d_space(3, "coh")));
}

TEST_CASE("s_space membership is the summability test") {
    TruncCfg cfg{2, 2};
    auto X = make_space("pcoh", {1, {}});
    auto D = d_space(2, "pcoh");
    auto SX = s_space(X, cfg);
    CHECK(SX.web->size() == 2);

    // a sequence of points whose pointwise sum is a point
    auto good = vec_of(SX.web, Carrier::NonnegRat, {q(1, 2), q(1, 2)});
    CHECK_FALSE(member_point(SX, good).refuted());
    CHECK(member_hom(D, X, vec_as_mat(good, D.web, X.web)).certified());

    // the constant-one sequence is not summable in pcoh
    auto bad = vec_of(SX.web, Carrier::NonnegRat, {q(1), q(1)});
    CHECK(member_point(SX, bad).refuted());
    CHECK(member_hom(D, X, vec_as_mat(bad, D.web, X.web)).refuted());
}

TEST_CASE("projection and injection characterizations") {
    auto X = make_space("pcoh", {2, {}});
    int n = 3;
    auto id = identity_mat(X.web, Carrier::NonnegRat);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto comp = compose(pi_mat(j, X, n), iota_mat(i, X, n));
            REQUIRE(comp.ok());
            if (i == j)
                CHECK(comp.value() == id);
            else
                CHECK(comp.value().entry_count() == 0);
        }
    // sum of a singleton: sigma . iota_i = id
    for (int i = 0; i < n; ++i) {
        auto comp = compose(sigma_mat(X, n), iota_mat(i, X, n));
        REQUIRE(comp.ok());
        CHECK(comp.value() == id);
    }
}

TEST_CASE("tau realizes the Cauchy characterization") {
    auto X = make_space("pcoh", {1, {}});
    int n = 4;
    auto tau = tau_mat(X, n);
    for (int i = 0; i < n; ++i) {
        auto lhs = compose(pi_mat(i, X, n), tau);
        REQUIRE(lhs.ok());
        // sum over j <= i of pi_{i-j} . pi_j
        std::vector<Mat> pieces;
        for (int j = 0; j <= i; ++j) {
            auto pj = pi_mat(j, s_space(X, {2, n}), n); // pi_j at S X
            auto inner = compose(pi_mat(i - j, X, n), pj);
            REQUIRE(inner.ok());
            pieces.push_back(inner.value());
        }
        auto rhs = add_mats(pieces);
        REQUIRE(rhs.ok());
        auto cmp = compare_on_valid(lhs.value(), rhs.value());
        CHECK(cmp.equal);
        CHECK(cmp.compared > 0);
    }
}

TEST_CASE("theta and swap characterizations") {
    auto X = make_space("pcoh", {2, {}});
    int n = 3;
    auto SX = s_space(X, {2, n});
    auto theta = theta_mat(X, n);
    auto cswap = sswap_mat(X, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto lhs = compose(pi_mat(i, X, n), compose(pi_mat(j, SX, n), theta).value());
            REQUIRE(lhs.ok());
            if (i == j)
                CHECK(lhs.value() == pi_mat(i, X, n));
            else
                CHECK(lhs.value().entry_count() == 0);

            auto sw = compose(pi_mat(i, X, n), compose(pi_mat(j, SX, n), cswap).value());
            auto direct = compose(pi_mat(j, X, n), pi_mat(i, SX, n));
            REQUIRE(sw.ok());
            REQUIRE(direct.ok());
            CHECK(sw.value() == direct.value());
        }
}

TEST_CASE("bimonad unit and associativity on the valid region") {
    auto X = make_space("pcoh", {1, {}});
    int n = 3;
    auto SX = s_space(X, {2, n});
    auto tau = tau_mat(X, n);
    auto id_sx = identity_mat(SX.web, Carrier::NonnegRat);

    // monad unit laws: tau . iota_0^{SX} = id and tau . S iota_0 = id
    auto u1 = compose(tau, iota_mat(0, SX, n));
    REQUIRE(u1.ok());
    CHECK(compare_on_valid(u1.value(), id_sx).equal);
    auto u2 = compose(tau, s_functor_mat(iota_mat(0, X, n), n));
    REQUIRE(u2.ok());
    CHECK(compare_on_valid(u2.value(), id_sx).equal);

    // associativity: tau . S tau = tau . tau_{SX}
    auto lhs = compose(tau, s_functor_mat(tau, n));
    auto rhs = compose(tau, tau_mat(SX, n));
    REQUIRE(lhs.ok());
    REQUIRE(rhs.ok());
    auto cmp = compare_on_valid(lhs.value(), rhs.value());
    CHECK(cmp.equal);
    CHECK(cmp.compared > 0);

    // comonad laws for (sigma, theta)
    auto theta = theta_mat(X, n);
    auto c1 = compose(sigma_mat(SX, n), theta);
    REQUIRE(c1.ok());
    CHECK(compare_on_valid(c1.value(), id_sx).equal);
    auto c2 = compose(s_functor_mat(sigma_mat(X, n), n), theta);
    REQUIRE(c2.ok());
    CHECK(compare_on_valid(c2.value(), id_sx).equal);
    auto a1 = compose(theta_mat(SX, n), theta);
    auto a2 = compose(s_functor_mat(theta, n), theta);
    REQUIRE(a1.ok());
    REQUIRE(a2.ok());
    CHECK(compare_on_valid(a1.value(), a2.value()).equal);
}

TEST_CASE("truncated factorization: sum of iota_i . pi_i is the identity") {
    auto X = make_space("pcoh", {2, {}});
    int n = 4;
    std::vector<Mat> pieces;
    for (int i = 0; i < n; ++i) {
        auto p = compose(iota_mat(i, X, n), pi_mat(i, X, n));
        REQUIRE(p.ok());
        pieces.push_back(p.value());
    }
    auto total = add_mats(pieces);
    REQUIRE(total.ok());
    auto SX = s_space(X, {2, n});
    CHECK(total.value() == identity_mat(SX.web, Carrier::NonnegRat));
}

TEST_CASE("witness roundtrip for a summable family") {
    Rng rng(31);
    auto X = make_space("pcoh", {2, {}});
    auto Y = make_space("pcoh", {2, {}});
    int n = 3;
    auto D = d_space(n, "pcoh");
    for (int it = 0; it < 40; ++it) {
        // a family of small morphisms whose pointwise sum stays a morphism
        std::vector<Mat> fs;
        for (int i = 0; i < n; ++i) {
            MatBuilder b(X.web, Y.web, Carrier::NonnegRat);
            for (auto& a : X.web->labels)
                for (auto& y : Y.web->labels)
                    if (rng.chance(1, 2)) b.set(a, y, q(1, 12));
            fs.push_back(b.build());
        }
        auto w = witness_mat(fs, Y, n);
        // projections recover the components
        for (int i = 0; i < n; ++i) {
            auto back = compose(pi_mat(i, Y, n), w);
            REQUIRE(back.ok());
            CHECK(back.value() == fs[i]);
        }
        // the sigma composite is the pointwise sum
        auto via_sigma = compose(sigma_mat(Y, n), w);
        auto direct = add_mats(fs);
        REQUIRE(via_sigma.ok());
        REQUIRE(direct.ok());
        CHECK(compare_on_valid(via_sigma.value(), direct.value()).equal);
        // and the witness is a morphism into S Y iff the family is summable
        auto sy = s_space(Y, {2, n});
        CHECK_FALSE(member_hom(X, sy, w).refuted());
        (void)D;
    }
}

TEST_CASE("D bimonoid laws") {
    for (auto& model : {std::string("pcoh"), std::string("rel"), std::string("kothe")}) {
        int n = 4;
        Carrier c = model_info(model).positive.carrier;
        auto D = d_space(n, model);
        auto dd = product_web(*D.web, *D.web);
        auto mb = mbar_mat(n, model);
        auto cb = cbar_mat(n, model);
        auto id_d = identity_mat(D.web, c);

        // mbar . (iota_i (x) iota_j) = [i=j] iota_i  (as maps 1 (x) 1 -> D)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto pairm = tensor_mat(dbasis_mat(i, n, model), dbasis_mat(j, n, model));
                auto comp = compose(mb, pairm);
                REQUIRE(comp.ok());
                if (i == j) {
                    CHECK(comp.value().entry_count() == 1);
                    CHECK(comp.value().at(Label::pair(Label::unit(), Label::unit()),
                                          Label::atom(i)) == one(c));
                } else {
                    CHECK(comp.value().entry_count() == 0);
                }
            }

        // cbar . iota_k hits exactly the antidiagonal i + j = k
        {
            auto comp = compose(cb, dbasis_mat(2, n, model));
            REQUIRE(comp.ok());
            CHECK(comp.value().entry_count() == 3);
            for (int i = 0; i <= 2; ++i)
                CHECK(comp.value().at(Label::unit(),
                                      Label::pair(Label::atom(i), Label::atom(2 - i))) == one(c));
        }

        // unit laws
        auto lam = [&]() { // 1 (x) D -> D unitor
            MatBuilder b(product_web(*unit_web(), *D.web), D.web, c);
            for (auto& l : D.web->labels) b.set(Label::pair(Label::unit(), l), l, one(c));
            return b.build();
        }();
        auto diag_tensor_id = tensor_mat(ddiag_mat(n, model), id_d);
        auto unit_l = compose(mb, diag_tensor_id);
        REQUIRE(unit_l.ok());
        CHECK(compare_on_valid(unit_l.value(), lam).equal);

        auto p0_tensor_id = tensor_mat(dproj_mat(0, n, model), id_d);
        auto counit = compose(p0_tensor_id, cb);
        REQUIRE(counit.ok());
        CHECK(compare_on_valid(counit.value(), transpose(lam)).equal);

        // commutativity and cocommutativity via the web symmetry
        MatBuilder symb(dd, dd, c);
        for (auto& l : dd->labels) symb.set(l, Label::pair(l.right(), l.left()), one(c));
        auto sym = symb.build();
        CHECK(compare_on_valid(compose(mb, sym).value(), mb).equal);
        CHECK(compare_on_valid(compose(sym, cb).value(), cb).equal);

        // coassociativity on the valid region
        auto l1 = compose(tensor_mat(cb, id_d), cb);
        auto l2 = compose(tensor_mat(id_d, cb), cb);
        REQUIRE(l1.ok());
        REQUIRE(l2.ok());
        // rebracket (D (x) D) (x) D -> D (x) (D (x) D) to compare
        auto ddd_l = product_web(*dd, *D.web);
        MatBuilder ab(ddd_l, product_web(*D.web, *dd), c);
        for (auto& l : ddd_l->labels)
            ab.set(l, Label::pair(l.left().left(), Label::pair(l.left().right(), l.right())),
                   one(c));
        auto rebr = ab.build();
        auto l1r = compose(rebr, l1.value());
        REQUIRE(l1r.ok());
        auto cmp = compare_on_valid(l1r.value(), l2.value());
        CHECK(cmp.equal);
        CHECK(cmp.compared > 0);

        // bimonoid compatibility: p0 . diag = id_1
        auto pd = compose(dproj_mat(0, n, model), ddiag_mat(n, model));
        REQUIRE(pd.ok());
        CHECK(pd.value() == identity_mat(unit_web(), c));
    }
}

TEST_CASE("strength coherence and with-iso") {
    auto X = make_space("pcoh", {2, {}});
    auto Y = make_space("pcoh", {2, {}});
    int n = 3;
    auto XY = tensor_space(X, Y);
    auto phir = strength_r_mat(X, Y, n);
    auto lhs = compose(sigma_mat(XY, n), phir);
    REQUIRE(lhs.ok());
    auto rhs = tensor_mat(sigma_mat(X, n), identity_mat(Y.web, Carrier::NonnegRat));
    auto cmp = compare_on_valid(lhs.value(), rhs);
    CHECK(cmp.equal);
    CHECK(cmp.compared > 0);

    auto phil = strength_l_mat(X, Y, n);
    auto lhs2 = compose(sigma_mat(XY, n), phil);
    REQUIRE(lhs2.ok());
    auto rhs2 = tensor_mat(identity_mat(X.web, Carrier::NonnegRat), sigma_mat(Y, n));
    CHECK(compare_on_valid(lhs2.value(), rhs2).equal);

    // pi_i . psi = sum over splits of pi_i1 (x) pi_i2
    auto psi = lax_psi_mat(X, Y, n);
    for (int i = 0; i < n; ++i) {
        auto lhs3 = compose(pi_mat(i, XY, n), psi);
        REQUIRE(lhs3.ok());
        std::vector<Mat> pieces;
        for (int i1 = 0; i1 <= i; ++i1)
            pieces.push_back(tensor_mat(pi_mat(i1, X, n), pi_mat(i - i1, Y, n)));
        auto rhs3 = add_mats(pieces);
        REQUIRE(rhs3.ok());
        CHECK(compare_on_valid(lhs3.value(), rhs3.value()).equal);
    }

    // with_iso and its transpose are mutually inverse
    auto wi = with_iso_mat(X, Y, n);
    auto winv = transpose(wi);
    auto a = compose(winv, wi);
    auto b = compose(wi, winv);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.value() == identity_mat(wi.dom, Carrier::NonnegRat));
    CHECK(b.value() == identity_mat(wi.cod, Carrier::NonnegRat));
}

TEST_CASE("representable uncurry for k = 1 and 2") {
    Rng rng(55);
    auto X = make_space("pcoh", {1, {}});
    auto Y = make_space("pcoh", {1, {}});
    int n = 2;
    std::string model = "pcoh";
    Carrier c = Carrier::NonnegRat;
    auto D = d_space(n, model);

    // k = 1: a family f_i realized by h : X (x) D -> Y
    std::vector<Mat> fam;
    for (int i = 0; i < n; ++i) {
        MatBuilder b(X.web, Y.web, c);
        b.set(Label::atom(0), Label::atom(0), q(1, 3 + i));
        fam.push_back(b.build());
    }
    MatBuilder hb(product_web(*X.web, *D.web), Y.web, c);
    for (int i = 0; i < n; ++i)
        for (auto& [a, row] : *fam[i].rows)
            for (auto& [y, v] : row)
                hb.set(Label::pair(a, Label::atom(i)), y, v);
    auto h = hb.build();

    auto rho_inv = [&](const SpaceRepr& Z) { // Z -> Z (x) 1
        MatBuilder b(Z.web, product_web(*Z.web, *unit_web()), c);
        for (auto& l : Z.web->labels) b.set(l, Label::pair(l, Label::unit()), one(c));
        return b.build();
    };
    auto idx = identity_mat(X.web, c);
    for (int i = 0; i < n; ++i) {
        auto stage = compose(tensor_mat(idx, dbasis_mat(i, n, model)), rho_inv(X));
        REQUIRE(stage.ok());
        auto got = compose(h, stage.value());
        REQUIRE(got.ok());
        CHECK(got.value() == fam[i]);
    }
    // the sum is h against the diagonal
    auto viadiag = compose(h, compose(tensor_mat(idx, ddiag_mat(n, model)), rho_inv(X)).value());
    REQUIRE(viadiag.ok());
    auto direct = add_mats(fam);
    REQUIRE(direct.ok());
    CHECK(compare_on_valid(viadiag.value(), direct.value()).equal);

    // k = 2 with the iterated diagonal generator
    std::map<std::pair<int, int>, Mat> fam2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MatBuilder b(X.web, Y.web, c);
            b.set(Label::atom(0), Label::atom(0), q(1, 2 + i + 2 * j));
            fam2.insert({{i, j}, b.build()});
        }
    // h2 : (X (x) D) (x) D -> Y with h2_{((a,i2),i1), y} = f(i1,i2)
    MatBuilder h2b(product_web(*product_web(*X.web, *D.web), *D.web), Y.web, c);
    for (auto& [ij, f] : fam2)
        for (auto& [a, row] : *f.rows)
            for (auto& [y, v] : row)
                h2b.set(Label::pair(Label::pair(a, Label::atom(ij.second)), Label::atom(ij.first)),
                        y, v);
    auto h2 = h2b.build();
    for (auto& [ij, f] : fam2) {
        auto stage1 = compose(tensor_mat(idx, dbasis_mat(ij.second, n, model)), rho_inv(X));
        REQUIRE(stage1.ok());
        auto xd = tensor_space(X, D);
        auto stage2 = compose(tensor_mat(identity_mat(xd.web, c), dbasis_mat(ij.first, n, model)),
                              rho_inv(xd));
        REQUIRE(stage2.ok());
        auto got = compose(h2, compose(stage2.value(), stage1.value()).value());
        REQUIRE(got.ok());
        CHECK(got.value() == f);
    }
    std::vector<Mat> all2;
    for (auto& [ij, f] : fam2) all2.push_back(f);
    auto sum2 = add_mats(all2);
    REQUIRE(sum2.ok());
    auto xd = tensor_space(X, D);
    auto diag2 = compose(h2, compose(compose(tensor_mat(identity_mat(xd.web, c),
                                                        ddiag_mat(n, model)),
                                             rho_inv(xd)).value(),
                                     compose(tensor_mat(idx, ddiag_mat(n, model)),
                                             rho_inv(X)).value()).value());
    REQUIRE(diag2.ok());
    CHECK(compare_on_valid(diag2.value(), sum2.value()).equal);
    (void)rng;
}

TEST_CASE("mate shadow: pi_i from the representable definition") {
    auto X = make_space("pcoh", {2, {}});
    int n = 3;
    std::string model = "pcoh";
    Carrier c = Carrier::NonnegRat;
    auto D = d_space(n, model);
    auto SX = s_space(X, {2, n});
    // pi_i = ev . ((D -o X) (x) iota_i) . rho^{-1}
    MatBuilder rb(SX.web, product_web(*SX.web, *unit_web()), c);
    for (auto& l : SX.web->labels) rb.set(l, Label::pair(l, Label::unit()), one(c));
    auto rho_inv = rb.build();
    auto ev = eval_mat(D, X);
    for (int i = 0; i < n; ++i) {
        auto stage = compose(tensor_mat(identity_mat(SX.web, c), dbasis_mat(i, n, model)), rho_inv);
        REQUIRE(stage.ok());
        auto built = compose(ev, stage.value());
        REQUIRE(built.ok());
        CHECK(built.value() == pi_mat(i, X, n));
    }
    // and sigma from the diagonal
    auto stage = compose(tensor_mat(identity_mat(SX.web, c), ddiag_mat(n, model)), rho_inv);
    REQUIRE(stage.ok());
    auto built = compose(ev, stage.value());
    REQUIRE(built.ok());
    CHECK(compare_on_valid(built.value(), sigma_mat(X, n)).equal);
}

TEST_CASE("iterated diagonal: points of D (x) D are biorth of the big diagonal") {
    // The predual of the tensor is the single vector Diag_{N x N}; its
    // biorthogonal is probed from inside: elements of orth(Diag) are the
    // subprobability vectors, and v lies in biorth(Diag) iff it pairs
    // into the ball against all of them.
    Rng rng(77);
    int n = 2;
    auto D = d_space(n, "pcoh");
    auto DD = tensor_space(D, D);
    auto pcr = model_info("pcoh").positive;
    REQUIRE(DD.P.size() == 1);
    CHECK(DD.P[0] == diag_vec(DD.web, Carrier::NonnegRat));
    auto sample_dual = [&](Rng& r) {
        // a random subprobability vector over the product web
        Vec y = zero_vec(DD.web, Carrier::NonnegRat);
        Rat budget(1);
        for (auto& l : DD.web->labels) {
            if (!r.chance(2, 3)) continue;
            Rat part = budget * Rat(r.range(0, 3), 6);
            y.set(l, make_scalar(Carrier::NonnegRat, part));
            budget = budget - part;
        }
        return y;
    };
    for (int it = 0; it < 120; ++it) {
        Vec v = zero_vec(DD.web, Carrier::NonnegRat);
        for (auto& l : DD.web->labels)
            if (rng.chance(2, 3)) v.set(l, q(rng.range(0, 4), 3));
        auto verdict = member_point(DD, v); // via Q = {e_i tensor e_j}
        if (!verdict.refuted()) {
            // v should pair into the ball against every sampled dual
            for (int k = 0; k < 20; ++k) {
                Vec y = sample_dual(rng);
                REQUIRE(orth_rel(pcr, y, DD.P[0])); // y is in orth(Diag)
                CHECK(orth_rel(pcr, v, y));
            }
        } else {
            // a refuted v must fail against some element of orth(Diag):
            // the basis vector at an oversized entry works
            bool witnessed = false;
            for (auto& l : DD.web->labels) {
                Vec e = basis_vec(DD.web, Carrier::NonnegRat, l);
                if (orth_rel(pcr, e, DD.P[0]) && !orth_rel(pcr, v, e)) witnessed = true;
            }
            CHECK(witnessed);
        }
    }
}

TEST_CASE("weighted relations collapse to biproducts") {
    // wrel has every sum defined: plus and with agree and the inj/proj
    // matrices satisfy the biproduct equations.
    auto one = one_space("wrel");
    std::vector<SpaceRepr> parts = {one, one, one};
    auto plus = additive_space(AdditiveKind::Plus, parts);
    auto with = additive_space(AdditiveKind::With, parts);
    REQUIRE(plus.q_certified);
    REQUIRE(with.q_certified);
    Rng rng(13);
    for (int it = 0; it < 60; ++it) {
        Vec v = zero_vec(plus.web, Carrier::ExtNonneg);
        for (auto& l : plus.web->labels)
            if (rng.chance(1, 2))
                v.set(l, rng.chance(1, 4) ? infinity()
                                          : make_scalar(Carrier::ExtNonneg, Rat(rng.range(0, 5))));
        CHECK(member_point(plus, v).certified());
        CHECK(member_point(with, v).certified());
    }
    std::vector<Mat> idpieces;
    for (std::uint32_t i = 0; i < parts.size(); ++i) {
        auto section = compose(inj_mat(parts, i, plus.web), proj_mat(parts, i, plus.web));
        REQUIRE(section.ok());
        idpieces.push_back(section.value());
    }
    auto total = add_mats(idpieces);
    REQUIRE(total.ok());
    CHECK(total.value() == identity_mat(plus.web, Carrier::ExtNonneg));
}
