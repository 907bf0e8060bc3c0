#include <catch2/catch.hpp>

#include "rigweb/taylor.hpp"
#include "rigweb/sampler.hpp"

using namespace rigweb;

namespace {

Scalar q(std::int64_t n, std::int64_t d = 1) { return make_scalar(Carrier::NonnegRat, Rat(n, d)); }
Scalar r(std::int64_t n, std::int64_t d = 1) { return make_scalar(Carrier::Rat, Rat(n, d)); }

/// Independent oracle for the Taylor series action: expand
///   out_j(b) = sum over m = [a_1..a_k] of s_{m,b} *
///              sum over index tuples (i_1..i_k), sum = j, of
///              prod_t (x_{i_t})_{a_t}
/// by direct enumeration -- no promotions, no factorial ratios.
Vec oracle_component(const Mat& s, const std::vector<Vec>& xs, const SpaceRepr& Y, int j, int n) {
    Carrier c = s.carrier;
    Vec out = zero_vec(Y.web, c);
    std::map<Label, Rat> acc;
    for (auto& [m, row] : *s.rows) {
        // coefficient: all assignments of indices to the sorted enumeration
        Rat coeff(0);
        std::vector<int> idx(m.kids().size(), 0);
        auto eval = [&]() {
            int total = 0;
            for (int i : idx) total += i;
            if (total != j) return;
            Rat prod(1);
            for (std::size_t t = 0; t < idx.size(); ++t) {
                Scalar v = static_cast<std::size_t>(idx[t]) < xs.size()
                               ? xs[static_cast<std::size_t>(idx[t])].at(m.kids()[t])
                               : zero(c);
                if (v.is_zero()) { prod = Rat(0); return; }
                prod = prod * v.value;
            }
            coeff += prod;
        };
        if (idx.empty()) {
            if (j == 0) coeff = Rat(1);
        } else {
            while (true) {
                eval();
                std::size_t t = 0;
                for (; t < idx.size(); ++t) {
                    if (++idx[t] < n) break;
                    idx[t] = 0;
                }
                if (t == idx.size()) break;
            }
        }
        if (coeff.is_zero()) continue;
        for (auto& [y, v] : row) acc[y] += v.value * coeff;
    }
    for (auto& [y, v] : acc)
        if (!v.is_zero()) out.set(y, make_scalar(c, v));
    return out;
}

} // namespace

TEST_CASE("analytic coalgebra matrix") {
    TruncCfg cfg{3, 4};
    int n = 4;
    auto D = d_space(n, "pcoh");
    auto BD = bang_space(D, cfg);
    auto hb = hbar_mat(BD, n);

    // (hbar . x)_m = x_{sum m}
    Rng rng(17);
    for (int it = 0; it < 20; ++it) {
        Vec x = zero_vec(D.web, Carrier::NonnegRat);
        for (auto& l : D.web->labels) x.set(l, q(rng.range(0, 3), 3));
        auto got = mat_apply(hb, x);
        REQUIRE(got.ok());
        Label m12 = Label::mset({Label::atom(1), Label::atom(2)});
        CHECK(got.value().at(m12) == x.at(Label::atom(3)));
        CHECK(got.value().at(Label::mset({})) == x.at(Label::atom(0)));
        // full pattern on the valid region
        for (auto& m : BD.space.web->labels) {
            int sum = 0;
            for (auto& e : m.kids()) sum += static_cast<int>(e.index());
            if (sum < n) CHECK(got.value().at(m) == x.at(Label::atom(sum)));
        }
    }

    // hbar . Diag = Diag^! on the valid region
    auto diag = diag_vec(D.web, Carrier::NonnegRat);
    auto lhs = mat_apply(hb, diag);
    REQUIRE(lhs.ok());
    auto rhs = promote_unchecked(diag, BD.space.web);
    auto cmp = compare_vec_on_valid(lhs.value(), rhs);
    CHECK(cmp.equal);
    CHECK(cmp.compared > 0);

    // membership: |hbar| applied to |Diag| is a promotion, so hbar is a
    // morphism into !D; the probe verdict must not refute it
    CHECK_FALSE(member_hom(D, BD.space, hb).refuted());
}

TEST_CASE("hbar is a bang coalgebra") {
    TruncCfg cfg{3, 3};
    int n = 3;
    for (auto& model : {std::string("pcoh"), std::string("kothe"), std::string("fin")}) {
        auto D = d_space(n, model);
        auto BD = bang_space(D, cfg);
        Carrier c = D.pcr.carrier;
        auto hb = hbar_mat(BD, n);

        // der . hbar = id_D
        auto lhs = compose(der_mat(BD), hb);
        REQUIRE(lhs.ok());
        auto cmp = compare_on_valid(lhs.value(), identity_mat(D.web, c));
        CHECK(cmp.equal);
        CHECK(cmp.compared > 0);

        // dig . hbar = !hbar . hbar
        auto dig = dig_mat(BD);
        auto l2 = compose(dig, hb);
        REQUIRE(l2.ok());
        auto bang_hb = bang_mat(hb, col_support(dig), nullptr, nullptr);
        REQUIRE(bang_hb.ok());
        auto r2 = compose(bang_hb.value(), hb);
        REQUIRE(r2.ok());
        auto cmp2 = compare_on_valid(l2.value(), r2.value());
        CHECK(cmp2.equal);
        CHECK(cmp2.compared > 0);
    }
}

TEST_CASE("closed-form Taylor matrix basics") {
    TruncCfg cfg{3, 3};
    int n = 3;
    auto X = make_space("pcoh", {1, {}});
    auto SX = s_space(X, cfg);
    auto BX = bang_space(X, cfg);
    auto BSX = bang_space(SX, cfg);

    // T of the Kleisli identity (der) is der at S X
    auto t_der = taylor_closed_mat(der_mat(BX), BSX, X, n);
    CHECK(t_der.undefined_entries.empty());
    CHECK(t_der.mat == der_mat(BSX));

    // T of zero is zero
    auto t_zero = taylor_closed_mat(zero_mat(BX.space.web, X.web, Carrier::NonnegRat), BSX, X, n);
    CHECK(t_zero.mat.entry_count() == 0);

    // the multinomial ratio: rows with repeated base atom but mixed
    // indices scale by m!/rho!
    Label a = Label::atom(0);
    MatBuilder sb(BX.space.web, X.web, Carrier::NonnegRat);
    sb.set(Label::mset({a, a, a}), a, q(1));
    auto s = sb.build();
    auto ts = taylor_closed_mat(s, BSX, X, n);
    Label rho = Label::mset({Label::pair(Label::atom(0), a), Label::pair(Label::atom(0), a),
                             Label::pair(Label::atom(1), a)});
    // [a,a,a]! = 6, rho! = 2!*1! = 2, ratio 3, degree j = 1
    CHECK(ts.mat.at(rho, Label::pair(Label::atom(1), a)) == q(3));
    // degree grading: every entry obeys j = sum of indices
    for (auto& [row, cols] : *ts.mat.rows) {
        int sum = 0;
        for (auto& e : row.kids()) sum += static_cast<int>(e.left().index());
        for (auto& [jy, v] : cols) CHECK(static_cast<int>(jy.left().index()) == sum);
    }
}

TEST_CASE("Taylor series action agrees with the brute-force oracle") {
    Rng rng(23);
    TruncCfg cfg{3, 3};
    int n = 3;
    struct Setup { std::string model; Carrier mc; std::vector<Scalar> pool; };
    std::vector<Setup> setups = {
        {"pcoh", Carrier::NonnegRat, {q(1, 2), q(1, 3), q(1, 4)}},
        {"kothe", Carrier::Rat, {r(1, 2), r(-1, 2), r(2), r(-3, 4)}},
    };
    for (auto& su : setups) {
        auto X = make_space(su.model, {2, {}});
        auto Y = make_space(su.model, {2, {}});
        auto SX = s_space(X, cfg);
        auto BX = bang_space(X, cfg);
        auto BSX = bang_space(SX, cfg);
        for (int it = 0; it < 12; ++it) {
            MatBuilder fb(BX.space.web, Y.web, su.mc);
            for (auto& m : BX.space.web->labels)
                for (auto& y : Y.web->labels)
                    if (rng.chance(1, 3)) fb.set(m, y, rng.pick(su.pool));
            auto f = fb.build();
            auto tf = taylor_closed_mat(f, BSX, Y, n);
            REQUIRE(tf.undefined_entries.empty());

            std::vector<Vec> xs;
            for (int i = 0; i < n; ++i) {
                Vec x = zero_vec(X.web, su.mc);
                for (auto& l : X.web->labels)
                    if (rng.chance(1, 2)) x.set(l, rng.pick(su.pool));
                xs.push_back(x);
            }
            auto got = taylor_apply_series(tf.mat, BSX, Y, xs, n);
            REQUIRE(got.ok());
            for (int j = 0; j < n; ++j) {
                // the matrix route only sees multisets up to the bang
                // degree; the oracle is exact for those degrees too since
                // f's rows stop there
                Vec want = oracle_component(f, xs, Y, j, n);
                CHECK(got.value()[static_cast<std::size_t>(j)] == want);
            }
        }
    }
}

TEST_CASE("series specializations") {
    Rng rng(29);
    TruncCfg cfg{3, 3};
    int n = 3;
    auto X = make_space("pcoh", {2, {}});
    auto Y = make_space("pcoh", {2, {}});
    auto SX = s_space(X, cfg);
    auto BX = bang_space(X, cfg);
    auto BSX = bang_space(SX, cfg);

    for (int it = 0; it < 10; ++it) {
        MatBuilder fb(BX.space.web, Y.web, Carrier::NonnegRat);
        for (auto& m : BX.space.web->labels)
            for (auto& y : Y.web->labels)
                if (rng.chance(1, 3)) fb.set(m, y, q(1, 5));
        auto f = fb.build();
        auto tf = taylor_closed_mat(f, BSX, Y, n);

        Vec x = zero_vec(X.web, Carrier::NonnegRat);
        for (auto& l : X.web->labels)
            if (rng.chance(1, 2)) x.set(l, q(1, 3));

        // xs = (x, 0, 0): component 0 is f applied to x^!, others vanish
        std::vector<Vec> xs = {x, zero_vec(X.web, Carrier::NonnegRat),
                               zero_vec(X.web, Carrier::NonnegRat)};
        auto got = taylor_apply_series(tf.mat, BSX, Y, xs, n);
        REQUIRE(got.ok());
        auto fx = mat_apply(f, promote_unchecked(x, BX.space.web));
        REQUIRE(fx.ok());
        CHECK(got.value()[0] == fx.value());
        CHECK(got.value()[1].is_zero_vec());
        CHECK(got.value()[2].is_zero_vec());

        // f linear (through der): T f applies componentwise
        MatBuilder gb(X.web, Y.web, Carrier::NonnegRat);
        for (auto& a : X.web->labels)
            for (auto& y : Y.web->labels)
                if (rng.chance(1, 2)) gb.set(a, y, q(1, 2));
        auto g = gb.build();
        auto gder = der_functor_mat(g, BX);
        REQUIRE(gder.ok());
        auto tg = taylor_closed_mat(gder.value(), BSX, Y, n);
        std::vector<Vec> ys;
        for (int i = 0; i < n; ++i) {
            Vec y = zero_vec(X.web, Carrier::NonnegRat);
            for (auto& l : X.web->labels)
                if (rng.chance(1, 2)) y.set(l, q(1, 4));
            ys.push_back(y);
        }
        auto series = taylor_apply_series(tg.mat, BSX, Y, ys, n);
        REQUIRE(series.ok());
        for (int j = 0; j < n; ++j) {
            auto want = mat_apply(g, ys[static_cast<std::size_t>(j)]);
            REQUIRE(want.ok());
            CHECK(series.value()[static_cast<std::size_t>(j)] == want.value());
        }
    }
}

TEST_CASE("T preserves identities and composition") {
    Rng rng(31);
    TruncCfg cfg{2, 2};
    int n = 2;
    for (auto& model : {std::string("pcoh"), std::string("kothe")}) {
        Carrier mc = model == "kothe" ? Carrier::Rat : Carrier::NonnegRat;
        std::vector<Scalar> pool = model == "kothe"
                                       ? std::vector<Scalar>{r(1, 2), r(-1, 3), r(1)}
                                       : std::vector<Scalar>{q(1, 2), q(1, 3)};
        auto X = make_space(model, {1, {}});
        auto Y = make_space(model, {1, {}});
        auto Z = make_space(model, {1, {}});
        auto SX = s_space(X, cfg);
        auto SY = s_space(Y, cfg);
        auto SZ = s_space(Z, cfg);
        auto BX = bang_space(X, cfg);
        auto BY = bang_space(Y, cfg);
        auto BSX = bang_space(SX, cfg);
        auto BSY = bang_space(SY, cfg);

        for (int it = 0; it < 8; ++it) {
            MatBuilder sb(BX.space.web, Y.web, mc);
            for (auto& m : BX.space.web->labels)
                if (rng.chance(2, 3)) sb.set(m, Label::atom(0), rng.pick(pool));
            MatBuilder tb(BY.space.web, Z.web, mc);
            for (auto& m : BY.space.web->labels)
                if (rng.chance(2, 3)) tb.set(m, Label::atom(0), rng.pick(pool));
            auto s = sb.build();
            auto t = tb.build();

            auto ts_comp = kleisli_bang_compose(t, s, BX, BY);
            REQUIRE(ts_comp.ok());
            auto t_of_comp = taylor_closed_mat(ts_comp.value(), BSX, Z, n);
            REQUIRE(t_of_comp.undefined_entries.empty());

            auto Ts = taylor_closed_mat(s, BSX, Y, n);
            auto Tt = taylor_closed_mat(t, BSY, Z, n);
            auto comp_of_t = kleisli_bang_compose(Tt.mat, Ts.mat, BSX, BSY);
            REQUIRE(comp_of_t.ok());

            auto cmp = compare_on_valid(t_of_comp.mat, comp_of_t.value());
            CHECK(cmp.equal);
            bool both_empty = t_of_comp.mat.entry_count() == 0 &&
                              comp_of_t.value().entry_count() == 0;
            CHECK((cmp.compared > 0 || both_empty));
        }
    }
}

TEST_CASE("T on linear maps is S") {
    Rng rng(37);
    TruncCfg cfg{2, 2};
    int n = 2;
    auto X = make_space("kothe", {2, {}});
    auto Y = make_space("kothe", {2, {}});
    auto SX = s_space(X, cfg);
    auto BX = bang_space(X, cfg);
    auto BSX = bang_space(SX, cfg);
    std::vector<Scalar> pool = {r(1), r(-1, 2), r(2, 3)};
    for (int it = 0; it < 12; ++it) {
        MatBuilder fb(X.web, Y.web, Carrier::Rat);
        for (auto& a : X.web->labels)
            for (auto& y : Y.web->labels)
                if (rng.chance(1, 2)) fb.set(a, y, rng.pick(pool));
        auto f = fb.build();
        auto derf = der_functor_mat(f, BX);
        REQUIRE(derf.ok());
        auto lhs = taylor_closed_mat(derf.value(), BSX, Y, n);
        REQUIRE(lhs.undefined_entries.empty());
        auto sf = s_functor_mat(f, n);
        auto bsx_from_sx = bang_space(SX, cfg);
        auto rhs = der_functor_mat(sf, bsx_from_sx);
        REQUIRE(rhs.ok());
        auto cmp = compare_on_valid(lhs.mat, rhs.value());
        CHECK(cmp.equal);
        CHECK(cmp.compared > 0);
    }
}

TEST_CASE("Cauchy composition in the S Kleisli category") {
    Rng rng(41);
    int n = 3;
    auto X = make_space("kothe", {1, {}});
    auto Y = make_space("kothe", {1, {}});
    auto Z = make_space("kothe", {1, {}});
    TruncCfg cfg{2, n};
    auto SY = s_space(Y, cfg);
    auto SZ = s_space(Z, cfg);
    std::vector<Scalar> pool = {r(1), r(-1), r(1, 2), r(-2, 3)};

    for (int it = 0; it < 20; ++it) {
        MatBuilder fb(X.web, SY.web, Carrier::Rat);
        for (auto& c : SY.web->labels)
            if (rng.chance(2, 3)) fb.set(Label::atom(0), c, rng.pick(pool));
        MatBuilder gb(Y.web, SZ.web, Carrier::Rat);
        for (auto& c : SZ.web->labels)
            if (rng.chance(2, 3)) gb.set(Label::atom(0), c, rng.pick(pool));
        auto f = fb.build();
        auto g = gb.build();

        auto comp = kleisli_s_compose(g, f, Z, n);
        REQUIRE(comp.ok());

        // direct Cauchy product of the coefficient series
        for (int k = 0; k < n; ++k) {
            std::vector<Mat> pieces;
            for (int i = 0; i <= k; ++i) {
                auto fi = compose(cast_mat(pi_mat(i, Y, n), Carrier::Rat), f);
                auto gj = compose(cast_mat(pi_mat(k - i, Z, n), Carrier::Rat), g);
                REQUIRE(fi.ok());
                REQUIRE(gj.ok());
                auto prod = compose(gj.value(), fi.value());
                REQUIRE(prod.ok());
                pieces.push_back(prod.value());
            }
            auto want = add_mats(pieces);
            REQUIRE(want.ok());
            auto got_k = compose(cast_mat(pi_mat(k, Z, n), Carrier::Rat), comp.value());
            REQUIRE(got_k.ok());
            CHECK(compare_on_valid(got_k.value(), want.value()).equal);
        }

        // iota_0 is neutral
        auto unit = cast_mat(iota_mat(0, Y, n), Carrier::Rat);
        auto left_unit = kleisli_s_compose(g, unit, Z, n);
        REQUIRE(left_unit.ok());
        CHECK(compare_on_valid(left_unit.value(), g).equal);
    }
}

TEST_CASE("Kleisli category sanity") {
    Rng rng(53);
    TruncCfg cfg{2, 2};
    auto X = make_space("pcoh", {2, {}});
    auto BX = bang_space(X, cfg);
    Carrier c = Carrier::NonnegRat;

    // a Kleisli morphism carries its membership verdict
    {
        MatBuilder mb(BX.space.web, X.web, c);
        mb.set(Label::mset({Label::atom(0)}), Label::atom(0), q(1, 2));
        auto ok = make_kleisli(X, X, BX, mb.build(), cfg);
        CHECK_FALSE(ok.verdict.refuted());
        CHECK(same_web(ok.mat.dom, BX.space.web));

        MatBuilder bad(BX.space.web, X.web, c);
        bad.set(Label::mset({}), Label::atom(0), q(5));
        CHECK(make_kleisli(X, X, BX, bad.build(), cfg).verdict.refuted());
    }

    // der_functor(id) is the Kleisli identity
    auto kid = der_functor_mat(identity_mat(X.web, c), BX);
    REQUIRE(kid.ok());
    CHECK(kid.value() == der_mat(BX));

    std::vector<Scalar> pool = {q(1, 3), q(1, 4)};
    for (int it = 0; it < 10; ++it) {
        // composing two linear images is the image of the product
        MatBuilder fb(X.web, X.web, c), gb(X.web, X.web, c);
        for (auto& a : X.web->labels)
            for (auto& y : X.web->labels) {
                if (rng.chance(1, 2)) fb.set(a, y, rng.pick(pool));
                if (rng.chance(1, 2)) gb.set(a, y, rng.pick(pool));
            }
        auto f = fb.build();
        auto g = gb.build();
        auto kf = der_functor_mat(f, BX);
        auto kg = der_functor_mat(g, BX);
        REQUIRE(kf.ok());
        REQUIRE(kg.ok());
        auto comp = kleisli_bang_compose(kg.value(), kf.value(), BX, BX);
        auto gf = compose(g, f);
        REQUIRE(comp.ok());
        REQUIRE(gf.ok());
        auto want = der_functor_mat(gf.value(), BX);
        REQUIRE(want.ok());
        auto cmp = compare_on_valid(comp.value(), want.value());
        CHECK(cmp.equal);

        // associativity of Kleisli composition on three sampled morphisms
        MatBuilder sb(BX.space.web, X.web, c), tb(BX.space.web, X.web, c),
            ub(BX.space.web, X.web, c);
        for (auto& m : BX.space.web->labels) {
            if (rng.chance(1, 3)) sb.set(m, Label::atom(0), rng.pick(pool));
            if (rng.chance(1, 3)) tb.set(m, Label::atom(1), rng.pick(pool));
            if (rng.chance(1, 3)) ub.set(m, Label::atom(0), rng.pick(pool));
        }
        auto s2 = sb.build();
        auto t2 = tb.build();
        auto u2 = ub.build();
        auto ts = kleisli_bang_compose(t2, s2, BX, BX);
        REQUIRE(ts.ok());
        auto uts1 = kleisli_bang_compose(u2, ts.value(), BX, BX);
        auto ut = kleisli_bang_compose(u2, t2, BX, BX);
        REQUIRE(ut.ok());
        auto uts2 = kleisli_bang_compose(ut.value(), s2, BX, BX);
        REQUIRE(uts1.ok());
        REQUIRE(uts2.ok());
        auto cmp2 = compare_on_valid(uts1.value(), uts2.value());
        CHECK(cmp2.equal);
    }
}

TEST_CASE("closed form equals the coalgebra composite") {
    Rng rng(43);
    TruncCfg cfg{2, 2};
    int n = 2;
    for (auto& model : {std::string("pcoh"), std::string("kothe"), std::string("fin")}) {
        Carrier mc = model == "kothe" ? Carrier::Rat
                     : model == "fin" ? Carrier::FinRat
                                      : Carrier::NonnegRat;
        std::vector<Scalar> pool;
        if (mc == Carrier::NonnegRat)
            pool = {q(1, 2), q(1, 3)};
        else
            pool = {make_scalar(mc, Rat(1, 2)), make_scalar(mc, Rat(-1, 2)), make_scalar(mc, Rat(1))};
        auto X = make_space(model, {1, {}});
        auto Y = make_space(model, {1, {}});
        auto SX = s_space(X, cfg);
        auto BX = bang_space(X, cfg);
        auto BSX = bang_space(SX, cfg);
        for (int it = 0; it < 4; ++it) {
            MatBuilder fb(BX.space.web, Y.web, mc);
            for (auto& m : BX.space.web->labels)
                if (rng.chance(2, 3)) fb.set(m, Label::atom(0), rng.pick(pool));
            auto f = fb.build();
            auto closed = taylor_closed_mat(f, BSX, Y, n);
            REQUIRE(closed.undefined_entries.empty());
            auto composite = taylor_composite_mat(f, X, SX, BSX, Y, cfg);
            REQUIRE(composite.ok());
            auto cmp = compare_on_valid(closed.mat, composite.value());
            CHECK(cmp.equal);
            CHECK(cmp.compared > 0);
        }
    }
}
