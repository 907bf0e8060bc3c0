#pragma once

#include <optional>

#include "rigweb/mat.hpp"

namespace rigweb {

/// x is orthogonal to y when their scalar product is defined and lands in
/// the ball of the instance.
inline bool orth_rel(const PcrInstance& pcr, const Vec& x, const Vec& y) {
    SumOutcome o = scalar_product(x, y);
    return o.defined && pcr.in_ball(o.sum);
}

/// A space given by its web and two finite generator sets: points are
/// biorth(P) by definition, and q_certified records that orth(Q) is known
/// to coincide with biorth(P), making membership tests exact.
struct SpaceRepr {
    WebPtr web;
    PcrInstance pcr;
    std::vector<Vec> P; // predual generators
    std::vector<Vec> Q; // dual predual generators / sound probes
    bool q_certified = false;
    std::string model;
    std::string name;
};

struct MembershipVerdict {
    enum class Kind { Certified, ProbeSound, Refuted } kind;
    int probes = 0;
    std::string witness; // refuting generator and pairing outcome

    bool refuted() const { return kind == Kind::Refuted; }
    bool certified() const { return kind == Kind::Certified; }
};

inline SpaceRepr dual(const SpaceRepr& x) {
    SpaceRepr d = x;
    std::swap(d.P, d.Q);
    d.name = x.name.empty() ? "dual" : ("dual(" + x.name + ")");
    return d;
}

/// Every web index must see an invertible entry of some generator.
inline bool is_covering(const std::vector<Vec>& fam, const Web& web) {
    for (auto& l : web.labels) {
        bool hit = false;
        for (auto& f : fam)
            if (is_invertible(f.at(l))) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

/// Tests x against every Q generator. Exact (Certified/Refuted) when the
/// space is q_certified; otherwise refutation is sound and acceptance is
/// only probe-deep.
inline MembershipVerdict member_point(const SpaceRepr& X, const Vec& x) {
    if (!same_web(X.web, x.web)) throw std::invalid_argument("member_point: web mismatch");
    for (auto& q : X.Q) {
        SumOutcome o = scalar_product(x, q);
        if (!o.defined)
            return {MembershipVerdict::Kind::Refuted, 0,
                    "pairing undefined against " + (q.entries.empty() ? std::string("0") : q.entries.begin()->first.str())};
        if (!X.pcr.in_ball(o.sum))
            return {MembershipVerdict::Kind::Refuted, 0,
                    "pairing " + scalar_str(o.sum) + " outside ball"};
    }
    if (X.q_certified) return {MembershipVerdict::Kind::Certified, static_cast<int>(X.Q.size()), ""};
    return {MembershipVerdict::Kind::ProbeSound, static_cast<int>(X.Q.size()), ""};
}

/// Morphism membership: s against P_X tensor Q_Y. By the predual
/// characterization this is exact whenever Y is q_certified (the P side
/// generates points X by construction).
inline MembershipVerdict member_hom(const SpaceRepr& X, const SpaceRepr& Y, const Mat& s) {
    if (s.dom && !same_web(s.dom, X.web)) throw std::invalid_argument("member_hom: dom web mismatch");
    if (s.cod && !same_web(s.cod, Y.web)) throw std::invalid_argument("member_hom: cod web mismatch");
    int probes = 0;
    for (auto& p : X.P) {
        for (auto& q : Y.Q) {
            ++probes;
            std::vector<Scalar> terms;
            for (auto& [a, pa] : p.entries) {
                auto ri = s.rows->find(a);
                if (ri == s.rows->end()) continue;
                for (auto& [b, sv] : ri->second) {
                    auto qb = q.entries.find(b);
                    if (qb != q.entries.end()) terms.push_back(mul(mul(pa, sv), qb->second));
                }
            }
            SumOutcome o = try_sum(s.carrier, terms);
            std::string at = "(p,q) index " + std::to_string(probes - 1);
            if (!o.defined)
                return {MembershipVerdict::Kind::Refuted, probes, "pairing undefined at " + at};
            if (!X.pcr.in_ball(o.sum))
                return {MembershipVerdict::Kind::Refuted, probes,
                        "pairing " + scalar_str(o.sum) + " outside ball at " + at};
        }
    }
    if (Y.q_certified) return {MembershipVerdict::Kind::Certified, probes, ""};
    return {MembershipVerdict::Kind::ProbeSound, probes, ""};
}

/// Signed membership through the absolute value: |x| must be a point of
/// the positive space.
inline MembershipVerdict member_semimod(const SpaceRepr& X, const Vec& x) {
    if (!carrier_is_absolute(x.carrier))
        throw std::invalid_argument("member_semimod: carrier not absolute");
    if (positive_counterpart(x.carrier) != X.pcr.carrier)
        throw std::invalid_argument("member_semimod: counterpart mismatch");
    return member_point(X, abs_vec(x));
}

inline MembershipVerdict member_semimod_hom(const SpaceRepr& X, const SpaceRepr& Y, const Mat& s) {
    if (!carrier_is_absolute(s.carrier))
        throw std::invalid_argument("member_semimod_hom: carrier not absolute");
    return member_hom(X, Y, abs_mat(s));
}

// -- model registry ----------------------------------------------------------

/// The six built-in web models. `total` marks the ones where, on a finite
/// web, every vector is a point (complete or finitary carrier with the
/// whole carrier as ball), which certifies every construction trivially.
struct ModelInfo {
    std::string id;
    PcrInstance positive;
    std::optional<Carrier> module_carrier; // signed coefficients over the positive space
    bool total;
};

inline const std::vector<ModelInfo>& model_registry() {
    static const std::vector<ModelInfo> models = {
        {"rel", {Carrier::Bool, PcrInstance::Ball::All}, std::nullopt, true},
        {"wrel", {Carrier::ExtNonneg, PcrInstance::Ball::All}, std::nullopt, true},
        {"pcoh", {Carrier::NonnegRat, PcrInstance::Ball::UnitInterval}, std::nullopt, false},
        {"coh", {Carrier::Coherence, PcrInstance::Ball::All}, std::nullopt, false},
        {"fin", {Carrier::FinBool, PcrInstance::Ball::All}, Carrier::FinRat, true},
        {"kothe", {Carrier::NonnegRat, PcrInstance::Ball::All}, Carrier::Rat, true},
    };
    return models;
}

inline const ModelInfo& model_info(const std::string& id) {
    for (auto& m : model_registry())
        if (m.id == id) return m;
    throw std::invalid_argument("unknown model id: " + id);
}

/// Base data for make_space: a web size, plus the coherence graph for the
/// coh model (edges between atom indices; other models ignore them).
struct BaseData {
    std::uint32_t web_size = 1;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

namespace detail {

inline bool graph_adjacent(const BaseData& g, std::uint32_t a, std::uint32_t b) {
    for (auto& [u, v] : g.edges)
        if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
}

/// All maximal cliques by subset scan; webs stay below a dozen vertices.
inline std::vector<std::vector<std::uint32_t>> maximal_cliques(const BaseData& g) {
    std::uint32_t n = g.web_size;
    auto is_clique = [&](std::uint32_t mask) {
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i + 1; j < n; ++j)
                if ((mask >> i & 1u) && (mask >> j & 1u) && !graph_adjacent(g, i, j))
                    return false;
        return true;
    };
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!is_clique(mask)) continue;
        bool maximal = true;
        for (std::uint32_t v = 0; v < n && maximal; ++v)
            if (!(mask >> v & 1u) && is_clique(mask | (1u << v))) maximal = false;
        if (!maximal) continue;
        std::vector<std::uint32_t> c;
        for (std::uint32_t v = 0; v < n; ++v)
            if (mask >> v & 1u) c.push_back(v);
        out.push_back(std::move(c));
    }
    return out;
}

inline Vec indicator_vec(const WebPtr& web, Carrier c, const std::vector<std::uint32_t>& verts) {
    Vec v = zero_vec(web, c);
    for (auto& i : verts) v.set(Label::atom(i), one(c));
    return v;
}

} // namespace detail

/// Base spaces of the registry.
///   rel / wrel / fin / kothe: P = Q = {e_a} + {all-ones}; every vector is
///   a point, so any Q is exact.
///   pcoh: P = {e_a}, Q = {all-ones}; this is the l1-style space whose
///   points are the subprobability vectors, and orth(Q) = biorth(P).
///   coh: a graph; P spans the maximal cliques, Q the maximal anticliques
///   (cliques of the complement), plus basis vectors on both sides.
inline SpaceRepr make_space(const std::string& model, const BaseData& base) {
    const ModelInfo& mi = model_info(model);
    SpaceRepr X;
    X.model = model;
    X.pcr = mi.positive;
    X.web = base_web(base.web_size);
    X.name = model + std::to_string(base.web_size);
    Carrier c = mi.positive.carrier;

    if (model == "coh") {
        for (auto& clique : detail::maximal_cliques(base))
            X.P.push_back(detail::indicator_vec(X.web, c, clique));
        BaseData comp{base.web_size, {}};
        for (std::uint32_t i = 0; i < base.web_size; ++i)
            for (std::uint32_t j = i + 1; j < base.web_size; ++j)
                if (!detail::graph_adjacent(base, i, j)) comp.edges.push_back({i, j});
        for (auto& anti : detail::maximal_cliques(comp))
            X.Q.push_back(detail::indicator_vec(X.web, c, anti));
        for (auto& l : X.web->labels) {
            X.P.push_back(basis_vec(X.web, c, l));
            X.Q.push_back(basis_vec(X.web, c, l));
        }
        X.q_certified = true; // anticliques generate the dual exactly
    } else if (model == "pcoh") {
        for (auto& l : X.web->labels) X.P.push_back(basis_vec(X.web, c, l));
        X.Q.push_back(diag_vec(X.web, c));
        X.q_certified = true; // orth(Diag) = subprobability vectors = biorth({e_a})
    } else {
        for (auto& l : X.web->labels) {
            X.P.push_back(basis_vec(X.web, c, l));
            X.Q.push_back(basis_vec(X.web, c, l));
        }
        X.P.push_back(diag_vec(X.web, c));
        X.Q.push_back(diag_vec(X.web, c));
        X.q_certified = true; // total model: every vector is a point
    }

    if (X.web->size() > 0 && (!is_covering(X.P, *X.web) || !is_covering(X.Q, *X.web)))
        throw std::logic_error("make_space: generators fail the covering invariant");
    return X;
}

// -- exhaustive ground truth for the finite carriers -------------------------

/// All vectors over a two-valued carrier (Bool, FinBool, Coherence).
inline std::vector<Vec> enumerate_vectors(const WebPtr& web, Carrier c) {
    std::size_t n = web->size();
    if (n > 16) throw std::invalid_argument("enumerate_vectors: web too large");
    std::vector<Vec> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        Vec v = zero_vec(web, c);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) v.set(web->labels[i], one(c));
        out.push_back(std::move(v));
    }
    return out;
}

inline std::vector<Vec> orth_set(const PcrInstance& pcr, const std::vector<Vec>& universe,
                                 const std::vector<Vec>& F) {
    std::vector<Vec> out;
    for (auto& v : universe) {
        bool ok = true;
        for (auto& f : F)
            if (!orth_rel(pcr, v, f)) { ok = false; break; }
        if (ok) out.push_back(v);
    }
    return out;
}

/// Exhaustively verifies orth(Q) = biorth(P) on a finite carrier; the
/// honesty check behind q_certified flags at micro scale.
inline bool verify_certification(const SpaceRepr& X) {
    auto universe = enumerate_vectors(X.web, X.pcr.carrier);
    auto porth = orth_set(X.pcr, universe, X.P);
    auto biorth = orth_set(X.pcr, universe, porth);
    auto qorth = orth_set(X.pcr, universe, X.Q);
    return biorth == qorth;
}

} // namespace rigweb
