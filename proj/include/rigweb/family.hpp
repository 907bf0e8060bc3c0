#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rigweb/scalar.hpp"

namespace rigweb {

/// Outcome of a partial summation. Undefined is a value of the theory,
/// not an error: most laws turn into directed implications around it.
struct SumOutcome {
    bool defined;
    Scalar sum; // meaningful only when defined

    static SumOutcome of(Scalar s) { return SumOutcome{true, s}; }
    static SumOutcome undefined(Carrier c) { return SumOutcome{false, zero(c)}; }

    friend bool operator==(const SumOutcome& a, const SumOutcome& b) {
        if (a.defined != b.defined) return false;
        return !a.defined || a.sum == b.sum;
    }
    friend bool operator!=(const SumOutcome& a, const SumOutcome& b) { return !(a == b); }
};

inline std::string outcome_str(const SumOutcome& o) {
    return o.defined ? scalar_str(o.sum) : "undef";
}

/// Symbolic infinite tails. Only the closed-form shapes needed to witness
/// every summability phenomenon the carriers exhibit.
struct Tail {
    enum class Kind { Zero, Constant, Alternating, Geometric } kind = Kind::Zero;
    Rat first;  // Constant/Alternating value, Geometric first term
    Rat ratio;  // Geometric only

    static Tail none() { return Tail{}; }
    static Tail constant(Rat r) { return Tail{Kind::Constant, r, Rat(0)}; }
    static Tail alternating(Rat r) { return Tail{Kind::Alternating, r, Rat(0)}; }
    static Tail geometric(Rat f, Rat q) { return Tail{Kind::Geometric, f, q}; }

    bool trivial() const {
        return kind == Kind::Zero ||
               (kind != Kind::Geometric && first.is_zero()) ||
               (kind == Kind::Geometric && first.is_zero());
    }
};

/// A labelled finite family plus an optional symbolic tail.
struct FamilySpec {
    Carrier carrier;
    std::vector<std::pair<std::string, Scalar>> finite;
    Tail tail;

    static FamilySpec of(Carrier c, std::vector<Scalar> vals) {
        FamilySpec f{c, {}, Tail::none()};
        int i = 0;
        for (auto& v : vals) f.finite.emplace_back("a" + std::to_string(i++), v);
        return f;
    }
};

/// Checks the FamilySpec invariants: labels distinct, entries in the
/// carrier, nontrivial tails only on the two rational carriers.
inline void validate_family(const FamilySpec& f) {
    std::set<std::string> seen;
    for (auto& [lbl, v] : f.finite) {
        if (!seen.insert(lbl).second)
            throw std::invalid_argument("family: duplicate label " + lbl);
        if (v.carrier != f.carrier)
            throw std::invalid_argument("family: entry carrier mismatch");
    }
    if (f.tail.trivial()) return;
    if (f.carrier != Carrier::Rat && f.carrier != Carrier::NonnegRat)
        throw std::invalid_argument("family: infinite tail on a finite-only carrier");
    if (f.carrier == Carrier::NonnegRat) {
        // entries must stay in the carrier
        using K = Tail::Kind;
        if (f.tail.kind == K::Alternating)
            throw std::invalid_argument("family: alternating tail leaves nonnegrat");
        if (f.tail.first < Rat(0) || (f.tail.kind == K::Geometric && f.tail.ratio < Rat(0)))
            throw std::invalid_argument("family: negative tail entry in nonnegrat");
    }
}

namespace detail {

/// Finite summation per carrier; the only partial case is Coherence.
inline SumOutcome sum_finite(Carrier c, const std::vector<Scalar>& vals) {
    switch (c) {
        case Carrier::Bool:
        case Carrier::FinBool: {
            for (auto& v : vals)
                if (!v.is_zero()) return SumOutcome::of(one(c));
            return SumOutcome::of(zero(c));
        }
        case Carrier::Coherence: {
            Scalar acc = zero(c);
            for (auto& v : vals) {
                if (v.is_zero()) continue;
                if (!acc.is_zero()) return SumOutcome::undefined(c);
                acc = v;
            }
            return SumOutcome::of(acc);
        }
        case Carrier::ExtNonneg: {
            Rat acc(0);
            for (auto& v : vals) {
                if (v.inf) return SumOutcome::of(infinity());
                acc += v.value;
            }
            return SumOutcome::of(Scalar{c, acc, false});
        }
        case Carrier::NonnegRat:
        case Carrier::FinRat:
        case Carrier::Rat: {
            Rat acc(0);
            for (auto& v : vals) acc += v.value;
            return SumOutcome::of(Scalar{c, acc, false});
        }
    }
    return SumOutcome::undefined(c);
}

/// Closed-form tail summation in NonnegRat/Rat, deciding through the
/// absolute tail: Constant(r) and Alternating(r) need r = 0, Geometric
/// needs |ratio| < 1 (or a zero head).
inline SumOutcome sum_tail(Carrier c, const Tail& t) {
    using K = Tail::Kind;
    switch (t.kind) {
        case K::Zero: return SumOutcome::of(zero(c));
        case K::Constant:
        case K::Alternating:
            if (t.first.is_zero()) return SumOutcome::of(zero(c));
            return SumOutcome::undefined(c);
        case K::Geometric: {
            if (t.first.is_zero()) return SumOutcome::of(zero(c));
            if (t.ratio.abs() < Rat(1))
                return SumOutcome::of(Scalar{c, t.first / (Rat(1) - t.ratio), false});
            return SumOutcome::undefined(c);
        }
    }
    return SumOutcome::undefined(c);
}

} // namespace detail

/// Partial summation of a family. Absolute carriers decide through the
/// positive counterpart and then compute the signed closed form; for the
/// four tail shapes both routes coincide with the formulas above.
inline SumOutcome try_sum(const FamilySpec& f) {
    validate_family(f);
    std::vector<Scalar> vals;
    vals.reserve(f.finite.size());
    for (auto& [lbl, v] : f.finite) vals.push_back(v);
    SumOutcome head = detail::sum_finite(f.carrier, vals);
    if (!head.defined) return head;
    SumOutcome tail = detail::sum_tail(f.carrier, f.tail);
    if (!tail.defined) return tail;
    return detail::sum_finite(f.carrier, {head.sum, tail.sum});
}

inline SumOutcome try_sum(Carrier c, const std::vector<Scalar>& vals) {
    return detail::sum_finite(c, vals);
}

/// Sum of n copies of 1; Undefined where the carrier refuses (Coherence
/// for n >= 2).
inline SumOutcome nat_embed(Carrier c, unsigned long long n) {
    switch (c) {
        case Carrier::Bool:
        case Carrier::FinBool:
            return SumOutcome::of(n == 0 ? zero(c) : one(c));
        case Carrier::Coherence:
            if (n >= 2) return SumOutcome::undefined(c);
            return SumOutcome::of(n == 0 ? zero(c) : omega());
        default:
            if (n > static_cast<unsigned long long>(INT64_MAX))
                throw std::overflow_error("nat_embed: value too large");
            return SumOutcome::of(Scalar{c, Rat(static_cast<std::int64_t>(n)), false});
    }
}

/// Pointwise absolute value of a family, landing in the counterpart.
/// |Alternating(r)| is Constant(|r|); |Geometric(f,q)| is Geometric(|f|,|q|).
inline FamilySpec abs_family(const FamilySpec& f) {
    if (!carrier_is_absolute(f.carrier))
        throw std::invalid_argument("abs_family: carrier not absolute");
    FamilySpec g{positive_counterpart(f.carrier), {}, Tail::none()};
    for (auto& [lbl, v] : f.finite) g.finite.emplace_back(lbl, abs_val(v));
    using K = Tail::Kind;
    switch (f.tail.kind) {
        case K::Zero: break;
        case K::Constant:
        case K::Alternating: g.tail = Tail::constant(f.tail.first.abs()); break;
        case K::Geometric: g.tail = Tail::geometric(f.tail.first.abs(), f.tail.ratio.abs()); break;
    }
    return g;
}

// -- partition shapes usable on families with symbolic tails ----------------

/// A partition of a FamilySpec: arbitrary blocks on the finite part, and
/// one of three closed-form treatments of the tail.
struct FamilyPartition {
    std::vector<std::vector<std::size_t>> finite_blocks; // indices into finite
    enum class TailMode { NoTail, WholeBlock, Pairs } tail_mode = TailMode::NoTail;
};

/// Inner sums of every block. The tail pairs (2k, 2k+1) re-sum to a tail
/// of the same shape: Constant(r) -> Constant(2r), Alternating(r) ->
/// zeros, Geometric(f,q) -> Geometric(f(1+q), q^2).
struct PartitionedSums {
    bool all_blocks_defined;
    FamilySpec outer; // block sums as a family (may itself carry a tail)
};

inline PartitionedSums partition_sums(const FamilySpec& f, const FamilyPartition& p) {
    PartitionedSums out{true, FamilySpec{f.carrier, {}, Tail::none()}};
    int bi = 0;
    for (auto& block : p.finite_blocks) {
        std::vector<Scalar> vals;
        for (auto idx : block) vals.push_back(f.finite.at(idx).second);
        SumOutcome s = try_sum(f.carrier, vals);
        if (!s.defined) { out.all_blocks_defined = false; return out; }
        out.outer.finite.emplace_back("b" + std::to_string(bi++), s.sum);
    }
    using M = FamilyPartition::TailMode;
    using K = Tail::Kind;
    switch (p.tail_mode) {
        case M::NoTail:
            break;
        case M::WholeBlock: {
            SumOutcome s = detail::sum_tail(f.carrier, f.tail);
            if (!s.defined) { out.all_blocks_defined = false; return out; }
            out.outer.finite.emplace_back("btail", s.sum);
            break;
        }
        case M::Pairs: {
            switch (f.tail.kind) {
                case K::Zero: break;
                case K::Constant:
                    out.outer.tail = Tail::constant(f.tail.first + f.tail.first);
                    break;
                case K::Alternating:
                    out.outer.tail = Tail::none(); // r + (-r) = 0 in each pair
                    break;
                case K::Geometric:
                    out.outer.tail = Tail::geometric(f.tail.first * (Rat(1) + f.tail.ratio),
                                                     f.tail.ratio * f.tail.ratio);
                    break;
            }
            break;
        }
    }
    return out;
}

} // namespace rigweb
