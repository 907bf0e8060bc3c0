#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rigweb/rational.hpp"

namespace rigweb {

/// The built-in coefficient carriers. Each one is a partial commutative
/// rig: a commutative multiplicative monoid whose (possibly partial)
/// summation is fixed by the carrier, not by the model using it.
enum class Carrier {
    Bool,       // complete boolean rig {0,1}, every sum defined
    ExtNonneg,  // nonnegative rationals completed with inf, every sum defined
    NonnegRat,  // nonnegative rationals, sums need a finite bound
    Coherence,  // {0, w} with w + w undefined; w is the multiplicative unit
    FinBool,    // finitary boolean: summable iff finitely many nonzero
    FinRat,     // finitary rationals (absolute, counterpart FinBool)
    Rat,        // rationals under absolute convergence (counterpart NonnegRat)
};

inline const char* carrier_tag(Carrier c) {
    switch (c) {
        case Carrier::Bool: return "bool";
        case Carrier::ExtNonneg: return "extnonneg";
        case Carrier::NonnegRat: return "nonnegrat";
        case Carrier::Coherence: return "coh";
        case Carrier::FinBool: return "finbool";
        case Carrier::FinRat: return "finrat";
        case Carrier::Rat: return "rat";
    }
    throw std::logic_error("carrier_tag: bad carrier");
}

inline std::optional<Carrier> carrier_from_tag(const std::string& tag) {
    for (Carrier c : {Carrier::Bool, Carrier::ExtNonneg, Carrier::NonnegRat,
                      Carrier::Coherence, Carrier::FinBool, Carrier::FinRat,
                      Carrier::Rat}) {
        if (tag == carrier_tag(c)) return c;
    }
    return std::nullopt;
}

/// One element of one carrier. The special element w of the Coherence
/// carrier and the 1 of the boolean carriers are all stored as the
/// rational 1; `inf` is only meaningful in ExtNonneg.
struct Scalar {
    Carrier carrier;
    Rat value;
    bool inf = false;

    bool is_zero() const { return !inf && value.is_zero(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.carrier == b.carrier && a.inf == b.inf &&
               (a.inf || a.value == b.value);
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

namespace detail {
inline bool value_in_carrier(Carrier c, const Rat& v, bool inf) {
    if (inf) return c == Carrier::ExtNonneg;
    switch (c) {
        case Carrier::Bool:
        case Carrier::FinBool:
        case Carrier::Coherence: return v == Rat(0) || v == Rat(1);
        case Carrier::ExtNonneg:
        case Carrier::NonnegRat: return v.is_nonneg();
        case Carrier::FinRat:
        case Carrier::Rat: return true;
    }
    return false;
}
} // namespace detail

inline Scalar make_scalar(Carrier c, const Rat& v, bool inf = false) {
    if (!detail::value_in_carrier(c, v, inf))
        throw std::invalid_argument(std::string("scalar ") + (inf ? "inf" : v.str()) +
                                    " not in carrier " + carrier_tag(c));
    return Scalar{c, inf ? Rat(0) : v, inf};
}

inline Scalar zero(Carrier c) { return Scalar{c, Rat(0), false}; }
inline Scalar one(Carrier c) { return Scalar{c, Rat(1), false}; }
inline Scalar omega() { return Scalar{Carrier::Coherence, Rat(1), false}; }
inline Scalar infinity() { return Scalar{Carrier::ExtNonneg, Rat(0), true}; }

namespace detail {
inline void want(const Scalar& s, Carrier c, const char* op) {
    if (s.carrier != c)
        throw std::invalid_argument(std::string(op) + ": carrier mismatch");
}
} // namespace detail

/// Total commutative multiplication. inf * 0 = 0 in ExtNonneg: the empty
/// sum must still distribute in a complete rig.
inline Scalar mul(const Scalar& a, const Scalar& b) {
    detail::want(b, a.carrier, "mul");
    if (a.carrier == Carrier::ExtNonneg) {
        if (a.is_zero() || b.is_zero()) return zero(a.carrier);
        if (a.inf || b.inf) return infinity();
    }
    return Scalar{a.carrier, a.value * b.value, false};
}

/// True iff some b has a*b = 1 (with 1 = w in the Coherence carrier).
inline bool is_invertible(const Scalar& a) {
    switch (a.carrier) {
        case Carrier::Bool:
        case Carrier::FinBool:
        case Carrier::Coherence: return !a.is_zero();
        case Carrier::ExtNonneg: return !a.inf && !a.value.is_zero();
        case Carrier::NonnegRat:
        case Carrier::FinRat:
        case Carrier::Rat: return !a.value.is_zero();
    }
    return false;
}

inline Scalar inverse(const Scalar& a) {
    if (!is_invertible(a)) throw std::domain_error("inverse: not invertible");
    if (a.value == Rat(1)) return a; // covers Bool/FinBool/Coherence units
    return Scalar{a.carrier, Rat(1) / a.value, false};
}

/// Canonical preorder of the summation: a <= b iff some z has a + z = b.
inline bool leq(const Scalar& a, const Scalar& b) {
    detail::want(b, a.carrier, "leq");
    switch (a.carrier) {
        case Carrier::Bool:
        case Carrier::FinBool:
            return a.value <= b.value; // boolean order: 0 <= 1
        case Carrier::Coherence:
            // z exists unless a = w and b = 0 (positivity)
            return a.is_zero() || !b.is_zero();
        case Carrier::ExtNonneg:
            if (b.inf) return true;
            if (a.inf) return false;
            return a.value <= b.value;
        case Carrier::NonnegRat:
            return a.value <= b.value;
        case Carrier::FinRat:
        case Carrier::Rat:
            return true; // z = b - a always exists in a group
    }
    return false;
}

inline bool carrier_is_strong(Carrier c) {
    switch (c) {
        case Carrier::FinRat:
        case Carrier::Rat: return false;
        default: return true;
    }
}

inline bool carrier_is_absolute(Carrier c) {
    return c == Carrier::FinRat || c == Carrier::Rat;
}

inline Carrier positive_counterpart(Carrier c) {
    switch (c) {
        case Carrier::FinRat: return Carrier::FinBool;
        case Carrier::Rat: return Carrier::NonnegRat;
        default:
            throw std::invalid_argument("positive_counterpart: carrier not absolute");
    }
}

/// Absolute value into the positive counterpart. FinRat maps x to the
/// boolean indicator of x != 0.
inline Scalar abs_val(const Scalar& a) {
    switch (a.carrier) {
        case Carrier::FinRat:
            return Scalar{Carrier::FinBool, a.value.is_zero() ? Rat(0) : Rat(1), false};
        case Carrier::Rat:
            return Scalar{Carrier::NonnegRat, a.value.abs(), false};
        default:
            throw std::invalid_argument("abs_val: carrier not absolute");
    }
}

/// Embeds a scalar into another carrier when the value fits (positive
/// carriers into their signed modules, 0/1 anywhere). Throws otherwise.
inline Scalar cast_scalar(const Scalar& s, Carrier target) {
    if (s.carrier == target) return s;
    return make_scalar(target, s.value, s.inf);
}

/// Scalar literal grammar: `0`, `1`, `w`, `inf`, signed `p/q`.
inline std::string scalar_str(const Scalar& s) {
    if (s.inf) return "inf";
    if (s.carrier == Carrier::Coherence && !s.is_zero()) return "w";
    return s.value.str();
}

inline Scalar scalar_parse(Carrier c, const std::string& text) {
    if (text == "w") {
        if (c != Carrier::Coherence)
            throw std::invalid_argument("scalar_parse: 'w' only in the coh carrier");
        return omega();
    }
    if (text == "inf") {
        if (c != Carrier::ExtNonneg)
            throw std::invalid_argument("scalar_parse: 'inf' only in extnonneg");
        return infinity();
    }
    return make_scalar(c, Rat::parse(text));
}

/// A carrier together with the orthogonality ball B. B must be downward
/// closed for the canonical preorder and contain 0; both hold for the two
/// shapes used by the built-in models (everything, and [0,1]).
struct PcrInstance {
    Carrier carrier;
    enum class Ball { All, UnitInterval } ball = Ball::All;

    bool strong() const { return carrier_is_strong(carrier); }
    bool absolute() const { return carrier_is_absolute(carrier); }

    bool in_ball(const Scalar& s) const {
        detail::want(s, carrier, "in_ball");
        if (ball == Ball::All) return true;
        if (s.inf) return false;
        return Rat(0) <= s.value && s.value <= Rat(1);
    }
};

} // namespace rigweb
