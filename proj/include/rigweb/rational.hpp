#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rigweb {

/// Exact rational arithmetic on 64-bit numerator/denominator.
/// All intermediate products go through 128-bit; overflow throws,
/// it never wraps. Denominator is kept positive and the fraction
/// reduced, so equality is plain member comparison.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_nonneg() const { return num_ >= 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return make(n, d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q" with optional sign. Throws on malformed input.
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(parse_int(s));
            return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        }
    }

private:
    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static Rat make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) throw std::overflow_error("Rat: overflow");
        Rat r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    static std::int64_t parse_int(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty");
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing junk");
        return v;
    }

    void normalize() {
        Rat r = make(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rat rat(std::int64_t n, std::int64_t d = 1) { return Rat(n, d); }

} // namespace rigweb
