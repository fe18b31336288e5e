#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nmt {

// Exact rational on 64-bit integers, always reduced, denominator > 0.
// Mask coefficients and reproduction residuals stay tiny; anything that
// would overflow throws instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "n" or "n/d".
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(std::stoll(std::string(text)));
            const long long n = std::stoll(std::string(text.substr(0, slash)));
            const long long d = std::stoll(std::string(text.substr(slash + 1)));
            return Rational(n, d);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const long long g = std::gcd(a.den_, b.den_);
        const long long bd = b.den_ / g;
        return Rational(checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g)),
                        checked_mul(a.den_, bd));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    Rational operator-() const {
        Rational r;
        r.num_ = checked_neg(num_);
        r.den_ = den_;
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        const long long g1 = std::gcd(abs_ll(a.num_), b.den_);
        const long long g2 = std::gcd(abs_ll(b.num_), a.den_);
        return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                        checked_mul(a.den_ / g2, b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

private:
    static long long abs_ll(long long v) { return v < 0 ? checked_neg(v) : v; }

    static long long checked_neg(long long v) {
        if (v == std::numeric_limits<long long>::min())
            throw std::overflow_error("rational overflow");
        return -v;
    }
    static long long checked_mul(long long a, long long b) {
        const __int128 p = static_cast<__int128>(a) * b;
        if (p > std::numeric_limits<long long>::max() || p < std::numeric_limits<long long>::min())
            throw std::overflow_error("rational overflow");
        return static_cast<long long>(p);
    }
    static long long checked_add(long long a, long long b) {
        const __int128 s = static_cast<__int128>(a) + b;
        if (s > std::numeric_limits<long long>::max() || s < std::numeric_limits<long long>::min())
            throw std::overflow_error("rational overflow");
        return static_cast<long long>(s);
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        const long long g = std::gcd(abs_ll(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace nmt
