#pragma once

#include <cstdint>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qk {

namespace detail {

inline __int128 abs128(__int128 v) { return v < 0 ? -v : v; }

inline __int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long narrow128(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

} // namespace detail

// Exact rational with int64 numerator/denominator. Invariant: den > 0,
// gcd(|num|, den) == 1. Intermediates go through __int128; overflow throws.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return make(static_cast<__int128>(x.num_) * y.den_ +
                        static_cast<__int128>(y.num_) * x.den_,
                    static_cast<__int128>(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return x + (-y);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return make(static_cast<__int128>(x.num_) * y.num_,
                    static_cast<__int128>(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0)
            throw std::domain_error("rational division by zero");
        return make(static_cast<__int128>(x.num_) * y.den_,
                    static_cast<__int128>(x.den_) * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) {
        return !(x == y);
    }
    friend bool operator<(const Rational& x, const Rational& y) {
        return static_cast<__int128>(x.num_) * y.den_ <
               static_cast<__int128>(y.num_) * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1)
            s += "/" + std::to_string(den_);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    static Rational make(__int128 n, __int128 d) {
        Rational r;
        r.assign128(n, d);
        return r;
    }

    void assign(long long n, long long d) { assign128(n, d); }

    void assign128(__int128 n, __int128 d) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = detail::narrow128(n);
        den_ = detail::narrow128(d);
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace qk
