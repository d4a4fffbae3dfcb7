#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wfh {

/* Exact rational arithmetic on 64-bit integers. All angle and action
 * bookkeeping in this library runs through this type; there is no floating
 * point anywhere on the exact paths. Intermediate products are computed in
 * 128-bit and overflow raises instead of wrapping. */
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    /* floor(num/den), exact */
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0)
            --q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return raw(-num_, den_); }

    Rational operator+(const Rational& o) const {
        __int128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
        __int128 d = i128(den_) * o.den_;
        return from128(n, d);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        return from128(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0)
            throw std::domain_error("rational division by zero");
        return from128(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /* "p", "-p", "p/q" */
    static Rational parse(const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("empty rational");
        auto slash = s.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(s, &used);
                if (used != s.size())
                    throw std::invalid_argument("");
                return Rational(n);
            }
            long long n = std::stoll(s.substr(0, slash), &used);
            if (used != slash)
                throw std::invalid_argument("");
            long long d = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1)
                throw std::invalid_argument("");
            return Rational(n, d);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational '" + s + "'");
        }
    }

private:
    static __int128 i128(long long v) { return static_cast<__int128>(v); }

    static Rational raw(long long n, long long d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
        constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational overflow");
        return raw(static_cast<long long>(n), static_cast<long long>(d));
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        Rational r = from128(i128(num_), i128(den_));
        num_ = r.num_;
        den_ = r.den_;
    }

    long long num_ = 0;
    long long den_ = 1;
};

/* Half-integer values, stored as twice the value. Robbin-Salamon indices of
 * endpoint crossings contribute in halves, so this is the natural codomain. */
struct HalfInt {
    long long twice = 0;

    static HalfInt of(long long integer) { return HalfInt{2 * integer}; }
    static HalfInt halves(long long twice_value) { return HalfInt{twice_value}; }

    bool is_integer() const { return twice % 2 == 0; }
    long long integer() const {
        if (!is_integer())
            throw std::logic_error("half-integer " + str() + " is not an integer");
        return twice / 2;
    }
    Rational rational() const { return Rational(twice, 2); }

    HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
    HalfInt operator-() const { return HalfInt{-twice}; }
    HalfInt& operator+=(HalfInt o) {
        twice += o.twice;
        return *this;
    }
    bool operator==(HalfInt o) const { return twice == o.twice; }
    bool operator!=(HalfInt o) const { return twice != o.twice; }

    std::string str() const {
        if (twice % 2 == 0)
            return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

inline long long lcm_ll(long long a, long long b) {
    return std::lcm(a, b);
}

/* "<rational>pi", e.g. "20pi", "13/2pi" */
inline Rational parse_pi(const std::string& s) {
    if (s.size() < 2 || s.substr(s.size() - 2) != "pi")
        throw std::invalid_argument("expected '<rational>pi', got '" + s + "'");
    return Rational::parse(s.substr(0, s.size() - 2));
}

}  // namespace wfh
