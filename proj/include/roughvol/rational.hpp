#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace roughvol {

/// Exact rational arithmetic on 64-bit integers. All operations normalize
/// (positive denominator, coprime) and throw on overflow, so equality is
/// structural equality.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Best rational approximation of x with denominator <= max_den
    /// (continued fractions); throws if no approximation within tol exists.
    static Rational from_double(double x, double tol = 1e-12, std::int64_t max_den = 1'000'000'000);

    Rational operator-() const { return Rational(-num_, den_, NoNormalize{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_), Add{}),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct NoNormalize {};
    struct Add {};
    Rational(std::int64_t n, std::int64_t d, NoNormalize) : num_(n), den_(d) {}

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        __int128 r = static_cast<__int128>(a) * b;
        if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("Rational: overflow");
        return static_cast<std::int64_t>(r);
    }
    static std::int64_t checked(std::int64_t a, std::int64_t b, Add) {
        __int128 r = static_cast<__int128>(a) + b;
        if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("Rational: overflow");
        return static_cast<std::int64_t>(r);
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::from_double(double x, double tol, std::int64_t max_den) {
    // Stern-Brocot / continued fraction expansion.
    bool neg = x < 0;
    double y = neg ? -x : x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = y;
    for (int it = 0; it < 64; ++it) {
        std::int64_t a = static_cast<std::int64_t>(frac);
        std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - y) <= tol) return Rational(neg ? -p1 : p1, q1);
        double rem = frac - static_cast<double>(a);
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 > 0 && std::abs(static_cast<double>(p1) / static_cast<double>(q1) - y) <= tol)
        return Rational(neg ? -p1 : p1, q1);
    throw std::domain_error("Rational::from_double: no rational approximation within tolerance");
}

} // namespace roughvol
