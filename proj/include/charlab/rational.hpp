#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "charlab/error.hpp"

namespace charlab {

using Int = std::int64_t;

/// Exact rational on 64-bit parts. Always normalized: den > 0, gcd(num,den) = 1.
/// Desk-scale values only; arithmetic checks for overflow and throws.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Int to_integer() const {
        if (den_ != 1) throw_domain("rational is not an integer: " + str());
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw_domain("rational division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw_resource("integer overflow in add");
        return r;
    }
    static Int checked_sub(Int a, Int b) {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) throw_resource("integer overflow in sub");
        return r;
    }
    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw_resource("integer overflow in mul");
        return r;
    }

private:
    void normalize() {
        if (den_ == 0) throw_domain("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

inline Int checked_pow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r = Rational::checked_mul(r, base);
    return r;
}

} // namespace charlab

namespace Eigen {
template <>
struct NumTraits<charlab::Rational> {
    using Real = charlab::Rational;
    using NonInteger = charlab::Rational;
    using Nested = charlab::Rational;
    using Literal = charlab::Int;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8
    };
    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }
};
} // namespace Eigen
