#pragma once

#include <Eigen/Core>
#include <ostream>

#include "charlab/rational.hpp"

namespace charlab {

/// Element of Z[sqrt2, sqrt3], stored as a + b*sqrt2 + c*sqrt3 + d*sqrt6.
/// Closed under the ring operations; carries the exact values 2*cos(pi/m)
/// for m in {2,3,4,6,inf}, which is all the Tits reflection representation
/// of a Coxeter matrix with entries in that set ever needs.
struct QuadExt {
    Int a = 0, b = 0, c = 0, d = 0;

    QuadExt() = default;
    QuadExt(Int a_) : a(a_) {}
    QuadExt(Int a_, Int b_, Int c_, Int d_) : a(a_), b(b_), c(c_), d(d_) {}

    static QuadExt sqrt2() { return {0, 1, 0, 0}; }
    static QuadExt sqrt3() { return {0, 0, 1, 0}; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {Rational::checked_add(x.a, y.a), Rational::checked_add(x.b, y.b),
                Rational::checked_add(x.c, y.c), Rational::checked_add(x.d, y.d)};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return {Rational::checked_sub(x.a, y.a), Rational::checked_sub(x.b, y.b),
                Rational::checked_sub(x.c, y.c), Rational::checked_sub(x.d, y.d)};
    }
    QuadExt operator-() const { return {-a, -b, -c, -d}; }

    // (a,b,c,d) * (a',b',c',d') with sqrt2*sqrt3 = sqrt6, sqrt6^2 = 6.
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        auto m = Rational::checked_mul;
        auto s = Rational::checked_add;
        Int ra = s(s(m(x.a, y.a), m(2, m(x.b, y.b))), s(m(3, m(x.c, y.c)), m(6, m(x.d, y.d))));
        Int rb = s(s(m(x.a, y.b), m(x.b, y.a)), m(3, s(m(x.c, y.d), m(x.d, y.c))));
        Int rc = s(s(m(x.a, y.c), m(x.c, y.a)), m(2, s(m(x.b, y.d), m(x.d, y.b))));
        Int rd = s(s(m(x.a, y.d), m(x.d, y.a)), s(m(x.b, y.c), m(x.c, y.b)));
        return {ra, rb, rc, rd};
    }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Exact sign, resolving the nested radicals by repeated squaring.
    int sign() const {
        // Write as u + v*sqrt3 with u = a + b*sqrt2, v = c + d*sqrt2.
        int su = sign_q2(a, b), sv = sign_q2(c, d);
        if (sv == 0) return su;
        if (su == 0) return sv;
        if (su == sv) return su;
        // u, v of opposite sign: sign(u + v*sqrt3) = su * sign(u^2 - 3 v^2).
        auto m = Rational::checked_mul;
        Int u2a = Rational::checked_add(m(a, a), m(2, m(b, b)));
        Int u2b = m(2, m(a, b));
        Int v2a = Rational::checked_add(m(c, c), m(2, m(d, d)));
        Int v2b = m(2, m(c, d));
        Int wa = Rational::checked_sub(u2a, m(3, v2a));
        Int wb = Rational::checked_sub(u2b, m(3, v2b));
        int sw = sign_q2(wa, wb);
        return su * sw;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
        os << x.a;
        if (x.b) os << (x.b > 0 ? "+" : "") << x.b << "r2";
        if (x.c) os << (x.c > 0 ? "+" : "") << x.c << "r3";
        if (x.d) os << (x.d > 0 ? "+" : "") << x.d << "r6";
        return os;
    }

private:
    // sign of a + b*sqrt2
    static int sign_q2(Int a, Int b) {
        if (b == 0) return a > 0 ? 1 : (a < 0 ? -1 : 0);
        if (a == 0) return b > 0 ? 1 : -1;
        if (a > 0 && b > 0) return 1;
        if (a < 0 && b < 0) return -1;
        Int a2 = Rational::checked_mul(a, a);
        Int b2 = Rational::checked_mul(2, Rational::checked_mul(b, b));
        if (a2 == b2) return 0; // impossible for integers, kept for safety
        return ((a > 0) == (a2 > b2)) ? 1 : -1;
    }
};

} // namespace charlab

namespace Eigen {
template <>
struct NumTraits<charlab::QuadExt> {
    using Real = charlab::QuadExt;
    using NonInteger = charlab::QuadExt;
    using Nested = charlab::QuadExt;
    using Literal = charlab::Int;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 4,
        MulCost = 16
    };
    static inline Real epsilon() { return {}; }
    static inline Real dummy_precision() { return {}; }
    static inline int digits10() { return 0; }
};
} // namespace Eigen
