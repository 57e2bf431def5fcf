#pragma once

#include <map>
#include <vector>

#include "charlab/weightlat.hpp"

namespace charlab {

/// Spectral-parameter space: either the finite group (Z/p)^level, or a free
/// "generic" lattice Z used during Frenkel-Mukhin-style expansion, where
/// eps-shifts must never collide.
struct ParamSpace {
    bool generic = false;
    Int p = 0;     // group case
    int level = 0; // group case; generic uses a single integer coordinate

    static ParamSpace group(Int p, int level) { return {false, p, level}; }
    static ParamSpace free_lattice() { return {true, 0, 1}; }

    friend bool operator==(const ParamSpace& a, const ParamSpace& b) {
        return a.generic == b.generic && a.p == b.p && a.level == b.level;
    }
    friend bool operator!=(const ParamSpace& a, const ParamSpace& b) { return !(a == b); }
};

/// Spectral parameter: a tuple in (Z/p)^level, or a single integer in the
/// generic lattice (the exponent of the eps-shift from a formal base point).
using Param = std::vector<Int>;

/// eps-shift: in the group case the shift acts on the first coordinate.
Param param_shift(const ParamSpace& space, const Param& a, Int steps);

struct VarKey {
    enum Kind : int { W = 0, V = 1 };
    Kind kind = W;
    int node = 0; // 0-based
    Param a;

    friend bool operator<(const VarKey& x, const VarKey& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.node != y.node) return x.node < y.node;
        return x.a < y.a;
    }
    friend bool operator==(const VarKey& x, const VarKey& y) {
        return x.kind == y.kind && x.node == y.node && x.a == y.a;
    }
};

/// Monomial in the V_{i,a}, W_{i,a} with nonnegative exponents.
using QMonomial = std::map<VarKey, Int>;

/// Laurent polynomial in t over monomials in V_{i,a}, W_{i,a}.
class EpsTChar {
public:
    using TermKey = std::pair<Int, QMonomial>; // (t-exponent, monomial)
    using Terms = std::map<TermKey, Int>;

    EpsTChar() = default;
    explicit EpsTChar(ParamSpace space) : space_(space) {}

    static EpsTChar one(ParamSpace space) {
        EpsTChar c(space);
        c.add_term(0, {}, 1);
        return c;
    }

    const ParamSpace& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Int t_exp, QMonomial m, Int coeff);

    friend EpsTChar operator+(const EpsTChar& x, const EpsTChar& y);
    friend EpsTChar operator*(const EpsTChar& x, const EpsTChar& y);
    EpsTChar& operator+=(const EpsTChar& o) { return *this = *this + o; }
    EpsTChar& operator*=(const EpsTChar& o) { return *this = *this * o; }

    friend bool operator==(const EpsTChar& x, const EpsTChar& y) {
        return x.space_ == y.space_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const EpsTChar& x, const EpsTChar& y) { return !(x == y); }

    std::string str() const;

private:
    ParamSpace space_;
    Terms terms_;
};

/// Collapse homomorphism Pi: t -> 1, monomial -> prod_i y_i^{sum_a u_{i,a}}
/// with u^{i,a} = w_{i,a} - v_{i,a eps^-1} - v_{i,a eps} + sum_{j: C_ji = -1} v_{j,a}.
/// Simply-laced types only (the formula assumes off-diagonal Cartan entries
/// in {0,-1}).
Character pi_collapse(const EpsTChar& x, const RootSystem& R);

/// [t]-twist: replace every parameter index b by the full coset
/// {b xi : xi in (Z/p)^t}, exponents preserved. Coset coordinates are appended
/// at the end, so iterated twists compose: (x^[s])^[t] = x^[s+t].
EpsTChar twist_hat(const EpsTChar& x, int t);

/// Reduce a generic-lattice character into (Z/p)^level: the integer shift k
/// becomes (k mod p, 0, ..., 0).
EpsTChar reduce_to_group(const EpsTChar& x, Int p, int level);

/// Lift (Z/p)^m -> (Z/p)^level by appending zero coordinates.
EpsTChar lift_level(const EpsTChar& x, int level);

/// Guarded Frenkel-Mukhin-style expansion in the generic lattice.
/// Supported highest monomials: a single sl2 string
/// W_{1,a} W_{1,a eps^2} ... W_{1,a eps^{2(m-1)}}, and a type-A fundamental
/// W_{i,a}. Everything else raises unsupported-configuration.
EpsTChar fm_expand(const RootSystem& R, const QMonomial& highest, std::size_t step_cap = 10000);

/// Convenience: the sl2 string of length m based at shift a.
QMonomial sl2_string_monomial(Int a, Int m);
/// Type-A fundamental variable W_{i,a} (i is 1-based).
QMonomial fundamental_monomial(int node, Int a);

/// Level-n assembly: (E0_{w'})^[n] * prod_{i<n} (Ehat1_{w^(i)})^[i].
/// Ehat1 factors are produced by fm_expand per digit (type A1 strings) and
/// reduced into (Z/p)^1; the E0 tail converts through its weight multiset at
/// a single base parameter.
EpsTChar assemble_ch_et(const RootSystem& R, const std::vector<WeightVector>& digits,
                        const WeightVector& tail, Int p, int level);

/// E0-to-EpsTChar conversion: each weight mu = lambda - sum v_i alpha_i of the
/// character becomes W^lambda V^v at one base parameter of (Z/p)^level.
EpsTChar character_to_eps(const RootSystem& R, const WeightVector& lambda, const Character& chi,
                          Int p, int level);

} // namespace charlab
