#pragma once

#include <map>
#include <string>
#include <vector>

#include "charlab/rational.hpp"

namespace charlab {

/// Exact coefficient rings for the series arithmetic. Zp tracks a finite
/// precision m (integers mod p^m); Cyclotomic is Z[z]/Phi_p(z); QCyclotomic is
/// Q[z]/Phi_p(z), a model of Q(zeta_p).
struct Ring {
    enum class Kind { Z, Q, Zp, Cyclotomic, QCyclotomic };
    Kind kind = Kind::Z;
    Int p = 0;      // Zp / cyclotomic modulus
    int prec = 0;   // Zp precision m

    static Ring integers() { return {Kind::Z, 0, 0}; }
    static Ring rationals() { return {Kind::Q, 0, 0}; }
    static Ring p_adics(Int p, int prec);
    static Ring cyclotomic(Int p);
    static Ring q_cyclotomic(Int p);

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.kind == b.kind && a.p == b.p && a.prec == b.prec;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

    std::string descriptor() const;
};

/// Ring element, uniformly a rational-coefficient vector: length 1 for
/// Z/Q/Zp, length p-1 for the cyclotomic rings (coordinates of 1, z, ...,
/// z^{p-2} modulo Phi_p).
class RingElem {
public:
    RingElem() = default;
    RingElem(Ring ring, std::vector<Rational> coords);

    static RingElem from_int(const Ring& ring, Int n);
    static RingElem zero(const Ring& ring) { return from_int(ring, 0); }
    static RingElem one(const Ring& ring) { return from_int(ring, 1); }
    /// z^k in a cyclotomic ring, reduced mod Phi_p.
    static RingElem z_power(const Ring& ring, Int k);

    const Ring& ring() const { return ring_; }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;

    friend RingElem operator+(const RingElem& a, const RingElem& b);
    friend RingElem operator-(const RingElem& a, const RingElem& b);
    friend RingElem operator*(const RingElem& a, const RingElem& b);
    RingElem operator-() const;
    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.ring_ == b.ring_ && a.c_ == b.c_;
    }
    friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

    /// Unit in the ring itself (exact inverse exists and is returned).
    bool try_invert(RingElem& inverse_out) const;

    /// Unit modulo the maximal ideal used for Weierstrass degrees:
    /// (p) for Zp and Z, (1-z, p) for Z[z]/Phi_p, nonzero for Q-algebras.
    bool unit_mod_maximal_ideal() const;

    std::string str() const;

private:
    void reduce();
    Ring ring_;
    std::vector<Rational> c_;
};

/// Multivariate series truncated at total degree < order.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(Ring ring, int nvars, int order);

    static TruncatedSeries variable(const Ring& ring, int nvars, int order, int index);
    static TruncatedSeries constant(const Ring& ring, int nvars, int order, const RingElem& c);

    const Ring& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::map<std::vector<int>, RingElem>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    RingElem coeff(const std::vector<int>& expo) const;
    void add_term(std::vector<int> expo, const RingElem& c);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// Substitute args[i] for variable i; all args share a variable set.
    TruncatedSeries substitute(const std::vector<TruncatedSeries>& args) const;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    Ring ring_;
    int nvars_ = 1;
    int order_ = 1;
    std::map<std::vector<int>, RingElem> terms_; // no zero coefficients stored
};

/// Two-variable formal group law F(x,y) with F(x,0)=x, F(0,y)=y, commutative
/// and associative to the truncation order (checked on construction).
struct FormalGroupLaw {
    TruncatedSeries F; // variables x, y

    static FormalGroupLaw additive(const Ring& ring, int order);
    static FormalGroupLaw multiplicative(const Ring& ring, int order);
    /// Honda-style height-h law with [p]x = p x + x^{p^h} + higher corrections,
    /// built from the logarithm sum_i x^{p^{hi}} / p^i over Q and carried into
    /// the requested ring (coefficients are p-integral).
    static FormalGroupLaw honda(const Ring& ring, Int p, int height, int order);

    void check_axioms() const;
};

/// [n]x: the n-fold F-sum of x, as a one-variable series.
TruncatedSeries p_series(const FormalGroupLaw& F, Int n);

/// F(u, v) for series with zero constant term.
TruncatedSeries c1_tensor(const FormalGroupLaw& F, const TruncatedSeries& u,
                          const TruncatedSeries& v);

struct TorsionCount {
    Int count = 0;
    int weierstrass_degree = -1; // -1 when the local route does not apply
    std::vector<RingElem> roots; // verified roots, when enumerable
};

/// Number of p-torsion points: roots of [p]x in the coefficient ring.
/// Multiplicative laws enumerate roots 1 - zeta over the p-th roots of unity
/// present in the ring and verify each by substitution; local rings (Zp,
/// Z[z]/Phi_p) also compute the Weierstrass degree of [p]x, and the two
/// answers must agree where both apply.
TorsionCount torsion_count(const FormalGroupLaw& F, Int p);

struct CyclotomicData {
    Ring ring; // Z[z]/Phi_p
    // inverse of (1 - z^k) presented as (integer-coefficient element) / p^e
    struct UnitWitness {
        Int k;
        RingElem inverse_times_p_power; // integer coordinates
        int p_exponent;
    };
    std::vector<UnitWitness> witnesses;
    bool certificate_ok = false; // prod_k (1 - z^k) == p
};

/// Z[z]/Phi_p with explicit inverses of (1-z^k) in Z[1/p][z]/Phi_p and the
/// certificate prod_{k=1}^{p-1} (1 - z^k) = p.
CyclotomicData cyclotomic_ring_K(Int p);

/// All homomorphisms (Z/p)^n -> G for G given by invariant factors
/// (d_1, ..., d_k): matrices of generator images; the count is |G[p]|^n.
struct HomEnumeration {
    Int count = 0;
    // each hom: n rows, each row the image of a generator, as a k-tuple
    std::vector<std::vector<std::vector<Int>>> homs;
};
HomEnumeration enumerate_hom(int n, Int p, const std::vector<Int>& invariant_factors);

} // namespace charlab
