#include <doctest.h>

#include "charlab/fgl.hpp"

using namespace charlab;

TEST_CASE("ring arithmetic") {
    Ring zc = Ring::cyclotomic(3);
    // z^2 = -1 - z in Z[z]/Phi_3
    RingElem z = RingElem::z_power(zc, 1);
    RingElem z2 = z * z;
    CHECK(z2 == RingElem::z_power(zc, 2));
    CHECK(z2 == -(RingElem::one(zc) + z));
    CHECK(z * z2 == RingElem::one(zc)); // z^3 = 1

    // inverses
    Ring qc = Ring::q_cyclotomic(5);
    RingElem u = RingElem::one(qc) - RingElem::z_power(qc, 2);
    RingElem uinv;
    REQUIRE(u.try_invert(uinv));
    CHECK(u * uinv == RingElem::one(qc));

    Ring zp = Ring::p_adics(3, 4);
    RingElem seven = RingElem::from_int(zp, 7);
    RingElem seveninv;
    REQUIRE(seven.try_invert(seveninv));
    CHECK(seven * seveninv == RingElem::one(zp));
    RingElem three = RingElem::from_int(zp, 3);
    RingElem dummy;
    CHECK(!three.try_invert(dummy));

    // units mod the maximal ideal
    CHECK(!three.unit_mod_maximal_ideal());
    CHECK(seven.unit_mod_maximal_ideal());
    RingElem p_in_cyc = RingElem::from_int(zc, 3);
    CHECK(!p_in_cyc.unit_mod_maximal_ideal()); // 3 = unit * (1-z)^2
    CHECK(RingElem::one(zc).unit_mod_maximal_ideal());
    RingElem one_minus_z = RingElem::one(zc) - z;
    CHECK(!one_minus_z.unit_mod_maximal_ideal());
}

TEST_CASE("formal group law axioms") {
    for (int order : {6, 10}) {
        FormalGroupLaw::additive(Ring::integers(), order);
        FormalGroupLaw::multiplicative(Ring::integers(), order);
        FormalGroupLaw::multiplicative(Ring::cyclotomic(3), order);
    }
    FormalGroupLaw::honda(Ring::p_adics(2, 6), 2, 2, 10);
    FormalGroupLaw::honda(Ring::p_adics(3, 4), 3, 1, 10);
    FormalGroupLaw::honda(Ring::rationals(), 2, 2, 10);
}

TEST_CASE("p-series") {
    // additive: [n]x = n x
    FormalGroupLaw add = FormalGroupLaw::additive(Ring::integers(), 8);
    TruncatedSeries p5 = p_series(add, 5);
    CHECK(p5.terms().size() == 1);
    CHECK(p5.coeff({1}) == RingElem::from_int(Ring::integers(), 5));

    // multiplicative, p=3: 3x - 3x^2 + x^3
    FormalGroupLaw mul = FormalGroupLaw::multiplicative(Ring::integers(), 8);
    TruncatedSeries p3 = p_series(mul, 3);
    CHECK(p3.coeff({1}) == RingElem::from_int(Ring::integers(), 3));
    CHECK(p3.coeff({2}) == RingElem::from_int(Ring::integers(), -3));
    CHECK(p3.coeff({3}) == RingElem::from_int(Ring::integers(), 1));
    CHECK(p3.terms().size() == 3);

    // [p^2] = [p] o [p], and [p][q] = [q][p] = [pq]
    FormalGroupLaw mul8 = FormalGroupLaw::multiplicative(Ring::integers(), 8);
    TruncatedSeries p2 = p_series(mul8, 2);
    TruncatedSeries p4 = p_series(mul8, 4);
    CHECK(p2.substitute({p2}) == p4);
    TruncatedSeries p6 = p_series(mul8, 6);
    CHECK(p2.substitute({p_series(mul8, 3)}) == p6);
    CHECK(p_series(mul8, 3).substitute({p2}) == p6);

    // honda height 2, p=2: [2]x = 2x + x^4 + higher, unit at x^4 mod 2
    FormalGroupLaw honda = FormalGroupLaw::honda(Ring::p_adics(2, 6), 2, 2, 10);
    TruncatedSeries h2 = p_series(honda, 2);
    CHECK(h2.coeff({1}) == RingElem::from_int(Ring::p_adics(2, 6), 2));
    CHECK(!h2.coeff({1}).unit_mod_maximal_ideal());
    CHECK(h2.coeff({4}).unit_mod_maximal_ideal());
    for (int k : {2, 3}) CHECK(!h2.coeff({k}).unit_mod_maximal_ideal());
}

TEST_CASE("torsion counts") {
    // additive over Q: only x = 0
    FormalGroupLaw addq = FormalGroupLaw::additive(Ring::rationals(), 8);
    auto t_add = torsion_count(addq, 3);
    CHECK(t_add.count == 1);

    // multiplicative over Q, p=2: roots {0, 2}
    FormalGroupLaw mulq = FormalGroupLaw::multiplicative(Ring::rationals(), 8);
    auto t2 = torsion_count(mulq, 2);
    CHECK(t2.count == 2);
    // over Q, p=3: only 0 survives
    CHECK(torsion_count(mulq, 3).count == 1);

    // multiplicative over Q[z]/Phi_p: p roots {1 - z^k}
    for (Int p : {2, 3, 5}) {
        FormalGroupLaw mulc =
            FormalGroupLaw::multiplicative(Ring::q_cyclotomic(p), static_cast<int>(p) + 4);
        auto t = torsion_count(mulc, p);
        CHECK(t.count == p);
        CHECK(static_cast<Int>(t.roots.size()) == p);
    }

    // integral cyclotomic ring: Weierstrass degree and root count agree
    FormalGroupLaw mulz3 = FormalGroupLaw::multiplicative(Ring::cyclotomic(3), 8);
    auto tz = torsion_count(mulz3, 3);
    CHECK(tz.count == 3);
    CHECK(tz.weierstrass_degree == 3);

    // honda height h over Z_p: p^h
    FormalGroupLaw honda22 = FormalGroupLaw::honda(Ring::p_adics(2, 6), 2, 2, 10);
    CHECK(torsion_count(honda22, 2).weierstrass_degree == 4);
    CHECK(torsion_count(honda22, 2).count == 4);
    FormalGroupLaw honda31 = FormalGroupLaw::honda(Ring::p_adics(3, 4), 3, 1, 10);
    CHECK(torsion_count(honda31, 3).count == 3);
}

TEST_CASE("c1 composition and the leading-term lemma") {
    Ring q = Ring::q_cyclotomic(3);
    FormalGroupLaw mul = FormalGroupLaw::multiplicative(q, 6);
    TruncatedSeries x = TruncatedSeries::variable(q, 2, 6, 0);
    TruncatedSeries y = TruncatedSeries::variable(q, 2, 6, 1);
    TruncatedSeries zero(q, 2, 6);

    // unitality and definition
    CHECK(c1_tensor(mul, x, zero) == x);
    CHECK(c1_tensor(mul, x, y) == mul.F);
    CHECK_THROWS_AS(
        c1_tensor(mul, TruncatedSeries::constant(q, 2, 6, RingElem::one(q)), y), Error);

    // degree-1 part of F(u, v) is u + v's degree-1 part
    TruncatedSeries u = x + x * y;
    TruncatedSeries v = y;
    TruncatedSeries comp = c1_tensor(mul, u, v);
    CHECK(comp.coeff({1, 0}) == RingElem::one(q));
    CHECK(comp.coeff({0, 1}) == RingElem::one(q));

    // lemma model: u0 = (1 - z) constant, nilpotent direction v; then
    // u0^-1 F(u0, v) = 1 + (u0^-1 - 1) v has an invertible constant term, and
    // a geometric-series inverse to order 4
    Ring qc = q;
    RingElem u0 = RingElem::one(qc) - RingElem::z_power(qc, 1);
    TruncatedSeries vv = TruncatedSeries::variable(qc, 1, 5, 0);
    TruncatedSeries u0s = TruncatedSeries::constant(qc, 1, 5, u0);
    TruncatedSeries fuv = mul.F.substitute({u0s, vv});
    RingElem u0inv;
    REQUIRE(u0.try_invert(u0inv));
    TruncatedSeries scaled = TruncatedSeries::constant(qc, 1, 5, u0inv) * fuv;
    CHECK(scaled.coeff({0}) == RingElem::one(qc));
    // geometric inverse of 1 + w, w = scaled - 1
    TruncatedSeries w = scaled - TruncatedSeries::constant(qc, 1, 5, RingElem::one(qc));
    TruncatedSeries inv = TruncatedSeries::constant(qc, 1, 5, RingElem::one(qc));
    TruncatedSeries wp = w;
    int sign = -1;
    for (int k = 1; k < 5; ++k) {
        TruncatedSeries signed_wp = wp;
        if (sign < 0)
            signed_wp = TruncatedSeries(qc, 1, 5) - wp;
        inv = inv + signed_wp;
        wp = wp * w;
        sign = -sign;
    }
    CHECK(inv * scaled == TruncatedSeries::constant(qc, 1, 5, RingElem::one(qc)));
}

TEST_CASE("cyclotomic ring with unit certificates") {
    for (Int p : {2, 3, 5, 7}) {
        auto data = cyclotomic_ring_K(p);
        CHECK(data.certificate_ok);
        CHECK(data.witnesses.size() == static_cast<size_t>(p - 1));
        for (auto& w : data.witnesses) {
            RingElem u = RingElem::one(data.ring) - RingElem::z_power(data.ring, w.k);
            CHECK(u * w.inverse_times_p_power == RingElem::from_int(data.ring, p));
            CHECK(w.p_exponent == 1);
        }
    }
}

TEST_CASE("hom enumeration") {
    // (Z/p)^1 -> Z/p
    CHECK(enumerate_hom(1, 5, {5}).count == 5);
    // (Z/p)^2 -> Z/p
    CHECK(enumerate_hom(2, 3, {3}).count == 9);
    // (Z/2)^1 -> Z/4: images {0, 2}
    auto h = enumerate_hom(1, 2, {4});
    CHECK(h.count == 2);
    REQUIRE(h.homs.size() == 2);
    CHECK(h.homs[0][0] == std::vector<Int>({0}));
    CHECK(h.homs[1][0] == std::vector<Int>({2}));
    // mixed group
    CHECK(enumerate_hom(2, 2, {2, 4, 3}).count == 16);
}
