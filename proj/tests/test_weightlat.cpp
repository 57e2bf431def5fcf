#include <doctest.h>

#include <random>
#include <set>

#include "charlab/weightlat.hpp"

using namespace charlab;

namespace {

WeightVector wv(std::initializer_list<Int> c) { return WeightVector(c); }

Character random_sparse(std::mt19937& rng, int rank, int nterms) {
    std::uniform_int_distribution<Int> coord(-3, 3);
    std::uniform_int_distribution<Int> coeff(-5, 5);
    Character c;
    for (int t = 0; t < nterms; ++t) {
        IVec v(rank);
        for (int i = 0; i < rank; ++i) v[i] = coord(rng);
        c.add_term(WeightVector(v), coeff(rng));
    }
    return c;
}

} // namespace

TEST_CASE("p-adic decomposition") {
    auto A1 = RootSystem::from_name("A1");
    auto A2 = RootSystem::from_name("A2");

    // sl2, lambda=7, p=3 -> digits (1, 2)
    auto d = p_adic_decompose(wv({7}), 3);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == wv({1}));
    CHECK(d[1] == wv({2}));

    // zero weight -> empty
    CHECK(p_adic_decompose(wv({0, 0}), 5).empty());

    // sl3, lambda=(4,1), p=3 -> ((1,1), (1,0))
    auto d2 = p_adic_decompose(wv({4, 1}), 3);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == wv({1, 1}));
    CHECK(d2[1] == wv({1, 0}));

    CHECK_THROWS_AS(p_adic_decompose(wv({-1}), 3), Error);
    CHECK_THROWS_AS(p_adic_decompose(wv({3}), 1), Error);

    // round trip property over a sweep
    for (Int p : {2, 3, 5}) {
        for (Int a = 0; a <= 40; ++a) {
            auto digits = p_adic_decompose(wv({a}), p);
            Int back = 0, f = 1;
            for (auto& dg : digits) {
                CHECK(in_reduced_region(dg, p));
                back += f * dg.coords[0];
                f *= p;
            }
            CHECK(back == a);
        }
    }
    (void)A1;
    (void)A2;
}

TEST_CASE("frobenius twist") {
    // two-term support
    Character xi;
    xi.add_term(wv({1}), 1);
    xi.add_term(wv({-1}), 1);
    Character tw = frobenius_twist(xi, 1, 3);
    Character expect;
    expect.add_term(wv({3}), 1);
    expect.add_term(wv({-3}), 1);
    CHECK(tw == expect);

    // t = 0 is the identity
    CHECK(frobenius_twist(xi, 0, 3) == xi);

    // origin is fixed
    Character c0 = 2 * Character::one(1);
    CHECK(frobenius_twist(c0, 5, 2) == c0);

    // ring homomorphism + composition, on random sparse inputs
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        Character a = random_sparse(rng, 2, 4);
        Character b = random_sparse(rng, 2, 4);
        for (int t : {1, 2}) {
            CHECK(frobenius_twist(a * b, t, 2) ==
                  frobenius_twist(a, t, 2) * frobenius_twist(b, t, 2));
            CHECK(frobenius_twist(a + b, t, 2) ==
                  frobenius_twist(a, t, 2) + frobenius_twist(b, t, 2));
        }
        for (int s = 0; s <= 3; ++s)
            for (int t = 0; s + t <= 3; ++t)
                CHECK(frobenius_twist(frobenius_twist(a, s, 3), t, 3) ==
                      frobenius_twist(a, s + t, 3));
    }
}

TEST_CASE("Weyl group enumeration") {
    CHECK(RootSystem::from_name("A1").weyl_order() == 2);
    CHECK(RootSystem::from_name("A2").weyl_order() == 6);
    CHECK(RootSystem::from_name("B2").weyl_order() == 8);
    CHECK(RootSystem::from_name("A3").weyl_order() == 24);
    CHECK(RootSystem::from_name("G2").weyl_order() == 12);
    CHECK(RootSystem::from_name("B3").weyl_order() == 48);
    CHECK(RootSystem::from_name("D4").weyl_order() == 192);

    auto A2 = RootSystem::from_name("A2");
    auto& W = A2.weyl_group();
    CHECK(W[0].matrix == IMat::Identity(2, 2));
    CHECK(W[0].length == 0);

    // closure: s_i * w stays in the enumerated set
    std::set<std::vector<Int>> keys;
    auto key_of = [&](const IMat& m) {
        std::vector<Int> k;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) k.push_back(m(i, j));
        return k;
    };
    for (auto& w : W) keys.insert(key_of(w.matrix));
    for (auto& w : W)
        for (int i = 0; i < 2; ++i) {
            IMat m = A2.simple_reflection(i) * w.matrix;
            CHECK(keys.count(key_of(m)) == 1);
        }

    CHECK_THROWS_AS(RootSystem::from_name("A5"), Error);
}

TEST_CASE("root system data") {
    auto A2 = RootSystem::from_name("A2");
    CHECK(A2.positive_roots().size() == 3);
    CHECK(A2.highest_root() == wv({1, 1}));
    CHECK(A2.pairing_with_coroot(wv({1, 0}), A2.simple_root(0)) == 1);
    CHECK(A2.pairing_with_coroot(wv({1, 1}), A2.highest_root()) == 2);

    auto B2 = RootSystem::from_name("B2");
    CHECK(B2.positive_roots().size() == 4);
    auto G2 = RootSystem::from_name("G2");
    CHECK(G2.positive_roots().size() == 6);

    // invalid Cartan matrices
    IMat bad(2, 2);
    bad << 2, -1, 0, 2;
    CHECK_THROWS_AS(RootSystem::from_cartan("bad", bad), Error);
    IMat aff(2, 2);
    aff << 2, -2, -2, 2; // affine A1, not finite type
    CHECK_THROWS_AS(RootSystem::from_cartan("aff", aff), Error);
}

TEST_CASE("character arithmetic") {
    Character a = Character::monomial(wv({2}), 3);
    Character b = Character::monomial(wv({-2}), 1);
    Character p = a * b;
    CHECK(p.coeff(wv({0})) == 3);
    CHECK((a - a).is_zero());
    CHECK(Character::one(1).pow(0) == Character::one(1));

    auto A1 = RootSystem::from_name("A1");
    Character sym;
    sym.add_term(wv({1}), 1);
    sym.add_term(wv({-1}), 1);
    CHECK(sym.weyl_invariant(A1));
    Character asym = Character::monomial(wv({1}));
    CHECK(!asym.weyl_invariant(A1));
}
