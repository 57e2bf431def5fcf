#include <doctest.h>

#include <random>

#include "charlab/lusztig.hpp"
#include "charlab/qchar.hpp"

using namespace charlab;

namespace {

WeightVector wv(std::initializer_list<Int> c) { return WeightVector(c); }

EpsTChar random_eps(std::mt19937& rng, Int p, int level, int rank, int nterms) {
    std::uniform_int_distribution<Int> coord(0, p - 1);
    std::uniform_int_distribution<Int> expo(0, 2);
    std::uniform_int_distribution<Int> coeff(-3, 3);
    std::uniform_int_distribution<int> node(0, rank - 1);
    std::uniform_int_distribution<Int> tpow(-2, 2);
    EpsTChar out(ParamSpace::group(p, level));
    for (int t = 0; t < nterms; ++t) {
        QMonomial m;
        for (int v = 0; v < 3; ++v) {
            Param a(static_cast<size_t>(level));
            for (auto& x : a) x = coord(rng);
            VarKey key{v % 2 == 0 ? VarKey::W : VarKey::V, node(rng), std::move(a)};
            Int e = expo(rng);
            if (e > 0) m[key] += e;
        }
        out.add_term(tpow(rng), std::move(m), coeff(rng));
    }
    return out;
}

} // namespace

TEST_CASE("pi collapse") {
    auto A1 = RootSystem::from_name("A1");
    ParamSpace sp = ParamSpace::group(3, 1);

    // W_{1,a} + V_{1,a eps} W_{1,a} -> y + y^-1
    EpsTChar x(sp);
    x.add_term(0, {{VarKey{VarKey::W, 0, {0}}, 1}}, 1);
    x.add_term(2, {{VarKey{VarKey::W, 0, {0}}, 1}, {VarKey{VarKey::V, 0, {1}}, 1}}, 1);
    Character c = pi_collapse(x, A1);
    Character expect;
    expect.add_term(wv({1}), 1);
    expect.add_term(wv({-1}), 1);
    CHECK(c == expect);

    // empty monomial -> 1
    CHECK(pi_collapse(EpsTChar::one(sp), A1) == Character::one(1));

    // W_{1,a} W_{1,b}, a != b -> y^2
    EpsTChar two(sp);
    two.add_term(0, {{VarKey{VarKey::W, 0, {0}}, 1}, {VarKey{VarKey::W, 0, {2}}, 1}}, 1);
    CHECK(pi_collapse(two, A1) == Character::monomial(wv({2})));

    // simply-laced guard
    auto B2 = RootSystem::from_name("B2");
    EpsTChar y(ParamSpace::group(3, 1));
    y.add_term(0, {{VarKey{VarKey::V, 0, {0}}, 1}}, 1);
    CHECK_THROWS_AS(pi_collapse(y, B2), Error);
}

TEST_CASE("twist") {
    // W_{1,b}, t=1, p=2 -> W_{1,(b,0)} W_{1,(b,1)}
    EpsTChar x(ParamSpace::group(2, 1));
    x.add_term(0, {{VarKey{VarKey::W, 0, {1}}, 1}}, 1);
    EpsTChar tw = twist_hat(x, 1);
    REQUIRE(tw.terms().size() == 1);
    auto& [key, c] = *tw.terms().begin();
    CHECK(c == 1);
    QMonomial expect{{VarKey{VarKey::W, 0, {1, 0}}, 1}, {VarKey{VarKey::W, 0, {1, 1}}, 1}};
    CHECK(key.second == expect);

    // constants are fixed
    EpsTChar one = EpsTChar::one(ParamSpace::group(3, 1));
    CHECK(twist_hat(one, 2).terms().begin()->second == 1);

    // twists compose
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        EpsTChar r = random_eps(rng, 2, 1, 1, 3);
        for (int s = 0; s <= 2; ++s)
            for (int t = 0; s + t <= 2; ++t)
                CHECK(twist_hat(twist_hat(r, s), t) == twist_hat(r, s + t));
    }
}

TEST_CASE("pi and twist commute") {
    auto A1 = RootSystem::from_name("A1");
    auto A2 = RootSystem::from_name("A2");
    std::mt19937 rng(12345);
    for (Int p : {2, 3}) {
        for (int t : {1, 2}) {
            for (int trial = 0; trial < 50; ++trial) {
                EpsTChar r = random_eps(rng, p, 1, 1, 4);
                CHECK(pi_collapse(twist_hat(r, t), A1) ==
                      frobenius_twist(pi_collapse(r, A1), t, p));
                EpsTChar r2 = random_eps(rng, p, 1, 2, 4);
                CHECK(pi_collapse(twist_hat(r2, t), A2) ==
                      frobenius_twist(pi_collapse(r2, A2), t, p));
            }
        }
    }
    // pi is a ring homomorphism
    for (int trial = 0; trial < 30; ++trial) {
        EpsTChar a = random_eps(rng, 3, 1, 2, 3);
        EpsTChar b = random_eps(rng, 3, 1, 2, 3);
        CHECK(pi_collapse(a * b, RootSystem::from_name("A2")) ==
              pi_collapse(a, RootSystem::from_name("A2")) *
                  pi_collapse(b, RootSystem::from_name("A2")));
    }
}

TEST_CASE("fm expansion, sl2 strings") {
    auto A1 = RootSystem::from_name("A1");

    // W_{1,a} -> W_{1,a} (1 + V_{1, a eps})
    EpsTChar f = fm_expand(A1, sl2_string_monomial(0, 1));
    CHECK(f.terms().size() == 2);
    Character img = pi_collapse(f, A1);
    CHECK(img == weyl_character(A1, wv({1})));

    // empty monomial -> 1
    CHECK(fm_expand(A1, {}) == EpsTChar::one(ParamSpace::free_lattice()));

    // string of length m: m+1 monomials, image chi_m
    for (Int m = 0; m <= 5; ++m) {
        EpsTChar s = fm_expand(A1, sl2_string_monomial(4, m));
        CHECK(s.terms().size() == static_cast<size_t>(m + 1));
        CHECK(pi_collapse(s, A1) == weyl_character(A1, wv({m})));
        // highest monomial has coefficient 1
        CHECK(s.terms().begin()->second == 1);
    }

    // non-string monomials are rejected
    QMonomial bad;
    bad[VarKey{VarKey::W, 0, {0}}] = 1;
    bad[VarKey{VarKey::W, 0, {1}}] = 1;
    CHECK_THROWS_AS(fm_expand(A1, bad), Error);
    QMonomial bad2;
    bad2[VarKey{VarKey::W, 0, {0}}] = 2;
    CHECK_THROWS_AS(fm_expand(A1, bad2), Error);
}

TEST_CASE("fm expansion, type A fundamentals") {
    // sl3, W_{1,a}: three monomials, image chi_{(1,0)}
    auto A2 = RootSystem::from_name("A2");
    EpsTChar f = fm_expand(A2, fundamental_monomial(1, 0));
    CHECK(f.terms().size() == 3);
    CHECK(pi_collapse(f, A2) == weyl_character(A2, wv({1, 0})));
    CHECK(pi_collapse(fm_expand(A2, fundamental_monomial(2, 5)), A2) ==
          weyl_character(A2, wv({0, 1})));

    // sl4: all three fundamentals, binomial monomial counts
    auto A3 = RootSystem::from_name("A3");
    std::vector<size_t> counts{4, 6, 4};
    std::vector<WeightVector> weights{wv({1, 0, 0}), wv({0, 1, 0}), wv({0, 0, 1})};
    for (int i = 1; i <= 3; ++i) {
        EpsTChar g = fm_expand(A3, fundamental_monomial(i, 0));
        CHECK(g.terms().size() == counts[static_cast<size_t>(i - 1)]);
        CHECK(pi_collapse(g, A3) == weyl_character(A3, weights[static_cast<size_t>(i - 1)]));
    }

    // guarded: non-fundamental monomial in rank >= 2
    QMonomial bad;
    bad[VarKey{VarKey::W, 0, {0}}] = 1;
    bad[VarKey{VarKey::W, 1, {0}}] = 1;
    CHECK_THROWS_AS(fm_expand(A2, bad), Error);
}

TEST_CASE("assembly of the level-n eps,t-character") {
    auto A1 = RootSystem::from_name("A1");

    // all digits zero -> 1
    EpsTChar triv = assemble_ch_et(A1, {wv({0}), wv({0})}, wv({0}), 2, 2);
    CHECK(pi_collapse(triv, A1) == Character::one(1));

    // p=2, w=2: digit 0, tail 1: (E0_1)^[1]; image e^2 + e^-2
    EpsTChar w2 = assemble_ch_et(A1, {wv({0})}, wv({1}), 2, 1);
    Character img = pi_collapse(w2, A1);
    Character expect;
    expect.add_term(wv({2}), 1);
    expect.add_term(wv({-2}), 1);
    CHECK(img == expect);

    // p=2, w=3: digits (1,1): image chi_1 * chi_1^[1]
    EpsTChar w3 = assemble_ch_et(A1, {wv({1})}, wv({1}), 2, 1);
    CHECK(pi_collapse(w3, A1) ==
          weyl_character(A1, wv({1})) * frobenius_twist(weyl_character(A1, wv({1})), 1, 2));

    // digit outside the reduced region
    CHECK_THROWS_AS(assemble_ch_et(A1, {wv({2})}, wv({0}), 2, 1), Error);
}

TEST_CASE("assembly commutes with e_n") {
    auto A1 = RootSystem::from_name("A1");
    for (Int p : {2, 3}) {
        E1Source src(A1, E1Mode::Sl2ClosedForm, p);
        for (int n : {1, 2}) {
            for (Int w = 0; w <= 12; ++w) {
                auto digits = p_adic_decompose(wv({w}), p);
                std::vector<WeightVector> head;
                WeightVector tail = wv({0});
                Int f = 1;
                for (int i = 0; i < n; ++i)
                    head.push_back(i < static_cast<int>(digits.size()) ? digits[static_cast<size_t>(i)]
                                                                       : wv({0}));
                for (std::size_t j = static_cast<size_t>(n); j < digits.size(); ++j) {
                    tail = tail + f * digits[j];
                    f *= p;
                }
                EpsTChar hat = assemble_ch_et(A1, head, tail, p, n);
                CHECK(pi_collapse(hat, A1) == e_n(src, wv({w}), n).character);
            }
        }
    }
}
