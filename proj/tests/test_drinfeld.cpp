#include <doctest.h>

#include <random>

#include "charlab/drinfeld.hpp"

using namespace charlab;

namespace {
WeightVector wv(std::initializer_list<Int> c) { return WeightVector(c); }
}

TEST_CASE("fundamental weight vectors") {
    // n=1: varpi_1 = alpha_1 / 2
    QVec w11 = fundamental_weight_vector(1, 1);
    CHECK(w11[0] == Rational(1, 2));

    // n=2: varpi_1 = (2 alpha_1 + alpha_2)/3
    QVec w21 = fundamental_weight_vector(2, 1);
    CHECK(w21[0] == Rational(2, 3));
    CHECK(w21[1] == Rational(1, 3));

    // Dynkin symmetry: varpi_2 of sl3 is varpi_1 with alpha_1 <-> alpha_2
    QVec w22 = fundamental_weight_vector(2, 2);
    CHECK(w22[0] == w21[1]);
    CHECK(w22[1] == w21[0]);

    CHECK_THROWS_AS(fundamental_weight_vector(2, 3), Error);

    // pairing <varpi_i, alpha_j_vee> = delta_ij through the weightlat Cartan
    for (int n = 1; n <= 4; ++n) {
        auto R = RootSystem::from_name("A" + std::to_string(n));
        for (int i = 1; i <= n; ++i) {
            QVec w = fundamental_weight_vector(n, i);
            for (int j = 1; j <= n; ++j) {
                Rational pair(0);
                for (int k = 1; k <= n; ++k)
                    pair += w[k - 1] * Rational(R.cartan()(j - 1, k - 1));
                CHECK(pair == Rational(i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("c exponents") {
    // n=1, lambda=(2), +: node 1 gets [2, 0]
    auto c = c_exponents(1, wv({2}), +1);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == std::vector<Int>({2, 0}));

    // zero weight: all lists empty
    auto cz = c_exponents(3, wv({0, 0, 0}), -1);
    for (auto& row : cz) CHECK(row.empty());

    // n=2, lambda=(1,0), +: node 1 gets [1], node 2 empty
    auto c2 = c_exponents(2, wv({1, 0}), +1);
    CHECK(c2[0] == std::vector<Int>({1}));
    CHECK(c2[1].empty());

    // strings: deg P_i = lambda_i, strictly decreasing by 2
    std::mt19937 rng(20240809);
    std::uniform_int_distribution<Int> coord(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        for (int n : {1, 2, 3}) {
            IVec v(n);
            for (int i = 0; i < n; ++i) v[i] = coord(rng);
            WeightVector lam(v);
            for (int sign : {+1, -1}) {
                auto rows = c_exponents(n, lam, sign);
                for (int i = 0; i < n; ++i) {
                    CHECK(static_cast<Int>(rows[static_cast<size_t>(i)].size()) == v[i]);
                    for (size_t j = 1; j < rows[static_cast<size_t>(i)].size(); ++j)
                        CHECK(rows[static_cast<size_t>(i)][j] ==
                              rows[static_cast<size_t>(i)][j - 1] - 2);
                }
            }
            // c+ equals c- at node i when the bracketed term vanishes
            auto plus = c_exponents(n, lam, +1);
            auto minus = c_exponents(n, lam, -1);
            for (int i = 1; i <= n; ++i) {
                Int bracket = i;
                for (int k = 1; k < i; ++k) bracket += v[k - 1];
                for (int k = i + 1; k <= n; ++k) bracket -= v[k - 1];
                if (bracket == 0)
                    CHECK(plus[static_cast<size_t>(i - 1)] == minus[static_cast<size_t>(i - 1)]);
            }
        }
    }
}

TEST_CASE("evaluation points") {
    // lambda = 0: a_+ = a eps^n, a_- = a (-1)^{n+1} eps^{2n+1}
    for (int n : {1, 2, 3}) {
        IVec z = IVec::Zero(n);
        auto plus = eval_point(n, WeightVector(z), +1);
        CHECK(plus.exponent == n);
        CHECK(plus.sign == 1);
        auto minus = eval_point(n, WeightVector(z), -1);
        CHECK(minus.exponent == 2 * n + 1);
        CHECK(minus.sign == ((n + 1) % 2 == 0 ? 1 : -1));
    }

    // as printed, the lambda-dependent terms cancel for every lambda
    CHECK(eval_point(2, wv({3, 1}), +1).exponent == 2);
    CHECK(eval_point(3, wv({1, 2, 0}), +1).exponent == 3);

    // exponent parity: the ratio a+/a- carries no a; exponents reduce mod p
    auto pm = eval_point(2, wv({1, 0}), +1, LambdaPairing::AsPrinted, Int(5));
    CHECK(pm.p == 5);
    CHECK(pm.exponent == 2);

    // cross variant: fractional exponents demand a modulus
    CHECK_THROWS_AS(eval_point(2, wv({1, 0}), +1, LambdaPairing::Cross), Error);
    auto cross = eval_point(2, wv({1, 0}), +1, LambdaPairing::Cross, Int(5));
    CHECK(cross.p == 5);
    // gcd(p, n+1) enforced
    CHECK_THROWS_AS(eval_point(2, wv({1, 0}), +1, LambdaPairing::Cross, Int(3)), Error);
}

TEST_CASE("gamma from drinfeld data") {
    // n=1, lambda=(2), p=3, +: node 1 exponents [2, 0]
    auto d = drinfeld_polynomials(1, wv({2}), +1);
    auto g = gamma_from_drinfeld(d, 3);
    CHECK(g.exponents[0] == std::vector<Int>({2, 0}));

    // zero weight
    auto g0 = gamma_from_drinfeld(drinfeld_polynomials(2, wv({0, 0}), +1), 5);
    for (auto& row : g0.exponents) CHECK(row.empty());

    // n=2, lambda=(1,0), p=5, +: node 1 [1]
    auto g2 = gamma_from_drinfeld(drinfeld_polynomials(2, wv({1, 0}), +1), 5);
    CHECK(g2.exponents[0] == std::vector<Int>({1}));
    CHECK(g2.exponents[1].empty());

    // invariance under adding p to a c-exponent
    auto d3 = drinfeld_polynomials(1, wv({3}), -1);
    auto before = gamma_from_drinfeld(d3, 5);
    d3.exponents[0][1] += 5;
    CHECK(gamma_from_drinfeld(d3, 5).exponents == before.exponents);

    // entries reduced mod p, sized by lambda_i
    auto g4 = gamma_from_drinfeld(drinfeld_polynomials(3, wv({2, 1, 3}), -1), 7);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(g4.exponents[i].size() == static_cast<size_t>(wv({2, 1, 3}).coords[i]));
        for (Int e : g4.exponents[i]) {
            CHECK(e >= 0);
            CHECK(e < 7);
        }
    }

    // the corollary fixes the base point
    CHECK_THROWS_AS(gamma_from_drinfeld(d, 3, false), Error);
    // gcd(l, n+1) = 1 enforced
    CHECK_THROWS_AS(gamma_from_drinfeld(drinfeld_polynomials(2, wv({1, 0}), +1), 3), Error);
}
