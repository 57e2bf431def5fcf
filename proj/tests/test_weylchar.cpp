#include <doctest.h>

#include "charlab/weylchar.hpp"

using namespace charlab;

namespace {
WeightVector wv(std::initializer_list<Int> c) { return WeightVector(c); }
}

TEST_CASE("weyl character, small closed forms") {
    auto A1 = RootSystem::from_name("A1");
    auto A2 = RootSystem::from_name("A2");

    // sl2, lambda=2 -> e^2 + e^0 + e^-2
    Character chi2 = weyl_character(A1, wv({2}));
    Character expect;
    expect.add_term(wv({2}), 1);
    expect.add_term(wv({0}), 1);
    expect.add_term(wv({-2}), 1);
    CHECK(chi2 == expect);

    // trivial module
    CHECK(weyl_character(A2, wv({0, 0})) == Character::one(2));

    // adjoint of sl3: dim 8, weight-zero multiplicity 2
    Character adj = weyl_character(A2, wv({1, 1}));
    CHECK(adj.dimension() == 8);
    CHECK(adj.coeff(wv({0, 0})) == 2);
    CHECK(adj.coeff(wv({1, 1})) == 1);
    CHECK(adj.weyl_invariant(A2));

    CHECK_THROWS_AS(weyl_character(A1, wv({-1})), Error);
}

TEST_CASE("freudenthal examples") {
    auto A1 = RootSystem::from_name("A1");
    auto A2 = RootSystem::from_name("A2");

    auto m3 = freudenthal_multiplicities(A1, wv({3}));
    REQUIRE(m3.size() == 2); // dominant weights 3 and 1
    CHECK(m3.at(wv({3})) == 1);
    CHECK(m3.at(wv({1})) == 1);
    Character c3 = freudenthal_character(A1, wv({3}));
    CHECK(c3.coeff(wv({-1})) == 1);
    CHECK(c3.coeff(wv({-3})) == 1);
    CHECK(c3.dimension() == 4);

    auto m0 = freudenthal_multiplicities(A1, wv({0}));
    REQUIRE(m0.size() == 1);
    CHECK(m0.at(wv({0})) == 1);

    // minuscule weight of sl3: 3 weights, multiplicity 1 each
    Character f = freudenthal_character(A2, wv({1, 0}));
    CHECK(f.support_size() == 3);
    CHECK(f.dimension() == 3);
}

TEST_CASE("weyl = freudenthal and dimension formula, sweep") {
    for (auto name : {"A1", "A2", "B2", "A3"}) {
        auto R = RootSystem::from_name(name);
        const int n = R.rank();
        std::vector<IVec> all;
        IVec c = IVec::Zero(n);
        while (true) {
            if (c.sum() <= 4) all.push_back(c);
            int k = 0;
            while (k < n) {
                if (++c[k] <= 4) break;
                c[k] = 0;
                ++k;
            }
            if (k == n) break;
        }
        for (auto& v : all) {
            WeightVector lambda(v);
            Character w = weyl_character(R, lambda);
            CHECK(w == freudenthal_character(R, lambda));
            CHECK(w.dimension() == weyl_dimension(R, lambda));
        }
    }
}

TEST_CASE("tensor decomposition") {
    auto A1 = RootSystem::from_name("A1");
    auto A2 = RootSystem::from_name("A2");

    // Clebsch-Gordan: chi_1 * chi_1 = chi_2 + chi_0
    Character chi1 = weyl_character(A1, wv({1}));
    auto cg = tensor_decompose(A1, chi1, chi1);
    REQUIRE(cg.size() == 2);
    CHECK(cg.at(wv({2})) == 1);
    CHECK(cg.at(wv({0})) == 1);

    // unit of the ring
    auto unit = tensor_decompose(A2, weyl_character(A2, wv({0, 0})), weyl_character(A2, wv({2, 1})));
    REQUIRE(unit.size() == 1);
    CHECK(unit.at(wv({2, 1})) == 1);

    // 3 x 3bar = 8 + 1
    auto d = tensor_decompose(A2, weyl_character(A2, wv({1, 0})), weyl_character(A2, wv({0, 1})));
    REQUIRE(d.size() == 2);
    CHECK(d.at(wv({1, 1})) == 1);
    CHECK(d.at(wv({0, 0})) == 1);

    // symmetry + dimension bookkeeping over a small sweep
    for (Int a = 0; a <= 2; ++a)
        for (Int b = 0; b <= 2; ++b) {
            Character x = weyl_character(A2, wv({a, 1}));
            Character y = weyl_character(A2, wv({b, 0}));
            auto xy = tensor_decompose(A2, x, y);
            auto yx = tensor_decompose(A2, y, x);
            CHECK(xy == yx);
            Int total = 0;
            for (auto& [nu, m] : xy) total += m * weyl_dimension(A2, nu);
            CHECK(total == x.dimension() * y.dimension());
        }

    CHECK_THROWS_AS(tensor_decompose(A1, Character::monomial(wv({1})), chi1), Error);
}

TEST_CASE("character table cache") {
    auto B2 = RootSystem::from_name("B2");
    DominantCharacterTable table(B2);
    const Character& a = table.get(wv({1, 1}));
    const Character& b = table.get(wv({1, 1}));
    CHECK(a == b);
    CHECK(a == weyl_character(B2, wv({1, 1})));
    CHECK(a.dimension() == 16);
}
