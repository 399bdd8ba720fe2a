#include <doctest.h>

#include <random>

#include "gl2rep/distributions.hpp"

using namespace gl2rep;

namespace {

void check_report(const Report& r) {
    INFO(r.title);
    for (auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

AlgElem random_full(const Carrier& c, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
    AlgElem a = c.zero();
    for (int t = 0; t < 3; ++t) {
        Exps e(4);
        for (auto& x : e) x = expo(rng);
        a = c.add(a, c.comp_monomial(0, e, Scalar(coef(rng))));
    }
    if (c.localized()) a.denom_exp = (int)(rng() % 3u);
    return a;
}

}  // namespace

TEST_CASE("first-order jets of coordinate functions") {
    Carrier g(CarrierKind::GL2Full, Ring::integers());
    Jet1 j = jet1(g, g.gen(0));
    CHECK(j.value == Scalar(1));
    CHECK(j.grad == std::vector<Scalar>{1, 0, 0, 0});
    Jet1 d = jet1(g, g.gen(g.gen_index("Dinv")));
    CHECK(d.value == Scalar(1));
    CHECK(d.grad == std::vector<Scalar>{-1, 0, 0, -1});
    Jet1 p = jet1(g, g.mul(g.gen(0), g.gen(3)));
    CHECK(p.value == Scalar(1));
    CHECK(p.grad == std::vector<Scalar>{1, 0, 0, 1});
}

TEST_CASE("jet1 is a ring map to dual numbers") {
    Carrier g(CarrierKind::GL2Full, Ring::integers());
    Ring ring = g.ring();
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        AlgElem a = random_full(g, rng), b = random_full(g, rng);
        Jet1 ja = jet1(g, a), jb = jet1(g, b), jab = jet1(g, g.mul(a, b));
        CHECK(jab.value == ring.mul(ja.value, jb.value));
        for (int i = 0; i < 4; ++i)
            CHECK(jab.grad[i] == ring.add(ring.mul(ja.value, jb.grad[i]),
                                          ring.mul(jb.value, ja.grad[i])));
    }
}

TEST_CASE("rho' computed from Delta matches the displayed formulas") {
    Dist1Algebra d = Dist1Algebra::gl2(Ring::integers());
    auto expect = [&](int i, std::vector<std::pair<int, int>> ones) {
        auto& m = d.rho_prime(i);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) {
                bool hit = false;
                for (auto& [x, y] : ones)
                    if (x == a && y == b) hit = true;
                INFO("i=" << i << " a=" << a << " b=" << b);
                CHECK(m[a][b] == (hit ? Scalar(1) : Scalar(0)));
            }
    };
    expect(0, {{0, 0}});
    expect(1, {{1, 1}, {2, 3}, {0, 1}, {1, 0}});
    expect(2, {{1, 2}, {2, 4}, {0, 2}, {2, 0}});
    expect(3, {{3, 1}, {4, 3}, {0, 3}, {3, 0}});
    expect(4, {{4, 4}, {3, 2}, {0, 4}, {4, 0}});
}

TEST_CASE("the bracket table over the integers") {
    Dist1Algebra d = Dist1Algebra::gl2(Ring::integers());
    auto t = d.bracket_table();
    auto elem = [&](std::vector<std::pair<int, long>> entries) {
        Dist1Elem u = d.zero();
        for (auto& [i, c] : entries) u[i] = Scalar(c);
        return u;
    };
    CHECK(t[1][2] == elem({{2, 1}}));          // [z1,z2] = z2
    CHECK(t[1][3] == elem({{3, -1}}));         // [z1,z3] = -z3
    CHECK(t[1][4] == d.zero());                // [z1,z4] = 0
    CHECK(t[2][3] == elem({{1, 1}, {4, -1}})); // [z2,z3] = z1 - z4
    CHECK(t[2][4] == elem({{2, 1}}));          // [z2,z4] = z2
    CHECK(t[3][4] == elem({{3, -1}}));         // [z3,z4] = -z3
    for (int i = 0; i < 5; ++i) {
        CHECK(t[0][i] == d.zero());
        CHECK(t[i][0] == d.zero());
        CHECK(t[i][i] == d.zero());
        for (int j = 0; j < 5; ++j) {
            Dist1Elem neg = t[j][i];
            for (auto& c : neg) c = -c;
            CHECK(t[i][j] == neg);
        }
    }
}

TEST_CASE("the bracket is alternating and preserves Dist1+") {
    Dist1Algebra d = Dist1Algebra::gl2(Ring::rationals());
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        Dist1Elem u = d.zero(), v = d.zero();
        for (int i = 0; i < 5; ++i) {
            u[i] = Scalar(coef(rng));
            v[i] = Scalar(coef(rng));
        }
        CHECK(d.bracket(u, u) == d.zero());
        u[0] = v[0] = Scalar(0);  // value-zero distributions
        CHECK(d.bracket(u, v)[0] == Scalar(0));
    }
}

TEST_CASE("identification with A{z0} + gl2 and the Jacobi identity") {
    for (Ring ring : {Ring::integers(), Ring::prime_field(2), Ring::prime_field(5)})
        check_report(verify_gl2_iso(ring));
    for (Ring ring : {Ring::integers(), Ring::prime_field(3)})
        check_report(verify_jacobi(ring));
}

TEST_CASE("the SL2 distribution algebra embeds via x, H, y") {
    for (Ring ring : {Ring::integers(), Ring::prime_field(2)})
        check_report(sl2_embedding_check(ring));
}
