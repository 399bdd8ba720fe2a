#include <doctest.h>

#include "gl2rep/weights.hpp"

using namespace gl2rep;

namespace {

Comodule sym_over_t(int d) {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z), gt = HopfAlgebra::gl2_t(z);
    return restrict_along(sym_power(standard(gl, Comodule::Side::HopfLeft), d),
                          QuotientMap::to_t(gl, gt));
}

Comodule sym_over_n(int d, Ring ring) {
    HopfAlgebra gl = HopfAlgebra::gl2_full(ring), gn = HopfAlgebra::gl2_n(ring);
    return restrict_along(sym_power(standard(gl, Comodule::Side::HopfLeft), d),
                          QuotientMap::to_n(gl, gn));
}

}  // namespace

TEST_CASE("weight extraction from diagonal torus matrices") {
    auto w3 = extract_weights(sym_over_t(3));
    REQUIRE(w3.size() == 4);
    CHECK(w3[0] == Weight{3, 0});
    CHECK(w3[1] == Weight{2, 1});
    CHECK(w3[2] == Weight{1, 2});
    CHECK(w3[3] == Weight{0, 3});
    auto w0 = extract_weights(sym_over_t(0));
    REQUIRE(w0.size() == 1);
    CHECK(w0[0] == Weight{0, 0});
}

TEST_CASE("weight extraction rejects non-diagonal matrices") {
    Ring z = Ring::integers();
    HopfAlgebra gt = HopfAlgebra::gl2_t(z);
    const Carrier& c = gt.carrier();
    Comodule bad{gt, Comodule::Side::HopfLeft, {"e1", "e2"}, {}};
    bad.m = {{c.gen(0), c.gen(0)}, {c.zero(), c.gen(1)}};
    CHECK_THROWS_AS(extract_weights(bad), std::domain_error);
    Comodule scaled{gt, Comodule::Side::HopfLeft, {"e1"}, {{c.scale(c.gen(0), Scalar(2))}}};
    CHECK_THROWS_AS(extract_weights(scaled), std::domain_error);
}

TEST_CASE("pairing and reflection") {
    std::pair<int, int> alpha{1, -1};
    CHECK(pairing(Weight{1, -1}, alpha) == 2);
    CHECK(reflect(Weight{5, 2}, alpha) == Weight{2, 5});
    CHECK(reflect(Weight{4, 4}, alpha) == Weight{4, 4});
    CHECK(reflect(Weight{5, 2}, {-1, 1}) == Weight{2, 5});
    // involution on a sweep of weights
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            CHECK(reflect(reflect(Weight{a, b}, alpha), alpha) == Weight{a, b});
}

TEST_CASE("Weyl orbits partition the weights") {
    auto parts3 = weyl_orbits(extract_weights(sym_over_t(3)));
    REQUIRE(parts3.size() == 2);
    CHECK(parts3[0] == std::vector<int>{0, 3});
    CHECK(parts3[1] == std::vector<int>{1, 2});
    auto parts2 = weyl_orbits(extract_weights(sym_over_t(2)));
    REQUIRE(parts2.size() == 2);
    CHECK(parts2[0] == std::vector<int>{0, 2});
    CHECK(parts2[1] == std::vector<int>{1});
    CHECK(weyl_orbits(extract_weights(sym_over_t(0))).size() == 1);
    // repeated fixed weights land in one orbit, as for the adjoint
    auto adj = weyl_orbits({{0, 0}, {-1, 1}, {1, -1}, {0, 0}});
    REQUIRE(adj.size() == 2);
    CHECK(adj[0] == std::vector<int>{0, 3});
    CHECK(adj[1] == std::vector<int>{1, 2});
}

TEST_CASE("refined decomposition of the second symmetric power") {
    Ring z = Ring::integers();
    Comodule wn = sym_over_n(2, z);
    auto ws = extract_weights(sym_over_t(2));
    auto dec = refined_decompose(wn, ws);
    REQUIRE(dec.blocks.size() == 2);
    const Carrier& c = wn.hopf.carrier();
    auto& b0 = dec.blocks[0];
    CHECK(b0.indices == std::vector<int>{0, 2});
    CHECK(c.eq(b0.m[0][0], c.comp_monomial(0, {2, 0}, Scalar(1))));
    CHECK(c.eq(b0.m[0][1], c.comp_monomial(1, {0, 2}, Scalar(1))));
    CHECK(c.eq(b0.m[1][0], c.comp_monomial(1, {2, 0}, Scalar(1))));
    CHECK(c.eq(b0.m[1][1], c.comp_monomial(0, {0, 2}, Scalar(1))));
    auto& b1 = dec.blocks[1];
    CHECK(b1.indices == std::vector<int>{1});
    AlgElem mid = c.add(c.comp_monomial(0, {1, 1}, Scalar(1)),
                        c.comp_monomial(1, {1, 1}, Scalar(1)));
    CHECK(c.eq(b1.m[0][0], mid));
}

TEST_CASE("refined decomposition closes for d <= 8 with matching orbit weights") {
    Ring z = Ring::integers();
    for (int d = 0; d <= 8; ++d) {
        auto ws = extract_weights(sym_over_t(d));
        auto dec = refined_decompose(sym_over_n(d, z), ws);
        CHECK((int)dec.blocks.size() == (d + 2) / 2);
        for (size_t i = 0; i < dec.blocks.size(); ++i) {
            auto& b = dec.blocks[i];
            REQUIRE(!b.weights.empty());
            CHECK(b.weights.front() == Weight{d - (int)i, (int)i});
            if (b.weights.size() == 2) CHECK(b.weights.back() == Weight{(int)i, d - (int)i});
        }
    }
}

TEST_CASE("block-not-closed is reported") {
    // a fake weight list that groups e1^2 with e1 e2 forces leakage
    Ring z = Ring::integers();
    Comodule wn = sym_over_n(2, z);
    CHECK_THROWS_WITH_AS(refined_decompose(wn, {{2, 0}, {0, 2}, {1, 1}}), "block not closed",
                         std::domain_error);
}

TEST_CASE("characters and the refined character formula") {
    CHECK(refined_character(2, 1).to_string({"x1", "x2"}) == "x1*x2");
    CHECK(refined_character(3, 0) == character({{3, 0}, {0, 3}}));
    for (int d = 0; d <= 10; ++d) {
        SparsePoly total(Ring::integers(), 2, true);
        for (int i = 0; 2 * i <= d; ++i) total = total + refined_character(d, i);
        CHECK(total == character(extract_weights(sym_over_t(d))));
    }
    CHECK_THROWS_AS(refined_character(4, 3), std::invalid_argument);
    // Weyl symmetry: swapping x1 and x2 fixes every refined character
    for (int d = 0; d <= 10; ++d)
        for (int i = 0; 2 * i <= d; ++i) {
            SparsePoly ch = refined_character(d, i);
            SparsePoly sw(Ring::integers(), 2, true);
            for (auto& [e, coef] : ch.terms()) sw.add_term({e[1], e[0]}, coef);
            CHECK(ch == sw);
        }
}

TEST_CASE("symmetric-power blocks are irreducible over fields") {
    for (Ring ring : {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3),
                      Ring::prime_field(5)}) {
        for (int d = 0; d <= 6; ++d) {
            Comodule wn = sym_over_n(d, ring);
            auto dec = refined_decompose(wn, extract_weights(sym_over_t(d)));
            for (auto& b : dec.blocks) {
                auto r = is_irreducible_block(wn.hopf.carrier(), b);
                INFO(ring.name() << " d=" << d);
                CHECK(r.irreducible);
            }
        }
    }
}

TEST_CASE("the trace line is detected as a subcomodule") {
    // the weight-(0,0) block of the adjoint: the identity matrix spans an
    // invariant line, so the block is reducible
    for (Ring ring : {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(5)}) {
        Carrier c(CarrierKind::GL2N, ring);
        RefinedBlock b;
        b.indices = {0, 1};
        b.weights = {{0, 0}, {0, 0}};
        AlgElem on_t = c.comp_monomial(0, {0, 0}, Scalar(1));
        AlgElem on_w = c.comp_monomial(1, {0, 0}, Scalar(1));
        b.m = {{on_t, on_w}, {on_w, on_t}};
        auto r = is_irreducible_block(c, b);
        CHECK_FALSE(r.irreducible);
        CHECK(r.witness == "v1 + 1 v2");
    }
}

TEST_CASE("SL2 weights") {
    Ring z = Ring::integers();
    HopfAlgebra sl = HopfAlgebra::sl2_full(z), st = HopfAlgebra::sl2_t(z);
    QuotientMap q = QuotientMap::to_t(sl, st);
    Comodule v = restrict_along(standard(sl, Comodule::Side::HopfLeft), q);
    CHECK(sl2_weights(v) == std::vector<int>{1, -1});
    Comodule triv{st, Comodule::Side::HopfLeft, {"e"}, {{st.carrier().one()}}};
    CHECK(sl2_weights(triv) == std::vector<int>{0});
}
