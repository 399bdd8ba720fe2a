#include <doctest.h>

#include "gl2rep/adjoint.hpp"

using namespace gl2rep;

namespace {

void check_report(const Report& r) {
    INFO(r.title);
    for (auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("conjugation reproduces the displayed adjoint matrix") {
    Ring z = Ring::integers();
    Comodule ad = adjoint_gl2_points(z);
    const Carrier& c = ad.hopf.carrier();
    AlgElem dinv = c.gen(c.gen_index("Dinv"));
    // first column: Ad(e11) = e11 (x) x11 x22 / D - e12 (x) x11 x12 / D
    //                        + e21 (x) x21 x22 / D - e22 (x) x12 x21 / D
    CHECK(c.eq(ad.m[0][0], c.mul(c.mul(c.gen(0), c.gen(3)), dinv)));
    CHECK(c.eq(ad.m[1][0], c.neg(c.mul(c.mul(c.gen(0), c.gen(1)), dinv))));
    CHECK(c.eq(ad.m[2][0], c.mul(c.mul(c.gen(2), c.gen(3)), dinv)));
    CHECK(c.eq(ad.m[3][0], c.neg(c.mul(c.mul(c.gen(1), c.gen(2)), dinv))));
    // Ad(e12) has e12-coefficient x11^2 / D
    CHECK(c.eq(ad.m[1][1], c.mul(c.mul(c.gen(0), c.gen(0)), dinv)));
}

TEST_CASE("the coordinate construction exposes the I/I^2 matrix through its dual") {
    Ring z = Ring::integers();
    Comodule prim = dual(adjoint_gl2_coords(z));
    const Carrier& c = prim.hopf.carrier();
    AlgElem dinv = c.gen(c.gen_index("Dinv"));
    // Ad(t1) has e_x-coefficient x21 x22 / D
    CHECK(c.eq(prim.m[1][0], c.mul(c.mul(c.gen(2), c.gen(3)), dinv)));
}

TEST_CASE("both adjoint constructions agree and satisfy the axioms") {
    for (Ring ring : {Ring::integers(), Ring::rationals(), Ring::prime_field(2),
                      Ring::prime_field(5)})
        check_report(adjoint_equality(ring));
}

TEST_CASE("restrictions to the normalizer and torus") {
    for (Ring ring : {Ring::integers(), Ring::prime_field(3)})
        check_report(adjoint_restrictions(ring));
}

TEST_CASE("the sl2 adjoint") {
    for (Ring ring : {Ring::integers(), Ring::prime_field(2), Ring::prime_field(5)})
        check_report(adjoint_sl2_check(ring));
}
