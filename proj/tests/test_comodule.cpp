#include <doctest.h>

#include "gl2rep/comodule.hpp"

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

TEST_CASE("standard comodules verify and have identity counit matrix") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z);
    for (auto side : {Comodule::Side::HopfLeft, Comodule::Side::HopfRight}) {
        Comodule v = standard(gl, side);
        check_report(verify_comodule(v));
    }
    // column of e1: (x11, x12) hopf-left, (x11, x21) hopf-right
    Comodule r = standard(gl, Comodule::Side::HopfLeft);
    CHECK(gl.carrier().eq(r.m[1][0], gl.carrier().gen(1)));
    Comodule l = standard(gl, Comodule::Side::HopfRight);
    CHECK(gl.carrier().eq(l.m[1][0], gl.carrier().gen(2)));
}

TEST_CASE("sym_power reproduces the degree-2 matrix") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z);
    const Carrier& c = gl.carrier();
    Comodule v = standard(gl, Comodule::Side::HopfRight);
    Comodule s2 = sym_power(v, 2);
    AlgElem x11 = c.gen(0), x12 = c.gen(1), x21 = c.gen(2), x22 = c.gen(3);
    // middle row (2 x11 x21, x11 x22 + x12 x21, 2 x12 x22)
    CHECK(c.eq(s2.m[1][0], c.scale(c.mul(x11, x21), Scalar(2))));
    CHECK(c.eq(s2.m[1][1], c.add(c.mul(x11, x22), c.mul(x12, x21))));
    CHECK(c.eq(s2.m[1][2], c.scale(c.mul(x12, x22), Scalar(2))));
    // d = 1 is the comodule itself
    Comodule s1 = sym_power(v, 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(c.eq(s1.m[i][j], v.m[i][j]));
}

TEST_CASE("sym_power comodule axioms hold for d <= 4") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z);
    Comodule v = standard(gl, Comodule::Side::HopfLeft);
    for (int d = 0; d <= 4; ++d) {
        Report r = verify_comodule(sym_power(v, d));
        INFO("d = " << d);
        CHECK(r.all_pass());
    }
}

TEST_CASE("tensor product and symmetric tensors") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z);
    const Carrier& c = gl.carrier();
    Comodule v = standard(gl, Comodule::Side::HopfRight);
    Comodule t = tensor_product(v, v);
    CHECK(t.rank() == 4);
    // column of e1 (x) e1 has entries x11^2, x11 x21, x21 x11, x21^2
    CHECK(c.eq(t.m[0][0], c.mul(c.gen(0), c.gen(0))));
    CHECK(c.eq(t.m[1][0], c.mul(c.gen(0), c.gen(2))));
    CHECK(c.eq(t.m[2][0], c.mul(c.gen(2), c.gen(0))));
    CHECK(c.eq(t.m[3][0], c.mul(c.gen(2), c.gen(2))));
    check_report(verify_comodule(t));
    Comodule s = sym_tensor2(v);
    // middle column (2 x11 x12, x11 x22 + x12 x21, 2 x21 x22)
    CHECK(c.eq(s.m[0][1], c.scale(c.mul(c.gen(0), c.gen(1)), Scalar(2))));
    CHECK(c.eq(s.m[1][1], c.add(c.mul(c.gen(0), c.gen(3)), c.mul(c.gen(1), c.gen(2)))));
    CHECK(c.eq(s.m[2][1], c.scale(c.mul(c.gen(2), c.gen(3)), Scalar(2))));
    check_report(verify_comodule(s));
}

TEST_CASE("restriction to k[N] reproduces the pair-carrier coaction") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z), gn = HopfAlgebra::gl2_n(z);
    QuotientMap q = QuotientMap::to_n(gl, gn);
    const Carrier& nc = gn.carrier();
    Comodule v = standard(gl, Comodule::Side::HopfLeft);
    Comodule r = restrict_along(v, q);
    CHECK(nc.eq(r.m[0][0], nc.gen(nc.gen_index("t1"))));
    CHECK(nc.eq(r.m[1][0], nc.gen(nc.gen_index("u1"))));
    check_report(verify_comodule(r));
    // Delta_{N,2}(e1 e2) = (t1 t2, u1 u2) (x) e1 e2
    Comodule s2n = restrict_along(sym_power(v, 2), q);
    AlgElem mid = nc.add(nc.comp_monomial(0, {1, 1}, Scalar(1)),
                         nc.comp_monomial(1, {1, 1}, Scalar(1)));
    CHECK(nc.eq(s2n.m[1][1], mid));
    CHECK(nc.is_zero(s2n.m[0][1]));
    CHECK(nc.is_zero(s2n.m[2][1]));
}

TEST_CASE("restriction commutes with sym_power for d <= 6") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z), gn = HopfAlgebra::gl2_n(z);
    QuotientMap q = QuotientMap::to_n(gl, gn);
    Comodule v = standard(gl, Comodule::Side::HopfLeft);
    Comodule vn = restrict_along(v, q);
    for (int d = 0; d <= 6; ++d) {
        Comodule a = restrict_along(sym_power(v, d), q);
        Comodule b = sym_power(vn, d);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) CHECK(gn.carrier().eq(a.m[i][j], b.m[i][j]));
    }
}

TEST_CASE("duals via transpose inverse") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z);
    const Carrier& c = gl.carrier();
    Comodule v = standard(gl, Comodule::Side::HopfRight);
    Comodule ds = dual(sym_tensor2(v));
    // (1,1) entry x22^2 / D^2
    AlgElem expect = c.mul(c.mul(c.gen(3), c.gen(3)),
                           c.pow(c.gen(c.gen_index("Dinv")), 2));
    CHECK(c.eq(ds.m[0][0], expect));
    check_report(verify_comodule(ds));
    Comodule dm = dual(sym_power(v, 2));
    // (1,2) entry -2 x21 x22 / D^2
    AlgElem e12 = c.scale(c.mul(c.mul(c.gen(2), c.gen(3)),
                                c.pow(c.gen(c.gen_index("Dinv")), 2)),
                          Scalar(-2));
    CHECK(c.eq(dm.m[0][1], e12));
    check_report(verify_comodule(dm));
    // double dual is the identity on structure matrices
    Comodule dd = dual(dual(v));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(c.eq(dd.m[i][j], v.m[i][j]));
}

TEST_CASE("dual weights after restriction to the torus") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z), gt = HopfAlgebra::gl2_t(z);
    QuotientMap q = QuotientMap::to_t(gl, gt);
    Comodule v = standard(gl, Comodule::Side::HopfRight);
    Comodule r = restrict_along(dual(sym_power(v, 2)), q);
    const Carrier& tc = gt.carrier();
    CHECK(tc.eq(r.m[0][0], tc.comp_monomial(0, {-2, 0}, Scalar(1))));
    CHECK(tc.eq(r.m[1][1], tc.comp_monomial(0, {-1, -1}, Scalar(1))));
    CHECK(tc.eq(r.m[2][2], tc.comp_monomial(0, {0, -2}, Scalar(1))));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(tc.is_zero(r.m[i][j]));
}

TEST_CASE("over F2 the two degree-2 constructions differ but both verify") {
    Ring f2 = Ring::prime_field(2);
    HopfAlgebra gl = HopfAlgebra::gl2_full(f2);
    Comodule v = standard(gl, Comodule::Side::HopfRight);
    Comodule a = sym_power(v, 2), b = sym_tensor2(v);
    bool all_equal = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!gl.carrier().eq(a.m[i][j], b.m[i][j])) all_equal = false;
    CHECK_FALSE(all_equal);
    CHECK(verify_comodule(a).all_pass());
    CHECK(verify_comodule(b).all_pass());
}

TEST_CASE("carrier inverses") {
    Ring z = Ring::integers();
    Carrier g(CarrierKind::GL2Full, z);
    AlgElem d = g.zero();
    d.comp[0] = det_poly(z);
    CHECK(g.eq(*carrier_inverse(g, d), g.gen(g.gen_index("Dinv"))));
    CHECK_FALSE(carrier_inverse(g, g.gen(0)).has_value());
    Carrier n(CarrierKind::GL2N, z);
    AlgElem a = n.add(n.comp_monomial(0, {1, 2}, Scalar(1)),
                      n.comp_monomial(1, {0, -1}, Scalar(-1)));
    CHECK(n.eq(n.mul(*carrier_inverse(n, a), a), n.one()));
    CHECK_FALSE(carrier_inverse(n, n.gen(0)).has_value());  // (t1, 0) kills e2
}
