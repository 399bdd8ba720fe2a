#include <doctest.h>

#include "gl2rep/hopf.hpp"

using namespace gl2rep;

TEST_CASE("hopf axioms pass for every algebra over Z and F2") {
    for (Ring ring : {Ring::integers(), Ring::prime_field(2)}) {
        for (auto h : {HopfAlgebra::gl2_full(ring), HopfAlgebra::sl2_full(ring),
                       HopfAlgebra::gl2_n(ring), HopfAlgebra::sl2_n(ring),
                       HopfAlgebra::gl2_t(ring), HopfAlgebra::sl2_t(ring),
                       HopfAlgebra::nmodt(ring), HopfAlgebra::weyl_const(ring)}) {
            Report r = h.verify_axioms();
            INFO(r.title);
            for (auto& c : r.checks) {
                INFO(c.name);
                CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("comultiplication on generators and on D") {
    HopfAlgebra h = HopfAlgebra::gl2_full(Ring::integers());
    const Carrier& c = h.carrier();
    const TensorSpace& sq = h.square();
    auto x11 = c.gen(0), x12 = c.gen(1), x21 = c.gen(2);
    CHECK(sq.eq(h.comultiply(x11), sq.add(sq.embed({x11, x11}), sq.embed({x12, x21}))));
    CHECK(sq.eq(h.comultiply(c.one()), sq.one()));
    AlgElem d = c.zero();
    d.comp[0] = det_poly(c.ring());
    CHECK(sq.eq(h.comultiply(d), sq.embed({d, d})));  // D is group-like
}

TEST_CASE("antipode and counit on generators") {
    HopfAlgebra h = HopfAlgebra::gl2_full(Ring::integers());
    const Carrier& c = h.carrier();
    AlgElem dinv = c.gen(c.gen_index("Dinv"));
    CHECK(c.eq(h.antipode(c.gen(1)), c.neg(c.mul(c.gen(1), dinv))));  // S(x12) = -x12/D
    CHECK(h.counit(c.gen(2)) == Scalar(0));
    CHECK(c.eq(h.antipode(c.one()), c.one()));
    AlgElem d = c.zero();
    d.comp[0] = det_poly(c.ring());
    CHECK(h.counit(d) == Scalar(1));
    CHECK(h.counit(c.mul(c.gen(0), c.gen(3))) == Scalar(1));  // eps(x11 x22) = 1
}

TEST_CASE("SL2 antipode has no denominators") {
    HopfAlgebra h = HopfAlgebra::sl2_full(Ring::integers());
    const Carrier& c = h.carrier();
    CHECK(c.eq(h.antipode(c.gen(0)), c.gen(3)));
    CHECK(c.eq(h.antipode(c.gen(1)), c.neg(c.gen(1))));
}

TEST_CASE("quotient maps are Hopf maps on all generators") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z), sl = HopfAlgebra::sl2_full(z);
    HopfAlgebra gn = HopfAlgebra::gl2_n(z), sn = HopfAlgebra::sl2_n(z);
    HopfAlgebra gt = HopfAlgebra::gl2_t(z), st = HopfAlgebra::sl2_t(z);
    for (const QuotientMap& q :
         {QuotientMap::to_n(gl, gn), QuotientMap::to_n(sl, sn), QuotientMap::to_t(gl, gt),
          QuotientMap::to_t(sl, st), QuotientMap::n_to_t(gn, gt),
          QuotientMap::n_to_t(sn, st)}) {
        Report r = q.verify();
        INFO(r.title);
        for (auto& c : r.checks) {
            INFO(c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("quotient map kills cross products of diagonal and antidiagonal coordinates") {
    Ring z = Ring::integers();
    HopfAlgebra gl = HopfAlgebra::gl2_full(z), gn = HopfAlgebra::gl2_n(z);
    QuotientMap q = QuotientMap::to_n(gl, gn);
    const Carrier& c = gl.carrier();
    CHECK(gn.carrier().is_zero(q.apply(c.mul(c.gen(0), c.gen(1)))));  // x11 x12 -> 0
    // 1/D -> (t1^-1 t2^-1, -u1^-1 u2^-1)
    AlgElem expect = gn.carrier().add(
        gn.carrier().comp_monomial(0, {-1, -1}, Scalar(1)),
        gn.carrier().comp_monomial(1, {-1, -1}, Scalar(-1)));
    CHECK(gn.carrier().eq(q.apply(c.gen(c.gen_index("Dinv"))), expect));
}

TEST_CASE("torus invariants of k[N] span the idempotent subalgebra") {
    Ring z = Ring::integers();
    HopfAlgebra gn = HopfAlgebra::gl2_n(z), gt = HopfAlgebra::gl2_t(z);
    Report r = invariant_subalgebra_check(gn, gt, 2);
    INFO(r.title);
    CHECK(r.all_pass());
    HopfAlgebra sn = HopfAlgebra::sl2_n(z), st = HopfAlgebra::sl2_t(z);
    Report rs = invariant_subalgebra_check(sn, st, 2);
    CHECK(rs.all_pass());
}

TEST_CASE("free basis decomposition over A{e1,e2}") {
    Ring z = Ring::integers();
    for (auto n : {HopfAlgebra::gl2_n(z), HopfAlgebra::sl2_n(z)}) {
        Report r = free_basis_check(n, 2);
        INFO(r.title);
        for (auto& c : r.checks) {
            INFO(c.name << ": " << c.details);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("constant Weyl group scheme") {
    Report r = weyl_constant_scheme_check(Ring::integers());
    for (auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}
