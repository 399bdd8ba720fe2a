#include <doctest.h>

#include "gl2rep/morphism.hpp"
#include "gl2rep/weights.hpp"

using namespace gl2rep;

namespace {

Comodule sym2(const Ring& ring) {
    return sym_power(standard(HopfAlgebra::gl2_full(ring), Comodule::Side::HopfRight), 2);
}

Comodule symt2(const Ring& ring) {
    return sym_tensor2(standard(HopfAlgebra::gl2_full(ring), Comodule::Side::HopfRight));
}

bool is_diag(const Intertwiner& u, const std::vector<long>& d) {
    for (size_t i = 0; i < u.u.size(); ++i)
        for (size_t j = 0; j < u.u[i].size(); ++j)
            if (u.u[i][j] != ((i == j) ? Scalar(d[i]) : Scalar(0))) return false;
    return true;
}

}  // namespace

TEST_CASE("the hom space between the symmetric square and the tensor version is a line") {
    // symmetrization direction: u11 -> e1^2, u12 -> 2 e1 e2, u22 -> e2^2
    auto basis = hom_space(symt2(Ring::integers()), sym2(Ring::integers()));
    REQUIRE(basis.size() == 1);
    CHECK(is_diag(basis[0], {1, 2, 1}));
    // and the reverse direction doubles the outer entries instead
    auto rev = hom_space(sym2(Ring::integers()), symt2(Ring::integers()));
    REQUIRE(rev.size() == 1);
    CHECK(is_diag(rev[0], {2, 1, 2}));
}

TEST_CASE("endomorphisms contain the identity and respect torus weights") {
    for (Ring ring : {Ring::integers(), Ring::rationals(), Ring::prime_field(5)}) {
        Comodule w = sym2(ring);
        auto basis = hom_space(w, w);
        bool has_id = false;
        for (auto& b : basis)
            if (is_diag(b, {1, 1, 1})) has_id = true;
        CHECK(has_id);
    }
}

TEST_CASE("over the torus the symmetric power splits into d+1 independent lines") {
    Ring q = Ring::rationals();
    HopfAlgebra gl = HopfAlgebra::gl2_full(q), gt = HopfAlgebra::gl2_t(q);
    QuotientMap qt = QuotientMap::to_t(gl, gt);
    for (int d = 1; d <= 4; ++d) {
        Comodule w = restrict_along(
            sym_power(standard(gl, Comodule::Side::HopfRight), d), qt);
        auto basis = hom_space(w, w);
        CHECK((int)basis.size() == d + 1);
        // distinct weights force every endomorphism to be diagonal
        for (auto& b : basis)
            for (int i = 0; i <= d; ++i)
                for (int j = 0; j <= d; ++j)
                    if (i != j) CHECK(b.u[i][j] == 0);
    }
}

TEST_CASE("morphisms between different symmetric powers vanish") {
    Ring q = Ring::rationals();
    Comodule v = standard(HopfAlgebra::gl2_full(q), Comodule::Side::HopfRight);
    CHECK(hom_space(sym_power(v, 2), sym_power(v, 3)).empty());
    CHECK(hom_space(sym_power(v, 1), sym_power(v, 4)).empty());
}

TEST_CASE("isomorphy of the two symmetric squares depends on the ring") {
    auto rz = iso_exists(sym2(Ring::integers()), symt2(Ring::integers()));
    CHECK(rz.status == IsoResult::Status::None);

    auto rq = iso_exists(sym2(Ring::rationals()), symt2(Ring::rationals()));
    REQUIRE(rq.status == IsoResult::Status::Found);
    CHECK(rq.witness.u[0][0] == rq.witness.u[1][1] * 2);

    auto r3 = iso_exists(sym2(Ring::prime_field(3)), symt2(Ring::prime_field(3)));
    CHECK(r3.status == IsoResult::Status::Found);

    // in characteristic 2 the symmetrization is singular and the enumeration
    // of all combinations is exhaustive
    auto r2 = iso_exists(sym2(Ring::prime_field(2)), symt2(Ring::prime_field(2)));
    CHECK(r2.status == IsoResult::Status::None);
}

TEST_CASE("over the unipotent-normalizer carrier the two squares coincide") {
    for (Ring ring : {Ring::integers(), Ring::prime_field(2)}) {
        HopfAlgebra gl = HopfAlgebra::gl2_full(ring), gn = HopfAlgebra::gl2_n(ring);
        QuotientMap q = QuotientMap::to_n(gl, gn);
        Comodule a = restrict_along(sym2(ring), q);
        Comodule b = restrict_along(symt2(ring), q);
        const Carrier& c = gn.carrier();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(c.eq(a.m[i][j], b.m[i][j]));
        auto r = iso_exists(a, b);
        REQUIRE(r.status == IsoResult::Status::Found);
    }
}

TEST_CASE("self-isomorphisms are found over every coefficient ring") {
    for (Ring ring : {Ring::integers(), Ring::rationals(), Ring::prime_field(3)}) {
        Comodule w = sym2(ring);
        auto r = iso_exists(w, w);
        REQUIRE(r.status == IsoResult::Status::Found);
    }
}

TEST_CASE("rank mismatch is rejected outright") {
    Ring q = Ring::rationals();
    Comodule v = standard(HopfAlgebra::gl2_full(q), Comodule::Side::HopfRight);
    auto r = iso_exists(sym_power(v, 1), sym_power(v, 3));
    CHECK(r.status == IsoResult::Status::None);
}

TEST_CASE("the dual comparison report") {
    Report rep = dual_iso_check();
    for (auto& c : rep.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}
