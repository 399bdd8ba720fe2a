#include <doctest.h>

#include "gl2rep/points.hpp"

using namespace gl2rep;

namespace {

void check_report(const Report& r) {
    INFO(r.title);
    for (auto& c : r.checks) {
        INFO(c.name, " ", c.details);
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("point-group orders match the closed formulas") {
    for (long q : {2L, 3L, 5L}) {
        CHECK((long)enumerate_points(PointGroupKind::GL2, q).elements.size() ==
              (q * q - 1) * (q * q - q));
        CHECK((long)enumerate_points(PointGroupKind::SL2, q).elements.size() ==
              q * (q * q - 1));
        long t = (q - 1) * (q - 1);
        CHECK((long)enumerate_points(PointGroupKind::T, q).elements.size() == t);
        CHECK((long)enumerate_points(PointGroupKind::N, q).elements.size() == 2 * t);
    }
}

TEST_CASE("small enumerations and the guard") {
    CHECK(enumerate_points(PointGroupKind::GL2, 2).elements.size() == 6);
    auto n3 = enumerate_points(PointGroupKind::N, 3);
    int diag = 0, anti = 0;
    for (auto& g : n3.elements) {
        if (g.a12 == 0 && g.a21 == 0) ++diag;
        if (g.a11 == 0 && g.a22 == 0) ++anti;
    }
    CHECK(diag == 4);
    CHECK(anti == 4);
    for (auto kind : {PointGroupKind::GL2, PointGroupKind::SL2, PointGroupKind::T,
                      PointGroupKind::N, PointGroupKind::NmodT}) {
        auto pg = enumerate_points(kind, 5);
        bool has_id = false;
        for (auto& g : pg.elements)
            if (g == point_identity(kind)) has_id = true;
        CHECK(has_id);
    }
    CHECK_THROWS_AS(enumerate_points(PointGroupKind::GL2, 8), std::invalid_argument);
}

TEST_CASE("composite moduli have extra idempotents and scheme points") {
    auto idem = enumerate_points(PointGroupKind::NmodT, 6);
    REQUIRE(idem.elements.size() == 4);  // 0, 1, 3, 4
    CHECK(idem.elements[2].a11 == 3);
    // N over Z/6 is the ideal locus, strictly larger than the monomial set
    auto n6 = enumerate_points(PointGroupKind::N, 6);
    CHECK(n6.elements.size() == 16);
    bool nonmonomial = false;
    for (auto& g : n6.elements)
        if (!((g.a12 == 0 && g.a21 == 0) || (g.a11 == 0 && g.a22 == 0))) nonmonomial = true;
    CHECK(nonmonomial);
}

TEST_CASE("points act as algebra maps for every group") {
    for (long q : {2L, 3L, 5L})
        for (auto kind : {PointGroupKind::GL2, PointGroupKind::SL2, PointGroupKind::T,
                          PointGroupKind::N, PointGroupKind::NmodT})
            check_report(hopf_points_consistency(kind, q));
}

TEST_CASE("algebra-map consistency over a composite modulus") {
    check_report(hopf_points_consistency(PointGroupKind::NmodT, 6));
    check_report(hopf_points_consistency(PointGroupKind::N, 6));
}

TEST_CASE("the normalizer is cut out by generic torus conjugation") {
    for (long p : {2L, 3L, 5L}) check_report(normalizer_check(p));
    // over F_2 the normalizer consists of the identity and the swap
    auto n2 = enumerate_points(PointGroupKind::N, 2);
    REQUIRE(n2.elements.size() == 2);
    CHECK(n2.elements[0] == Point2{0, 1, 1, 0});
    CHECK(n2.elements[1] == Point2{1, 0, 0, 1});
}

TEST_CASE("the quotient sequence splits on points") {
    for (long n : {2L, 3L, 5L, 4L, 6L}) check_report(splitting_check(n));
}

TEST_CASE("root subgroups and coroots") {
    for (long p : {2L, 3L, 5L}) check_report(root_coroot_check(p));
}
