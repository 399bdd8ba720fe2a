#pragma once

#include <tuple>

#include "gl2rep/hopf.hpp"

namespace gl2rep {

/// The finite-ring point groups this module enumerates. T and N are the
/// diagonal torus and schematic normalizer inside GL2; NmodT is the quotient
/// constant scheme, whose points are the idempotents of Z/n.
enum class PointGroupKind { GL2, SL2, T, N, NmodT };

/// One point: a 2x2 matrix over Z/n with entries in [0, n). For NmodT only
/// a11 is used and holds the idempotent.
struct Point2 {
    long a11 = 0, a12 = 0, a21 = 0, a22 = 0;
    bool operator==(const Point2& o) const = default;
    bool operator<(const Point2& o) const {
        return std::tie(a11, a12, a21, a22) < std::tie(o.a11, o.a12, o.a21, o.a22);
    }
};

struct PointGroup {
    PointGroupKind group;
    long n;
    std::vector<Point2> elements;
};

/// Exhaustive point enumeration over Z/n (guard n <= 7), with closure under
/// the group law verified. GL2: determinant a unit; SL2: determinant one;
/// T: diagonal with unit entries; N: the vanishing locus of x11*x12 and
/// x21*x22 with unit determinant (over a field exactly the monomial
/// matrices); NmodT: the idempotents of Z/n.
PointGroup enumerate_points(PointGroupKind group, long n);

Point2 point_mul(PointGroupKind group, long n, const Point2& a, const Point2& b);
Point2 point_inverse(PointGroupKind group, long n, const Point2& a);
Point2 point_identity(PointGroupKind group);

/// Points as algebra maps k[G] -> Z/n: comultiplication evaluates to the
/// matrix product, the antipode to the matrix inverse and the counit to the
/// identity point, checked on every carrier generator over random pairs
/// (deterministic seed).
Report hopf_points_consistency(PointGroupKind group, long n);

/// Conjugation of the generic torus point diag(z, w) (GL2) or diag(z, 1/z)
/// (SL2) by every group point, with Laurent-polynomial entries: the
/// off-diagonal entries vanish exactly for the points of N, matching the
/// displayed conjugation matrix and the ideal description of N.
Report normalizer_check(long p);

/// The split exact sequence T -> N -> N/T on Z/n points: pi(g) = a11*a22/D
/// lands in the idempotents with kernel T, the displayed section sigma is a
/// group map with sigma(1) = Id, and g -> (g*sigma(pi(g))^-1, pi(g)) is a
/// bijection N = T x N/T. Over composite n the idempotent count is reported
/// rather than assumed to be 2.
Report splitting_check(long n);

/// Root morphisms x_alpha, x_beta into the unipotent subgroups: the torus
/// conjugation identity t x_gamma(b) t^-1 = x_gamma(gamma(t) b) on all pairs
/// over F_p, and the coroot n_gamma(u) n_gamma(1)^-1 = diag(u, 1/u) (resp.
/// diag(1/u, u)) on all units.
Report root_coroot_check(long p);

}  // namespace gl2rep
