#pragma once

#include "gl2rep/comodule.hpp"

namespace gl2rep {

/// A comodule morphism W1 -> W2 with entries in the coefficient ring:
/// a scalar matrix U with U M1 = M2 U over the Hopf carrier.
struct Intertwiner {
    std::vector<std::vector<Scalar>> u;  // rank(W2) x rank(W1)
};

/// Basis of the space of intertwiners, found by expanding U M1 - M2 U = 0
/// into exact linear equations by matching every carrier monomial. Over a
/// field this is a basis of the solution space; over Z the rational solution
/// basis is scaled to primitive integer vectors.
std::vector<Intertwiner> hom_space(const Comodule& w1, const Comodule& w2);

struct IsoResult {
    enum class Status { Found, None, Undecided };
    Status status;
    Intertwiner witness;  // meaningful when status == Found
    std::string detail;
};

/// Search the hom space for a matrix invertible over the coefficient ring.
/// Over a small field the combinations are enumerated exhaustively; over Q
/// a basis sweep plus seeded random combinations decides the generic case;
/// over Z the decision is exact for diagonal solution spaces (the ones
/// occurring here) and reports Undecided otherwise.
IsoResult iso_exists(const Comodule& w1, const Comodule& w2);

/// The dual comparison: the duals of the second symmetric power and of the
/// symmetric tensor square have entrywise-equal structure matrices over
/// k[N] (with t1^-2 in the corner), admit no isomorphism over Z on the full
/// carrier, but become isomorphic over F_3.
Report dual_iso_check();

}  // namespace gl2rep
