#pragma once

#include <optional>

#include "gl2rep/hopf.hpp"

namespace gl2rep {

/// A comodule over a Hopf carrier, stored as its structure matrix: with the
/// coefficient written on the Hopf side, Delta(e_j) = sum_i M[i][j] (x) e_i.
/// The side flag records whether the source writes the coaction as
/// W -> k[G] (x) W (left Hopf leg) or W -> W (x) k[G]; the convention changes
/// the coassociativity identity, not the storage.
struct Comodule {
    enum class Side { HopfLeft, HopfRight };

    HopfAlgebra hopf;
    Side side;
    std::vector<std::string> basis;
    std::vector<std::vector<AlgElem>> m;  // m[i][j]

    int rank() const { return (int)basis.size(); }
};

/// The rank-2 standard comodule with the generic-matrix coaction.
/// HopfLeft: Delta(e1) = x11 (x) e1 + x12 (x) e2 (column (x11, x12));
/// HopfRight: Delta(e1) = e1 (x) x11 + e2 (x) x21 (column (x11, x21)).
Comodule standard(const HopfAlgebra& h, Comodule::Side side);

/// Symmetric power on the monomial basis e1^d, e1^(d-1) e2, ..., e2^d
/// (no divided powers), by expanding the d-fold product of the rank-2
/// coaction.
Comodule sym_power(const Comodule& v, int d);

/// Tensor product on the basis of basis pairs, in row-major order.
Comodule tensor_product(const Comodule& a, const Comodule& b);

/// The symmetric-tensor subcomodule of V (x) V on the invariant basis
/// u11 = e1(x)e1, u12 = e1(x)e2 + e2(x)e1, u22 = e2(x)e2. Throws
/// std::domain_error if the span is not preserved.
Comodule sym_tensor2(const Comodule& v);

/// Multiplicative inverse in the carrier, when the element is a unit
/// (a scalar unit times a power of D on the localized carrier; componentwise
/// unit monomials on Laurent and idempotent carriers).
std::optional<AlgElem> carrier_inverse(const Carrier& c, const AlgElem& a);

/// Determinant of a square matrix of carrier elements (Laplace expansion).
AlgElem carrier_det(const Carrier& c, const std::vector<std::vector<AlgElem>>& m);

/// Inverse of a square carrier matrix via adjugate over determinant; nullopt
/// when the determinant is not a carrier unit.
std::optional<std::vector<std::vector<AlgElem>>> carrier_matrix_inverse(
    const Carrier& c, const std::vector<std::vector<AlgElem>>& m);

/// The dual comodule: structure matrix is the transpose of the inverse.
/// Throws std::domain_error ("not dualizable") if the matrix is not
/// invertible over the carrier.
Comodule dual(const Comodule& w);

/// Apply a quotient map entrywise; the result is a comodule over the target.
Comodule restrict_along(const Comodule& w, const QuotientMap& q);

/// Coassociativity and counit identities, checked entrywise.
Report verify_comodule(const Comodule& w);

}  // namespace gl2rep
