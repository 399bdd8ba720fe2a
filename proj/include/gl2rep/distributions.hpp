#pragma once

#include "gl2rep/hopf.hpp"
#include "gl2rep/report.hpp"

namespace gl2rep {

/// First-order Taylor data at the identity: the class of an element in
/// k[G]/I^2. For GL2 the gradient has 4 entries over (x11-1, x12, x21,
/// x22-1); for SL2 the relation D = 1 collapses x22-1 to -(x11-1) and the
/// gradient has 3 entries over (x12, x11-1, x21).
struct Jet1 {
    Scalar value;
    std::vector<Scalar> grad;
};

/// Reduce a full-coordinate-ring element to its first-order jet by
/// dual-number evaluation at the identity; 1/D contributes the jet of
/// 1 - (D - 1).
Jet1 jet1(const Carrier& c, const AlgElem& a);

/// A first-order distribution, as coefficients over the dual basis
/// z_0, ..., z_(n-1) of the jet basis.
using Dist1Elem = std::vector<Scalar>;

/// The module of first-order distributions with its Lie bracket
/// [u,v] = psi(u,v) . rho', where rho' is computed from Delta by reducing
/// both tensor legs to jets.
class Dist1Algebra {
public:
    static Dist1Algebra gl2(Ring ring);  // jet basis 1, x11-1, x12, x21, x22-1
    static Dist1Algebra sl2(Ring ring);  // jet basis 1, x12, x11-1, x21

    Ring ring() const { return ring_; }
    int dim() const { return n_; }
    Dist1Elem basis(int i) const;
    Dist1Elem zero() const { return Dist1Elem(n_, Scalar(0)); }

    /// The coefficient matrix of rho'(v_i) over the jet basis squared.
    const std::vector<std::vector<Scalar>>& rho_prime(int i) const { return rho_[i]; }

    Dist1Elem bracket(const Dist1Elem& u, const Dist1Elem& v) const;
    std::vector<std::vector<Dist1Elem>> bracket_table() const;

    std::string to_string(const Dist1Elem& u) const;

private:
    Dist1Algebra(Ring ring, bool sl2);
    Ring ring_;
    int n_;
    std::vector<std::vector<std::vector<Scalar>>> rho_;
};

/// Check that z_1, z_2, z_3, z_4 |-> e11, e12, e21, e22 carries the computed
/// bracket to the matrix commutator, with z_0 central: the Lie-algebra
/// identification Dist_1 = A{z_0} + gl_2.
Report verify_gl2_iso(Ring ring);

/// Jacobi identity on all basis triples of Dist_1 of GL2.
Report verify_jacobi(Ring ring);

/// Build Dist_1 of SL2 on the basis w_0, x, H, y, and check that
/// w_0, x, H, y |-> z_0, z_2, z_1 - z_4, z_3 is a morphism of brackets,
/// identifying the image with A{z_0} + sl_2.
Report sl2_embedding_check(Ring ring);

}  // namespace gl2rep
