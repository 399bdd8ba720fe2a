#pragma once

#include "gl2rep/comodule.hpp"

namespace gl2rep {

/// A multiplicative character of the diagonal torus, t1^a t2^b. For the SL2
/// torus only the exponent a is meaningful (b stays 0).
struct Weight {
    int a = 0;
    int b = 0;
    bool operator==(const Weight&) const = default;
};

/// Characters are Laurent polynomials in x1, x2 with nonnegative integer
/// coefficients counting basis vectors of each weight.
using Character = SparsePoly;

/// One Weyl orbit of the weight multiset: the basis indices it spans, their
/// weights, and the block of the structure matrix they carry.
struct RefinedBlock {
    std::vector<int> indices;
    std::vector<Weight> weights;
    std::vector<std::vector<AlgElem>> m;
};

struct RefinedDecomposition {
    std::vector<RefinedBlock> blocks;
};

struct IrreducibilityResult {
    bool irreducible = false;
    std::string witness;  // a spanning line when reducible, empty otherwise
};

/// Read the weights off a diagonal structure matrix over a torus carrier.
/// Throws std::domain_error("not diagonalized") unless every diagonal entry
/// is a single monomial with coefficient 1 and off-diagonal entries vanish.
std::vector<Weight> extract_weights(const Comodule& wt);

/// <rho_(m,n), gamma_(u,v)> = m u + n v.
int pairing(const Weight& w, const std::pair<int, int>& coroot);

/// s_gamma(rho) = rho - <rho, gamma*> gamma; for gamma in {alpha, -alpha}
/// with alpha = (1,-1) this swaps the two exponents.
Weight reflect(const Weight& w, const std::pair<int, int>& root);

/// Partition basis indices into Weyl orbits: indices whose weight lies in
/// {w, s_alpha(w)} share a part. Parts appear in first-occurrence order.
std::vector<std::vector<int>> weyl_orbits(const std::vector<Weight>& ws);

/// Split a comodule over k[N] along the Weyl orbits of the given weights
/// (taken from the T-restriction of the same comodule, in basis order).
/// Throws std::domain_error("block not closed") if any structure-matrix
/// entry couples an orbit to its complement.
RefinedDecomposition refined_decompose(const Comodule& wn, const std::vector<Weight>& ws);

/// Sum of x1^a x2^b over the weight multiset.
Character character(const std::vector<Weight>& ws);

/// Closed form for the character of the i-th orbit block of the d-th
/// symmetric power: x2^(d-i) x1^i + x2^i x1^(d-i), collapsing to the single
/// monomial x1^k x2^k for the middle block of even d = 2k.
Character refined_character(int d, int i);

/// Decide whether a block of rank <= 2 over k[N] has a one-dimensional
/// subcomodule, over a field. A line k(v_1 + s v_2) is invariant iff the
/// per-monomial quadratic constraints in s admit a common root, so the test
/// reduces to root-finding on the gcd of those quadratics; the second axis
/// is an invariant line iff its column is diagonal. Over a prime field the
/// verdict is cross-checked by enumerating all p + 1 lines.
IrreducibilityResult is_irreducible_block(const Carrier& c, const RefinedBlock& b);

/// Weights of a diagonal comodule over the SL2 torus, as integers.
std::vector<int> sl2_weights(const Comodule& wt);

}  // namespace gl2rep
