#pragma once

#include <memory>

#include "gl2rep/report.hpp"
#include "gl2rep/tensor.hpp"

namespace gl2rep {

/// A Hopf algebra over one of the supported carriers, given by generator
/// images for the comultiplication, antipode and counit; all three extend to
/// arbitrary elements as algebra maps.
class HopfAlgebra {
public:
    static HopfAlgebra gl2_full(Ring ring);
    static HopfAlgebra sl2_full(Ring ring);
    static HopfAlgebra gl2_n(Ring ring);
    static HopfAlgebra sl2_n(Ring ring);
    static HopfAlgebra gl2_t(Ring ring);
    static HopfAlgebra sl2_t(Ring ring);
    static HopfAlgebra nmodt(Ring ring);
    /// The constant group scheme with two elements, on A[z]/(z^2-z) stored in
    /// the idempotent basis z = e1. Two antipode candidates exist in the
    /// literature; antipode_identity selects S = id, otherwise S(z) = 1.
    static HopfAlgebra weyl_const(Ring ring, bool antipode_identity = true);

    const std::string& name() const { return name_; }
    const Carrier& carrier() const { return *carrier_; }
    const TensorSpace& square() const { return *square_; }
    Ring ring() const { return carrier_->ring(); }

    TensorSpace::Elem comultiply(const AlgElem& e) const;
    AlgElem antipode(const AlgElem& e) const;
    Scalar counit(const AlgElem& e) const;

    const std::vector<TensorSpace::Elem>& delta_images() const { return delta_; }
    const std::vector<AlgElem>& antipode_images() const { return s_; }
    const std::vector<Scalar>& counit_images() const { return eps_; }

    /// Coassociativity, counit and antipode identities on every generator.
    Report verify_axioms() const;

private:
    HopfAlgebra(std::string name, CarrierKind kind, Ring ring);

    std::string name_;
    std::shared_ptr<const Carrier> carrier_;
    std::shared_ptr<const TensorSpace> square_;
    std::vector<TensorSpace::Elem> delta_;
    std::vector<AlgElem> s_;
    std::vector<Scalar> eps_;
};

/// Apply the algebra map determined by per-generator images.
AlgElem map_elem(const Carrier& src, const Carrier& dst,
                 const std::vector<AlgElem>& images, const AlgElem& e);

/// A Hopf-algebra quotient map, stored as generator images.
class QuotientMap {
public:
    QuotientMap(const HopfAlgebra& source, const HopfAlgebra& target,
                std::vector<AlgElem> images);

    /// k[G] -> k[N], k[G] -> k[T], or k[N] -> k[T] for either group.
    static QuotientMap to_n(const HopfAlgebra& full, const HopfAlgebra& n);
    static QuotientMap to_t(const HopfAlgebra& full, const HopfAlgebra& t);
    static QuotientMap n_to_t(const HopfAlgebra& n, const HopfAlgebra& t);

    const HopfAlgebra& source() const { return *source_; }
    const HopfAlgebra& target() const { return *target_; }
    const std::vector<AlgElem>& images() const { return images_; }

    AlgElem apply(const AlgElem& e) const;
    /// Apply the map to both legs of a tensor over the source carrier.
    TensorSpace::Elem apply_both(const TensorSpace& src_sq, const TensorSpace& dst_sq,
                                 const TensorSpace::Elem& x) const;

    /// Hopf-map identity Delta_target(q(g)) = (q (x) q)(Delta_source(g)) on
    /// all generators, plus counit compatibility.
    Report verify() const;

private:
    const HopfAlgebra* source_;
    const HopfAlgebra* target_;
    std::vector<AlgElem> images_;
};

/// The right coaction sigma_T = (id (x) pi_T) . Delta_N of the torus on k[N].
/// Verifies sigma_T(w(i,j)) = w(i,j) (x) t1^i t2^j on the exponent window
/// |i|,|j| <= bound and that the fixed elements span exactly A{e1,e2}.
Report invariant_subalgebra_check(const HopfAlgebra& n, const HopfAlgebra& t, int bound = 4);

/// Unique decomposition of window monomials of k[N] over the basis {w(i,j)}
/// (or {w_i} for SL2) with coefficients in A{e1,e2}.
Report free_basis_check(const HopfAlgebra& n, int bound = 4);

/// The Hopf structure of A[z]/(z^2-z): axiom check, agreement with k[N/T]
/// under z -> e1, and the antipode candidate comparison.
Report weyl_constant_scheme_check(Ring ring);

}  // namespace gl2rep
