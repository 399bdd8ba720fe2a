#pragma once

#include "gl2rep/carrier.hpp"

namespace gl2rep {

/// Tensor product of carrier algebras over the base ring, realized by
/// variable doubling: an element is a grid of polynomials indexed by a
/// component choice per leg, each polynomial living over the concatenation of
/// the legs' variables, plus one denominator exponent per localized leg.
class TensorSpace {
public:
    explicit TensorSpace(std::vector<const Carrier*> legs);
    /// The empty tensor product (no legs): scalars of the given ring, used as
    /// the target of counit legs.
    explicit TensorSpace(Ring ring);

    struct Elem {
        std::map<std::vector<int>, SparsePoly> cells;  // nonzero cells only
        std::vector<int> denom;                        // per-leg denominator exponent
    };

    int nlegs() const { return (int)legs_.size(); }
    const Carrier& leg(int l) const { return *legs_[l]; }
    int leg_arity(int l) const { return legs_[l]->arity(0); }
    int leg_offset(int l) const { return offsets_[l]; }
    int arity() const { return arity_; }
    bool laurent() const { return laurent_; }
    Ring ring() const { return ring_; }

    Elem zero() const;
    Elem one() const;
    Elem from_scalar(const Scalar& c) const;
    /// Pure tensor factors[0] (x) ... (x) factors[n-1].
    Elem embed(const std::vector<AlgElem>& factors) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, const Scalar& c) const;

    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;
    void canonicalize(Elem& a) const;

    /// Apply the algebra map given on generators of leg `leg` by gen_images
    /// (elements of `sub`), leaving the other legs alone. The result lives in
    /// `result`, whose legs must be this space's legs with `leg` replaced by
    /// the legs of `sub` (possibly none).
    Elem apply_leg(const TensorSpace& result, int leg, const TensorSpace& sub,
                   const std::vector<Elem>& gen_images, const Elem& x) const;

    /// Multiply adjacent legs la and la+1 (same carrier) into a single leg at
    /// position la; this is the multiplication map of that carrier.
    Elem merge_legs(const TensorSpace& result, int la, const Elem& x) const;

    std::string to_string(const Elem& a) const;

private:
    std::vector<const Carrier*> legs_;
    std::vector<int> offsets_;
    int arity_;
    bool laurent_;
    Ring ring_;

    void check(const Elem& a) const;
    SparsePoly embedded(int l, const SparsePoly& p) const;  // into full arity at leg l
    SparsePoly det_at(int l) const;
    Elem align(const Elem& a, const std::vector<int>& denom) const;
};

}  // namespace gl2rep
