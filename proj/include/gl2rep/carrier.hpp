#pragma once

#include <map>
#include <string>
#include <vector>

#include "gl2rep/poly.hpp"

namespace gl2rep {

/// The concrete coordinate rings this library computes in.
///
///   GL2Full   k[GL2] = A[x11,x12,x21,x22][1/D]
///   SL2Full   k[SL2] = A[x11,x12,x21,x22]/(D-1)
///   GL2N      k[N]   = A[t1^,t2^] (+) A[u1^,u2^]          (Laurent, 2 components)
///   SL2N      k[N]   = A[t^] (+) A[u^]  with v = -1/u
///   GL2T      k[T]   = A[t1^,t2^]
///   SL2T      k[T]   = A[t^]
///   NmodT     k[N/T] = A{e1,e2}, e_i idempotent, e1e2 = 0
///   WeylConst k[S(2)] = A[z]/(z^2-z), stored in the idempotent basis z = e1
enum class CarrierKind { GL2Full, SL2Full, GL2N, SL2N, GL2T, SL2T, NmodT, WeylConst };

/// An element of a carrier: one polynomial per direct-sum component, plus a
/// denominator exponent (numerator / D^denom_exp) for the localized carrier.
struct AlgElem {
    std::vector<SparsePoly> comp;
    int denom_exp = 0;
};

/// The determinant D = x11*x22 - x12*x21 in a 4-variable polynomial ring.
SparsePoly det_poly(Ring ring);

/// Exact division of a 4-variable polynomial by D; nullopt when not
/// divisible. Unsupported (throws std::domain_error) over a composite Z/n,
/// where no canonical localized form exists.
std::optional<SparsePoly> exact_divide_by_D(const SparsePoly& p);

class Carrier {
public:
    Carrier(CarrierKind kind, Ring ring);

    CarrierKind kind() const { return kind_; }
    Ring ring() const { return ring_; }
    int ncomp() const { return (int)arities_.size(); }
    int arity(int c) const { return arities_[c]; }
    bool laurent(int c) const { return laurent_[c]; }
    bool localized() const { return kind_ == CarrierKind::GL2Full; }
    const std::vector<std::string>& var_names(int c) const { return var_names_[c]; }

    AlgElem zero() const;
    AlgElem one() const;
    AlgElem from_scalar(const Scalar& c) const;
    /// Monomial c * x^e living in component comp_idx.
    AlgElem comp_monomial(int comp_idx, const Exps& e, const Scalar& c) const;

    AlgElem add(const AlgElem& a, const AlgElem& b) const;
    AlgElem sub(const AlgElem& a, const AlgElem& b) const;
    AlgElem neg(const AlgElem& a) const;
    AlgElem mul(const AlgElem& a, const AlgElem& b) const;
    AlgElem scale(const AlgElem& a, const Scalar& c) const;
    AlgElem pow(const AlgElem& a, unsigned n) const;

    bool is_zero(const AlgElem& a) const;
    bool eq(const AlgElem& a, const AlgElem& b) const;
    /// Localized equality via cross multiplication a*D^l = b*D^k, independent
    /// of canonical forms.
    bool eq_cross(const AlgElem& a, const AlgElem& b) const;

    void canonicalize(AlgElem& a) const;

    /// Generators, including formal inverses (1/D, t^-1, ...) so that every
    /// element decomposes with non-negative generator exponents.
    int ngens() const { return (int)gen_names_.size(); }
    const std::string& gen_name(int i) const { return gen_names_[i]; }
    AlgElem gen(int i) const;
    int gen_index(const std::string& name) const;

    struct GenTerm {
        Scalar c;
        std::vector<int> e;  // exponent per generator, >= 0
    };
    /// Decompose an element as a sum of scalar multiples of generator
    /// products (one GenTerm per canonical-basis monomial).
    std::vector<GenTerm> gen_terms(const AlgElem& a) const;

    /// Expand into canonical A-module basis labels with coefficients, after
    /// scaling to the common denominator exponent K (localized carrier only;
    /// pass 0 otherwise).
    void linear_labels(const AlgElem& a, int common_denom,
                       std::map<std::string, Scalar>& out) const;

    std::string to_string(const AlgElem& a) const;

private:
    CarrierKind kind_;
    Ring ring_;
    std::vector<int> arities_;
    std::vector<bool> laurent_;
    std::vector<std::vector<std::string>> var_names_;
    std::vector<std::string> gen_names_;
    // generator -> (component, variable index, exponent sign)
    struct GenDef { int comp; Exps exps; };
    std::vector<GenDef> gen_defs_;

    void check(const AlgElem& a) const;
    SparsePoly zero_poly(int c) const;
};

}  // namespace gl2rep
