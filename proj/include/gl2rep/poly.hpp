#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gl2rep/scalar.hpp"

namespace gl2rep {

/// Exponent vector of a monomial. Entries may be negative for Laurent
/// polynomials.
using Exps = std::vector<int>;

inline int total_degree(const Exps& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

/// Graded reverse-lexicographic order (strict "less") on exponent vectors of
/// equal arity. Higher total degree is larger; ties are broken by reverse
/// lexicographic comparison from the last variable.
struct GrevlexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (size_t i = a.size(); i-- > 0;) {
            int d = a[i] - b[i];
            if (d != 0) return d > 0;  // larger last exponent => grevlex-smaller
        }
        return false;
    }
};

/// Sparse multivariate polynomial over a coefficient ring, with a fixed
/// variable arity. With the Laurent flag set, exponents may be negative.
/// Invariants: no stored zero coefficients; terms ordered by grevlex.
class SparsePoly {
public:
    SparsePoly(Ring ring, int arity, bool laurent = false)
        : ring_(ring), arity_(arity), laurent_(laurent) {}

    static SparsePoly constant(Ring ring, int arity, const Scalar& c, bool laurent = false);
    static SparsePoly monomial(Ring ring, int arity, const Exps& e, const Scalar& c,
                               bool laurent = false);

    Ring ring() const { return ring_; }
    int arity() const { return arity_; }
    bool laurent() const { return laurent_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    const std::map<Exps, Scalar, GrevlexLess>& terms() const { return terms_; }

    /// Coefficient of a monomial (zero if absent).
    Scalar coeff(const Exps& e) const;
    void set_coeff(const Exps& e, const Scalar& c);
    void add_term(const Exps& e, const Scalar& c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly scaled(const Scalar& c) const;
    SparsePoly pow(unsigned n) const;

    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    /// True if the polynomial is a single term c * x^e.
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    Scalar constant_value() const;  // requires is_constant()

    /// Substitute: x_i -> images[i], computed in a polynomial ring of the
    /// images' arity. Negative exponents require the corresponding entry of
    /// inv_images.
    SparsePoly substitute(const std::vector<SparsePoly>& images,
                          const std::vector<SparsePoly>* inv_images = nullptr) const;

    /// Exact division by a fixed divisor; returns std::nullopt if not
    /// divisible. Requires both non-Laurent and the divisor's leading
    /// coefficient a unit (or exact coefficient division over Z).
    std::optional<SparsePoly> divide_exact(const SparsePoly& divisor) const;

    /// Normal form modulo the principal ideal (divisor): remainder of
    /// multivariate division, canonical since a single generator is a
    /// Groebner basis of the ideal it generates.
    SparsePoly normal_form(const SparsePoly& divisor) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    Ring ring_;
    int arity_;
    bool laurent_;
    std::map<Exps, Scalar, GrevlexLess> terms_;

    void check_compat(const SparsePoly& o) const;
};

}  // namespace gl2rep
