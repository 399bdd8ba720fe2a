#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gl2rep {

/// Exact coefficient rings: Z, Q, F_p (p prime), Z/n (n possibly composite).
///
/// Scalars are stored as mpq_class values. For F_p and Z/n the value is the
/// canonical residue in [0, n) with denominator 1.
class Ring {
public:
    enum class Kind { Integers, Rationals, PrimeField, ModRing };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    static Ring rationals() { return Ring(Kind::Rationals, 0); }
    static Ring prime_field(long p);
    static Ring mod_ring(long n);

    Kind kind() const { return kind_; }
    long modulus() const { return modulus_; }

    bool is_field() const {
        return kind_ == Kind::Rationals || kind_ == Kind::PrimeField;
    }
    /// Exact division by the determinant (canonical localized forms) is
    /// available over Z, Q and F_p but not over a composite Z/n.
    bool has_exact_division() const { return kind_ != Kind::ModRing; }

    mpq_class reduce(const mpq_class& v) const;

    mpq_class zero() const { return mpq_class(0); }
    mpq_class one() const { return mpq_class(1); }
    mpq_class from_long(long v) const { return reduce(mpq_class(v)); }

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
    mpq_class neg(const mpq_class& a) const { return reduce(-a); }

    bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
    bool is_unit(const mpq_class& a) const;
    /// Multiplicative inverse; throws std::domain_error for non-units.
    mpq_class inverse(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inverse(b)); }

    /// Exact division in Z (throws if b does not divide a); field division
    /// over Q and F_p.
    mpq_class div_exact(const mpq_class& a, const mpq_class& b) const;

    std::string to_string(const mpq_class& a) const;
    std::string name() const;

    bool operator==(const Ring& o) const { return kind_ == o.kind_ && modulus_ == o.modulus_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    Ring(Kind k, long m) : kind_(k), modulus_(m) {}
    Kind kind_;
    long modulus_;
};

using Scalar = mpq_class;

}  // namespace gl2rep
