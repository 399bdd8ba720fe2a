#include "gl2rep/scalar.hpp"

namespace gl2rep {

Ring Ring::prime_field(long p) {
    if (p < 2)
        throw std::invalid_argument("prime_field: p must be >= 2");
    mpz_class pz(p);
    if (mpz_probab_prime_p(pz.get_mpz_t(), 32) == 0)
        throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
    return Ring(Kind::PrimeField, p);
}

Ring Ring::mod_ring(long n) {
    if (n < 2)
        throw std::invalid_argument("mod_ring: n must be >= 2");
    return Ring(Kind::ModRing, n);
}

mpq_class Ring::reduce(const mpq_class& v) const {
    if (kind_ == Kind::Integers || kind_ == Kind::Rationals)
        return v;
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() != 1) {
        // invert the denominator mod n
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), mpz_class(modulus_).get_mpz_t()) == 0)
            throw std::domain_error("non-invertible denominator mod " + std::to_string(modulus_));
        mpz_class num = c.get_num() * inv;
        mpz_class r;
        mpz_mod(r.get_mpz_t(), num.get_mpz_t(), mpz_class(modulus_).get_mpz_t());
        return mpq_class(r);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), c.get_num().get_mpz_t(), mpz_class(modulus_).get_mpz_t());
    return mpq_class(r);
}

bool Ring::is_unit(const mpq_class& a) const {
    switch (kind_) {
        case Kind::Integers:
            return a == 1 || a == -1;
        case Kind::Rationals:
            return sgn(a) != 0;
        case Kind::PrimeField:
            return sgn(reduce(a)) != 0;
        case Kind::ModRing: {
            mpz_class g;
            mpz_class v = reduce(a).get_num();
            mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), mpz_class(modulus_).get_mpz_t());
            return g == 1;
        }
    }
    return false;
}

mpq_class Ring::inverse(const mpq_class& a) const {
    switch (kind_) {
        case Kind::Integers:
            if (a == 1 || a == -1) return a;
            throw std::domain_error("inverse: not a unit in Z");
        case Kind::Rationals:
            if (sgn(a) == 0) throw std::domain_error("inverse of zero");
            return 1 / a;
        case Kind::PrimeField:
        case Kind::ModRing: {
            mpz_class v = reduce(a).get_num();
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), mpz_class(modulus_).get_mpz_t()) == 0)
                throw std::domain_error("inverse: not a unit mod " + std::to_string(modulus_));
            return mpq_class(inv);
        }
    }
    throw std::logic_error("unreachable");
}

mpq_class Ring::div_exact(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == Kind::Integers) {
        if (sgn(b) == 0) throw std::domain_error("division by zero");
        mpq_class q = a / b;
        q.canonicalize();
        if (q.get_den() != 1)
            throw std::domain_error("div_exact: not divisible in Z");
        return q;
    }
    return div(a, b);
}

std::string Ring::to_string(const mpq_class& a) const {
    return a.get_str();
}

std::string Ring::name() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "F" + std::to_string(modulus_);
        case Kind::ModRing: return "Zmod" + std::to_string(modulus_);
    }
    return "?";
}

}  // namespace gl2rep
