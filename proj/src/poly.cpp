#include "gl2rep/poly.hpp"

#include <sstream>

namespace gl2rep {

SparsePoly SparsePoly::constant(Ring ring, int arity, const Scalar& c, bool laurent) {
    SparsePoly p(ring, arity, laurent);
    p.add_term(Exps(arity, 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(Ring ring, int arity, const Exps& e, const Scalar& c,
                                bool laurent) {
    if ((int)e.size() != arity)
        throw std::invalid_argument("monomial: exponent arity mismatch");
    if (!laurent)
        for (int x : e)
            if (x < 0) throw std::invalid_argument("monomial: negative exponent without Laurent flag");
    SparsePoly p(ring, arity, laurent);
    p.add_term(e, c);
    return p;
}

Scalar SparsePoly::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void SparsePoly::set_coeff(const Exps& e, const Scalar& c) {
    Scalar r = ring_.reduce(c);
    if (ring_.is_zero(r))
        terms_.erase(e);
    else
        terms_[e] = r;
}

void SparsePoly::add_term(const Exps& e, const Scalar& c) {
    auto it = terms_.find(e);
    Scalar r = it == terms_.end() ? ring_.reduce(c) : ring_.add(it->second, c);
    if (ring_.is_zero(r)) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[e] = r;
    }
}

void SparsePoly::check_compat(const SparsePoly& o) const {
    if (ring_ != o.ring_ || arity_ != o.arity_)
        throw std::invalid_argument("polynomial ring/arity mismatch");
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    check_compat(o);
    SparsePoly r(ring_, arity_, laurent_ || o.laurent_);
    r.terms_ = terms_;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(ring_, arity_, laurent_);
    for (auto& [e, c] : terms_) r.terms_[e] = ring_.neg(c);
    return r;
}

SparsePoly SparsePoly::scaled(const Scalar& s) const {
    SparsePoly r(ring_, arity_, laurent_);
    for (auto& [e, c] : terms_) r.add_term(e, ring_.mul(c, s));
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    check_compat(o);
    SparsePoly r(ring_, arity_, laurent_ || o.laurent_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            Exps e(arity_);
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ring_.mul(ca, cb));
        }
    return r;
}

SparsePoly SparsePoly::pow(unsigned n) const {
    SparsePoly r = constant(ring_, arity_, Scalar(1), laurent_);
    SparsePoly base = *this;
    while (n > 0) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (ring_ != o.ring_ || arity_ != o.arity_) return false;
    return terms_ == o.terms_;
}

bool SparsePoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->first == Exps(arity_, 0);
}

Scalar SparsePoly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw std::domain_error("constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

SparsePoly SparsePoly::substitute(const std::vector<SparsePoly>& images,
                                  const std::vector<SparsePoly>* inv_images) const {
    if ((int)images.size() != arity_)
        throw std::invalid_argument("substitute: image count mismatch");
    const SparsePoly& model = images.empty() ? *this : images[0];
    SparsePoly acc(model.ring(), model.arity(), model.laurent());
    for (auto& [e, c] : terms_) {
        SparsePoly term = SparsePoly::constant(model.ring(), model.arity(), c, model.laurent());
        for (int i = 0; i < arity_; ++i) {
            if (e[i] > 0) {
                term = term * images[i].pow((unsigned)e[i]);
            } else if (e[i] < 0) {
                if (!inv_images)
                    throw std::invalid_argument("substitute: negative exponent needs inverse images");
                term = term * (*inv_images)[i].pow((unsigned)(-e[i]));
            }
        }
        acc = acc + term;
    }
    return acc;
}

std::optional<SparsePoly> SparsePoly::divide_exact(const SparsePoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    check_compat(divisor);
    SparsePoly q(ring_, arity_, laurent_);
    SparsePoly r = *this;
    const auto& [lde, ldc] = *divisor.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& [lre, lrc] = *r.terms_.rbegin();
        Exps e(arity_);
        for (int i = 0; i < arity_; ++i) {
            e[i] = lre[i] - lde[i];
            if (!laurent_ && e[i] < 0) return std::nullopt;
        }
        Scalar c;
        try {
            c = ring_.div_exact(lrc, ldc);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        SparsePoly t = SparsePoly::monomial(ring_, arity_, e, c, laurent_);
        q = q + t;
        r = r - t * divisor;
    }
    return q;
}

SparsePoly SparsePoly::normal_form(const SparsePoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
    check_compat(divisor);
    const auto& [lde, ldc] = *divisor.terms_.rbegin();
    SparsePoly rem(ring_, arity_, laurent_);
    SparsePoly work = *this;
    while (!work.is_zero()) {
        const auto& [lwe, lwc] = *work.terms_.rbegin();
        bool divisible = true;
        Exps e(arity_);
        for (int i = 0; i < arity_; ++i) {
            e[i] = lwe[i] - lde[i];
            if (e[i] < 0 && !laurent_) { divisible = false; break; }
        }
        if (divisible) {
            Scalar c;
            try {
                c = ring_.div_exact(lwc, ldc);
            } catch (const std::domain_error&) {
                divisible = false;
            }
            if (divisible) {
                work = work - SparsePoly::monomial(ring_, arity_, e, c, laurent_) * divisor;
                continue;
            }
        }
        rem.add_term(lwe, lwc);
        SparsePoly lt = SparsePoly::monomial(ring_, arity_, lwe, lwc, laurent_);
        work = work - lt;
    }
    return rem;
}

std::string SparsePoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending grevlex for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Scalar a = c;
        if (first) {
            if (sgn(a) < 0) { out << "-"; a = -a; }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool any_var = total_degree(e) != 0 || e != Exps(arity_, 0);
        if (!any_var || a != 1) {
            out << a.get_str();
            if (any_var) out << "*";
        }
        bool first_var = true;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << var_names[i];
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace gl2rep
