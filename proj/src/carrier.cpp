#include "gl2rep/carrier.hpp"

#include <sstream>

namespace gl2rep {

SparsePoly det_poly(Ring ring) {
    SparsePoly d(ring, 4);
    d.add_term({1, 0, 0, 1}, Scalar(1));
    d.add_term({0, 1, 1, 0}, Scalar(-1));
    return d;
}

std::optional<SparsePoly> exact_divide_by_D(const SparsePoly& p) {
    if (!p.ring().has_exact_division())
        throw std::domain_error("exact division by D is unsupported over " + p.ring().name());
    return p.divide_exact(det_poly(p.ring()));
}

Carrier::Carrier(CarrierKind kind, Ring ring) : kind_(kind), ring_(ring) {
    switch (kind_) {
        case CarrierKind::GL2Full:
            arities_ = {4};
            laurent_ = {false};
            var_names_ = {{"x11", "x12", "x21", "x22"}};
            gen_names_ = {"x11", "x12", "x21", "x22", "Dinv"};
            gen_defs_ = {{0, {1, 0, 0, 0}}, {0, {0, 1, 0, 0}}, {0, {0, 0, 1, 0}},
                         {0, {0, 0, 0, 1}}, {-1, {}}};
            break;
        case CarrierKind::SL2Full:
            arities_ = {4};
            laurent_ = {false};
            var_names_ = {{"x11", "x12", "x21", "x22"}};
            gen_names_ = {"x11", "x12", "x21", "x22"};
            gen_defs_ = {{0, {1, 0, 0, 0}}, {0, {0, 1, 0, 0}}, {0, {0, 0, 1, 0}},
                         {0, {0, 0, 0, 1}}};
            break;
        case CarrierKind::GL2N:
            arities_ = {2, 2};
            laurent_ = {true, true};
            var_names_ = {{"t1", "t2"}, {"u1", "u2"}};
            gen_names_ = {"t1", "t2", "t1inv", "t2inv", "u1", "u2", "u1inv", "u2inv"};
            gen_defs_ = {{0, {1, 0}},  {0, {0, 1}},  {0, {-1, 0}}, {0, {0, -1}},
                         {1, {1, 0}},  {1, {0, 1}},  {1, {-1, 0}}, {1, {0, -1}}};
            break;
        case CarrierKind::SL2N:
            arities_ = {1, 1};
            laurent_ = {true, true};
            var_names_ = {{"t"}, {"u"}};
            gen_names_ = {"t", "tinv", "u", "uinv"};
            gen_defs_ = {{0, {1}}, {0, {-1}}, {1, {1}}, {1, {-1}}};
            break;
        case CarrierKind::GL2T:
            arities_ = {2};
            laurent_ = {true};
            var_names_ = {{"t1", "t2"}};
            gen_names_ = {"t1", "t2", "t1inv", "t2inv"};
            gen_defs_ = {{0, {1, 0}}, {0, {0, 1}}, {0, {-1, 0}}, {0, {0, -1}}};
            break;
        case CarrierKind::SL2T:
            arities_ = {1};
            laurent_ = {true};
            var_names_ = {{"t"}};
            gen_names_ = {"t", "tinv"};
            gen_defs_ = {{0, {1}}, {0, {-1}}};
            break;
        case CarrierKind::NmodT:
        case CarrierKind::WeylConst:
            arities_ = {0, 0};
            laurent_ = {false, false};
            var_names_ = {{}, {}};
            gen_names_ = {"e1", "e2"};
            gen_defs_ = {{0, {}}, {1, {}}};
            break;
    }
}

SparsePoly Carrier::zero_poly(int c) const {
    return SparsePoly(ring_, arities_[c], laurent_[c]);
}

AlgElem Carrier::zero() const {
    AlgElem a;
    for (int c = 0; c < ncomp(); ++c) a.comp.push_back(zero_poly(c));
    return a;
}

AlgElem Carrier::one() const { return from_scalar(Scalar(1)); }

AlgElem Carrier::from_scalar(const Scalar& c) const {
    AlgElem a = zero();
    for (int i = 0; i < ncomp(); ++i)
        a.comp[i] = SparsePoly::constant(ring_, arities_[i], c, laurent_[i]);
    return a;
}

AlgElem Carrier::comp_monomial(int comp_idx, const Exps& e, const Scalar& c) const {
    AlgElem a = zero();
    a.comp[comp_idx] = SparsePoly::monomial(ring_, arities_[comp_idx], e, c, laurent_[comp_idx]);
    return a;
}

void Carrier::check(const AlgElem& a) const {
    if ((int)a.comp.size() != ncomp())
        throw std::invalid_argument("element does not belong to this carrier");
    if (a.denom_exp != 0 && !localized())
        throw std::invalid_argument("denominator exponent on non-localized carrier");
}

AlgElem Carrier::add(const AlgElem& a, const AlgElem& b) const {
    check(a);
    check(b);
    AlgElem r;
    if (localized() && a.denom_exp != b.denom_exp) {
        const SparsePoly d = det_poly(ring_);
        r.denom_exp = std::max(a.denom_exp, b.denom_exp);
        r.comp.push_back(a.comp[0] * d.pow((unsigned)(r.denom_exp - a.denom_exp)) +
                         b.comp[0] * d.pow((unsigned)(r.denom_exp - b.denom_exp)));
    } else {
        r.denom_exp = a.denom_exp;
        for (int c = 0; c < ncomp(); ++c) r.comp.push_back(a.comp[c] + b.comp[c]);
    }
    canonicalize(r);
    return r;
}

AlgElem Carrier::neg(const AlgElem& a) const {
    check(a);
    AlgElem r;
    r.denom_exp = a.denom_exp;
    for (auto& p : a.comp) r.comp.push_back(-p);
    return r;
}

AlgElem Carrier::sub(const AlgElem& a, const AlgElem& b) const { return add(a, neg(b)); }

AlgElem Carrier::mul(const AlgElem& a, const AlgElem& b) const {
    check(a);
    check(b);
    AlgElem r;
    r.denom_exp = a.denom_exp + b.denom_exp;
    for (int c = 0; c < ncomp(); ++c) r.comp.push_back(a.comp[c] * b.comp[c]);
    canonicalize(r);
    return r;
}

AlgElem Carrier::scale(const AlgElem& a, const Scalar& c) const {
    check(a);
    AlgElem r;
    r.denom_exp = a.denom_exp;
    for (auto& p : a.comp) r.comp.push_back(p.scaled(c));
    canonicalize(r);
    return r;
}

AlgElem Carrier::pow(const AlgElem& a, unsigned n) const {
    AlgElem r = one();
    AlgElem base = a;
    while (n > 0) {
        if (n & 1u) r = mul(r, base);
        base = mul(base, base);
        n >>= 1u;
    }
    return r;
}

void Carrier::canonicalize(AlgElem& a) const {
    check(a);
    if (kind_ == CarrierKind::SL2Full) {
        a.comp[0] = a.comp[0].normal_form(det_poly(ring_) -
                                          SparsePoly::constant(ring_, 4, Scalar(1)));
        return;
    }
    if (!localized()) return;
    if (a.comp[0].is_zero()) {
        a.denom_exp = 0;
        return;
    }
    if (!ring_.has_exact_division()) return;  // no canonical form over composite Z/n
    const SparsePoly d = det_poly(ring_);
    while (a.denom_exp > 0) {
        auto q = a.comp[0].divide_exact(d);
        if (!q) break;
        a.comp[0] = *q;
        --a.denom_exp;
    }
}

bool Carrier::is_zero(const AlgElem& a) const {
    check(a);
    for (auto& p : a.comp)
        if (!p.is_zero()) return false;
    return true;
}

bool Carrier::eq_cross(const AlgElem& a, const AlgElem& b) const {
    check(a);
    check(b);
    if (!localized()) return eq(a, b);
    const SparsePoly d = det_poly(ring_);
    return a.comp[0] * d.pow((unsigned)b.denom_exp) == b.comp[0] * d.pow((unsigned)a.denom_exp);
}

bool Carrier::eq(const AlgElem& a, const AlgElem& b) const {
    check(a);
    check(b);
    if (localized()) return eq_cross(a, b);
    if (kind_ == CarrierKind::SL2Full) {
        AlgElem ca = a, cb = b;
        canonicalize(ca);
        canonicalize(cb);
        return ca.comp[0] == cb.comp[0];
    }
    return a.comp == b.comp;
}

AlgElem Carrier::gen(int i) const {
    const GenDef& g = gen_defs_[i];
    if (g.comp < 0) {  // 1/D
        AlgElem a = one();
        a.denom_exp = 1;
        return a;
    }
    if (arities_[g.comp] == 0) return comp_monomial(g.comp, {}, Scalar(1));
    return comp_monomial(g.comp, g.exps, Scalar(1));
}

int Carrier::gen_index(const std::string& name) const {
    for (int i = 0; i < ngens(); ++i)
        if (gen_names_[i] == name) return i;
    throw std::invalid_argument("unknown generator: " + name);
}

std::vector<Carrier::GenTerm> Carrier::gen_terms(const AlgElem& a) const {
    check(a);
    std::vector<GenTerm> out;
    // positive/negative generator slot per (component, variable)
    auto slot = [&](int comp, int var, bool inv) {
        for (int i = 0; i < ngens(); ++i) {
            const GenDef& g = gen_defs_[i];
            if (g.comp != comp) continue;
            int want = inv ? -1 : 1;
            if ((int)g.exps.size() > var && g.exps[var] == want) {
                bool pure = true;
                for (int k = 0; k < (int)g.exps.size(); ++k)
                    if (k != var && g.exps[k] != 0) pure = false;
                if (pure) return i;
            }
        }
        throw std::logic_error("no generator slot");
    };
    for (int c = 0; c < ncomp(); ++c) {
        for (auto& [e, coef] : a.comp[c].terms()) {
            GenTerm t;
            t.c = coef;
            t.e.assign(ngens(), 0);
            bool nonconst = false;
            for (int v = 0; v < arities_[c]; ++v) {
                if (e[v] > 0) {
                    t.e[slot(c, v, false)] = e[v];
                    nonconst = true;
                } else if (e[v] < 0) {
                    t.e[slot(c, v, true)] = -e[v];
                    nonconst = true;
                }
            }
            if (arities_[c] == 0) {
                // idempotent carriers: the component unit is the generator e_c
                t.e[c] = 1;
            } else if (!nonconst && ncomp() > 1) {
                // constant inside one component of a pair carrier: express the
                // component unit as g * g^-1 for the component's first variable
                t.e[slot(c, 0, false)] = 1;
                t.e[slot(c, 0, true)] = 1;
            }
            if (localized() && a.denom_exp != 0) t.e[gen_index("Dinv")] = a.denom_exp;
            out.push_back(std::move(t));
        }
    }
    return out;
}

void Carrier::linear_labels(const AlgElem& a, int common_denom,
                            std::map<std::string, Scalar>& out) const {
    check(a);
    for (int c = 0; c < ncomp(); ++c) {
        SparsePoly p = a.comp[c];
        if (localized() && common_denom > a.denom_exp)
            p = p * det_poly(ring_).pow((unsigned)(common_denom - a.denom_exp));
        for (auto& [e, coef] : p.terms()) {
            std::ostringstream key;
            key << c << ":";
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) key << ",";
                key << e[i];
            }
            Scalar cur = ring_.add(out.count(key.str()) ? out[key.str()] : Scalar(0), coef);
            if (ring_.is_zero(cur))
                out.erase(key.str());
            else
                out[key.str()] = cur;
        }
    }
}

std::string Carrier::to_string(const AlgElem& a) const {
    check(a);
    switch (kind_) {
        case CarrierKind::GL2Full: {
            std::string num = a.comp[0].to_string(var_names_[0]);
            if (a.denom_exp == 0) return num;
            std::string s = "(" + num + ")/D";
            if (a.denom_exp != 1) s += "^" + std::to_string(a.denom_exp);
            return s;
        }
        case CarrierKind::SL2Full:
        case CarrierKind::GL2T:
        case CarrierKind::SL2T:
            return a.comp[0].to_string(var_names_[0]);
        case CarrierKind::GL2N:
        case CarrierKind::SL2N:
            return "(" + a.comp[0].to_string(var_names_[0]) + ", " +
                   a.comp[1].to_string(var_names_[1]) + ")";
        case CarrierKind::NmodT:
        case CarrierKind::WeylConst: {
            if (a.comp[0].is_zero() && a.comp[1].is_zero()) return "0";
            std::string s;
            for (int c = 0; c < 2; ++c) {
                if (a.comp[c].is_zero()) continue;
                Scalar v = a.comp[c].constant_value();
                if (!s.empty()) s += " + ";
                if (v == 1)
                    s += "e" + std::to_string(c + 1);
                else
                    s += "(" + v.get_str() + ")*e" + std::to_string(c + 1);
            }
            return s;
        }
    }
    return "?";
}

}  // namespace gl2rep
