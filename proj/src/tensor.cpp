#include "gl2rep/tensor.hpp"

#include <sstream>

namespace gl2rep {

TensorSpace::TensorSpace(Ring ring)
    : legs_(), offsets_(), arity_(0), laurent_(false), ring_(ring) {}

TensorSpace::TensorSpace(std::vector<const Carrier*> legs)
    : legs_(std::move(legs)), ring_(Ring::rationals()) {
    if (legs_.empty()) throw std::invalid_argument("use the Ring constructor for an empty space");
    ring_ = legs_[0]->ring();
    arity_ = 0;
    laurent_ = false;
    bool has_sl2_full = false;
    for (auto* c : legs_) {
        if (c->ring() != ring_) throw std::invalid_argument("tensor legs over different rings");
        offsets_.push_back(arity_);
        arity_ += c->arity(0);
        laurent_ = laurent_ || c->laurent(0);
        if (c->kind() == CarrierKind::SL2Full) has_sl2_full = true;
    }
    if (has_sl2_full && laurent_)
        throw std::invalid_argument("SL2 full carrier cannot share a tensor with Laurent legs");
}

void TensorSpace::check(const Elem& a) const {
    if ((int)a.denom.size() != nlegs())
        throw std::invalid_argument("tensor element does not belong to this space");
    for (int l = 0; l < nlegs(); ++l)
        if (a.denom[l] != 0 && !legs_[l]->localized())
            throw std::invalid_argument("denominator exponent on non-localized tensor leg");
}

SparsePoly TensorSpace::embedded(int l, const SparsePoly& p) const {
    SparsePoly r(ring_, arity_, laurent_);
    for (auto& [e, c] : p.terms()) {
        Exps full(arity_, 0);
        for (size_t i = 0; i < e.size(); ++i) full[offsets_[l] + (int)i] = e[i];
        r.add_term(full, c);
    }
    return r;
}

SparsePoly TensorSpace::det_at(int l) const { return embedded(l, det_poly(ring_)); }

TensorSpace::Elem TensorSpace::zero() const {
    Elem a;
    a.denom.assign(nlegs(), 0);
    return a;
}

TensorSpace::Elem TensorSpace::from_scalar(const Scalar& c) const {
    Elem a = zero();
    if (ring_.is_zero(ring_.reduce(c))) return a;
    // every component choice carries the constant: the unit of each pair
    // carrier is (1, 1)
    std::vector<int> choice(nlegs(), 0);
    for (;;) {
        a.cells.insert({choice, SparsePoly::constant(ring_, arity_, c, laurent_)});
        int l = nlegs() - 1;
        while (l >= 0 && choice[l] + 1 >= legs_[l]->ncomp()) choice[l--] = 0;
        if (l < 0) break;
        ++choice[l];
    }
    return a;
}

TensorSpace::Elem TensorSpace::one() const { return from_scalar(Scalar(1)); }

TensorSpace::Elem TensorSpace::embed(const std::vector<AlgElem>& factors) const {
    if ((int)factors.size() != nlegs())
        throw std::invalid_argument("embed: factor count mismatch");
    Elem acc = one();
    for (int l = 0; l < nlegs(); ++l) {
        Elem f = zero();
        f.denom[l] = factors[l].denom_exp;
        for (auto& [choice, unused] : one().cells) {
            (void)unused;
            SparsePoly p = embedded(l, factors[l].comp[choice[l]]);
            if (!p.is_zero()) f.cells.insert({choice, p});
        }
        acc = mul(acc, f);
    }
    return acc;
}

TensorSpace::Elem TensorSpace::align(const Elem& a, const std::vector<int>& denom) const {
    Elem r = a;
    for (int l = 0; l < nlegs(); ++l) {
        if (denom[l] == a.denom[l]) continue;
        SparsePoly f = det_at(l).pow((unsigned)(denom[l] - a.denom[l]));
        for (auto& [k, p] : r.cells) p = p * f;
        r.denom[l] = denom[l];
    }
    return r;
}

TensorSpace::Elem TensorSpace::add(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    std::vector<int> denom(nlegs());
    for (int l = 0; l < nlegs(); ++l) denom[l] = std::max(a.denom[l], b.denom[l]);
    Elem ra = align(a, denom), rb = align(b, denom);
    for (auto& [k, p] : rb.cells) {
        auto it = ra.cells.find(k);
        if (it == ra.cells.end()) {
            ra.cells.insert({k, p});
        } else {
            it->second = it->second + p;
            if (it->second.is_zero()) ra.cells.erase(it);
        }
    }
    canonicalize(ra);
    return ra;
}

TensorSpace::Elem TensorSpace::neg(const Elem& a) const {
    Elem r = a;
    for (auto& [k, p] : r.cells) p = -p;
    return r;
}

TensorSpace::Elem TensorSpace::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

TensorSpace::Elem TensorSpace::mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem r;
    for (int l = 0; l < nlegs(); ++l) r.denom.push_back(a.denom[l] + b.denom[l]);
    // cells with different component choices multiply to zero
    for (auto& [k, p] : a.cells) {
        auto it = b.cells.find(k);
        if (it == b.cells.end()) continue;
        SparsePoly q = p * it->second;
        if (!q.is_zero()) r.cells.insert({k, q});
    }
    canonicalize(r);
    return r;
}

TensorSpace::Elem TensorSpace::scale(const Elem& a, const Scalar& c) const {
    Elem r = a;
    for (auto it = r.cells.begin(); it != r.cells.end();) {
        it->second = it->second.scaled(c);
        it = it->second.is_zero() ? r.cells.erase(it) : std::next(it);
    }
    canonicalize(r);
    return r;
}

void TensorSpace::canonicalize(Elem& a) const {
    check(a);
    for (int l = 0; l < nlegs(); ++l) {
        if (legs_[l]->kind() == CarrierKind::SL2Full) {
            SparsePoly rel = det_at(l) - SparsePoly::constant(ring_, arity_, Scalar(1), laurent_);
            for (auto it = a.cells.begin(); it != a.cells.end();) {
                it->second = it->second.normal_form(rel);
                it = it->second.is_zero() ? a.cells.erase(it) : std::next(it);
            }
        }
        if (!legs_[l]->localized() || !ring_.has_exact_division()) continue;
        SparsePoly d = det_at(l);
        while (a.denom[l] > 0 && !a.cells.empty()) {
            std::map<std::vector<int>, SparsePoly> next;
            bool ok = true;
            for (auto& [k, p] : a.cells) {
                auto q = p.divide_exact(d);
                if (!q) { ok = false; break; }
                next.insert({k, *q});
            }
            if (!ok) break;
            a.cells = std::move(next);
            --a.denom[l];
        }
    }
    for (auto it = a.cells.begin(); it != a.cells.end();)
        it = it->second.is_zero() ? a.cells.erase(it) : std::next(it);
    if (a.cells.empty()) a.denom.assign(nlegs(), 0);
}

bool TensorSpace::is_zero(const Elem& a) const {
    Elem c = a;
    canonicalize(c);
    return c.cells.empty();
}

bool TensorSpace::eq(const Elem& a, const Elem& b) const {
    Elem ca = a, cb = b;
    canonicalize(ca);
    canonicalize(cb);
    std::vector<int> denom(nlegs());
    for (int l = 0; l < nlegs(); ++l) denom[l] = std::max(ca.denom[l], cb.denom[l]);
    // cross-multiplication: independent of canonical denominators
    return align(ca, denom).cells == align(cb, denom).cells;
}

TensorSpace::Elem TensorSpace::apply_leg(const TensorSpace& result, int leg,
                                         const TensorSpace& sub,
                                         const std::vector<Elem>& gen_images,
                                         const Elem& x) const {
    check(x);
    const Carrier& lc = *legs_[leg];
    if ((int)gen_images.size() != lc.ngens())
        throw std::invalid_argument("apply_leg: one image per generator required");
    const int off = offsets_[leg];
    const int ar = lc.arity(0);
    auto epow = [&](const Elem& base, int n) {
        Elem r = sub.one();
        for (int i = 0; i < n; ++i) r = sub.mul(r, base);
        return r;
    };
    Elem acc = result.zero();
    for (auto& [choice, poly] : x.cells) {
        for (auto& [e, coef] : poly.terms()) {
            // the leg factor of this term, as a one-monomial carrier element
            Exps le(e.begin() + off, e.begin() + off + ar);
            AlgElem m = lc.comp_monomial(choice[leg], le, Scalar(1));
            m.denom_exp = x.denom[leg];
            auto gts = lc.gen_terms(m);
            if (gts.size() != 1) throw std::logic_error("monomial decomposition not unique");
            Elem img = sub.from_scalar(coef);
            for (int g = 0; g < lc.ngens(); ++g)
                if (gts[0].e[g] > 0) img = sub.mul(img, epow(gen_images[g], gts[0].e[g]));
            // recombine with the untouched legs
            Elem contrib;
            for (int l = 0; l < leg; ++l) contrib.denom.push_back(x.denom[l]);
            for (int l = 0; l < sub.nlegs(); ++l) contrib.denom.push_back(img.denom[l]);
            for (int l = leg + 1; l < nlegs(); ++l) contrib.denom.push_back(x.denom[l]);
            for (auto& [sch, spoly] : img.cells) {
                std::vector<int> key;
                key.insert(key.end(), choice.begin(), choice.begin() + leg);
                key.insert(key.end(), sch.begin(), sch.end());
                key.insert(key.end(), choice.begin() + leg + 1, choice.end());
                SparsePoly cell(result.ring_, result.arity_, result.laurent_);
                for (auto& [se, sc] : spoly.terms()) {
                    Exps fe(result.arity_, 0);
                    for (int i = 0; i < off; ++i) fe[i] = e[i];
                    for (int i = 0; i < sub.arity_; ++i) fe[off + i] = se[i];
                    for (int i = off + ar; i < arity_; ++i) fe[i + sub.arity_ - ar] = e[i];
                    cell.add_term(fe, sc);
                }
                if (!cell.is_zero()) {
                    auto it = contrib.cells.find(key);
                    if (it == contrib.cells.end())
                        contrib.cells.insert({key, cell});
                    else
                        it->second = it->second + cell;
                }
            }
            acc = result.add(acc, contrib);
        }
    }
    return acc;
}

TensorSpace::Elem TensorSpace::merge_legs(const TensorSpace& result, int la,
                                          const Elem& x) const {
    check(x);
    int lb = la + 1;
    if (lb >= nlegs() || legs_[la]->kind() != legs_[lb]->kind())
        throw std::invalid_argument("merge_legs: adjacent legs of the same carrier required");
    Elem r;
    for (int l = 0; l < nlegs(); ++l) {
        if (l == lb) continue;
        r.denom.push_back(l == la ? x.denom[la] + x.denom[lb] : x.denom[l]);
    }
    const int offA = offsets_[la], offB = offsets_[lb], ar = legs_[la]->arity(0);
    for (auto& [choice, poly] : x.cells) {
        if (choice[la] != choice[lb]) continue;  // orthogonal components
        std::vector<int> key;
        for (int l = 0; l < nlegs(); ++l)
            if (l != lb) key.push_back(choice[l]);
        SparsePoly cell(result.ring_, result.arity_, result.laurent_);
        for (auto& [e, c] : poly.terms()) {
            Exps fe(result.arity_, 0);
            for (int i = 0; i < offB; ++i) fe[i] = e[i];
            for (int i = 0; i < ar; ++i) fe[offA + i] += e[offB + i];
            for (int i = offB + ar; i < arity_; ++i) fe[i - ar] = e[i];
            cell.add_term(fe, c);
        }
        auto it = r.cells.find(key);
        if (it == r.cells.end()) {
            if (!cell.is_zero()) r.cells.insert({key, cell});
        } else {
            it->second = it->second + cell;
        }
    }
    result.canonicalize(r);
    return r;
}

std::string TensorSpace::to_string(const Elem& a) const {
    if (a.cells.empty()) return "0";
    std::vector<std::string> names;
    for (int l = 0; l < nlegs(); ++l) {
        std::string primes(l, '\'');
        for (auto& v : legs_[l]->var_names(0)) names.push_back(v + primes);
    }
    std::ostringstream out;
    bool first = true;
    for (auto& [choice, poly] : a.cells) {
        if (!first) out << " ; ";
        first = false;
        if (nlegs() > 0 && a.cells.size() > 1) {
            out << "[";
            for (size_t i = 0; i < choice.size(); ++i) out << (i ? "," : "") << choice[i];
            out << "] ";
        }
        out << poly.to_string(names);
    }
    for (int l = 0; l < nlegs(); ++l)
        if (a.denom[l] > 0)
            out << " / D" << std::string(l, '\'') << "^" << a.denom[l];
    return out.str();
}

}  // namespace gl2rep
