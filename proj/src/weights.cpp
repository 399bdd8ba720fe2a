#include "gl2rep/weights.hpp"

#include <algorithm>

namespace gl2rep {

namespace {

bool torus_kind(CarrierKind k) { return k == CarrierKind::GL2T || k == CarrierKind::SL2T; }

// Diagonal entry of a torus structure matrix as its exponent vector.
Exps diagonal_exponents(const Carrier& c, const Comodule& wt, int i) {
    AlgElem d = wt.m[i][i];
    c.canonicalize(d);
    if (!d.comp[0].is_monomial()) throw std::domain_error("not diagonalized");
    auto& [e, coef] = *d.comp[0].terms().begin();
    if (coef != Scalar(1)) throw std::domain_error("not diagonalized");
    return e;
}

void require_diagonal(const Carrier& c, const Comodule& wt) {
    for (int i = 0; i < wt.rank(); ++i)
        for (int j = 0; j < wt.rank(); ++j)
            if (i != j && !c.is_zero(wt.m[i][j])) throw std::domain_error("not diagonalized");
}

// Dense univariate polynomials over a field, for the line-parameter
// constraints: coefficient of s^k at index k.
using UPoly = std::vector<Scalar>;

int updeg(const UPoly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

UPoly uprem(const Ring& ring, UPoly a, const UPoly& b) {
    int db = updeg(b);
    Scalar linv = ring.inverse(b[db]);
    for (int da = updeg(a); da >= db; da = updeg(a)) {
        Scalar f = ring.mul(a[da], linv);
        for (int i = 0; i <= db; ++i) a[da - db + i] = ring.sub(a[da - db + i], ring.mul(f, b[i]));
    }
    return a;
}

UPoly upgcd(const Ring& ring, UPoly a, UPoly b) {
    while (updeg(b) >= 0) {
        UPoly r = uprem(ring, a, b);
        a = b;
        b = r;
    }
    int d = updeg(a);
    if (d >= 0) {
        Scalar inv = ring.inverse(a[d]);
        for (auto& c : a) c = ring.mul(c, inv);
    }
    return a;
}

Scalar upeval(const Ring& ring, const UPoly& p, const Scalar& s) {
    Scalar acc(0);
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = ring.add(ring.mul(acc, s), p[i]);
    return acc;
}

std::optional<Scalar> rational_sqrt(const Scalar& v) {
    if (sgn(v) < 0) return std::nullopt;
    mpz_class num = v.get_num(), den = v.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

// Roots of a monic polynomial of degree <= 2 over the field.
std::vector<Scalar> uproots(const Ring& ring, const UPoly& p) {
    std::vector<Scalar> out;
    int d = updeg(p);
    if (d <= 0) return out;
    if (ring.kind() == Ring::Kind::PrimeField) {
        for (long s = 0; s < ring.modulus(); ++s)
            if (ring.is_zero(upeval(ring, p, Scalar(s)))) out.push_back(Scalar(s));
        return out;
    }
    if (d == 1) {
        out.push_back(ring.neg(ring.div(p[0], p[1])));
        return out;
    }
    // monic quadratic s^2 + b s + c over Q
    Scalar b = p[1], c = p[0];
    auto sq = rational_sqrt(b * b - 4 * c);
    if (!sq) return out;
    out.push_back((-b + *sq) / 2);
    if (*sq != 0) out.push_back((-b - *sq) / 2);
    return out;
}

// Per-monomial coefficients of an element across all carrier components,
// keyed by (component, exponents).
std::map<std::pair<int, Exps>, Scalar> coeff_map(const Carrier& c, const AlgElem& a) {
    AlgElem x = a;
    c.canonicalize(x);
    std::map<std::pair<int, Exps>, Scalar> out;
    for (int i = 0; i < c.ncomp(); ++i)
        for (auto& [e, coef] : x.comp[i].terms()) out.insert({{i, e}, coef});
    return out;
}

// Whether the line k (v1 + s v2) is invariant under the rank-2 block
// coaction: its coefficient on v2, namely m10 + s m11, must equal
// s (m00 + s m01).
bool line_invariant(const Carrier& c, const std::vector<std::vector<AlgElem>>& m,
                    const Scalar& s) {
    AlgElem lhs = c.add(m[1][0], c.scale(m[1][1], s));
    AlgElem rhs = c.scale(c.add(m[0][0], c.scale(m[0][1], s)), s);
    return c.eq(lhs, rhs);
}

std::optional<std::string> reducibility_witness_enum(const Carrier& c,
                                                     const std::vector<std::vector<AlgElem>>& m,
                                                     long p) {
    for (long s = 0; s < p; ++s)
        if (line_invariant(c, m, Scalar(s))) return "v1 + " + std::to_string(s) + " v2";
    if (c.is_zero(m[0][1])) return std::string("v2");
    return std::nullopt;
}

}  // namespace

std::vector<Weight> extract_weights(const Comodule& wt) {
    const Carrier& c = wt.hopf.carrier();
    if (!torus_kind(c.kind()))
        throw std::invalid_argument("extract_weights expects a comodule over a torus");
    require_diagonal(c, wt);
    std::vector<Weight> out;
    for (int i = 0; i < wt.rank(); ++i) {
        Exps e = diagonal_exponents(c, wt, i);
        // the SL2 weight a embeds on the GL2 torus as (a, -a), since t = t1
        // with t2 = t^-1 on the diagonal of SL2
        out.push_back(c.kind() == CarrierKind::GL2T ? Weight{e[0], e[1]} : Weight{e[0], -e[0]});
    }
    return out;
}

int pairing(const Weight& w, const std::pair<int, int>& coroot) {
    return w.a * coroot.first + w.b * coroot.second;
}

Weight reflect(const Weight& w, const std::pair<int, int>& root) {
    if (!((root.first == 1 && root.second == -1) || (root.first == -1 && root.second == 1)))
        throw std::invalid_argument("reflect: root must be (1,-1) or (-1,1)");
    int n = pairing(w, root);  // the coroot of +-alpha has the same exponents
    return {w.a - n * root.first, w.b - n * root.second};
}

std::vector<std::vector<int>> weyl_orbits(const std::vector<Weight>& ws) {
    std::vector<std::vector<int>> parts;
    std::vector<bool> used(ws.size(), false);
    for (size_t i = 0; i < ws.size(); ++i) {
        if (used[i]) continue;
        Weight flip = reflect(ws[i], {1, -1});
        std::vector<int> part;
        for (size_t j = i; j < ws.size(); ++j)
            if (!used[j] && (ws[j] == ws[i] || ws[j] == flip)) {
                part.push_back((int)j);
                used[j] = true;
            }
        parts.push_back(part);
    }
    return parts;
}

RefinedDecomposition refined_decompose(const Comodule& wn, const std::vector<Weight>& ws) {
    const Carrier& c = wn.hopf.carrier();
    if (c.kind() != CarrierKind::GL2N && c.kind() != CarrierKind::SL2N)
        throw std::invalid_argument("refined_decompose expects a comodule over k[N]");
    if ((int)ws.size() != wn.rank())
        throw std::invalid_argument("refined_decompose: one weight per basis vector required");
    RefinedDecomposition out;
    for (auto& part : weyl_orbits(ws)) {
        std::vector<bool> inside(wn.rank(), false);
        for (int i : part) inside[i] = true;
        for (int j : part)
            for (int i = 0; i < wn.rank(); ++i)
                if (!inside[i] && !c.is_zero(wn.m[i][j]))
                    throw std::domain_error("block not closed");
        RefinedBlock b;
        b.indices = part;
        for (int i : part) b.weights.push_back(ws[i]);
        for (int i : part) {
            std::vector<AlgElem> row;
            for (int j : part) row.push_back(wn.m[i][j]);
            b.m.push_back(row);
        }
        out.blocks.push_back(b);
    }
    return out;
}

Character character(const std::vector<Weight>& ws) {
    SparsePoly ch(Ring::integers(), 2, true);
    for (auto& w : ws) ch.add_term({w.a, w.b}, Scalar(1));
    return ch;
}

Character refined_character(int d, int i) {
    if (i < 0 || 2 * i > d) throw std::invalid_argument("refined_character: need 0 <= i <= d/2");
    SparsePoly ch(Ring::integers(), 2, true);
    ch.add_term({i, d - i}, Scalar(1));      // x1^i x2^(d-i)
    if (2 * i != d) ch.add_term({d - i, i}, Scalar(1));
    return ch;
}

IrreducibilityResult is_irreducible_block(const Carrier& c, const RefinedBlock& b) {
    Ring ring = c.ring();
    if (!ring.is_field())
        throw std::invalid_argument("is_irreducible_block needs a field coefficient ring");
    int n = (int)b.indices.size();
    if (n > 2) throw std::invalid_argument("is_irreducible_block: rank > 2 unsupported");
    IrreducibilityResult res;
    if (n <= 1) {
        res.irreducible = true;
        return res;
    }
    // For v = v1 + s v2 the invariance of k v forces, monomial by monomial,
    // m10 + s (m11 - m00) - s^2 m01 = 0; the second axis k v2 is invariant
    // iff m01 = 0.
    auto p0 = coeff_map(c, b.m[1][0]);
    auto p1 = coeff_map(c, c.sub(b.m[1][1], b.m[0][0]));
    auto p2 = coeff_map(c, c.neg(b.m[0][1]));
    std::map<std::pair<int, Exps>, UPoly> constraints;
    auto put = [&](const std::map<std::pair<int, Exps>, Scalar>& src, int k) {
        for (auto& [key, coef] : src) {
            auto it = constraints.find(key);
            if (it == constraints.end()) it = constraints.insert({key, UPoly(3, Scalar(0))}).first;
            it->second[k] = coef;
        }
    };
    put(p0, 0);
    put(p1, 1);
    put(p2, 2);
    std::optional<std::string> witness;
    if (constraints.empty()) {
        witness = "v1";  // every line through v1 is invariant
    } else {
        UPoly g = {Scalar(0)};
        for (auto& [key, q] : constraints) g = upgcd(ring, g, q);
        auto roots = uproots(ring, g);  // empty when the gcd is constant
        if (!roots.empty()) witness = "v1 + " + ring.to_string(roots.front()) + " v2";
    }
    if (!witness && c.is_zero(b.m[0][1])) witness = "v2";
    if (ring.kind() == Ring::Kind::PrimeField) {
        auto enumerated = reducibility_witness_enum(c, b.m, ring.modulus());
        if (enumerated.has_value() != witness.has_value())
            throw std::logic_error("irreducibility: constraint method and line enumeration disagree");
    }
    res.irreducible = !witness.has_value();
    if (witness) res.witness = *witness;
    return res;
}

std::vector<int> sl2_weights(const Comodule& wt) {
    const Carrier& c = wt.hopf.carrier();
    if (c.kind() != CarrierKind::SL2T)
        throw std::invalid_argument("sl2_weights expects a comodule over the SL2 torus");
    require_diagonal(c, wt);
    std::vector<int> out;
    for (int i = 0; i < wt.rank(); ++i) out.push_back(diagonal_exponents(c, wt, i)[0]);
    return out;
}

}  // namespace gl2rep
