#include "gl2rep/comodule.hpp"

namespace gl2rep {

namespace {

std::string sym_label(int d, int i) {
    // exponent of e2 is i
    std::string s;
    if (d - i > 0) s += "e1" + (d - i > 1 ? "^" + std::to_string(d - i) : "");
    if (i > 0) {
        if (!s.empty()) s += "*";
        s += "e2" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s.empty() ? "1" : s;
}

}  // namespace

Comodule standard(const HopfAlgebra& h, Comodule::Side side) {
    const Carrier& c = h.carrier();
    if (c.kind() != CarrierKind::GL2Full && c.kind() != CarrierKind::SL2Full)
        throw std::invalid_argument("standard comodule lives over the full coordinate ring");
    Comodule w{h, side, {"e1", "e2"}, {}};
    AlgElem x11 = c.gen(0), x12 = c.gen(1), x21 = c.gen(2), x22 = c.gen(3);
    if (side == Comodule::Side::HopfLeft)
        w.m = {{x11, x21}, {x12, x22}};
    else
        w.m = {{x11, x12}, {x21, x22}};
    return w;
}

Comodule sym_power(const Comodule& v, int d) {
    if (v.rank() != 2) throw std::invalid_argument("sym_power needs a rank-2 comodule");
    if (d < 0) throw std::invalid_argument("sym_power: d >= 0 required");
    const Carrier& c = v.hopf.carrier();
    // elements of carrier (x) Sym, keyed by the e2-exponent of e1^a e2^b
    using Vec = std::vector<AlgElem>;
    auto mul_vec = [&](const Vec& a, const Vec& b) {
        Vec r((a.size() - 1) + (b.size() - 1) + 1, c.zero());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = c.add(r[i + j], c.mul(a[i], b[j]));
        return r;
    };
    Comodule w{v.hopf, v.side, {}, {}};
    for (int i = 0; i <= d; ++i) w.basis.push_back(sym_label(d, i));
    w.m.assign(d + 1, std::vector<AlgElem>(d + 1, c.zero()));
    Vec f0 = {v.m[0][0], v.m[1][0]};  // coaction column of e1
    Vec f1 = {v.m[0][1], v.m[1][1]};  // coaction column of e2
    for (int i = 0; i <= d; ++i) {
        Vec col = {c.one()};
        for (int k = 0; k < d - i; ++k) col = mul_vec(col, f0);
        for (int k = 0; k < i; ++k) col = mul_vec(col, f1);
        for (int r = 0; r <= d; ++r) w.m[r][i] = col[r];
    }
    return w;
}

Comodule tensor_product(const Comodule& a, const Comodule& b) {
    if (a.hopf.carrier().kind() != b.hopf.carrier().kind() || a.side != b.side ||
        a.hopf.ring() != b.hopf.ring())
        throw std::invalid_argument("tensor_product: mismatched comodules");
    const Carrier& c = a.hopf.carrier();
    Comodule w{a.hopf, a.side, {}, {}};
    int ra = a.rank(), rb = b.rank();
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) w.basis.push_back(a.basis[i] + "(x)" + b.basis[j]);
    w.m.assign(ra * rb, std::vector<AlgElem>(ra * rb, c.zero()));
    for (int i1 = 0; i1 < ra; ++i1)
        for (int i2 = 0; i2 < rb; ++i2)
            for (int j1 = 0; j1 < ra; ++j1)
                for (int j2 = 0; j2 < rb; ++j2)
                    w.m[i1 * rb + i2][j1 * rb + j2] = c.mul(a.m[i1][j1], b.m[i2][j2]);
    return w;
}

Comodule sym_tensor2(const Comodule& v) {
    if (v.rank() != 2) throw std::invalid_argument("sym_tensor2 needs a rank-2 comodule");
    const Carrier& c = v.hopf.carrier();
    Comodule t = tensor_product(v, v);
    // rows/columns of t are indexed (i1,i2) -> 2 i1 + i2
    auto column = [&](int j) {
        std::vector<AlgElem> col;
        for (int r = 0; r < 4; ++r) col.push_back(t.m[r][j]);
        return col;
    };
    auto add_cols = [&](std::vector<AlgElem> x, const std::vector<AlgElem>& y) {
        for (int r = 0; r < 4; ++r) x[r] = c.add(x[r], y[r]);
        return x;
    };
    std::vector<std::vector<AlgElem>> cols = {column(0), add_cols(column(1), column(2)),
                                              column(3)};
    Comodule w{v.hopf, v.side, {"u11", "u12", "u22"}, {}};
    w.m.assign(3, std::vector<AlgElem>(3, c.zero()));
    for (int j = 0; j < 3; ++j) {
        if (!c.eq(cols[j][1], cols[j][2]))
            throw std::domain_error("sym_tensor2: invariant span not closed");
        w.m[0][j] = cols[j][0];
        w.m[1][j] = cols[j][1];
        w.m[2][j] = cols[j][3];
    }
    return w;
}

std::optional<AlgElem> carrier_inverse(const Carrier& c, const AlgElem& a) {
    AlgElem x = a;
    c.canonicalize(x);
    if (c.is_zero(x)) return std::nullopt;
    Ring ring = c.ring();
    if (c.kind() == CarrierKind::GL2Full) {
        SparsePoly p = x.comp[0];
        int m = 0;
        const SparsePoly d = det_poly(ring);
        for (;;) {
            auto q = p.divide_exact(d);
            if (!q) break;
            p = *q;
            ++m;
        }
        if (!p.is_constant() || !ring.is_unit(p.constant_value())) return std::nullopt;
        Scalar inv_c = ring.inverse(p.constant_value());
        AlgElem r = c.zero();
        int e = x.denom_exp;
        if (e >= m) {
            r.comp[0] = d.pow((unsigned)(e - m)).scaled(inv_c);
        } else {
            r.comp[0] = SparsePoly::constant(ring, 4, inv_c);
            r.denom_exp = m - e;
        }
        return r;
    }
    if (c.kind() == CarrierKind::SL2Full) {
        if (!x.comp[0].is_constant() || !ring.is_unit(x.comp[0].constant_value()))
            return std::nullopt;
        return c.from_scalar(ring.inverse(x.comp[0].constant_value()));
    }
    // componentwise unit monomials on direct-sum and Laurent carriers
    AlgElem r = c.zero();
    for (int i = 0; i < c.ncomp(); ++i) {
        if (!x.comp[i].is_monomial()) return std::nullopt;
        auto& [e, coef] = *x.comp[i].terms().begin();
        if (!ring.is_unit(coef)) return std::nullopt;
        Exps ie(e.size());
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] != 0 && !c.laurent(i)) return std::nullopt;
            ie[k] = -e[k];
        }
        r.comp[i] = SparsePoly::monomial(ring, c.arity(i), ie, ring.inverse(coef),
                                         c.laurent(i));
    }
    return r;
}

AlgElem carrier_det(const Carrier& c, const std::vector<std::vector<AlgElem>>& m) {
    int n = (int)m.size();
    if (n == 0) return c.one();
    if (n == 1) return m[0][0];
    AlgElem acc = c.zero();
    for (int j = 0; j < n; ++j) {
        if (c.is_zero(m[0][j])) continue;
        std::vector<std::vector<AlgElem>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<AlgElem> row;
            for (int col = 0; col < n; ++col)
                if (col != j) row.push_back(m[r][col]);
            minor.push_back(row);
        }
        AlgElem term = c.mul(m[0][j], carrier_det(c, minor));
        acc = (j % 2 == 0) ? c.add(acc, term) : c.sub(acc, term);
    }
    return acc;
}

std::optional<std::vector<std::vector<AlgElem>>> carrier_matrix_inverse(
    const Carrier& c, const std::vector<std::vector<AlgElem>>& m) {
    int n = (int)m.size();
    auto det_inv = carrier_inverse(c, carrier_det(c, m));
    if (!det_inv) return std::nullopt;
    std::vector<std::vector<AlgElem>> inv(n, std::vector<AlgElem>(n, c.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<AlgElem>> minor;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<AlgElem> row;
                for (int col = 0; col < n; ++col)
                    if (col != i) row.push_back(m[r][col]);
                minor.push_back(row);
            }
            AlgElem cof = carrier_det(c, minor);
            if ((i + j) % 2 != 0) cof = c.neg(cof);
            inv[i][j] = c.mul(cof, *det_inv);  // adjugate / det
        }
    return inv;
}

Comodule dual(const Comodule& w) {
    const Carrier& c = w.hopf.carrier();
    auto inv = carrier_matrix_inverse(c, w.m);
    if (!inv) throw std::domain_error("not dualizable: structure matrix determinant is not a unit");
    Comodule d{w.hopf, w.side, {}, {}};
    for (auto& b : w.basis) d.basis.push_back(b + "*");
    int n = w.rank();
    d.m.assign(n, std::vector<AlgElem>(n, c.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.m[i][j] = (*inv)[j][i];
    return d;
}

Comodule restrict_along(const Comodule& w, const QuotientMap& q) {
    if (q.source().carrier().kind() != w.hopf.carrier().kind())
        throw std::invalid_argument("restrict_along: quotient source does not match comodule");
    Comodule r{q.target(), w.side, w.basis, {}};
    for (auto& row : w.m) {
        std::vector<AlgElem> out;
        for (auto& e : row) out.push_back(q.apply(e));
        r.m.push_back(out);
    }
    return r;
}

Report verify_comodule(const Comodule& w) {
    Report rep;
    rep.title = "comodule axioms over " + w.hopf.name();
    const TensorSpace& sq = w.hopf.square();
    int n = w.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto lhs = w.hopf.comultiply(w.m[i][j]);
            auto rhs = sq.zero();
            for (int k = 0; k < n; ++k) {
                if (w.side == Comodule::Side::HopfLeft)
                    rhs = sq.add(rhs, sq.embed({w.m[k][j], w.m[i][k]}));
                else
                    rhs = sq.add(rhs, sq.embed({w.m[i][k], w.m[k][j]}));
            }
            std::string at = "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            rep.add("coassociativity" + at, sq.eq(lhs, rhs));
            rep.add("counit" + at,
                    w.hopf.counit(w.m[i][j]) == (i == j ? Scalar(1) : Scalar(0)));
        }
    return rep;
}

}  // namespace gl2rep
