#include "gl2rep/distributions.hpp"

namespace gl2rep {

namespace {

// Dual-number data over the 4 coordinates (x11-1, x12, x21, x22-1); the SL2
// collapse to 3 coordinates happens at the end.
struct RawJet {
    Scalar value;
    std::array<Scalar, 4> g;
};

RawJet raw_one(const Ring& ring) { return {ring.one(), {Scalar(0), Scalar(0), Scalar(0), Scalar(0)}}; }

RawJet raw_mul(const Ring& ring, const RawJet& a, const RawJet& b) {
    RawJet r{ring.mul(a.value, b.value), {}};
    for (int i = 0; i < 4; ++i)
        r.g[i] = ring.add(ring.mul(a.value, b.g[i]), ring.mul(b.value, a.g[i]));
    return r;
}

// Jet of a single monomial in x11, x12, x21, x22 times (1/D)^dinv; the jet
// of 1/D is 1 - (D - 1) to first order, gradient (-1, 0, 0, -1).
RawJet monomial_jet(const Ring& ring, const Exps& e, int dinv) {
    static const Scalar vals[4] = {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    RawJet r = raw_one(ring);
    for (int v = 0; v < 4; ++v)
        for (int k = 0; k < e[v]; ++k) {
            RawJet gen{vals[v], {Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
            gen.g[v] = ring.one();
            r = raw_mul(ring, r, gen);
        }
    RawJet dj{ring.one(), {ring.from_long(-1), Scalar(0), Scalar(0), ring.from_long(-1)}};
    for (int k = 0; k < dinv; ++k) r = raw_mul(ring, r, dj);
    return r;
}

// Jet coordinates including the value slot: (value, gradient...) of length
// 5 for GL2 and 4 for SL2 with the D = 1 collapse applied.
std::vector<Scalar> jet_coords(const Ring& ring, const RawJet& j, bool sl2) {
    if (!sl2) return {j.value, j.g[0], j.g[1], j.g[2], j.g[3]};
    return {j.value, j.g[1], ring.sub(j.g[0], j.g[3]), j.g[2]};
}

bool full_kind(CarrierKind k) { return k == CarrierKind::GL2Full || k == CarrierKind::SL2Full; }

// gl2 as 2x2 matrices over the ring, for the commutator oracle.
using Mat2 = std::array<std::array<Scalar, 2>, 2>;

Mat2 mat_zero() { return {{{Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0)}}}; }

Mat2 mat_commutator(const Ring& ring, const Mat2& a, const Mat2& b) {
    Mat2 r = mat_zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                r[i][j] = ring.add(r[i][j], ring.sub(ring.mul(a[i][k], b[k][j]),
                                                     ring.mul(b[i][k], a[k][j])));
    return r;
}

}  // namespace

Jet1 jet1(const Carrier& c, const AlgElem& a) {
    if (!full_kind(c.kind()))
        throw std::invalid_argument("jet1 expects an element of a full coordinate ring");
    Ring ring = c.ring();
    bool sl2 = c.kind() == CarrierKind::SL2Full;
    std::vector<Scalar> acc(sl2 ? 4 : 5, Scalar(0));
    for (auto& [e, coef] : a.comp[0].terms()) {
        auto co = jet_coords(ring, monomial_jet(ring, e, a.denom_exp), sl2);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] = ring.add(acc[i], ring.mul(coef, co[i]));
    }
    Jet1 out{acc[0], {}};
    out.grad.assign(acc.begin() + 1, acc.end());
    return out;
}

Dist1Algebra::Dist1Algebra(Ring ring, bool sl2) : ring_(ring), n_(sl2 ? 4 : 5) {
    HopfAlgebra h = sl2 ? HopfAlgebra::sl2_full(ring) : HopfAlgebra::gl2_full(ring);
    const Carrier& c = h.carrier();
    // jet basis over the carrier: 1, x11-1, x12, x21, x22-1 for GL2 and
    // 1, x12, x11-1, x21 for SL2
    std::vector<AlgElem> basis;
    basis.push_back(c.one());
    if (sl2) {
        basis.push_back(c.gen(1));
        basis.push_back(c.sub(c.gen(0), c.one()));
        basis.push_back(c.gen(2));
    } else {
        basis.push_back(c.sub(c.gen(0), c.one()));
        basis.push_back(c.gen(1));
        basis.push_back(c.gen(2));
        basis.push_back(c.sub(c.gen(3), c.one()));
    }
    for (int i = 0; i < n_; ++i) {
        auto dd = h.comultiply(basis[i]);
        std::vector<std::vector<Scalar>> mat(n_, std::vector<Scalar>(n_, Scalar(0)));
        for (auto& [choice, poly] : dd.cells) {
            for (auto& [e, coef] : poly.terms()) {
                Exps le(e.begin(), e.begin() + 4), re(e.begin() + 4, e.end());
                auto lj = jet_coords(ring_, monomial_jet(ring_, le, dd.denom[0]), sl2);
                auto rj = jet_coords(ring_, monomial_jet(ring_, re, dd.denom[1]), sl2);
                for (int a = 0; a < n_; ++a)
                    for (int b = 0; b < n_; ++b)
                        mat[a][b] = ring_.add(mat[a][b],
                                              ring_.mul(coef, ring_.mul(lj[a], rj[b])));
            }
        }
        rho_.push_back(mat);
    }
}

Dist1Algebra Dist1Algebra::gl2(Ring ring) { return Dist1Algebra(ring, false); }
Dist1Algebra Dist1Algebra::sl2(Ring ring) { return Dist1Algebra(ring, true); }

Dist1Elem Dist1Algebra::basis(int i) const {
    Dist1Elem z = zero();
    z[i] = ring_.one();
    return z;
}

Dist1Elem Dist1Algebra::bracket(const Dist1Elem& u, const Dist1Elem& v) const {
    Dist1Elem w = zero();
    for (int i = 0; i < n_; ++i) {
        Scalar acc(0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                Scalar anti = ring_.sub(ring_.mul(u[a], v[b]), ring_.mul(v[a], u[b]));
                acc = ring_.add(acc, ring_.mul(rho_[i][a][b], anti));
            }
        w[i] = acc;
    }
    return w;
}

std::vector<std::vector<Dist1Elem>> Dist1Algebra::bracket_table() const {
    std::vector<std::vector<Dist1Elem>> t(n_, std::vector<Dist1Elem>(n_, zero()));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[i][j] = bracket(basis(i), basis(j));
    return t;
}

std::string Dist1Algebra::to_string(const Dist1Elem& u) const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (ring_.is_zero(u[i])) continue;
        if (!s.empty()) s += " + ";
        if (u[i] != Scalar(1)) s += ring_.to_string(u[i]) + "*";
        s += "z" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

Report verify_gl2_iso(Ring ring) {
    Report rep;
    rep.title = "Dist1(GL2) = A{z0} + gl2 over " + ring.name();
    Dist1Algebra d = Dist1Algebra::gl2(ring);
    // z0 is central
    bool central = true;
    for (int i = 0; i < 5; ++i) {
        auto a = d.bracket(d.basis(0), d.basis(i));
        auto b = d.bracket(d.basis(i), d.basis(0));
        for (int k = 0; k < 5; ++k)
            if (!ring.is_zero(a[k]) || !ring.is_zero(b[k])) central = false;
    }
    rep.add("z0 central", central);
    // f(z1), f(z2), f(z3), f(z4) = e11, e12, e21, e22; the bracket must map
    // to the matrix commutator with no z0 component
    std::array<Mat2, 4> f;
    for (int i = 0; i < 4; ++i) f[i] = mat_zero();
    f[0][0][0] = ring.one();  // e11
    f[1][0][1] = ring.one();  // e12
    f[2][1][0] = ring.one();  // e21
    f[3][1][1] = ring.one();  // e22
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            auto br = d.bracket(d.basis(i), d.basis(j));
            Mat2 lhs = mat_zero();
            static const int pos[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
            for (int k = 0; k < 4; ++k)
                lhs[pos[k][0]][pos[k][1]] = ring.add(lhs[pos[k][0]][pos[k][1]], br[k + 1]);
            Mat2 rhs = mat_commutator(ring, f[i - 1], f[j - 1]);
            bool ok = ring.is_zero(br[0]);
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s)
                    if (lhs[r][s] != rhs[r][s]) ok = false;
            rep.add("f[z" + std::to_string(i) + ",z" + std::to_string(j) +
                        "] equals matrix commutator",
                    ok);
        }
    return rep;
}

Report verify_jacobi(Ring ring) {
    Report rep;
    rep.title = "Jacobi identity in Dist1(GL2) over " + ring.name();
    Dist1Algebra d = Dist1Algebra::gl2(ring);
    bool ok = true;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) {
                auto s1 = d.bracket(d.bracket(d.basis(i), d.basis(j)), d.basis(k));
                auto s2 = d.bracket(d.bracket(d.basis(j), d.basis(k)), d.basis(i));
                auto s3 = d.bracket(d.bracket(d.basis(k), d.basis(i)), d.basis(j));
                for (int t = 0; t < 5; ++t)
                    if (!ring.is_zero(ring.add(s1[t], ring.add(s2[t], s3[t])))) ok = false;
            }
    rep.add("125 basis triples", ok);
    return rep;
}

Report sl2_embedding_check(Ring ring) {
    Report rep;
    rep.title = "Dist1(SL2) embeds in Dist1(GL2) over " + ring.name();
    Dist1Algebra s = Dist1Algebra::sl2(ring), g = Dist1Algebra::gl2(ring);
    // basis w0, x, H, y; the embedding sends them to z0, z2, z1 - z4, z3
    std::vector<Dist1Elem> img;
    img.push_back(g.basis(0));
    img.push_back(g.basis(2));
    Dist1Elem h = g.basis(1);
    h[4] = ring.from_long(-1);
    img.push_back(h);
    img.push_back(g.basis(3));
    static const char* names[4] = {"w0", "x", "H", "y"};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto br = s.bracket(s.basis(i), s.basis(j));
            Dist1Elem lhs = g.zero();
            for (int k = 0; k < 4; ++k)
                for (int t = 0; t < 5; ++t)
                    lhs[t] = ring.add(lhs[t], ring.mul(br[k], img[k][t]));
            Dist1Elem rhs = g.bracket(img[i], img[j]);
            bool ok = true;
            for (int t = 0; t < 5; ++t)
                if (lhs[t] != rhs[t]) ok = false;
            rep.add(std::string("g[") + names[i] + "," + names[j] + "] = [g " + names[i] +
                        ", g " + names[j] + "]",
                    ok);
        }
    // [x, y] = H and w0 central
    auto xy = s.bracket(s.basis(1), s.basis(3));
    bool xy_ok = true;
    for (int t = 0; t < 4; ++t)
        if (xy[t] != (t == 2 ? ring.one() : Scalar(0))) xy_ok = false;
    rep.add("[x,y] = H", xy_ok);
    bool central = true;
    for (int i = 0; i < 4; ++i) {
        auto br = s.bracket(s.basis(0), s.basis(i));
        for (int t = 0; t < 4; ++t)
            if (!ring.is_zero(br[t])) central = false;
    }
    rep.add("w0 central", central);
    return rep;
}

}  // namespace gl2rep
