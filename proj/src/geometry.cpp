// Geometric automorphism groups via branch-point permutations.

#include <algorithm>
#include <numeric>

#include "sszeta/curve.hpp"

namespace sszeta::curve {

namespace {

using Vec2 = std::array<FieldElement, 2>;
using Mat = std::array<FieldElement, 4>;

Vec2 vec_of(const LinePoint &P, const Field &U) {
    if (P.inf) return {FieldElement::one(U), FieldElement::zero(U)};
    return {P.x, FieldElement::one(U)};
}

LinePoint point_of(const Vec2 &v) {
    if (v[1].is_zero()) return {FieldElement::one(v[0].field()), true};
    return {v[0] / v[1], false};
}

Vec2 act(const Mat &m, const Vec2 &v) { return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]}; }

Mat mat_mul(const Mat &a, const Mat &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat adjugate(const Mat &m) { return {m[3], -m[1], -m[2], m[0]}; }

FieldElement det2(const Vec2 &a, const Vec2 &b) { return a[0] * b[1] - a[1] * b[0]; }

// Matrix sending e1, e2, e1 + e2 to the three given points.
Mat frame(const Vec2 &v0, const Vec2 &v1, const Vec2 &v2) {
    const FieldElement d = det2(v0, v1);
    const FieldElement c0 = det2(v2, v1) / d;
    const FieldElement c1 = det2(v0, v2) / d;
    return {c0 * v0[0], c1 * v1[0], c0 * v0[1], c1 * v1[1]};
}

FieldElement eval_form(const std::vector<FieldElement> &form, const Vec2 &v) {
    // sum f_i X^i Z^(6-i)
    const Field &U = v[0].field();
    FieldElement acc = FieldElement::zero(U);
    FieldElement zp = FieldElement::one(U);
    std::array<FieldElement, 7> zpow;
    for (int i = 0; i <= 6; ++i) {
        zpow[i] = zp;
        zp *= v[1];
    }
    FieldElement xp = FieldElement::one(U);
    for (int i = 0; i <= 6; ++i) {
        if (!form[i].is_zero()) acc += form[i] * xp * zpow[6 - i];
        xp *= v[0];
    }
    return acc;
}

// Polynomial in x of F(alpha x + beta, gamma x + delta).
Polynomial substitute(const std::vector<FieldElement> &form, const Mat &m) {
    const Field &U = m[0].field();
    Polynomial num(U, {m[1], m[0]});
    Polynomial den(U, {m[3], m[2]});
    std::array<Polynomial, 7> np, dp;
    np[0] = dp[0] = Polynomial::constant(FieldElement::one(U));
    for (int i = 1; i <= 6; ++i) {
        np[i] = np[i - 1] * num;
        dp[i] = dp[i - 1] * den;
    }
    Polynomial acc(U);
    for (int i = 0; i <= 6; ++i)
        if (!form[i].is_zero()) acc += form[i] * (np[i] * dp[6 - i]);
    return acc;
}

unsigned lcm_of_shape(const GaloisShape &s) {
    unsigned l = 1;
    for (auto [d, r] : s.parts) l = std::lcm(l, d);
    return l;
}

// Scale so that the first nonzero entry is 1; e scales by the cube.
void normalize(Mat &m, FieldElement &e) {
    for (const auto &x : m) {
        if (x.is_zero()) continue;
        const FieldElement c = x.inverse();
        for (auto &y : m) y *= c;
        e *= c * c * c;
        return;
    }
    fail(Errc::NotAutomorphism, "singular matrix");
}

} // namespace

CurveGeometry::CurveGeometry(const CurveModel &C) : C_(C), k_(C.field()) {
    if (C.is_char2()) fail(Errc::WrongCharacteristic, "automorphism groups are computed in odd characteristic");
    const unsigned m0 = lcm_of_shape(weierstrass_shape(C));
    build(m0);
    if (group_.empty()) build(2 * m0);
    if (group_.empty()) fail(Errc::VerificationFailed, "automorphism search failed");
}

FieldElement CurveGeometry::lift(const FieldElement &a) const { return ff::embedding(k_, U_)(a); }

FieldElement CurveGeometry::descend(const FieldElement &a) const {
    auto r = ff::embedding(k_, U_).preimage(a);
    if (!r) fail(Errc::VerificationFailed, "element is not defined over the base field");
    return *r;
}

FieldElement CurveGeometry::sigma(const FieldElement &a) const { return ff::frobenius_power(a, k_->n()); }

void CurveGeometry::build(unsigned degree_over_k) {
    U_ = ff::extension_field(k_->p(), k_->n() * degree_over_k);
    form_.assign(7, FieldElement::zero(U_));
    const Polynomial &f = C_.f();
    for (int i = 0; i <= f.degree(); ++i) form_[i] = lift(f.coeffs()[i]);
    branch_.clear();
    group_.clear();
    by_perm_.clear();
    sigma_.clear();
    table_.clear();

    Polynomial fU(U_, std::vector<FieldElement>(form_.begin(), form_.begin() + f.degree() + 1));
    for (auto &r : poly::roots_in_field(fU)) branch_.push_back({r, false});
    if (f.degree() == 5) branch_.push_back({FieldElement::one(U_), true});
    if (branch_.size() != 6) fail(Errc::VerificationFailed, "splitting field too small");

    auto locate = [this](const LinePoint &P) -> int {
        for (std::size_t i = 0; i < branch_.size(); ++i)
            if (branch_[i] == P) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t i = 0; i < 6; ++i) {
        LinePoint s = branch_[i].inf ? branch_[i] : LinePoint{sigma(branch_[i].x), false};
        const int j = locate(s);
        if (j < 0) fail(Errc::VerificationFailed, "branch locus not Galois stable");
        sigma_perm_[i] = static_cast<std::uint8_t>(j);
    }

    // a test point off the branch locus for the scalar lambda
    Vec2 probe;
    bool have_probe = false;
    for (std::uint64_t j = 0; j < 64 && !have_probe; ++j) {
        FieldElement::Coeffs c(U_->n(), 0);
        std::uint64_t t = j;
        for (unsigned i = U_->n(); i-- > 0 && t;) {
            c[i] = static_cast<ff::Residue>(t % U_->p());
            t /= U_->p();
        }
        if (t) break;
        probe = {FieldElement(U_, std::move(c)), FieldElement::one(U_)};
        have_probe = !eval_form(form_, probe).is_zero();
    }
    if (!have_probe) return; // every point of U is a branch point; retry larger
    const FieldElement f_probe_inv = eval_form(form_, probe).inverse();
    const Polynomial f_affine(U_, form_);

    std::array<Vec2, 6> bv;
    for (std::size_t i = 0; i < 6; ++i) bv[i] = vec_of(branch_[i], U_);
    const Mat src_adj = adjugate(frame(bv[0], bv[1], bv[2]));

    for (std::size_t i0 = 0; i0 < 6; ++i0)
        for (std::size_t i1 = 0; i1 < 6; ++i1)
            for (std::size_t i2 = 0; i2 < 6; ++i2) {
                if (i0 == i1 || i0 == i2 || i1 == i2) continue;
                Mat M = mat_mul(frame(bv[i0], bv[i1], bv[i2]), src_adj);
                std::array<std::uint8_t, 6> perm{};
                bool ok = true;
                for (std::size_t j = 0; j < 6 && ok; ++j) {
                    const int t = locate(point_of(act(M, bv[j])));
                    if (t < 0) ok = false;
                    else perm[j] = static_cast<std::uint8_t>(t);
                }
                if (!ok) continue;
                const FieldElement lambda = eval_form(form_, act(M, probe)) * f_probe_inv;
                if (!(substitute(form_, M) == lambda * f_affine)) continue;
                auto e = ff::nth_root(lambda, 2);
                if (!e) { // caller retries over the quadratic extension
                    group_.clear();
                    return;
                }
                for (const FieldElement &ee : {*e, -*e}) {
                    Mat m = M;
                    FieldElement e2 = ee;
                    normalize(m, e2);
                    Automorphism a{m, e2, perm};
                    by_perm_[perm].push_back(group_.size());
                    group_.push_back(a);
                }
            }

    for (std::size_t i = 0; i < group_.size(); ++i) {
        const auto &g = group_[i];
        bool ident = true;
        for (std::size_t j = 0; j < 6; ++j) ident = ident && g.perm[j] == j;
        if (!ident) continue;
        if (g.e.is_one()) id_ = i;
        else iota_ = i;
    }
    sigma_.resize(group_.size());
    for (std::size_t i = 0; i < group_.size(); ++i) {
        std::array<std::uint8_t, 6> p{};
        for (std::size_t j = 0; j < 6; ++j) p[sigma_perm_[j]] = sigma_perm_[group_[i].perm[j]];
        sigma_[i] = index_of(p, sigma(group_[i].e), FieldElement::one(U_));
    }
    table_.assign(group_.size() * group_.size(), -1);
}

std::size_t CurveGeometry::index_of(const std::array<std::uint8_t, 6> &perm, const FieldElement &e, const FieldElement &scale) const {
    auto it = by_perm_.find(perm);
    if (it != by_perm_.end())
        for (std::size_t j : it->second)
            if (group_[j].e * scale == e) return j;
    fail(Errc::NotAutomorphism, "map is not an automorphism of the curve");
}

std::size_t CurveGeometry::mul(std::size_t i, std::size_t j) const {
    const std::size_t n = group_.size();
    auto &slot = table_[i * n + j];
    if (slot >= 0) return static_cast<std::size_t>(slot);
    const auto &a = group_[i], &b = group_[j];
    std::array<std::uint8_t, 6> perm{};
    for (std::size_t k = 0; k < 6; ++k) perm[k] = a.perm[b.perm[k]];
    // first nonzero entry of the product matrix
    FieldElement c0;
    const std::array<std::pair<int, int>, 4> idx{{{0, 0}, {0, 1}, {2, 0}, {2, 1}}};
    for (auto [r, c] : idx) {
        FieldElement v = a.m[r] * b.m[c] + a.m[r + 1] * b.m[c + 2];
        if (!v.is_zero()) {
            c0 = v;
            break;
        }
    }
    const std::size_t res = index_of(perm, a.e * b.e, c0 * c0 * c0);
    slot = static_cast<std::int32_t>(res);
    return res;
}

std::size_t CurveGeometry::inv(std::size_t i) const {
    std::array<std::uint8_t, 6> perm{};
    for (std::size_t k = 0; k < 6; ++k) perm[group_[i].perm[k]] = static_cast<std::uint8_t>(k);
    for (std::size_t j : by_perm_.at(perm))
        if (mul(i, j) == id_) return j;
    fail(Errc::VerificationFailed, "group has no inverse");
}

std::size_t CurveGeometry::power(std::size_t i, std::int64_t n) const {
    if (n < 0) return power(inv(i), -n);
    std::size_t r = id_;
    for (std::int64_t k = 0; k < n; ++k) r = mul(r, i);
    return r;
}

unsigned CurveGeometry::order(std::size_t i) const {
    unsigned o = 1;
    for (std::size_t r = i; r != id_; r = mul(r, i)) ++o;
    return o;
}

unsigned CurveGeometry::definition_degree(std::size_t i) const {
    unsigned d = 1;
    for (std::size_t r = sigma_[i]; r != i; r = sigma_[r]) ++d;
    return d;
}

bool CurveGeometry::same_reduced(std::size_t i, std::size_t j) const { return group_[i].perm == group_[j].perm; }

std::optional<std::size_t> CurveGeometry::try_find(const std::array<FieldElement, 4> &m0, const FieldElement &e0) const {
    Mat m = m0;
    FieldElement e = e0;
    if (m[0] * m[3] - m[1] * m[2] == FieldElement::zero(U_)) return std::nullopt;
    normalize(m, e);
    std::array<std::uint8_t, 6> perm{};
    for (std::size_t j = 0; j < 6; ++j) {
        LinePoint P = point_of(act(m, vec_of(branch_[j], U_)));
        auto it = std::find(branch_.begin(), branch_.end(), P);
        if (it == branch_.end()) return std::nullopt;
        perm[j] = static_cast<std::uint8_t>(it - branch_.begin());
    }
    auto it = by_perm_.find(perm);
    if (it == by_perm_.end()) return std::nullopt;
    for (std::size_t j : it->second)
        if (group_[j].e == e && group_[j].m == m) return j;
    return std::nullopt;
}

std::size_t CurveGeometry::find(const std::array<FieldElement, 4> &m, const FieldElement &e) const {
    auto r = try_find(m, e);
    if (!r) fail(Errc::NotAutomorphism, "map is not an automorphism of " + C_.to_string());
    return *r;
}

LinePoint CurveGeometry::apply(std::size_t i, const LinePoint &P) const { return point_of(act(group_[i].m, vec_of(P, U_))); }

LinePoint CurveGeometry::sigma(const LinePoint &P) const {
    if (P.inf) return P;
    return {sigma(P.x), false};
}

WPoint CurveGeometry::apply(std::size_t i, const WPoint &P) const {
    const auto &g = group_[i];
    FieldElement X = g.m[0] * P.X + g.m[1] * P.Z;
    FieldElement Z = g.m[2] * P.X + g.m[3] * P.Z;
    FieldElement Y = g.e * P.Y;
    if (!Z.is_zero()) {
        const FieldElement zi = Z.inverse();
        return {X * zi, Y * zi * zi * zi, FieldElement::one(U_)};
    }
    const FieldElement xi = X.inverse();
    return {FieldElement::one(U_), Y * xi * xi * xi, FieldElement::zero(U_)};
}

const std::vector<Automorphism> &geometric_automorphisms(const CurveGeometry &G, FamilyKind family) {
    const unsigned want = expected_aut_order(family, G.base()->p());
    if (G.size() != want)
        fail(Errc::ModelMismatch, G.curve().to_string() + " has " + std::to_string(G.size()) + " automorphisms, family " +
                                      std::string(family_name(family)) + " expects " + std::to_string(want));
    return G.group();
}

} // namespace sszeta::curve
