#include "sszeta/families.hpp"

namespace sszeta::families {

namespace {

FieldElement frac(const Field &k, std::int64_t num, std::int64_t den) { return FieldElement(k, num) / FieldElement(k, den); }

bool divisible(std::uint64_t p, std::int64_t den) { return den % static_cast<std::int64_t>(p) == 0; }

// a != value, skipping values whose denominator vanishes
bool avoids(const FieldElement &a, std::int64_t num, std::int64_t den) {
    const Field &k = a.field();
    if (divisible(k->p(), den)) return true;
    return !(a == frac(k, num, den));
}

Polynomial poly_of(const Field &k, std::vector<FieldElement> c) { return Polynomial(k, std::move(c)); }

} // namespace

FamilyTag FamilyTag::rigid(FamilyKind kind, const Field &k) {
    if (kind == FamilyKind::Biquadratic || kind == FamilyKind::D8 || kind == FamilyKind::D12)
        fail(Errc::UnknownFamily, std::string(curve::family_name(kind)) + " needs parameters");
    FamilyTag t;
    t.kind = kind;
    t.k = k;
    return t;
}

FamilyTag FamilyTag::d8(const FieldElement &a) {
    if (!is_generic(FamilyKind::D8, a, a)) fail(Errc::ModelMismatch, "a = " + a.to_string() + " is excluded from the D8 family");
    FamilyTag t;
    t.kind = FamilyKind::D8;
    t.k = a.field();
    t.a = a;
    return t;
}

FamilyTag FamilyTag::d12(const FieldElement &a) {
    if (!is_generic(FamilyKind::D12, a, a)) fail(Errc::ModelMismatch, "a = " + a.to_string() + " is excluded from the D12 family");
    FamilyTag t;
    t.kind = FamilyKind::D12;
    t.k = a.field();
    t.a = a;
    return t;
}

FamilyTag FamilyTag::biquadratic(const FieldElement &a, const FieldElement &b) {
    if (a.field() != b.field()) fail(Errc::ContextMismatch, "parameters from different fields");
    if (!is_generic(FamilyKind::Biquadratic, a, b))
        fail(Errc::ModelMismatch, "(" + a.to_string() + ", " + b.to_string() + ") is excluded from the biquadratic family");
    FamilyTag t;
    t.kind = FamilyKind::Biquadratic;
    t.k = a.field();
    t.a = a;
    t.b = b;
    return t;
}

bool FamilyTag::parametric() const {
    return kind == FamilyKind::Biquadratic || kind == FamilyKind::D8 || kind == FamilyKind::D12;
}

CurveModel FamilyTag::model() const {
    const FieldElement o = FieldElement::one(k), z = FieldElement::zero(k);
    switch (kind) {
    case FamilyKind::Biquadratic: return CurveModel::odd(poly_of(k, {o, z, b, z, a, z, o}));
    case FamilyKind::D8: return CurveModel::odd(poly_of(k, {z, a, z, o, z, o}));
    case FamilyKind::D12:
        if (k->p() == 3) return CurveModel::odd(poly_of(k, {o, z, o, z, o, z, a}));
        return CurveModel::odd(poly_of(k, {a, z, z, o, z, z, o}));
    case FamilyKind::X6minus1: return CurveModel::odd(poly_of(k, {-o, z, z, z, z, z, o}));
    case FamilyKind::X5minusX: return CurveModel::odd(poly_of(k, {z, -o, z, z, z, o}));
    case FamilyKind::X5minus1: return CurveModel::odd(poly_of(k, {-o, z, z, z, z, o}));
    }
    fail(Errc::UnknownFamily, "bad family");
}

std::string FamilyTag::to_string() const {
    std::string s(curve::family_name(kind));
    if (kind == FamilyKind::Biquadratic) return s + "(a=" + a.to_string() + ", b=" + b.to_string() + ")";
    if (parametric()) return s + "(a=" + a.to_string() + ")";
    return s;
}

bool is_generic(FamilyKind kind, const FieldElement &a, const FieldElement &b) {
    switch (kind) {
    case FamilyKind::D8: return !a.is_zero() && avoids(a, 1, 4) && avoids(a, 9, 100);
    case FamilyKind::D12:
        if (a.field()->p() == 3) return !a.is_zero();
        return !a.is_zero() && avoids(a, 1, 4) && avoids(a, -1, 50);
    case FamilyKind::Biquadratic: {
        const Field &k = a.field();
        const FieldElement c = a * b, d = a.pow(3) + b.pow(3);
        const FieldElement v = (FieldElement(k, 4) * c.pow(3) - d * d) * (c * c - FieldElement(k, 4) * d + FieldElement(k, 18) * c - FieldElement(k, 27)) *
                               (c * c - FieldElement(k, 4) * d - FieldElement(k, 110) * c + FieldElement(k, 1125));
        return !v.is_zero();
    }
    default: return true;
    }
}

bool ss_condition(const FamilyTag &tag, std::uint64_t p) {
    switch (tag.kind) {
    case FamilyKind::X6minus1: return p % 3 == 2;
    case FamilyKind::X5minusX: return p % 8 == 5 || p % 8 == 7;
    case FamilyKind::X5minus1: return p % 5 == 2 || p % 5 == 3 || p % 5 == 4;
    default: return zeta::is_supersingular(tag.model());
    }
}

std::vector<FamilyTag> find_ss_parameters(FamilyKind kind, const Field &k, std::uint64_t budget) {
    std::vector<FamilyTag> out;
    if (k->p() == 2) return out;
    const std::uint64_t q = k->q_u64();
    auto try_tag = [&](const FieldElement &a, const FieldElement &b) {
        if (!is_generic(kind, a, b)) return;
        FamilyTag t;
        t.kind = kind;
        t.k = k;
        t.a = a;
        t.b = b;
        if (kind != FamilyKind::Biquadratic) t.b = FieldElement();
        try {
            if (zeta::is_supersingular(t.model())) out.push_back(t);
        } catch (const Error &e) {
            if (e.code() != Errc::NotSeparable && e.code() != Errc::DegreeMismatch) throw;
        }
    };
    std::uint64_t seen = 0;
    switch (kind) {
    case FamilyKind::D8:
    case FamilyKind::D12:
        // the p = 3 model of the D12 family is never supersingular
        if (kind == FamilyKind::D12 && k->p() == 3) return out;
        for (std::uint64_t i = 0; i < q && seen < budget; ++i, ++seen) {
            const FieldElement a = ff::element_at(k, i);
            try_tag(a, a);
        }
        break;
    case FamilyKind::Biquadratic:
        for (std::uint64_t i = 0; i < q && seen < budget; ++i)
            for (std::uint64_t j = 0; j < q && seen < budget; ++j, ++seen) try_tag(ff::element_at(k, i), ff::element_at(k, j));
        break;
    default:
        fail(Errc::UnknownFamily, std::string(curve::family_name(kind)) + " has no parameters");
    }
    return out;
}

std::vector<FamilyTag> supersingular_members(const Field &k, std::uint64_t budget) {
    std::vector<FamilyTag> out;
    const auto p = k->p();
    if (p == 2) return out;
    for (auto kind : {FamilyKind::X5minus1, FamilyKind::X5minusX, FamilyKind::X6minus1}) {
        // x^6 - 1 is singular at 3 and has extra automorphisms at 5; x^5 - 1 is singular at 5
        if ((kind == FamilyKind::X6minus1 && (p == 3 || p == 5)) || (kind == FamilyKind::X5minus1 && p == 5)) continue;
        if (ss_condition(FamilyTag::rigid(kind, k), p)) out.push_back(FamilyTag::rigid(kind, k));
    }
    for (auto kind : {FamilyKind::D8, FamilyKind::D12, FamilyKind::Biquadratic})
        for (auto &t : find_ss_parameters(kind, k, budget)) out.push_back(std::move(t));
    return out;
}

bool Prediction::matches(const WeilCoeffs &x) const {
    if (x.q != w.q || x.s != w.s) return false;
    return x.r == w.r || (r_sign_free && x.r == -w.r);
}

mpz_class Setting::root_q() const { return k->sqrt_q(); }

} // namespace sszeta::families
