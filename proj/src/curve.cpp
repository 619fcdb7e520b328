#include "sszeta/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sszeta::curve {

// ---------------------------------------------------------------- models

CurveModel CurveModel::odd(Polynomial f) {
    const Field &F = f.field();
    if (!F) fail(Errc::ModelMismatch, "curve without a field");
    if (F->p() == 2) fail(Errc::WrongCharacteristic, "y^2 = f(x) needs odd characteristic");
    if (f.degree() != 5 && f.degree() != 6) fail(Errc::DegreeMismatch, "f must have degree 5 or 6, got " + f.to_string());
    if (!poly::is_separable(f)) fail(Errc::NotSeparable, f.to_string() + " is not separable");
    CurveModel C;
    C.kind_ = Kind::OddChar;
    C.field_ = F;
    C.f_ = std::move(f);
    return C;
}

CurveModel CurveModel::artin_schreier(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
    const Field &F = a.field();
    if (F->p() != 2) fail(Errc::WrongCharacteristic, "Artin-Schreier models need characteristic 2");
    if (b.field() != F || c.field() != F || d.field() != F) fail(Errc::ContextMismatch, "coefficients from different fields");
    if (a.is_zero()) fail(Errc::ZeroInput, "leading coefficient a must be nonzero");
    CurveModel C;
    C.kind_ = Kind::Char2;
    C.field_ = F;
    C.a_ = std::move(a);
    C.b_ = std::move(b);
    C.c_ = std::move(c);
    C.d_ = std::move(d);
    C.f_ = C.rhs();
    return C;
}

const Polynomial &CurveModel::f() const {
    if (kind_ != Kind::OddChar) fail(Errc::WrongCharacteristic, "no Weierstrass polynomial in characteristic 2");
    return f_;
}

int CurveModel::degree() const { return kind_ == Kind::Char2 ? 5 : f_.degree(); }

Polynomial CurveModel::rhs() const {
    if (kind_ == Kind::OddChar) return f_;
    std::vector<FieldElement> v(6, FieldElement::zero(field_));
    v[5] = a_;
    v[3] = b_;
    v[1] = c_;
    v[0] = d_;
    return Polynomial(field_, std::move(v));
}

std::string CurveModel::to_string() const {
    if (kind_ == Kind::OddChar) return "y^2 = " + f_.to_string();
    return "y^2 + y = " + rhs().to_string();
}

bool operator==(const CurveModel &x, const CurveModel &y) {
    return x.kind_ == y.kind_ && x.field_ == y.field_ && x.f_ == y.f_;
}

CurveModel parse_curve(const Field &f, std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) fail(Errc::ParseError, "curve needs '=': " + std::string(text));
    std::string lhs;
    for (char ch : text.substr(0, eq))
        if (!std::isspace(static_cast<unsigned char>(ch))) lhs += ch;
    Polynomial rhs = poly::parse_polynomial(f, text.substr(eq + 1));
    if (lhs == "y^2") return CurveModel::odd(std::move(rhs));
    if (lhs == "y^2+y" || lhs == "y+y^2") {
        if (rhs.degree() != 5) fail(Errc::ModelMismatch, "Artin-Schreier model needs degree 5");
        for (int i : {2, 4})
            if (!rhs.coeff(i).is_zero()) fail(Errc::ModelMismatch, "Artin-Schreier model allows only x^5, x^3, x, 1 terms");
        return CurveModel::artin_schreier(rhs.coeff(5), rhs.coeff(3), rhs.coeff(1), rhs.coeff(0));
    }
    fail(Errc::ParseError, "unsupported left-hand side '" + lhs + "'");
}

GaloisShape weierstrass_shape(const CurveModel &C) {
    if (C.is_char2()) fail(Errc::WrongCharacteristic, "Weierstrass shape is defined for odd characteristic");
    GaloisShape s = poly::factor_shape(C.f());
    if (C.degree() == 5) s.parts[1] += 1;
    return s;
}

CurveModel hyperelliptic_twist(const CurveModel &C) {
    const Field &F = C.field();
    if (!C.is_char2()) return CurveModel::odd(ff::first_nonsquare(F) * C.f());
    for (std::uint64_t i = 1;; ++i) {
        FieldElement d0 = ff::element_at(F, i);
        if (ff::absolute_trace(d0) == 1) return CurveModel::artin_schreier(C.a(), C.b(), C.c(), C.d() + d0);
    }
}

std::optional<CurveModel> imaginary_model(const CurveModel &C) {
    if (C.is_char2()) fail(Errc::WrongCharacteristic, "imaginary models are for odd characteristic");
    if (C.degree() == 5) return C;
    const auto roots = poly::roots_in_field(C.f());
    if (roots.empty()) return std::nullopt;
    // x = alpha + 1/t, y = Y/t^3
    const Field &F = C.field();
    Polynomial g(F), xa = Polynomial::x(F) + Polynomial::constant(roots.front());
    Polynomial pw = Polynomial::constant(FieldElement::one(F));
    for (int i = 0; i <= 6; ++i) {
        g += C.f().coeff(i) * pw;
        pw = pw * xa;
    }
    return CurveModel::odd(g.reversed(6));
}

std::vector<WPoint> rational_points(const CurveModel &C) {
    const Field &F = C.field();
    if (F->q() > 65536) fail(Errc::SearchBudgetExceeded, "point enumeration limited to q <= 2^16");
    const std::uint64_t q = F->q_u64();
    // value -> list of y solving the fibre equation
    std::vector<std::vector<std::uint32_t>> sols(q);
    for (std::uint64_t y = 0; y < q; ++y) {
        FieldElement Y = ff::element_at(F, y);
        FieldElement v = C.is_char2() ? Y * Y + Y : Y * Y;
        sols[v.index()].push_back(static_cast<std::uint32_t>(y));
    }
    std::vector<WPoint> pts;
    const FieldElement one = FieldElement::one(F), zero = FieldElement::zero(F);
    const Polynomial h = C.rhs();
    for (std::uint64_t x = 0; x < q; ++x) {
        FieldElement X = ff::element_at(F, x);
        for (auto y : sols[h(X).index()]) pts.push_back({X, ff::element_at(F, y), one});
    }
    if (C.is_char2() || C.degree() == 5) {
        pts.push_back({one, zero, zero});
    } else {
        for (auto y : sols[C.f().leading().index()]) pts.push_back({one, ff::element_at(F, y), zero});
    }
    return pts;
}

std::string_view family_name(FamilyKind k) {
    switch (k) {
    case FamilyKind::Biquadratic: return "biquadratic";
    case FamilyKind::D8: return "d8";
    case FamilyKind::D12: return "d12";
    case FamilyKind::X6minus1: return "x6-1";
    case FamilyKind::X5minusX: return "x5-x";
    case FamilyKind::X5minus1: return "x5-1";
    }
    return "?";
}

FamilyKind parse_family(std::string_view s) {
    for (auto k : {FamilyKind::Biquadratic, FamilyKind::D8, FamilyKind::D12, FamilyKind::X6minus1, FamilyKind::X5minusX, FamilyKind::X5minus1})
        if (family_name(k) == s) return k;
    fail(Errc::UnknownFamily, "unknown family '" + std::string(s) + "'");
}

unsigned expected_aut_order(FamilyKind k, std::uint64_t p) {
    switch (k) {
    case FamilyKind::Biquadratic: return 4;
    case FamilyKind::D8: return 8;
    case FamilyKind::D12: return 12;
    case FamilyKind::X6minus1: return 24;
    case FamilyKind::X5minusX: return p == 5 ? 240 : 48;
    case FamilyKind::X5minus1: return 10;
    }
    return 0;
}

std::string Automorphism::to_string() const {
    std::ostringstream os;
    os << "((" << m[0].to_string() << " x + " << m[1].to_string() << ")/(" << m[2].to_string() << " x + " << m[3].to_string()
       << "), " << e.to_string() << " y)";
    return os.str();
}

} // namespace sszeta::curve
