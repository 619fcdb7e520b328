#pragma once

// Genus-2 curve models, Weierstrass-point Galois structure, geometric
// automorphism groups and twists.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sszeta/poly.hpp"

namespace sszeta::curve {

using ff::Field;
using ff::FieldElement;
using poly::FactorShape;
using poly::Polynomial;
using GaloisShape = poly::FactorShape;

/// y^2 = f(x) with f separable of degree 5 or 6 (odd p), or
/// y^2 + y = a x^5 + b x^3 + c x + d with a != 0 (p = 2).
class CurveModel {
public:
    enum class Kind { OddChar, Char2 };

    static CurveModel odd(Polynomial f);
    static CurveModel artin_schreier(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

    Kind kind() const noexcept { return kind_; }
    bool is_char2() const noexcept { return kind_ == Kind::Char2; }
    const Field &field() const noexcept { return field_; }
    /// Odd characteristic right-hand side.
    const Polynomial &f() const;
    int degree() const;
    const FieldElement &a() const { return a_; }
    const FieldElement &b() const { return b_; }
    const FieldElement &c() const { return c_; }
    const FieldElement &d() const { return d_; }
    /// Right-hand side as a polynomial in either characteristic.
    Polynomial rhs() const;

    std::string to_string() const;
    friend bool operator==(const CurveModel &x, const CurveModel &y);

private:
    Kind kind_ = Kind::OddChar;
    Field field_;
    Polynomial f_;
    FieldElement a_, b_, c_, d_;
};

/// Accepts "y^2 = <poly>" and "y^2 + y = <poly>".
CurveModel parse_curve(const Field &f, std::string_view text);

GaloisShape weierstrass_shape(const CurveModel &C);
CurveModel hyperelliptic_twist(const CurveModel &C);
/// k-isomorphic degree-5 model. Degree 6 needs a rational root of f, which is
/// sent to infinity (the smallest one); nullopt when there is none.
std::optional<CurveModel> imaginary_model(const CurveModel &C);

/// Rational points of the model over its own field, as weighted projective
/// triples [X:Y:Z] with Z in {0,1}. Requires q <= 2^16.
struct WPoint {
    FieldElement X, Y, Z;
    friend bool operator==(const WPoint &, const WPoint &) = default;
};
std::vector<WPoint> rational_points(const CurveModel &C);

enum class FamilyKind { Biquadratic, D8, D12, X6minus1, X5minusX, X5minus1 };
std::string_view family_name(FamilyKind k);
FamilyKind parse_family(std::string_view s);
/// |Aut| of a generic member over the algebraic closure.
unsigned expected_aut_order(FamilyKind k, std::uint64_t p);

/// Point of the x-line: (x : 1) or (1 : 0).
struct LinePoint {
    FieldElement x;
    bool inf = false;
    friend bool operator==(const LinePoint &, const LinePoint &) = default;
};

/// (X, Y, Z) -> (alpha X + beta Z, e Y, gamma X + delta Z), i.e.
/// x -> (alpha x + beta)/(gamma x + delta), y -> e y/(gamma x + delta)^3.
struct Automorphism {
    std::array<FieldElement, 4> m; // alpha, beta, gamma, delta
    FieldElement e;
    std::array<std::uint8_t, 6> perm{}; // action on the branch points

    std::string to_string() const;
};

/// Branch points and the full geometric automorphism group of an odd
/// characteristic model, all defined over one explicit extension U of k.
class CurveGeometry {
public:
    explicit CurveGeometry(const CurveModel &C);

    const CurveModel &curve() const noexcept { return C_; }
    const Field &base() const noexcept { return k_; }
    const Field &universe() const noexcept { return U_; }
    /// [U : k]
    unsigned universe_degree() const noexcept { return U_->n() / k_->n(); }
    FieldElement lift(const FieldElement &a) const;
    /// Preimage in k of a sigma-fixed element of U.
    FieldElement descend(const FieldElement &a) const;
    FieldElement sigma(const FieldElement &a) const;

    const std::vector<LinePoint> &branch_points() const noexcept { return branch_; }
    const std::vector<Automorphism> &group() const noexcept { return group_; }
    std::size_t size() const noexcept { return group_.size(); }
    std::size_t identity() const noexcept { return id_; }
    std::size_t iota() const noexcept { return iota_; }

    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inv(std::size_t i) const;
    std::size_t sigma(std::size_t i) const { return sigma_[i]; }
    std::size_t power(std::size_t i, std::int64_t n) const;
    unsigned order(std::size_t i) const;
    /// Smallest d with sigma^d fixing the automorphism (d | [U:k]).
    unsigned definition_degree(std::size_t i) const;
    /// Same Moebius part.
    bool same_reduced(std::size_t i, std::size_t j) const;
    bool is_reduced_identity(std::size_t i) const { return same_reduced(i, id_); }

    /// Normalizes an explicit map and locates it in the group.
    std::size_t find(const std::array<FieldElement, 4> &m, const FieldElement &e) const;
    std::optional<std::size_t> try_find(const std::array<FieldElement, 4> &m, const FieldElement &e) const;

    LinePoint apply(std::size_t i, const LinePoint &P) const;
    LinePoint sigma(const LinePoint &P) const;
    /// Image of a point [X:Y:Z] with coordinates in U.
    WPoint apply(std::size_t i, const WPoint &P) const;
    /// Permutation of branch points induced by sigma.
    const std::array<std::uint8_t, 6> &sigma_perm() const noexcept { return sigma_perm_; }

    /// Homogeneous sextic form F(X, Z) over U, coefficients of X^i Z^(6-i).
    const std::vector<FieldElement> &form() const noexcept { return form_; }

private:
    void build(unsigned degree_over_k);
    std::size_t index_of(const std::array<std::uint8_t, 6> &perm, const FieldElement &e, const FieldElement &scale) const;

    CurveModel C_;
    Field k_, U_;
    std::vector<FieldElement> form_;
    std::vector<LinePoint> branch_;
    std::vector<Automorphism> group_;
    std::map<std::array<std::uint8_t, 6>, std::vector<std::size_t>> by_perm_;
    std::vector<std::size_t> sigma_;
    std::array<std::uint8_t, 6> sigma_perm_{};
    std::size_t id_ = 0, iota_ = 0;
    mutable std::vector<std::int32_t> table_;
};

/// Full group, checked against the order expected for the family.
const std::vector<Automorphism> &geometric_automorphisms(const CurveGeometry &G, FamilyKind family);

GaloisShape twist_orbit_structure(const CurveGeometry &G, std::size_t v);
/// {u : u v = v u^sigma}
std::vector<std::size_t> twist_aut_group(const CurveGeometry &G, std::size_t v);
std::size_t twist_aut_count(const CurveGeometry &G, std::size_t v);
std::size_t reduced_aut_count(const CurveGeometry &G, std::size_t v);
bool is_self_dual(const CurveGeometry &G, std::size_t v);

/// sigma-conjugacy classes {u^-1 v u^sigma}; each sorted, ordered by first element.
std::vector<std::vector<std::size_t>> twist_classes(const CurveGeometry &G);
std::size_t twist_class_of(const std::vector<std::vector<std::size_t>> &classes, std::size_t v);

/// A model over k of the twist C_v.
CurveModel materialize_twist(const CurveGeometry &G, std::size_t v);

/// |F| for the curve itself: rational points fixed by a nontrivial k-automorphism.
std::size_t fixed_rational_count(const CurveGeometry &G);
/// |F_v|, computed on a materialized model of C_v.
std::size_t fixed_rational_count(const CurveGeometry &G, std::size_t v);

} // namespace sszeta::curve
