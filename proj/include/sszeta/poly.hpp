#pragma once

// Univariate polynomials over GF(p^n): Euclid, squarefree and distinct-degree
// splitting, deterministic equal-degree splitting, roots.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sszeta/ff.hpp"

namespace sszeta::poly {

using ff::Field;
using ff::FieldElement;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Field f) : f_(std::move(f)) {}
    Polynomial(Field f, std::vector<FieldElement> coeffs);

    static Polynomial constant(const FieldElement &c);
    static Polynomial monomial(const FieldElement &c, unsigned degree);
    static Polynomial x(const Field &f) { return monomial(FieldElement::one(f), 1); }
    /// Coefficients given as integers, low degree first.
    static Polynomial from_ints(const Field &f, const std::vector<std::int64_t> &c);

    const Field &field() const noexcept { return f_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
    const std::vector<FieldElement> &coeffs() const noexcept { return c_; }
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const FieldElement &c, const Polynomial &a);
    friend Polynomial operator/(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator%(const Polynomial &a, const Polynomial &b);
    friend bool operator==(const Polynomial &a, const Polynomial &b);

    Polynomial derivative() const;
    Polynomial monic() const;
    FieldElement operator()(const FieldElement &x) const;
    /// Apply a coefficient map (embeddings, Frobenius); result lives in `to`.
    Polynomial map(const Field &to, const std::function<FieldElement(const FieldElement &)> &fn) const;
    /// Coefficientwise Frobenius a -> a^(p^m).
    Polynomial frobenius(unsigned m) const;
    /// f(x) -> x^d f(1/x) for d >= deg f.
    Polynomial reversed(unsigned d) const;

    std::string to_string(std::string_view var = "x") const;

private:
    void normalize();
    Field f_;
    std::vector<FieldElement> c_;
};

struct DivMod {
    Polynomial quot, rem;
};
DivMod divmod(const Polynomial &a, const Polynomial &b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial &a, const Polynomial &b);
struct ExtGcd {
    Polynomial g, s, t; // g = s a + t b, g monic
};
ExtGcd ext_gcd(const Polynomial &a, const Polynomial &b);
Polynomial powmod(const Polynomial &base, const mpz_class &e, const Polynomial &m);
bool is_separable(const Polynomial &f);

/// Multiset of irreducible factor degrees: degree -> count.
struct FactorShape {
    std::map<unsigned, unsigned> parts;

    unsigned total() const;
    unsigned count() const;
    unsigned count_of(unsigned d) const;
    /// e.g. "(1)^2(4)"
    std::string to_string() const;
    static FactorShape parse(std::string_view s);
    friend bool operator==(const FactorShape &, const FactorShape &) = default;
    friend auto operator<=>(const FactorShape &, const FactorShape &) = default;
};

struct Factor {
    Polynomial f; // monic irreducible
    unsigned multiplicity;
};

FactorShape factor_shape(const Polynomial &f);
std::vector<Factor> factor_full(const Polynomial &f);
bool is_irreducible(const Polynomial &f);
/// Roots in the coefficient field, sorted in enumeration order.
std::vector<FieldElement> roots_in_field(const Polynomial &f);

/// Squarefree decomposition of a monic polynomial: (factor, multiplicity).
std::vector<Factor> squarefree_decomposition(const Polynomial &f);
/// Distinct-degree splitting of a monic squarefree polynomial: degree -> product.
std::vector<std::pair<unsigned, Polynomial>> distinct_degree(const Polynomial &f);
/// Split a monic squarefree product of irreducibles of degree d.
std::vector<Polynomial> equal_degree(const Polynomial &f, unsigned d);

/// Enumeration order on elements of any size (c_0 most significant).
bool element_less(const FieldElement &a, const FieldElement &b);
bool poly_less(const Polynomial &a, const Polynomial &b);

/// Parses "x^5 - 1", "x^6 + 3*x^3 + 2", "[1,2]*x^2 + x" (bracketed coordinates).
Polynomial parse_polynomial(const Field &f, std::string_view text, char var = 'x');

} // namespace sszeta::poly
