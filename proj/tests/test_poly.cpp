#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sszeta/poly.hpp"

using namespace sszeta;
using namespace sszeta::ff;
using namespace sszeta::poly;

namespace {

Polynomial P(const Field &f, const std::string &s) { return parse_polynomial(f, s); }

// Every polynomial of degree exactly d (leading coefficient arbitrary nonzero) via index.
Polynomial nth_poly(const Field &f, unsigned d, std::uint64_t idx) {
    const std::uint64_t q = f->q_u64();
    std::vector<FieldElement> c;
    for (unsigned i = 0; i < d; ++i, idx /= q) c.push_back(element_at(f, idx % q));
    c.push_back(element_at(f, 1 + idx % (q - 1)));
    return Polynomial(f, std::move(c));
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Root oracle: evaluate at every field element.
std::vector<std::uint64_t> naive_roots(const Polynomial &f) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < f.field()->q_u64(); ++i)
        if (f(element_at(f.field(), i)).is_zero()) out.push_back(i);
    return out;
}

} // namespace

TEST_CASE("parsing and printing") {
    auto f7 = ctx_new(7, 1);
    auto f = P(f7, "x^5 - 1");
    CHECK(f.degree() == 5);
    CHECK(f.coeff(0) == FieldElement(f7, -1));
    CHECK(f.to_string() == "x^5 + 6");
    CHECK(P(f7, "x^6 + 3*x^3 + 2").coeff(3) == FieldElement(f7, 3));
    auto f9 = ctx_new(3, 2);
    auto g = P(f9, "[1,2]*x^2 + x");
    CHECK(g.coeff(2) == FieldElement::from_coords(f9, std::vector<std::int64_t>{1, 2}));
    CHECK(P(f7, "2x + 3") == P(f7, "2*x+3"));
    CHECK_THROWS_AS(P(f7, "x^^2"), Error);
    CHECK_THROWS_AS(P(f7, ""), Error);
}

TEST_CASE("division and gcd") {
    auto f5 = ctx_new(5, 1);
    auto a = P(f5, "x^4 + 2*x + 1"), b = P(f5, "x^2 + 3");
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    auto e = ext_gcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK(gcd(P(f5, "x^2 - 1"), P(f5, "x^2 + 3*x + 2")) == P(f5, "x + 1"));
}

TEST_CASE("factor shape examples") {
    auto f2 = ctx_new(2, 1);
    CHECK(factor_shape(P(f2, "x^5 + 1")).to_string() == "(1)(4)");
    CHECK(factor_shape(P(ctx_new(7, 1), "x^6 - 1")).to_string() == "(1)^6");
    CHECK(factor_shape(P(ctx_new(7, 1), "x - 3")).to_string() == "(1)");
    CHECK_THROWS_AS(factor_shape(P(ctx_new(7, 1), "x^2")), Error);
    CHECK_THROWS_AS(factor_shape(P(ctx_new(7, 1), "3")), Error);
    CHECK(FactorShape::parse("(1)^2(4)").to_string() == "(1)^2(4)");
}

TEST_CASE("factor_full examples") {
    auto f2 = ctx_new(2, 1);
    auto fac = factor_full(P(f2, "x^5 + x + 1"));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].f == P(f2, "x^2 + x + 1"));
    CHECK(fac[1].f == P(f2, "x^3 + x^2 + 1"));
    auto f7 = ctx_new(7, 1);
    auto lin = factor_full(P(f7, "x^2 - 1"));
    REQUIRE(lin.size() == 2);
    CHECK(lin[0].f == P(f7, "x + 1"));
    CHECK(lin[1].f == P(f7, "x + 6"));
    CHECK(is_irreducible(P(ctx_new(3, 1), "x^4 + x^3 + x^2 + x + 1")));
    CHECK(is_irreducible(P(f7, "x^4 + x^3 + x^2 + x + 1")));
    CHECK(is_irreducible(P(f2, "x^2 + x + 1")));
    CHECK_FALSE(is_irreducible(P(f7, "x^2 - 1")));
    CHECK_THROWS_AS(factor_full(P(f7, "5")), Error);
}

TEST_CASE("roots examples") {
    auto f2 = ctx_new(2, 1);
    auto r = roots_in_field(P(f2, "x^5 + 1"));
    REQUIRE(r.size() == 1);
    CHECK(r[0].is_one());
    CHECK(roots_in_field(P(ctx_new(7, 1), "x^2 + 1")).empty());
    auto f9 = ctx_new(3, 2);
    auto z = roots_in_field(P(f9, "x"));
    REQUIRE(z.size() == 1);
    CHECK(z[0].is_zero());
}

TEST_CASE("exhaustive factorization scans up to degree 5") {
    struct Case {
        std::uint64_t p;
        unsigned n;
        unsigned maxdeg;
    };
    for (auto c : {Case{2, 1, 5}, Case{3, 1, 5}, Case{2, 2, 4}, Case{5, 1, 4}}) {
        auto f = ctx_new(c.p, c.n);
        const std::uint64_t q = f->q_u64();
        for (unsigned d = 1; d <= c.maxdeg; ++d) {
            const std::uint64_t total = ipow(q, d) * (q - 1);
            // leading coefficient 1 only for the larger scans
            const std::uint64_t step = total > 20000 ? q - 1 : 1;
            for (std::uint64_t idx = 0; idx < total; idx += step) {
                auto g = nth_poly(f, d, idx);
                auto fac = factor_full(g);
                Polynomial prod = Polynomial::constant(g.leading());
                FactorShape shape;
                std::size_t linear = 0;
                for (auto &[h, m] : fac) {
                    CHECK(h.is_monic());
                    CHECK(is_irreducible(h));
                    for (unsigned k = 0; k < m; ++k) prod = prod * h;
                    shape.parts[h.degree()] += m;
                    if (h.degree() == 1) linear += m;
                }
                CHECK(prod == g);
                auto roots = roots_in_field(g);
                CHECK(roots.size() == naive_roots(g).size());
                if (is_separable(g)) {
                    CHECK(factor_shape(g) == shape);
                    CHECK(roots.size() == linear);
                }
            }
        }
    }
}

TEST_CASE("equal-degree splitting over GF(2^k)") {
    auto f16 = ctx_new(2, 4);
    // x^16 - x splits into all linear factors
    auto g = Polynomial::monomial(FieldElement::one(f16), 16) - Polynomial::x(f16);
    CHECK(roots_in_field(g).size() == 16);
    auto f4 = ctx_new(2, 2);
    auto h = Polynomial::monomial(FieldElement::one(f4), 16) - Polynomial::x(f4);
    auto fac = factor_full(h);
    FactorShape s;
    for (auto &[k, m] : fac) s.parts[k.degree()] += m;
    CHECK(s.to_string() == "(1)^4(2)^6");
}
