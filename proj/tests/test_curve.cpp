#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sszeta/curve.hpp"

using namespace sszeta;
using namespace sszeta::ff;
using namespace sszeta::poly;
using namespace sszeta::curve;

namespace {

CurveModel C(std::uint64_t p, unsigned n, const std::string &s) { return parse_curve(ctx_new(p, n), s); }

// Independent check that (M, e) preserves y^2 = f: F(M(X,Z)) == e^2 F(X,Z) as polynomials.
bool preserves(const CurveGeometry &G, const Automorphism &a) {
    const Field &U = G.universe();
    Polynomial num(U, {a.m[1], a.m[0]}), den(U, {a.m[3], a.m[2]});
    Polynomial lhs(U), fx(U, G.form());
    Polynomial np = Polynomial::constant(FieldElement::one(U));
    for (int i = 0; i <= 6; ++i) {
        Polynomial dp = Polynomial::constant(FieldElement::one(U));
        for (int j = 0; j < 6 - i; ++j) dp = dp * den;
        lhs += G.form()[i] * (np * dp);
        np = np * num;
    }
    return lhs == (a.e * a.e) * fx;
}

std::size_t ipoint_fixed_by_iota(const CurveModel &c) {
    std::size_t n = 0;
    for (auto &P : rational_points(c))
        if (P.Y.is_zero()) ++n;
    return n;
}

} // namespace

TEST_CASE("models and parsing") {
    auto c = C(7, 1, "y^2 = x^5 - 1");
    CHECK(c.degree() == 5);
    CHECK(c.to_string() == "y^2 = x^5 + 6");
    CHECK_THROWS_AS(C(7, 1, "y^2 = x^4 - 1"), Error);
    CHECK_THROWS_AS(C(7, 1, "y^2 = x^6"), Error);
    CHECK_THROWS_AS(C(2, 1, "y^2 = x^5 + 1"), Error);
    auto a = C(2, 1, "y^2 + y = x^5 + x^3");
    CHECK(a.is_char2());
    CHECK(a.b().is_one());
    CHECK_THROWS_AS(C(2, 1, "y^2 + y = x^5 + x^2"), Error);
}

TEST_CASE("Weierstrass shapes") {
    CHECK(weierstrass_shape(C(7, 1, "y^2 = x^5 - 1")).to_string() == "(1)^2(4)");
    CHECK(weierstrass_shape(C(11, 1, "y^2 = x^6 - 1")).to_string() == "(1)^2(2)^2");
    CHECK(weierstrass_shape(C(7, 1, "y^2 = x^6 - 1")).to_string() == "(1)^6");
    CHECK_THROWS_AS(weierstrass_shape(C(2, 1, "y^2 + y = x^5")), Error);
}

TEST_CASE("hyperelliptic twist") {
    auto c = C(7, 1, "y^2 = x^5 - 1");
    auto t = hyperelliptic_twist(c);
    CHECK(t.f() == parse_polynomial(ctx_new(7, 1), "3*x^5 - 3"));
    CHECK(weierstrass_shape(t) == weierstrass_shape(c));
    auto a = hyperelliptic_twist(C(2, 1, "y^2 + y = x^5"));
    CHECK(a.d().is_one());
    // twisting twice returns a model with the same point count
    CHECK(rational_points(hyperelliptic_twist(t)).size() == rational_points(c).size());
}

TEST_CASE("rational points against a direct count") {
    CHECK(rational_points(C(7, 1, "y^2 = x^5 - 1")).size() == 8);
    CHECK(rational_points(C(2, 1, "y^2 + y = x^5")).size() == 3);
    CHECK(rational_points(C(11, 1, "y^2 = x^6 - 1")).size() == 12);
}

TEST_CASE("geometric automorphism groups of the rigid families") {
    struct Case {
        std::uint64_t p;
        unsigned n;
        const char *eq;
        FamilyKind fam;
        std::size_t order;
    };
    for (auto c : {Case{7, 1, "y^2 = x^5 - 1", FamilyKind::X5minus1, 10}, Case{7, 1, "y^2 = x^5 - x", FamilyKind::X5minusX, 48},
                   Case{5, 1, "y^2 = x^5 - x", FamilyKind::X5minusX, 240}, Case{11, 1, "y^2 = x^6 - 1", FamilyKind::X6minus1, 24},
                   Case{3, 2, "y^2 = x^5 - 1", FamilyKind::X5minus1, 10}, Case{13, 1, "y^2 = x^6 - 1", FamilyKind::X6minus1, 24}}) {
        CAPTURE(c.eq);
        CAPTURE(c.p);
        CurveGeometry G(C(c.p, c.n, c.eq));
        const auto &grp = geometric_automorphisms(G, c.fam);
        CHECK(grp.size() == c.order);
        for (const auto &a : grp) CHECK(preserves(G, a));
        // closure, associativity and inverses on a sample
        for (std::size_t i = 0; i < G.size(); i += 3)
            for (std::size_t j = 0; j < G.size(); j += 5) {
                const std::size_t k = (i * 7 + j) % G.size();
                CHECK(G.mul(G.mul(i, j), k) == G.mul(i, G.mul(j, k)));
            }
        for (std::size_t i = 0; i < G.size(); ++i) {
            CHECK(G.mul(i, G.inv(i)) == G.identity());
            CHECK(G.mul(i, G.iota()) == G.mul(G.iota(), i));
            CHECK(G.sigma(G.mul(i, i)) == G.mul(G.sigma(i), G.sigma(i)));
        }
    }
    CHECK_THROWS_AS(geometric_automorphisms(CurveGeometry(C(7, 1, "y^2 = x^5 - 1")), FamilyKind::X5minusX), Error);
}

TEST_CASE("twist counts from the tables") {
    CurveGeometry g11(C(11, 1, "y^2 = x^6 - 1"));
    CHECK(twist_aut_count(g11, g11.identity()) == 4);
    CHECK(reduced_aut_count(g11, g11.identity()) == 4);
    CHECK(is_self_dual(g11, g11.identity()));
    CurveGeometry g5(C(5, 1, "y^2 = x^5 - x"));
    CHECK(twist_aut_count(g5, g5.identity()) == 120);
    CurveGeometry g7(C(7, 1, "y^2 = x^5 - 1"));
    CHECK(reduced_aut_count(g7, g7.identity()) == 1);
    CHECK_FALSE(is_self_dual(g7, g7.identity()));
    CurveGeometry h7(C(7, 1, "y^2 = x^5 - x"));
    CHECK(is_self_dual(h7, h7.identity()));
}

TEST_CASE("orbit structure of twisted Frobenius") {
    CurveGeometry g(C(11, 1, "y^2 = x^6 - 1"));
    CHECK(twist_orbit_structure(g, g.identity()) == weierstrass_shape(g.curve()));
    CHECK(twist_orbit_structure(g, g.iota()) == weierstrass_shape(g.curve()));
    const Field &U = g.universe();
    auto i = *nth_root(FieldElement(U, -1), 2);
    auto v = g.find({FieldElement::zero(U), FieldElement::one(U), FieldElement::one(U), FieldElement::zero(U)}, i);
    CHECK(twist_orbit_structure(g, v).to_string() == "(1)^6");
    for (std::size_t u = 0; u < g.size(); ++u) CHECK(twist_orbit_structure(g, u).total() == 6);
    CHECK_THROWS_AS(g.find({FieldElement::one(U), FieldElement::one(U), FieldElement::zero(U), FieldElement::one(U)}, i), Error);
}

TEST_CASE("fixed points and the modular congruence") {
    // y^2 = x^5 - 1 over GF(7): only 1 and iota are rational, so F = rational Weierstrass points
    auto c = C(7, 1, "y^2 = x^5 - 1");
    CurveGeometry g(c);
    CHECK(fixed_rational_count(g) == ipoint_fixed_by_iota(c));
    CHECK(fixed_rational_count(g) == 2);
    for (auto eq : {"y^2 = x^5 - 1", "y^2 = x^5 - x", "y^2 = x^6 - 1", "y^2 = x^6 + x^3 + 3"}) {
        for (std::uint64_t p : {7, 11, 13}) {
            auto f = parse_polynomial(ctx_new(p, 1), std::string(eq).substr(6));
            if (!is_separable(f)) continue;
            auto cc = C(p, 1, eq);
            CurveGeometry gg(cc);
            const auto Fk = fixed_rational_count(gg);
            const auto A = twist_aut_count(gg, gg.identity());
            CHECK((rational_points(cc).size() - Fk) % A == 0);
        }
    }
}

TEST_CASE("materialized twists carry the predicted structure") {
    for (auto [p, n, eq] : std::vector<std::tuple<std::uint64_t, unsigned, std::string>>{
             {7, 1, "y^2 = x^5 - x"}, {11, 1, "y^2 = x^6 - 1"}, {11, 1, "y^2 = x^5 - 1"}, {5, 1, "y^2 = x^5 - x"}, {3, 2, "y^2 = x^5 - 1"}, {13, 1, "y^2 = x^6 + x^3 + 3"}}) {
        CAPTURE(eq);
        CAPTURE(p);
        CurveGeometry g(C(p, n, eq));
        auto classes = twist_classes(g);
        std::size_t total = 0;
        for (auto &cl : classes) total += cl.size();
        CHECK(total == g.size());
        for (auto &cl : classes) {
            const std::size_t v = cl.front();
            CurveModel tw = materialize_twist(g, v);
            CurveGeometry gt(tw);
            CHECK(weierstrass_shape(tw) == twist_orbit_structure(g, v));
            CHECK(twist_aut_count(gt, gt.identity()) == twist_aut_count(g, v));
            CHECK(reduced_aut_count(gt, gt.identity()) == reduced_aut_count(g, v));
            CHECK(gt.size() == g.size());
            const auto A = twist_aut_count(gt, gt.identity());
            CHECK((rational_points(tw).size() - fixed_rational_count(g, v)) % A == 0);
        }
    }
}
