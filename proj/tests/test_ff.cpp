#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sszeta/ff.hpp"

using namespace sszeta;
using namespace sszeta::ff;

namespace {

// Brute-force irreducibility over GF(p): no monic divisor of degree 1..n/2.
bool naive_irreducible(const std::vector<std::uint64_t> &g, std::uint64_t p) {
    const std::size_t n = g.size() - 1;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint64_t> h(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i, t /= p) h[i] = t % p;
            h[d] = 1;
            std::vector<std::uint64_t> r = g;
            for (std::size_t k = n; k >= d; --k) {
                std::uint64_t c = r[k];
                if (c)
                    for (std::size_t i = 0; i <= d; ++i) r[k - d + i] = (r[k - d + i] + (p - c) * h[i]) % p;
                if (k == d) break;
            }
            bool zero = true;
            for (std::size_t i = 0; i < d; ++i) zero = zero && r[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<FieldElement> all_elements(const Field &f) {
    std::vector<FieldElement> out;
    for (std::uint64_t i = 0; i < f->q_u64(); ++i) out.push_back(element_at(f, i));
    return out;
}

} // namespace

TEST_CASE("context construction") {
    auto f7 = ctx_new(7, 1);
    CHECK(f7->p() == 7);
    CHECK(f7->q() == 7);
    CHECK(f7->modulus() == std::vector<Residue>{0, 1});

    auto f4 = ctx_new(2, 2);
    CHECK(f4->modulus() == std::vector<Residue>{1, 1, 1});
    CHECK(ctx_new(2, 2) == f4);

    CHECK_THROWS_AS(ctx_new(9, 1), Error);
    CHECK_THROWS_AS(ctx_new(2, 30), Error);
    try {
        ctx_new(2, 30);
    } catch (const Error &e) {
        CHECK(e.code() == Errc::SizeExceeded);
    }
    try {
        ctx_new(15, 2);
    } catch (const Error &e) {
        CHECK(e.code() == Errc::NotPrime);
    }
}

TEST_CASE("modulus is the smallest irreducible") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {13, 2}}) {
        auto f = ctx_new(p, n);
        std::vector<std::uint64_t> mod(f->modulus().begin(), f->modulus().end());
        CHECK(naive_irreducible(mod, p));
        // every monic polynomial before it in the order is reducible
        std::vector<std::uint64_t> g(n + 1, 0);
        g[n] = 1;
        for (;;) {
            if (g == mod) break;
            CHECK_FALSE(naive_irreducible(g, p));
            unsigned pos = n;
            while (pos > 0) {
                --pos;
                if (++g[pos] < p) break;
                g[pos] = 0;
            }
            for (unsigned k = pos + 1; k < n; ++k) g[k] = 0;
        }
    }
    CHECK(ctx_new(3, 2)->modulus() == std::vector<Residue>{1, 0, 1});
}

TEST_CASE("arithmetic examples") {
    auto f7 = ctx_new(7, 1);
    CHECK(arith(FieldElement(f7, 3), FieldElement(f7, 5), ArithOp::Mul) == FieldElement(f7, 1));
    auto f4 = ctx_new(2, 2);
    auto a = FieldElement::generator(f4);
    CHECK(a * a == a + FieldElement::one(f4));
    CHECK(frobenius(a, 1) == a + FieldElement::one(f4));
    CHECK(trace(a, 1) == FieldElement::one(f4));
    CHECK(absolute_trace(FieldElement::one(ctx_new(2, 1))) == 1);
    CHECK_THROWS_AS(FieldElement(f7, 1) / FieldElement(f7, 0), Error);
    CHECK_THROWS_AS(FieldElement(f7, 1) + FieldElement(f4, 1), Error);
    CHECK_THROWS_AS(frobenius(a, 3), Error);
}

TEST_CASE("field axioms and Lagrange on small fields") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 2}, {2, 4}, {7, 1}}) {
        auto f = ctx_new(p, n);
        auto els = all_elements(f);
        for (const auto &x : els) {
            CHECK(x.index() == element_at(f, x.index()).index());
            if (!x.is_zero()) {
                CHECK((x * x.inverse()).is_one());
                CHECK(x.pow(f->q() - 1).is_one());
            }
            CHECK(x.pow(f->q()) == x);
            CHECK(frobenius_power(x, n) == x);
        }
        for (std::size_t i = 0; i < els.size(); i += 3)
            for (std::size_t j = 0; j < els.size(); j += 2) {
                const auto &x = els[i], &y = els[j];
                CHECK(x * y == y * x);
                CHECK(frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1));
                CHECK(frobenius(x * y, 1) == frobenius(x, 1) * frobenius(y, 1));
                CHECK((x - y) + y == x);
            }
    }
}

TEST_CASE("residue symbols and roots agree with enumeration") {
    auto f7 = ctx_new(7, 1);
    CHECK(residue_symbol(FieldElement(f7, 3), 2) == -1);
    CHECK(residue_symbol(FieldElement(f7, 1), 5) == 1);
    CHECK(residue_symbol(FieldElement(ctx_new(11, 1), 2), 5) == -1);
    CHECK_THROWS_AS(residue_symbol(FieldElement(f7, 0), 2), Error);
    CHECK(nth_root(FieldElement(f7, 4), 2)->coords()[0] == 2);
    CHECK(nth_root(FieldElement(f7, 1), 3)->is_one());
    CHECK_FALSE(nth_root(FieldElement(f7, 3), 2).has_value());

    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{7, 1}, {3, 2}, {2, 3}, {5, 2}, {13, 1}}) {
        auto f = ctx_new(p, n);
        auto els = all_elements(f);
        for (std::uint64_t m : {2, 3, 4, 5, 6}) {
            std::map<std::uint64_t, std::set<std::uint64_t>> roots;
            for (const auto &b : els) roots[b.pow(static_cast<std::int64_t>(m)).index()].insert(b.index());
            for (const auto &a : els) {
                auto got = all_nth_roots(a, m);
                std::set<std::uint64_t> gi;
                for (auto &r : got) gi.insert(r.index());
                CHECK(gi == roots[a.index()]);
                if (!a.is_zero()) CHECK((residue_symbol(a, m) == 1) == !got.empty());
                auto r = nth_root(a, m);
                if (r) CHECK(r->index() == *roots[a.index()].begin());
            }
        }
    }
}

TEST_CASE("trace and norm are Galois stable and land in the subfield") {
    auto f = ctx_new(3, 4);
    for (std::uint64_t i = 0; i < f->q_u64(); i += 7) {
        auto a = element_at(f, i);
        for (unsigned m : {1u, 2u}) {
            auto t = trace(a, m), nn = norm(a, m);
            CHECK(trace(frobenius(a, m), m) == t);
            CHECK(norm(frobenius(a, m), m) == nn);
            CHECK(frobenius(t, m) == t);
            CHECK(frobenius(nn, m) == nn);
        }
    }
    auto f9 = ctx_new(3, 2);
    for (std::uint64_t i = 0; i < 9; ++i) {
        auto a = element_at(f9, i);
        CHECK(norm(a, 1) == a.pow(4));
    }
}

TEST_CASE("embeddings") {
    auto small = ctx_new(5, 2);
    auto big = extension_field(5, 6);
    const auto &e = embedding(small, big);
    for (std::uint64_t i = 0; i < 25; ++i)
        for (std::uint64_t j = 0; j < 25; j += 4) {
            auto a = element_at(small, i), b = element_at(small, j);
            CHECK(e(a * b) == e(a) * e(b));
            CHECK(e(a + b) == e(a) + e(b));
        }
    for (std::uint64_t i = 0; i < 25; ++i) {
        auto a = element_at(small, i);
        auto back = e.preimage(e(a));
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
    // x in the big field generates it, so it has no preimage
    CHECK_FALSE(e.preimage(FieldElement::generator(big)).has_value());
    CHECK(&embedding(small, big) == &e);
}

TEST_CASE("log tables match direct arithmetic") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 2}, {5, 2}, {7, 1}, {2, 1}}) {
        auto f = ctx_new(p, n);
        const auto &t = log_table(f);
        auto els = all_elements(f);
        for (const auto &a : els) {
            CHECK(t.decode(t.encode(a)) == a);
            CHECK(t.is_square(t.encode(a)) == is_square(a));
            if (p == 2) CHECK(t.trace_bit(t.encode(a)) == (absolute_trace(a) == 1));
            for (const auto &b : els) {
                auto ca = t.encode(a), cb = t.encode(b);
                CHECK(t.decode(t.add(ca, cb)) == a + b);
                CHECK(t.decode(t.mul(ca, cb)) == a * b);
                CHECK(t.decode(t.sub(ca, cb)) == a - b);
            }
        }
    }
}
