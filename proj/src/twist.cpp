// Twists by a single automorphism v (the cocycle sigma -> v).

#include <algorithm>
#include <random>

#include "sszeta/curve.hpp"

namespace sszeta::curve {

GaloisShape twist_orbit_structure(const CurveGeometry &G, std::size_t v) {
    if (v >= G.size()) fail(Errc::NotAutomorphism, "automorphism index out of range");
    const auto &perm = G.group()[v].perm;
    const auto &s = G.sigma_perm();
    std::array<bool, 6> seen{};
    GaloisShape shape;
    for (std::size_t i = 0; i < 6; ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[s[j]]) {
            seen[j] = true;
            ++len;
        }
        shape.parts[len] += 1;
    }
    return shape;
}

std::vector<std::size_t> twist_aut_group(const CurveGeometry &G, std::size_t v) {
    if (v >= G.size()) fail(Errc::NotAutomorphism, "automorphism index out of range");
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < G.size(); ++u)
        if (G.mul(u, v) == G.mul(v, G.sigma(u))) out.push_back(u);
    return out;
}

std::size_t twist_aut_count(const CurveGeometry &G, std::size_t v) { return twist_aut_group(G, v).size(); }

std::size_t reduced_aut_count(const CurveGeometry &G, std::size_t v) {
    if (v >= G.size()) fail(Errc::NotAutomorphism, "automorphism index out of range");
    std::size_t n = 0;
    for (std::size_t u = 0; u < G.size(); ++u)
        if (G.same_reduced(G.mul(u, v), G.mul(v, G.sigma(u)))) ++n;
    // u and u iota have the same reduced part
    return n / 2;
}

bool is_self_dual(const CurveGeometry &G, std::size_t v) { return reduced_aut_count(G, v) == twist_aut_count(G, v); }

std::vector<std::vector<std::size_t>> twist_classes(const CurveGeometry &G) {
    const std::size_t n = G.size();
    std::vector<int> cls(n, -1);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> inverses(n);
    for (std::size_t u = 0; u < n; ++u) inverses[u] = G.inv(u);
    for (std::size_t v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        for (std::size_t u = 0; u < n; ++u) {
            const std::size_t w = G.mul(G.mul(inverses[u], v), G.sigma(u));
            if (cls[w] < 0) {
                cls[w] = id;
                out.back().push_back(w);
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::size_t twist_class_of(const std::vector<std::vector<std::size_t>> &classes, std::size_t v) {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].begin(), classes[i].end(), v)) return i;
    fail(Errc::UnknownClass, "automorphism not in any twist class");
}

namespace {

struct Lifted {
    std::array<FieldElement, 4> m;
    FieldElement e;
};

Lifted lmul(const Lifted &a, const Lifted &b) {
    const auto &x = a.m, &y = b.m;
    return {{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]}, a.e * b.e};
}

Lifted lsigma(const Lifted &a, unsigned n) {
    Lifted r = a;
    for (auto &x : r.m) x = ff::frobenius_power(x, n);
    r.e = ff::frobenius_power(r.e, n);
    return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

FieldElement random_element(const Field &V, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, V->p() - 1);
    FieldElement::Coeffs c(V->n());
    for (auto &x : c) x = static_cast<ff::Residue>(dist(rng));
    return FieldElement(V, std::move(c));
}

} // namespace

CurveModel materialize_twist(const CurveGeometry &G, std::size_t v) {
    if (v >= G.size()) fail(Errc::NotAutomorphism, "automorphism index out of range");
    const Field &k = G.base();
    const unsigned n = k->n();
    const std::uint64_t p = k->p();

    // twisted norms v v^s ... v^(s^(j-1)) until the identity
    const unsigned dv = G.definition_degree(v);
    std::size_t w = G.identity();
    for (unsigned j = 0, cur = static_cast<unsigned>(v); j < dv; ++j) {
        w = G.mul(w, cur);
        cur = static_cast<unsigned>(G.sigma(cur));
    }
    const unsigned m = dv * G.order(w);
    if (m == 1) return G.curve();

    const Field Kd = ff::extension_field(p, n * dv);
    const Field V = ff::extension_field(p, n * m);
    const auto &down = ff::embedding(Kd, G.universe());
    const auto &up = ff::embedding(Kd, V);
    auto rho = [&](const FieldElement &x) {
        auto pre = down.preimage(x);
        if (!pre) fail(Errc::VerificationFailed, "automorphism not defined over its definition field");
        return up(*pre);
    };
    auto back = [&](const FieldElement &x) {
        auto pre = up.preimage(x);
        if (!pre) fail(Errc::VerificationFailed, "twisted model not defined over the base field");
        return G.descend(down(*pre));
    };

    const auto &gv = G.group()[v];
    Lifted N{{rho(gv.m[0]), rho(gv.m[1]), rho(gv.m[2]), rho(gv.m[3])}, rho(gv.e)};
    auto twisted_norm = [&](const Lifted &x) {
        Lifted acc = x, cur = x;
        for (unsigned j = 1; j < m; ++j) {
            cur = lsigma(cur, n);
            acc = lmul(acc, cur);
        }
        return acc;
    };
    Lifted P = twisted_norm(N);
    const FieldElement zero = FieldElement::zero(V), one = FieldElement::one(V);
    const FieldElement mu = P.m[0];
    if (!(P.m[1] == zero && P.m[2] == zero && P.m[3] == mu && P.e == mu * mu * mu))
        fail(Errc::VerificationFailed, "twisted norm is not scalar");

    // rescale N by c with Norm(c) = mu^-1 so the twisted norm becomes the identity
    if (!mu.is_one()) {
        const std::uint64_t q = k->q_u64();
        mpz_class e_norm = (V->q() - 1) / (k->q() - 1);
        const auto primes = prime_divisors(q - 1);
        std::mt19937_64 rng(0x7157ULL);
        FieldElement c0, nu;
        for (;;) {
            c0 = random_element(V, rng);
            if (c0.is_zero()) continue;
            nu = c0.pow(e_norm);
            bool gen = true;
            for (auto r : primes) gen = gen && !nu.pow(static_cast<std::int64_t>((q - 1) / r)).is_one();
            if (gen) break;
        }
        const FieldElement target = mu.inverse();
        FieldElement cur = one;
        std::int64_t t = 0;
        while (!(cur == target)) {
            cur *= nu;
            ++t;
            if (t > static_cast<std::int64_t>(q)) fail(Errc::VerificationFailed, "norm equation unsolved");
        }
        const FieldElement c = c0.pow(t);
        for (auto &x : N.m) x *= c;
        N.e *= c * c * c;
        P = twisted_norm(N);
        if (!(P.m[0] == one && P.m[1] == zero && P.m[2] == zero && P.m[3] == one && P.e == one))
            fail(Errc::VerificationFailed, "norm correction failed");
    }

    // Hilbert 90: B = sum P_j sigma^j(Cm), with sigma(B) = N^-1 B
    std::mt19937_64 rng(0xb90ULL);
    std::array<FieldElement, 4> B;
    FieldElement b;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 64) fail(Errc::VerificationFailed, "Hilbert 90 construction failed");
        Lifted Cm{{random_element(V, rng), random_element(V, rng), random_element(V, rng), random_element(V, rng)}, random_element(V, rng)};
        Lifted Pj{{one, zero, zero, one}, one};
        Lifted Nj = N, S = Cm;
        Lifted acc{{zero, zero, zero, zero}, zero};
        for (unsigned j = 0; j < m; ++j) {
            Lifted term = lmul(Pj, S);
            for (int i = 0; i < 4; ++i) acc.m[i] += term.m[i];
            acc.e += term.e;
            Pj = lmul(Pj, Nj);
            Nj = lsigma(Nj, n);
            S = lsigma(S, n);
        }
        if ((acc.m[0] * acc.m[3] - acc.m[1] * acc.m[2]).is_zero() || acc.e.is_zero()) continue;
        B = acc.m;
        b = acc.e;
        break;
    }

    // G(X, Z) = b^-2 F(B (X, Z))
    const auto &form = G.form();
    Polynomial num(V, {B[1], B[0]});
    Polynomial den(V, {B[3], B[2]});
    std::array<Polynomial, 7> np, dp;
    np[0] = dp[0] = Polynomial::constant(one);
    for (int i = 1; i <= 6; ++i) {
        np[i] = np[i - 1] * num;
        dp[i] = dp[i - 1] * den;
    }
    Polynomial acc(V);
    for (int i = 0; i <= 6; ++i)
        if (!form[i].is_zero()) acc += rho(form[i]) * (np[i] * dp[6 - i]);
    acc = (b * b).inverse() * acc;

    std::vector<FieldElement> coeffs;
    for (const auto &c : acc.coeffs()) {
        if (!(ff::frobenius_power(c, n) == c)) fail(Errc::VerificationFailed, "twisted model not sigma-invariant");
        coeffs.push_back(back(c));
    }
    return CurveModel::odd(Polynomial(k, std::move(coeffs)));
}

std::size_t fixed_rational_count(const CurveGeometry &G) {
    std::vector<std::size_t> autos;
    for (std::size_t u = 0; u < G.size(); ++u)
        if (u != G.identity() && G.sigma(u) == u) autos.push_back(u);
    std::size_t count = 0;
    for (const auto &P : rational_points(G.curve())) {
        WPoint L{G.lift(P.X), G.lift(P.Y), G.lift(P.Z)};
        for (std::size_t u : autos)
            if (G.apply(u, L) == L) {
                ++count;
                break;
            }
    }
    return count;
}

std::size_t fixed_rational_count(const CurveGeometry &G, std::size_t v) {
    if (v == G.identity()) return fixed_rational_count(G);
    return fixed_rational_count(CurveGeometry(materialize_twist(G, v)));
}

} // namespace sszeta::curve
