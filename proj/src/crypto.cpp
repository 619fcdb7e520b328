#include "sszeta/crypto.hpp"

#include <algorithm>

namespace sszeta::crypto {

std::string HalfInteger::to_string() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

namespace {

mpz_class radical_value(Radical r, const mpz_class &q) {
    mpz_class m;
    switch (r) {
    case Radical::None: return 1;
    case Radical::SqrtQ: m = q; break;
    case Radical::Sqrt2Q: m = 2 * q; break;
    case Radical::Sqrt5Q: m = 5 * q; break;
    }
    if (!mpz_perfect_square_p(m.get_mpz_t())) return 0;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    return root;
}

mpz_class pollard_brent(const mpz_class &n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto f = [&](const mpz_class &v) { return mpz_class((v * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            mpz_class diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(mpz_class n, std::vector<mpz_class> &out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out.push_back(n);
        return;
    }
    const mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<mpz_class> prime_factors(const mpz_class &n0) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> out;
    for (unsigned long d = 2; d < 10000 && d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

unsigned degree_of(const mpz_class &q, std::uint64_t p) {
    mpz_class x = q;
    unsigned n = 0;
    while (x > 1 && x % static_cast<unsigned long>(p) == 0) {
        x /= static_cast<unsigned long>(p);
        ++n;
    }
    if (x != 1 || n == 0) fail(Errc::NotPrime, q.get_str() + " is not a power of " + std::to_string(p));
    return n;
}

bool IsogenyRow::matches(const WeilCoeffs &w, std::uint64_t p) const {
    const bool square = mpz_perfect_square_p(w.q.get_mpz_t()) != 0;
    if (!applies(p, square) || w.s != s_mult * w.q) return false;
    const mpz_class rad = radical_value(radical, w.q);
    if (rad == 0) return false;
    const mpz_class r = r_coef * rad;
    return w.r == r || (plus_minus && w.r == -r);
}

const std::vector<IsogenyRow> &table1() {
    static const std::vector<IsogenyRow> rows = {
        {"(0,-2q)", "q nonsquare", 0, Radical::None, false, -2, [](std::uint64_t, bool sq) { return !sq; }, {2}},
        {"(0,2q)", "q square, p = 1 mod 4", 0, Radical::None, false, 2, [](std::uint64_t p, bool sq) { return sq && p % 4 == 1; }, {4}},
        {"(2sqrt(q),3q)", "q square, p = 1 mod 3", 2, Radical::SqrtQ, false, 3, [](std::uint64_t p, bool sq) { return sq && p % 3 == 1; }, {3}},
        {"(-2sqrt(q),3q)", "q square, p = 1 mod 3", -2, Radical::SqrtQ, false, 3, [](std::uint64_t p, bool sq) { return sq && p % 3 == 1; }, {6}},
        {"(0,0)", "(q nonsquare, p != 2) or (q square, p != 1 mod 8)", 0, Radical::None, false, 0,
         [](std::uint64_t p, bool sq) { return sq ? p % 8 != 1 : p != 2; }, {8}},
        {"(0,q)", "q nonsquare", 0, Radical::None, false, 1, [](std::uint64_t, bool sq) { return !sq; }, {6}},
        {"(0,-q)", "(q nonsquare, p != 3) or (q square, p != 1 mod 12)", 0, Radical::None, false, -1,
         [](std::uint64_t p, bool sq) { return sq ? p % 12 != 1 : p != 3; }, {12}},
        {"(sqrt(q),q)", "q square, p != 1 mod 5", 1, Radical::SqrtQ, false, 1, [](std::uint64_t p, bool sq) { return sq && p % 5 != 1; }, {5}},
        {"(-sqrt(q),q)", "q square, p != 1 mod 5", -1, Radical::SqrtQ, false, 1, [](std::uint64_t p, bool sq) { return sq && p % 5 != 1; }, {10}},
        {"(+-sqrt(5q),3q)", "q nonsquare, p = 5", 1, Radical::Sqrt5Q, true, 3, [](std::uint64_t p, bool sq) { return !sq && p == 5; }, {10}},
        {"(+-sqrt(2q),q)", "q nonsquare, p = 2", 1, Radical::Sqrt2Q, true, 1, [](std::uint64_t p, bool sq) { return !sq && p == 2; }, {24}},
    };
    return rows;
}

HalfInteger crypto_exponent(const WeilCoeffs &w, std::uint64_t p) {
    degree_of(w.q, p);
    const IsogenyRow *hit = nullptr;
    for (const auto &row : table1()) {
        if (!row.matches(w, p)) continue;
        if (hit) fail(Errc::NotSimpleOrUncovered, w.to_string() + " matches two exponent rows");
        hit = &row;
    }
    if (!hit) fail(Errc::NotSimpleOrUncovered, w.to_string() + " is not a simple class covered by the exponent table");
    return hit->c;
}

ExponentReport verify_exponent(const WeilCoeffs &w, std::uint64_t p, HalfInteger c) {
    const unsigned n = degree_of(w.q, p);
    ExponentReport rep;
    rep.c = c;
    rep.jacobian_order = w.jacobian_order();
    for (const auto &l : prime_factors(rep.jacobian_order))
        if (l > 5) rep.large_primes.push_back(l);
    if (rep.large_primes.empty()) {
        rep.inconclusive = true;
        return rep;
    }
    const mpz_class P = static_cast<unsigned long>(p);
    // q^(t/2) = p^(n t / 2), defined when n t is even
    auto divides = [&](const mpz_class &l, unsigned t) {
        mpz_class v;
        mpz_class e = static_cast<unsigned long>(n * t / 2);
        mpz_powm(v.get_mpz_t(), P.get_mpz_t(), e.get_mpz_t(), l.get_mpz_t());
        return v == 1;
    };
    for (const auto &l : rep.large_primes) {
        if ((n * c.twice) % 2 != 0) fail(Errc::VerificationFailed, "q^c is not an integer");
        if (!divides(l, c.twice)) fail(Errc::VerificationFailed, l.get_str() + " does not divide q^" + c.to_string() + " - 1");
        for (unsigned t = 1; t < c.twice; ++t)
            if ((n * t) % 2 == 0 && divides(l, t))
                fail(Errc::VerificationFailed, l.get_str() + " already divides q^" + HalfInteger{t}.to_string() + " - 1");
    }
    rep.verified = true;
    return rep;
}

mpz_class embedding_field_size(const WeilCoeffs &w, std::uint64_t p) {
    const HalfInteger c = crypto_exponent(w, p);
    const unsigned n = degree_of(w.q, p);
    if ((n * c.twice) % 2 != 0) fail(Errc::VerificationFailed, "q^c is not an integer");
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), n * c.twice / 2);
    return out;
}

} // namespace sszeta::crypto
