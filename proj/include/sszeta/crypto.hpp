#pragma once

// Cryptographic exponent c_A of simple supersingular abelian surfaces and the
// size of the smallest field containing the ell-th roots of unity.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sszeta/zeta.hpp"

namespace sszeta::crypto {

using zeta::WeilCoeffs;

struct HalfInteger {
    unsigned twice = 0;
    std::string to_string() const;
    friend auto operator<=>(const HalfInteger &, const HalfInteger &) = default;
};

enum class Radical { None, SqrtQ, Sqrt2Q, Sqrt5Q };

/// One row of the exponent table: r = r_coef * radical (both signs when
/// plus_minus), s = s_mult * q.
struct IsogenyRow {
    const char *pattern;
    const char *conditions;
    int r_coef;
    Radical radical;
    bool plus_minus;
    int s_mult;
    std::function<bool(std::uint64_t p, bool q_square)> applies;
    HalfInteger c;

    bool matches(const WeilCoeffs &w, std::uint64_t p) const;
};

const std::vector<IsogenyRow> &table1();

/// NotSimpleOrUncovered unless exactly one row matches.
HalfInteger crypto_exponent(const WeilCoeffs &w, std::uint64_t p);

struct ExponentReport {
    HalfInteger c;
    mpz_class jacobian_order;
    std::vector<mpz_class> large_primes; // primes > 5 dividing f_J(1)
    bool inconclusive = false;
    bool verified = false;
};
ExponentReport verify_exponent(const WeilCoeffs &w, std::uint64_t p, HalfInteger c);

/// p^(n c) for q = p^n.
mpz_class embedding_field_size(const WeilCoeffs &w, std::uint64_t p);

/// Distinct prime factors, ascending.
std::vector<mpz_class> prime_factors(const mpz_class &n);
/// n with q = p^n; throws NotPrime when q is not a power of p.
unsigned degree_of(const mpz_class &q, std::uint64_t p);

} // namespace sszeta::crypto
