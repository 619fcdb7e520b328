#pragma once

// Mumford representation and Cantor arithmetic on Jacobians of imaginary
// (degree-5) models y^2 = f(x) in odd characteristic.

#include <cstdint>

#include <gmpxx.h>

#include "sszeta/curve.hpp"

namespace sszeta::jacobian {

using curve::CurveModel;
using ff::Field;
using ff::FieldElement;
using poly::Polynomial;

/// (u, v) with u monic, deg v < deg u, u | v^2 - f.
struct MumfordDivisor {
    Polynomial u, v;
    friend bool operator==(const MumfordDivisor &, const MumfordDivisor &) = default;
};

class Jacobian {
public:
    /// Throws WrongModel unless C is an odd-characteristic degree-5 model.
    explicit Jacobian(const CurveModel &C);

    const CurveModel &curve() const noexcept { return C_; }
    MumfordDivisor identity() const;
    bool is_identity(const MumfordDivisor &D) const { return D.u.degree() == 0; }
    bool is_valid(const MumfordDivisor &D) const;

    /// Class of P - infinity.
    MumfordDivisor point(const FieldElement &x, const FieldElement &y) const;
    MumfordDivisor negate(const MumfordDivisor &D) const;
    MumfordDivisor compose_reduce(const MumfordDivisor &a, const MumfordDivisor &b) const;
    MumfordDivisor scalar_mul(const mpz_class &n, const MumfordDivisor &D) const;
    /// P1 + P2 - 2 infinity for two rational points drawn from the seed.
    MumfordDivisor random_divisor(std::uint64_t seed) const;

private:
    MumfordDivisor reduce(Polynomial u, Polynomial v) const;
    CurveModel C_;
    Polynomial f_;
};

} // namespace sszeta::jacobian
