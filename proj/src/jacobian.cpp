#include "sszeta/jacobian.hpp"

#include <random>

namespace sszeta::jacobian {

Jacobian::Jacobian(const CurveModel &C) : C_(C) {
    if (C.is_char2()) fail(Errc::WrongModel, "Jacobian arithmetic needs odd characteristic");
    if (C.degree() != 5) fail(Errc::WrongModel, "Jacobian arithmetic needs a degree-5 model");
    f_ = C.f();
}

MumfordDivisor Jacobian::identity() const {
    return {Polynomial::constant(FieldElement::one(C_.field())), Polynomial(C_.field())};
}

bool Jacobian::is_valid(const MumfordDivisor &D) const {
    if (!D.u.is_monic() || D.u.degree() > 2 || D.v.degree() >= D.u.degree()) return false;
    return ((D.v * D.v - f_) % D.u).is_zero();
}

MumfordDivisor Jacobian::point(const FieldElement &x, const FieldElement &y) const {
    if (!(y * y == f_(x))) fail(Errc::NoRationalPoints, "point not on the curve");
    const Field &F = C_.field();
    return {Polynomial::x(F) - Polynomial::constant(x), Polynomial::constant(y)};
}

MumfordDivisor Jacobian::negate(const MumfordDivisor &D) const { return {D.u, (-D.v) % D.u}; }

MumfordDivisor Jacobian::reduce(Polynomial u, Polynomial v) const {
    while (u.degree() > 2) {
        u = (f_ - v * v) / u;
        v = (-v) % u;
    }
    const FieldElement lc = u.leading();
    if (!lc.is_one()) u = lc.inverse() * u;
    return {u, v % u};
}

MumfordDivisor Jacobian::compose_reduce(const MumfordDivisor &a, const MumfordDivisor &b) const {
    if (is_identity(a)) return b;
    if (is_identity(b)) return a;
    const auto e = poly::ext_gcd(a.u, b.u);
    const auto c = poly::ext_gcd(e.g, a.v + b.v);
    const Polynomial &d = c.g;
    const Polynomial s1 = c.s * e.s, s2 = c.s * e.t, s3 = c.t;
    Polynomial u = (a.u * b.u) / (d * d);
    Polynomial v = ((s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f_)) / d) % u;
    return reduce(std::move(u), std::move(v));
}

MumfordDivisor Jacobian::scalar_mul(const mpz_class &n, const MumfordDivisor &D) const {
    if (n < 0) return scalar_mul(-n, negate(D));
    MumfordDivisor acc = identity();
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = compose_reduce(acc, acc);
        if (mpz_tstbit(n.get_mpz_t(), i)) acc = compose_reduce(acc, D);
    }
    return acc;
}

MumfordDivisor Jacobian::random_divisor(std::uint64_t seed) const {
    const Field &F = C_.field();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coord(0, F->p() - 1);
    auto draw = [&]() {
        for (int attempt = 0; attempt < 4096; ++attempt) {
            FieldElement::Coeffs c(F->n());
            for (auto &x : c) x = static_cast<ff::Residue>(coord(rng));
            FieldElement x(F, std::move(c));
            auto ys = ff::all_nth_roots(f_(x), 2);
            if (ys.empty()) continue;
            const FieldElement &y = ys[rng() % ys.size()];
            return point(x, y);
        }
        fail(Errc::NoRationalPoints, "no affine rational point found");
    };
    const MumfordDivisor P1 = draw();
    return compose_reduce(P1, draw());
}

} // namespace sszeta::jacobian
