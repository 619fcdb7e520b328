// Parts of the field layer that need polynomial root finding.

#include <algorithm>

#include "sszeta/ff.hpp"
#include "sszeta/poly.hpp"

namespace sszeta::ff {

std::vector<FieldElement> all_nth_roots(const FieldElement &a, std::uint64_t m) {
    if (m == 0) fail(Errc::DegreeMismatch, "root index must be positive");
    const Field &f = a.field();
    if (a.is_zero()) return {a};
    // b^m = a  <=>  b^g = a^s  where g = gcd(m, q-1) = s m + t (q-1), given a is a g-th power
    const mpz_class qm1 = f->q() - 1;
    const mpz_class mm(static_cast<unsigned long>(m));
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mm.get_mpz_t(), qm1.get_mpz_t());
    if (!a.pow(mpz_class(qm1 / g)).is_one()) return {};
    if (!g.fits_ulong_p() || g > 1000000) fail(Errc::SizeExceeded, "root index too large");
    const FieldElement target = a.pow(s);
    auto x_g = poly::Polynomial::monomial(FieldElement::one(f), static_cast<unsigned>(g.get_ui()));
    return poly::roots_in_field(x_g - poly::Polynomial::constant(target));
}

std::optional<FieldElement> nth_root(const FieldElement &a, std::uint64_t m) {
    auto r = all_nth_roots(a, m);
    if (r.empty()) return std::nullopt;
    return r.front();
}

Embedding::Embedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
    if (from_->p() != to_->p() || to_->n() % from_->n())
        fail(Errc::DegreeMismatch, "no embedding " + from_->to_string() + " -> " + to_->to_string());
    const unsigned a = from_->n();
    const unsigned b = to_->n();
    const std::uint64_t p = to_->p();
    std::vector<FieldElement> mod;
    for (Residue c : from_->modulus()) mod.emplace_back(to_, static_cast<std::int64_t>(c));
    auto roots = poly::roots_in_field(poly::Polynomial(to_, std::move(mod)));
    if (roots.empty()) fail(Errc::DegreeMismatch, "modulus has no root in target field");
    root_ = roots.front();
    powers_.push_back(FieldElement::one(to_));
    for (unsigned i = 1; i < a; ++i) powers_.push_back(powers_.back() * root_);

    // reduced row echelon form of the images of the basis
    echelon_.assign(a, std::vector<Residue>(b));
    transform_.assign(a, std::vector<Residue>(a, 0));
    for (unsigned i = 0; i < a; ++i) {
        std::copy(powers_[i].coords().begin(), powers_[i].coords().end(), echelon_[i].begin());
        transform_[i][i] = 1;
    }
    auto inv = [p](std::uint64_t x) { return FieldElement(extension_field(p, 1), static_cast<std::int64_t>(x)).inverse().coords()[0]; };
    pivots_.assign(a, 0);
    unsigned row = 0;
    for (unsigned col = 0; col < b && row < a; ++col) {
        unsigned piv = row;
        while (piv < a && echelon_[piv][col] == 0) ++piv;
        if (piv == a) continue;
        std::swap(echelon_[piv], echelon_[row]);
        std::swap(transform_[piv], transform_[row]);
        const std::uint64_t c = inv(echelon_[row][col]);
        for (auto &x : echelon_[row]) x = static_cast<Residue>(x * c % p);
        for (auto &x : transform_[row]) x = static_cast<Residue>(x * c % p);
        for (unsigned r = 0; r < a; ++r) {
            if (r == row || echelon_[r][col] == 0) continue;
            const std::uint64_t k = p - echelon_[r][col];
            for (unsigned j = 0; j < b; ++j) echelon_[r][j] = static_cast<Residue>((echelon_[r][j] + k * echelon_[row][j]) % p);
            for (unsigned j = 0; j < a; ++j) transform_[r][j] = static_cast<Residue>((transform_[r][j] + k * transform_[row][j]) % p);
        }
        pivots_[row] = col;
        ++row;
    }
}

} // namespace sszeta::ff
