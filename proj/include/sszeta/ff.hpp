#pragma once

// Explicit arithmetic in GF(p^n), polynomial basis over the lexicographically
// smallest monic irreducible modulus.

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sszeta/error.hpp"

namespace sszeta::ff {

using Residue = std::uint32_t;

/// Default bound on user-facing field sizes (p^n).
inline constexpr std::uint64_t kDefaultMaxFieldSize = std::uint64_t{1} << 24;

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

class FieldCtx {
public:
    std::uint64_t p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    /// Monic modulus, low degree first, length n + 1.
    const std::vector<Residue> &modulus() const noexcept { return modulus_; }
    const mpz_class &q() const noexcept { return q_; }
    bool q_is_square() const noexcept { return n_ % 2 == 0; }
    /// p^(n/2); requires n even.
    mpz_class sqrt_q() const;
    /// q as a machine word, throws SizeExceeded when it does not fit.
    std::uint64_t q_u64() const;
    std::string to_string() const;

    // Reduction data used by FieldElement.
    const std::vector<Residue> &neg_low() const noexcept { return neg_low_; }

private:
    friend Field make_field(std::uint64_t, unsigned, std::vector<Residue>);
    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::vector<Residue> modulus_;
    std::vector<Residue> neg_low_;
    mpz_class q_;
};

/// GF(p^n) with the lexicographically smallest monic irreducible modulus.
/// Cached: equal (p, n) always give the same context object.
Field ctx_new(std::uint64_t p, unsigned n, std::uint64_t max_q = kDefaultMaxFieldSize);

/// Same construction without the size bound; used for splitting fields.
Field extension_field(std::uint64_t p, unsigned n);

bool is_prime(std::uint64_t n);

class FieldElement {
public:
    using Coeffs = boost::container::small_vector<Residue, 4>;

    FieldElement() = default;
    explicit FieldElement(Field f);
    FieldElement(Field f, std::int64_t v);
    FieldElement(Field f, Coeffs c);

    static FieldElement zero(const Field &f) { return FieldElement(f); }
    static FieldElement one(const Field &f) { return FieldElement(f, 1); }
    /// Element whose polynomial-basis coordinates are `c` (reduced mod p).
    static FieldElement from_coords(const Field &f, std::span<const std::int64_t> c);
    /// The class of x in GF(p)[x]/(modulus).
    static FieldElement generator(const Field &f);

    const Field &field() const noexcept { return f_; }
    const Coeffs &coords() const noexcept { return c_; }
    bool valid() const noexcept { return static_cast<bool>(f_); }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool in_prime_field() const noexcept;

    FieldElement operator-() const;
    FieldElement &operator+=(const FieldElement &o);
    FieldElement &operator-=(const FieldElement &o);
    FieldElement &operator*=(const FieldElement &o);
    FieldElement &operator/=(const FieldElement &o);

    friend FieldElement operator+(FieldElement a, const FieldElement &b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement &b) { return a -= b; }
    friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
    friend FieldElement operator/(FieldElement a, const FieldElement &b) { return a /= b; }
    friend bool operator==(const FieldElement &a, const FieldElement &b);

    FieldElement inverse() const;
    FieldElement pow(const mpz_class &e) const;
    FieldElement pow(std::int64_t e) const;
    FieldElement square() const { return *this * *this; }

    /// Position in the fixed enumeration: c_0 most significant digit base p.
    std::uint64_t index() const;
    std::string to_string() const;

private:
    void check_same(const FieldElement &o) const;
    Field f_;
    Coeffs c_;
};

/// Inverse of FieldElement::index.
FieldElement element_at(const Field &f, std::uint64_t idx);

enum class ArithOp { Add, Sub, Mul, Div, Pow };
FieldElement arith(const FieldElement &a, const FieldElement &b, ArithOp op);

/// a^(p^m); m must divide the field degree.
FieldElement frobenius(const FieldElement &a, unsigned m);
/// a^(p^m) for any m (no subfield check); internal helper.
FieldElement frobenius_power(const FieldElement &a, unsigned m);

/// +1 if a is an m-th power in its field, -1 otherwise. a != 0.
int residue_symbol(const FieldElement &a, const mpz_class &m);
inline int residue_symbol(const FieldElement &a, std::uint64_t m) { return residue_symbol(a, mpz_class(static_cast<unsigned long>(m))); }
bool is_square(const FieldElement &a);

enum class TraceOrNorm { Trace, Norm };
/// Trace/norm down to GF(p^m), returned as an element of the same field.
FieldElement trace_norm(const FieldElement &a, unsigned m, TraceOrNorm which);
inline FieldElement trace(const FieldElement &a, unsigned m) { return trace_norm(a, m, TraceOrNorm::Trace); }
inline FieldElement norm(const FieldElement &a, unsigned m) { return trace_norm(a, m, TraceOrNorm::Norm); }
/// Absolute trace to GF(p), as a residue.
Residue absolute_trace(const FieldElement &a);

/// Deterministic m-th root (smallest in enumeration order), nullopt if none.
std::optional<FieldElement> nth_root(const FieldElement &a, std::uint64_t m);
/// Every m-th root of a in its field, sorted by index.
std::vector<FieldElement> all_nth_roots(const FieldElement &a, std::uint64_t m);

/// First element in enumeration order that is not a square (odd p).
FieldElement first_nonsquare(const Field &f);

/// Field embedding GF(p^a) -> GF(p^b), a | b, sending the generator of the
/// small field to the smallest root of its modulus in the large one.
class Embedding {
public:
    Embedding(Field from, Field to);

    const Field &from() const noexcept { return from_; }
    const Field &to() const noexcept { return to_; }
    FieldElement operator()(const FieldElement &a) const;
    /// Preimage of b, nullopt when b is outside the image.
    std::optional<FieldElement> preimage(const FieldElement &b) const;
    const FieldElement &generator_image() const noexcept { return root_; }

private:
    Field from_, to_;
    FieldElement root_;
    std::vector<FieldElement> powers_;
    // Row-reduced system for preimages: pivot column per basis vector.
    std::vector<std::vector<Residue>> echelon_;
    std::vector<std::vector<Residue>> transform_;
    std::vector<unsigned> pivots_;
};

/// Cached embedding between two fields of the same characteristic.
const Embedding &embedding(const Field &from, const Field &to);

/// Zech-logarithm tables for fast enumeration-heavy work on small fields.
class LogTable {
public:
    explicit LogTable(Field f);

    using Code = std::uint32_t;
    const Field &field() const noexcept { return f_; }
    std::uint32_t size() const noexcept { return q_; }
    Code zero() const noexcept { return q_ - 1; }
    Code one() const noexcept { return 0; }
    Code minus_one() const noexcept { return minus_one_; }

    Code mul(Code a, Code b) const noexcept {
        if (a == zero() || b == zero()) return zero();
        std::uint32_t s = a + b;
        return s >= q_ - 1 ? s - (q_ - 1) : s;
    }
    Code add(Code a, Code b) const noexcept {
        if (a == zero()) return b;
        if (b == zero()) return a;
        std::uint32_t d = b >= a ? b - a : b + (q_ - 1) - a;
        Code z = zech_[d];
        if (z == zero()) return zero();
        std::uint32_t s = a + z;
        return s >= q_ - 1 ? s - (q_ - 1) : s;
    }
    Code neg(Code a) const noexcept { return mul(a, minus_one_); }
    Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
    bool is_square(Code a) const noexcept { return a == zero() || f_->p() == 2 || a % 2 == 0; }
    /// Absolute trace (to GF(2)) in characteristic 2.
    bool trace_bit(Code a) const noexcept { return trace_bits_[a]; }

    Code encode(const FieldElement &a) const;
    FieldElement decode(Code c) const;
    /// Code of the element with enumeration index idx.
    Code code_of_index(std::uint32_t idx) const noexcept { return log_of_index_[idx]; }

private:
    Field f_;
    std::uint32_t q_;
    Code minus_one_;
    std::vector<Code> log_of_index_;
    std::vector<std::uint32_t> index_of_log_;
    std::vector<Code> zech_;
    std::vector<bool> trace_bits_;
};

/// Cached LogTable (fields up to 2^22 elements).
const LogTable &log_table(const Field &f);

} // namespace sszeta::ff
