#pragma once

// Weil polynomials x^4 + r x^3 + s x^2 + q r x + q^2 of supersingular genus-2
// curves: supersingularity test, table lookup, disambiguation and a
// point-counting oracle.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sszeta/curve.hpp"

namespace sszeta::zeta {

using curve::CurveModel;
using curve::GaloisShape;
using ff::Field;
using ff::FieldElement;
using poly::Polynomial;

/// Enumeration budget on q^ext for count_points.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

struct WeilCoeffs {
    mpz_class r, s, q;

    /// f_J(1) = |J(k)|
    mpz_class jacobian_order() const { return q * q + 1 + (q + 1) * r + s; }
    /// |C(k)|
    mpz_class curve_order() const { return q + 1 + r; }
    /// Weil polynomial of the hyperelliptic twist: f(-x).
    WeilCoeffs negated() const { return {-r, s, q}; }
    std::string to_string() const;
    friend bool operator==(const WeilCoeffs &a, const WeilCoeffs &b) { return a.r == b.r && a.s == b.s && a.q == b.q; }
    friend bool operator<(const WeilCoeffs &a, const WeilCoeffs &b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.r != b.r) return a.r < b.r;
        return a.s < b.s;
    }
};

struct PointCounts {
    mpz_class N1, N2;
};

/// Hasse-Witt data: M = (c_{p-1} c_{p-2}; c_{2p-1} c_{2p-2}) from f^((p-1)/2).
struct CartierMatrix {
    std::array<FieldElement, 4> M, Mp;
    bool annihilates() const;
};

CartierMatrix cartier_matrix(const CurveModel &C);
/// M^(p) M == 0; Artin-Schreier models are supersingular.
bool is_supersingular(const CurveModel &C);

/// |C(GF(q^ext))| by enumeration; BudgetExceeded when q^ext > budget.
mpz_class count_points(const CurveModel &C, unsigned ext, std::uint64_t budget = kDefaultBudget);
PointCounts count_both(const CurveModel &C, std::uint64_t budget = kDefaultBudget);
WeilCoeffs zeta_from_counts(const PointCounts &counts, const mpz_class &q);

struct Char2Invariants {
    Polynomial P; // a^2 x^5 + b^2 x + a
    FieldElement T_coeff; // c + b^2 / a
    GaloisShape shape;
    unsigned N = 0, M = 0;
};
Char2Invariants char2_invariants(const CurveModel &C);

/// Candidates for y^2 + y = a x^5 + b x^3 + c x + d. A nonzero d is first
/// normalized to 0 or to a trace-one constant; the latter negates r.
std::vector<WeilCoeffs> table2_candidates(const CurveModel &C);

struct TableRow {
    bool possible = false;
    std::vector<WeilCoeffs> candidates;
};
TableRow table34_candidates(const GaloisShape &shape, std::uint64_t p, const mpz_class &q);

/// dim over F_2 of J[2](k) from the Weierstrass orbit shape.
int rk2_from_shape(const GaloisShape &shape);

struct ZetaOptions {
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    unsigned order_tests = 32;
    bool force_count = false;
};

struct ZetaReport {
    WeilCoeffs w;
    std::string method; // table, table+order-test, table+count, count
    std::optional<GaloisShape> shape; // Weierstrass shape (odd p) or shape of P (p = 2)
    std::optional<int> rk2;
    std::vector<WeilCoeffs> candidates;
};

ZetaReport zeta_report(const CurveModel &C, const ZetaOptions &opt = {});
WeilCoeffs weil_polynomial(const CurveModel &C, const ZetaOptions &opt = {});

/// Every (r, s) of a supersingular abelian surface over GF(q), q = p^n:
/// simple classes together with products of supersingular elliptic classes.
std::vector<WeilCoeffs> supersingular_classes(std::uint64_t p, const mpz_class &q);

/// Abelian group as a list of cyclic orders.
struct GroupDescription {
    std::vector<mpz_class> cyclic;
    mpz_class order() const;
    std::string to_string() const;
    friend bool operator==(const GroupDescription &, const GroupDescription &) = default;
};
std::vector<GroupDescription> group_structure_candidates(const WeilCoeffs &w, std::uint64_t p);

/// Relation classes of an automorphism v != 1, iota.
enum class VRelation { Sq1, SqIota, Cube1, CubeIota, FourthIota, Fifth1, FifthIota, Sixth1, SixthIota };
/// Smallest k with v^k in {1, iota}; UnclassifiedOrder outside the table.
VRelation relation_of(const curve::CurveGeometry &G, std::size_t v);
/// Base curve with Weil polynomial (x + sqrt q)^4, q square.
WeilCoeffs twisted_weil_qsq(VRelation rel, const mpz_class &q);
/// Base curve with Weil polynomial (x^2 + eps q)^2, q nonsquare; n = ord(v v^sigma).
WeilCoeffs twisted_weil_qnsq(unsigned n, int eps, const mpz_class &q);

} // namespace sszeta::zeta
