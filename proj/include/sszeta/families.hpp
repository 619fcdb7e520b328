#pragma once

// The six families of genus-2 curves with many automorphisms and the twist
// atlas: one record per row of the twist tables, instantiated over a given
// field and checked against the counting oracle.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sszeta/zeta.hpp"

namespace sszeta::families {

using curve::CurveModel;
using curve::FamilyKind;
using ff::Field;
using ff::FieldElement;
using poly::Polynomial;
using zeta::WeilCoeffs;

inline constexpr std::uint64_t kParameterBudget = 10000;

/// A family member. Rigid families carry only the field.
struct FamilyTag {
    FamilyKind kind = FamilyKind::X5minus1;
    Field k;
    FieldElement a, b;

    static FamilyTag rigid(FamilyKind kind, const Field &k);
    static FamilyTag d8(const FieldElement &a);
    static FamilyTag d12(const FieldElement &a);
    static FamilyTag biquadratic(const FieldElement &a, const FieldElement &b);

    bool parametric() const;
    /// Standard model: x^6+ax^4+bx^2+1, x^5+x^3+ax, x^6+x^3+a (a x^6+x^4+x^2+1
    /// when p = 3), x^6-1, x^5-x, x^5-1.
    CurveModel model() const;
    std::string to_string() const;
};

/// Genericity of the parameters (the excluded values give larger groups).
bool is_generic(FamilyKind kind, const FieldElement &a, const FieldElement &b);

/// Congruence for the rigid curves, the Hasse-Witt test otherwise.
bool ss_condition(const FamilyTag &tag, std::uint64_t p);

/// Supersingular generic members in enumeration order, scanning at most
/// `budget` parameter values (pairs for the biquadratic family).
std::vector<FamilyTag> find_ss_parameters(FamilyKind kind, const Field &k, std::uint64_t budget = kParameterBudget);

/// Every supersingular member of every family over k: rigid curves first,
/// then parametric ones in scan order. Rigid models that are singular or
/// acquire extra automorphisms at p are left out.
std::vector<FamilyTag> supersingular_members(const Field &k, std::uint64_t budget = kParameterBudget);

struct Prediction {
    WeilCoeffs w;
    bool self_dual = false;
    unsigned aut = 0;
    bool r_sign_free = false; // the table prints +-r

    bool matches(const WeilCoeffs &x) const;
};

/// Everything a row sees while it is instantiated.
struct Setting {
    FamilyTag tag;
    Field k;
    std::uint64_t p = 0;
    unsigned n = 0;
    mpz_class q;
    bool q_square = false;
    std::uint64_t budget = kParameterBudget;

    /// sqrt(q); q must be a square.
    mpz_class root_q() const;
    FieldElement el(std::int64_t v) const { return FieldElement(k, v); }
};

struct Built {
    CurveModel C;
    Prediction pred;
    std::vector<std::pair<std::string, FieldElement>> params;
};

struct TwistRow {
    int table;
    int row;
    FamilyKind family;
    const char *equation;
    const char *conditions;
    std::function<bool(const Setting &)> applies;
    std::function<Built(const Setting &, unsigned variant)> build;
    std::function<unsigned(const Setting &)> variants; // empty: one

    unsigned variant_count(const Setting &s) const { return variants ? variants(s) : 1; }
};

const std::vector<TwistRow> &twist_rows();
std::vector<int> atlas_tables();
const TwistRow &find_row(int table, int row);

Setting make_setting(const FamilyTag &tag, std::uint64_t budget = kParameterBudget);
bool row_applies(const TwistRow &row, const FamilyTag &tag);

struct RowInstance {
    const TwistRow *row = nullptr;
    FamilyTag tag;
    unsigned variant = 0;
    Built built;
};

/// RowNotApplicable, NoParameterFound.
RowInstance instantiate_row(const TwistRow &row, const FamilyTag &tag, unsigned variant = 0,
                            std::uint64_t budget = kParameterBudget);

struct Observed {
    WeilCoeffs w;
    bool self_dual = false;
    unsigned aut = 0;
};

struct RowReport {
    RowInstance inst;
    Observed oracle;
    std::size_t fixed = 0; // |F|
    bool rs_ok = false, sd_ok = false, aut_ok = false, modauto_ok = false;
    bool pass() const { return rs_ok && sd_ok && aut_ok && modauto_ok; }
};

RowReport verify_row(const RowInstance &inst, std::uint64_t budget = zeta::kDefaultBudget);

struct CatalogueEntry {
    std::size_t v = 0; // class representative in CurveGeometry of the standard model
    CurveModel C;
    WeilCoeffs w;       // from the twist law, or counted when no base exists
    WeilCoeffs counted; // oracle
    bool self_dual = false;
    unsigned aut = 0;
    std::string method; // qsq, qnsq, count
    bool rebase_consistent = true;
};

/// One entry per twist class of the standard model over its field.
std::vector<CatalogueEntry> twist_catalogue(const FamilyTag &tag, std::uint64_t budget = zeta::kDefaultBudget);

/// Twists predicted by the applicable rows: two for each row that is not
/// self-dual, times the number of variants.
unsigned appendix_twist_count(const FamilyTag &tag, std::uint64_t budget = kParameterBudget);

} // namespace sszeta::families
