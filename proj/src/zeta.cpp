#include "sszeta/zeta.hpp"

#include "sszeta/jacobian.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sszeta::zeta {

namespace {

void term(std::ostringstream &os, const mpz_class &c, const char *mono) {
    if (c == 0) return;
    os << (c < 0 ? "-" : "+");
    const mpz_class a = abs(c);
    if (a != 1 || *mono == '\0') os << a;
    os << mono;
}

mpz_class isqrt_exact(const mpz_class &n, const char *what) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) fail(Errc::RowNotFound, std::string(what) + " is not an integer");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const mpz_class &n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

// Coefficients g_0 .. g_{count-1} of h^m, h(0) != 0, count <= p, from
// h (h^m)' = m h' h^m.
std::vector<FieldElement> power_head(const std::vector<FieldElement> &h, std::uint64_t m, std::size_t count) {
    const Field &F = h[0].field();
    std::vector<FieldElement> g;
    g.reserve(count);
    g.push_back(h[0].pow(static_cast<std::int64_t>(m)));
    const FieldElement h0inv = h[0].inverse();
    const auto d = static_cast<std::int64_t>(h.size()) - 1;
    const auto mm = static_cast<std::int64_t>(m);
    for (std::int64_t i = 0; static_cast<std::size_t>(i + 1) < count; ++i) {
        FieldElement acc = FieldElement::zero(F);
        for (std::int64_t j = 1; j <= std::min(d, i + 1); ++j)
            acc += FieldElement(F, mm * j - (i - j + 1)) * h[j] * g[i - j + 1];
        g.push_back(acc * h0inv * FieldElement(F, i + 1).inverse());
    }
    return g;
}

} // namespace

std::string WeilCoeffs::to_string() const {
    std::ostringstream os;
    os << "x^4";
    term(os, r, "x^3");
    term(os, s, "x^2");
    term(os, q * r, "x");
    term(os, q * q, "");
    return os.str();
}

bool CartierMatrix::annihilates() const {
    // (Mp M)_{ij}
    const auto &a = Mp, &b = M;
    return (a[0] * b[0] + a[1] * b[2]).is_zero() && (a[0] * b[1] + a[1] * b[3]).is_zero() && (a[2] * b[0] + a[3] * b[2]).is_zero() &&
           (a[2] * b[1] + a[3] * b[3]).is_zero();
}

CartierMatrix cartier_matrix(const CurveModel &C) {
    if (C.is_char2()) fail(Errc::WrongCharacteristic, "Cartier-Manin matrix is computed for odd characteristic");
    const Field &F = C.field();
    const std::uint64_t p = F->p();
    const std::uint64_t m = (p - 1) / 2;
    const auto &fc = C.f().coeffs();
    // f = x^t h with h(0) != 0
    std::size_t t = 0;
    while (fc[t].is_zero()) ++t;
    std::vector<FieldElement> h(fc.begin() + static_cast<std::ptrdiff_t>(t), fc.end());
    std::vector<FieldElement> hr(h.rbegin(), h.rend());
    const std::uint64_t D = (h.size() - 1) * m, shift = t * m;
    const std::size_t K = static_cast<std::size_t>(std::min<std::uint64_t>(p, D + 1));
    const auto low = power_head(h, m, K), high = power_head(hr, m, K);
    auto c = [&](std::uint64_t idx) -> FieldElement {
        if (idx < shift || idx - shift > D) return FieldElement::zero(F);
        const std::uint64_t g = idx - shift;
        if (g < K) return low[g];
        if (D - g < K) return high[D - g];
        fail(Errc::VerificationFailed, "Cartier coefficient out of range");
    };
    CartierMatrix cm;
    cm.M = {c(p - 1), c(p - 2), c(2 * p - 1), c(2 * p - 2)};
    for (int i = 0; i < 4; ++i) cm.Mp[i] = cm.M[i].pow(static_cast<std::int64_t>(p));
    return cm;
}

bool is_supersingular(const CurveModel &C) {
    if (C.is_char2()) return true;
    return cartier_matrix(C).annihilates();
}

mpz_class count_points(const CurveModel &C, unsigned ext, std::uint64_t budget) {
    if (ext != 1 && ext != 2) fail(Errc::DegreeMismatch, "point counts over k or k_2 only");
    const Field &k = C.field();
    mpz_class qe;
    mpz_pow_ui(qe.get_mpz_t(), k->q().get_mpz_t(), ext);
    if (qe > mpz_class(static_cast<unsigned long>(budget)))
        fail(Errc::BudgetExceeded, "enumeration of " + qe.get_str() + " elements exceeds the budget " + std::to_string(budget));
    const Field K = ext == 1 ? k : ff::extension_field(k->p(), k->n() * ext);
    const auto &emb = ff::embedding(k, K);
    const Polynomial h = C.rhs().map(K, [&](const FieldElement &a) { return emb(a); });
    const bool char2 = C.is_char2();
    const std::uint64_t q = K->q_u64();
    mpz_class count = 0;
    if (q <= (std::uint64_t{1} << 22)) {
        const auto &lt = ff::log_table(K);
        std::vector<ff::LogTable::Code> hc;
        for (const auto &c : h.coeffs()) hc.push_back(lt.encode(c));
        auto value = [&](ff::LogTable::Code x) {
            ff::LogTable::Code acc = hc.back();
            for (std::size_t i = hc.size() - 1; i-- > 0;) acc = lt.add(lt.mul(acc, x), hc[i]);
            return acc;
        };
        std::uint64_t n = 0;
        for (std::uint64_t x = 0; x < q; ++x) {
            // codes 0 .. q-2 are g^x, code q-1 is zero
            const auto v = value(static_cast<ff::LogTable::Code>(x));
            if (char2)
                n += lt.trace_bit(v) ? 0 : 2;
            else
                n += v == lt.zero() ? 1 : (lt.is_square(v) ? 2 : 0);
        }
        count = static_cast<unsigned long>(n);
    } else {
        std::uint64_t n = 0;
        for (std::uint64_t x = 0; x < q; ++x) {
            const FieldElement v = h(ff::element_at(K, x));
            if (char2)
                n += ff::absolute_trace(v) ? 0 : 2;
            else
                n += v.is_zero() ? 1 : (ff::is_square(v) ? 2 : 0);
        }
        count = static_cast<unsigned long>(n);
    }
    if (char2 || C.degree() == 5) return count + 1;
    return count + (ff::is_square(h.leading()) ? 2 : 0);
}

PointCounts count_both(const CurveModel &C, std::uint64_t budget) { return {count_points(C, 1, budget), count_points(C, 2, budget)}; }

WeilCoeffs zeta_from_counts(const PointCounts &counts, const mpz_class &q) {
    const mpz_class r = counts.N1 - q - 1;
    const mpz_class twice = counts.N2 - q * q - 1 + r * r;
    if (twice % 2 != 0) fail(Errc::InconsistentCounts, "N2 - q^2 - 1 + r^2 is odd");
    return {r, twice / 2, q};
}

Char2Invariants char2_invariants(const CurveModel &C) {
    if (!C.is_char2()) fail(Errc::WrongCharacteristic, "Artin-Schreier invariants need characteristic 2");
    const Field &F = C.field();
    const FieldElement &a = C.a(), &b = C.b(), &c = C.c();
    const FieldElement zero = FieldElement::zero(F);
    Char2Invariants inv;
    inv.P = Polynomial(F, {a, b * b, zero, zero, zero, a * a});
    inv.T_coeff = c + b * b / a;
    inv.shape = poly::factor_shape(inv.P);
    for (const auto &z : poly::roots_in_field(inv.P))
        if (ff::absolute_trace(inv.T_coeff * z) == 0) ++inv.N;
    for (const auto &fac : poly::factor_full(inv.P))
        if (fac.f.degree() == 2 && ff::absolute_trace(inv.T_coeff * fac.f.coeff(1)) == 0) ++inv.M;
    return inv;
}

std::vector<WeilCoeffs> table2_candidates(const CurveModel &C) {
    const Char2Invariants inv = char2_invariants(C);
    const Field &F = C.field();
    const mpz_class q = F->q();
    const bool twisted = ff::absolute_trace(C.d()) == 1;
    const std::string sh = inv.shape.to_string();
    std::vector<WeilCoeffs> out;
    auto pm = [&](const mpz_class &r, const mpz_class &s) {
        out.push_back({-r, s, q});
        out.push_back({r, s, q});
    };
    auto one = [&](const mpz_class &r, const mpz_class &s) { out.push_back({r, s, q}); };
    if (!F->q_is_square()) {
        const mpz_class t = isqrt_exact(2 * q, "sqrt(2q)");
        if (sh == "(1)(4)") {
            if (inv.N == 0) pm(t, 2 * q);
            if (inv.N == 1) one(0, 0);
        } else if (sh == "(2)(3)") {
            if (inv.M == 0) pm(t, q);
            if (inv.M == 1) one(0, q);
        } else if (sh == "(1)^3(2)") {
            if (inv.N == 0) pm(2 * t, 4 * q);
            if (inv.N == 1) one(0, 2 * q);
            if (inv.N == 2) one(0, 0);
            if (inv.N == 3) one(0, -2 * q);
        }
    } else {
        const mpz_class t = F->sqrt_q();
        if (sh == "(5)") {
            pm(t, q);
        } else if (sh == "(1)^2(3)") {
            if (inv.N == 0) one(0, -q);
            if (inv.N == 1) one(0, q);
            if (inv.N == 2) pm(2 * t, 3 * q);
        } else if (sh == "(1)(2)^2") {
            if (inv.M == 0) pm(2 * t, 2 * q);
            if (inv.M == 1) one(0, 0);
            if (inv.M == 2) one(0, 2 * q);
        } else if (sh == "(1)^5") {
            if (inv.N == 1) one(0, -2 * q);
            if (inv.N == 3) one(0, 2 * q);
            if (inv.N == 5) pm(4 * t, 6 * q);
        }
    }
    if (out.empty())
        fail(Errc::RowNotFound, "no Table row for P = " + inv.P.to_string() + " shape " + sh + " N=" + std::to_string(inv.N) +
                                    " M=" + std::to_string(inv.M));
    if (twisted)
        for (auto &w : out) w = w.negated();
    std::sort(out.begin(), out.end());
    return out;
}

TableRow table34_candidates(const GaloisShape &shape, std::uint64_t p, const mpz_class &q) {
    if (p == 2) fail(Errc::WrongCharacteristic, "Weierstrass tables are for odd characteristic");
    if (shape.total() != 6) fail(Errc::DegreeMismatch, "Weierstrass shape must describe six points");
    const std::string sh = shape.to_string();
    const bool square = is_perfect_square(q);
    const long eps = p % 4 == 1 ? 1 : -1;
    TableRow row;
    auto add = [&](const mpz_class &r, const mpz_class &s) {
        row.possible = true;
        row.candidates.push_back({r, s, q});
    };
    auto is = [&](std::initializer_list<const char *> names) {
        return std::any_of(names.begin(), names.end(), [&](const char *n) { return sh == n; });
    };
    if (!square) {
        if (is({"(1)^6", "(1)^4(2)"})) {
            add(0, -2 * eps * q);
        } else if (is({"(1)^2(2)^2", "(2)^3"})) {
            add(0, 2 * q);
            add(0, -2 * q);
        } else if (is({"(1)^3(3)"})) {
        } else if (is({"(1)(2)(3)"})) {
            if (p == 3) {
                const mpz_class t = isqrt_exact(3 * q, "sqrt(3q)");
                add(t, 2 * q);
                add(-t, 2 * q);
            }
        } else if (is({"(1)^2(4)", "(2)(4)"})) {
            add(0, 0);
        } else if (is({"(1)(5)"})) {
            if (p == 5) {
                const mpz_class t = isqrt_exact(5 * q, "sqrt(5q)");
                add(t, 3 * q);
                add(-t, 3 * q);
            }
        } else if (is({"(3)^2"})) {
            if (p % 3 == 1) add(0, q);
            if (p % 3 == 2) add(0, eps * q);
        } else if (is({"(6)"})) {
            add(0, q);
            if (p % 3 == 2) add(0, -q);
        }
    } else {
        const mpz_class t = isqrt_exact(q, "sqrt(q)");
        if (is({"(1)^6"})) {
            add(0, -2 * q);
            add(4 * t, 6 * q);
            add(-4 * t, 6 * q);
        } else if (is({"(1)^4(2)"})) {
            add(0, -2 * q);
        } else if (is({"(1)^2(2)^2", "(2)^3"})) {
            add(0, 2 * q);
            add(0, -2 * q);
        } else if (is({"(1)^3(3)"})) {
            if (p == 3) {
                add(t, 0);
                add(-t, 0);
            }
        } else if (is({"(1)(2)(3)"})) {
        } else if (is({"(1)^2(4)", "(2)(4)"})) {
            if (p % 8 != 1) add(0, 0);
        } else if (is({"(1)(5)"})) {
            if (p % 5 != 1) {
                add(t, q);
                add(-t, q);
            }
        } else if (is({"(3)^2"})) {
            add(0, q);
            add(2 * t, 3 * q);
            add(-2 * t, 3 * q);
        } else if (is({"(6)"})) {
            add(0, q);
            if (p % 12 == 5) add(0, -q);
        }
    }
    std::sort(row.candidates.begin(), row.candidates.end());
    return row;
}

int rk2_from_shape(const GaloisShape &shape) {
    const unsigned r1 = shape.count_of(1), r2 = shape.count_of(2);
    const unsigned v = 1 + r1 * (r1 - (r1 > 0 ? 1 : 0)) / 2 + r2;
    if (shape.total() != 6 || (v & (v - 1)) != 0) fail(Errc::NonIntegerRank, "shape " + shape.to_string() + " gives 2-rank log2(" + std::to_string(v) + ")");
    int k = 0;
    while ((1u << k) < v) ++k;
    return k;
}

namespace {

std::vector<WeilCoeffs> filter_by_order_test(const CurveModel &C, const std::vector<WeilCoeffs> &cands, const ZetaOptions &opt) {
    const auto im = curve::imaginary_model(C);
    if (!im) return cands;
    const jacobian::Jacobian J(*im);
    std::vector<jacobian::MumfordDivisor> samples;
    try {
        for (unsigned i = 0; i < opt.order_tests; ++i) samples.push_back(J.random_divisor(opt.seed + i));
    } catch (const Error &e) {
        if (e.code() != Errc::NoRationalPoints) throw;
        return cands;
    }
    std::vector<WeilCoeffs> out;
    for (const auto &w : cands) {
        const mpz_class n = w.jacobian_order();
        if (std::all_of(samples.begin(), samples.end(), [&](const auto &D) { return J.is_identity(J.scalar_mul(n, D)); })) out.push_back(w);
    }
    return out;
}

std::vector<WeilCoeffs> filter_by_counts(const CurveModel &C, std::vector<WeilCoeffs> cands, const ZetaOptions &opt) {
    const mpz_class q = C.field()->q();
    try {
        const mpz_class r = count_points(C, 1, opt.budget) - q - 1;
        std::erase_if(cands, [&](const WeilCoeffs &w) { return w.r != r; });
        if (cands.size() > 1) {
            const WeilCoeffs w = zeta_from_counts({q + 1 + r, count_points(C, 2, opt.budget)}, q);
            std::erase_if(cands, [&](const WeilCoeffs &x) { return x.s != w.s; });
        }
    } catch (const Error &e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        fail(Errc::AmbiguityUnresolved, std::string("order test inconclusive and ") + e.what());
    }
    return cands;
}

} // namespace

ZetaReport zeta_report(const CurveModel &C, const ZetaOptions &opt) {
    const mpz_class q = C.field()->q();
    const std::uint64_t p = C.field()->p();
    ZetaReport rep;
    if (C.is_char2()) {
        rep.shape = char2_invariants(C).shape;
    } else {
        if (!is_supersingular(C)) fail(Errc::NotSupersingular, C.to_string() + " is not supersingular");
        rep.shape = curve::weierstrass_shape(C);
        rep.rk2 = rk2_from_shape(*rep.shape);
    }
    if (opt.force_count) {
        rep.w = zeta_from_counts(count_both(C, opt.budget), q);
        rep.candidates = {rep.w};
        rep.method = "count";
        return rep;
    }
    if (C.is_char2()) {
        rep.candidates = table2_candidates(C);
    } else {
        TableRow row = table34_candidates(*rep.shape, p, q);
        if (!row.possible) fail(Errc::NotSupersingular, "Weierstrass shape " + rep.shape->to_string() + " is impossible for a supersingular curve");
        rep.candidates = std::move(row.candidates);
    }
    std::vector<WeilCoeffs> cands = rep.candidates;
    rep.method = "table";
    if (cands.size() > 1 && !C.is_char2()) {
        auto survivors = filter_by_order_test(C, cands, opt);
        if (survivors.empty()) fail(Errc::VerificationFailed, "no table candidate passes the Jacobian order test");
        if (survivors.size() < cands.size()) rep.method = "table+order-test";
        cands = std::move(survivors);
    }
    if (cands.size() > 1) {
        cands = filter_by_counts(C, std::move(cands), opt);
        if (cands.empty()) fail(Errc::VerificationFailed, "point counts contradict every table candidate");
        rep.method = "table+count";
    }
    if (cands.size() != 1) fail(Errc::AmbiguityUnresolved, "several candidates survive");
    rep.w = cands.front();
    return rep;
}

WeilCoeffs weil_polynomial(const CurveModel &C, const ZetaOptions &opt) { return zeta_report(C, opt).w; }

std::vector<WeilCoeffs> supersingular_classes(std::uint64_t p, const mpz_class &q) {
    std::set<WeilCoeffs> out;
    const bool square = is_perfect_square(q);
    auto add = [&](const mpz_class &r, const mpz_class &s) { out.insert({r, s, q}); };
    // elliptic traces
    std::vector<mpz_class> traces;
    if (square) {
        const mpz_class t = isqrt_exact(q, "sqrt(q)");
        traces = {2 * t, -2 * t};
        if (p % 4 != 1) traces.push_back(0);
        if (p % 3 != 1) {
            traces.push_back(t);
            traces.push_back(-t);
        }
    } else {
        traces = {0};
        if (p == 2 || p == 3) {
            const mpz_class t = isqrt_exact(p * q, "sqrt(pq)");
            traces.push_back(t);
            traces.push_back(-t);
        }
    }
    for (std::size_t i = 0; i < traces.size(); ++i)
        for (std::size_t j = i; j < traces.size(); ++j) add(traces[i] + traces[j], 2 * q + traces[i] * traces[j]);
    // simple classes
    if (!square) {
        add(0, -2 * q);
        if (p != 2) add(0, 0);
        add(0, q);
        if (p != 3) add(0, -q);
        if (p == 5) {
            const mpz_class t = isqrt_exact(5 * q, "sqrt(5q)");
            add(t, 3 * q);
            add(-t, 3 * q);
        }
        if (p == 2) {
            const mpz_class t = isqrt_exact(2 * q, "sqrt(2q)");
            add(t, q);
            add(-t, q);
        }
    } else {
        const mpz_class t = isqrt_exact(q, "sqrt(q)");
        if (p % 4 == 1) add(0, 2 * q);
        if (p % 3 == 1) {
            add(2 * t, 3 * q);
            add(-2 * t, 3 * q);
        }
        if (p % 8 != 1) add(0, 0);
        if (p % 12 != 1) add(0, -q);
        if (p % 5 != 1) {
            add(t, q);
            add(-t, q);
        }
    }
    return {out.begin(), out.end()};
}

mpz_class GroupDescription::order() const {
    mpz_class n = 1;
    for (const auto &c : cyclic) n *= c;
    return n;
}

std::string GroupDescription::to_string() const {
    if (cyclic.empty()) return "0";
    std::string s;
    for (const auto &c : cyclic) s += (s.empty() ? "" : " + ") + ("Z/" + c.get_str());
    return s;
}

namespace {

// Monic integer polynomial, low degree first.
using ZPoly = std::vector<mpz_class>;

std::vector<std::pair<ZPoly, unsigned>> factor_weil(const WeilCoeffs &w) {
    const mpz_class &r = w.r, &s = w.s, &q = w.q;
    std::vector<ZPoly> quads;
    const mpz_class disc = r * r - 4 * (s - 2 * q);
    if (is_perfect_square(disc) && (r + isqrt_exact(disc, "")) % 2 == 0) {
        const mpz_class d = isqrt_exact(disc, "");
        quads = {{q, (r + d) / 2, 1}, {q, (r - d) / 2, 1}};
    } else if (r == 0 && is_perfect_square(-s - 2 * q)) {
        const mpz_class b = isqrt_exact(-s - 2 * q, "");
        quads = {{-q, b, 1}, {-q, -b, 1}};
    } else {
        return {{{q * q, q * r, s, r, 1}, 1}};
    }
    std::vector<ZPoly> parts;
    for (const auto &f : quads) {
        const mpz_class dq = f[1] * f[1] - 4 * f[0];
        if (is_perfect_square(dq)) {
            const mpz_class d = isqrt_exact(dq, "");
            parts.push_back({(f[1] - d) / 2, 1});
            parts.push_back({(f[1] + d) / 2, 1});
        } else {
            parts.push_back(f);
        }
    }
    std::sort(parts.begin(), parts.end());
    std::vector<std::pair<ZPoly, unsigned>> out;
    for (const auto &f : parts) {
        if (!out.empty() && out.back().first == f)
            ++out.back().second;
        else
            out.push_back({f, 1});
    }
    return out;
}

mpz_class value_at_one(const ZPoly &f) {
    mpz_class v = 0;
    for (const auto &c : f) v += c;
    return abs(v);
}

GroupDescription make_group(std::vector<mpz_class> c) {
    std::erase_if(c, [](const mpz_class &x) { return x == 1; });
    std::sort(c.begin(), c.end());
    return {c};
}

} // namespace

std::vector<GroupDescription> group_structure_candidates(const WeilCoeffs &w, std::uint64_t p) {
    const auto classes = supersingular_classes(p, w.q);
    if (!std::binary_search(classes.begin(), classes.end(), w)) fail(Errc::UnknownClass, w.to_string() + " is not a supersingular class over this field");
    const bool square = is_perfect_square(w.q);
    const mpz_class &q = w.q;
    std::vector<GroupDescription> out;
    auto push = [&](GroupDescription g) {
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
    };
    const bool case_a = !square && p % 4 == 3 && w.r == 0 && w.s == 2 * q;
    const bool case_b = !square && p % 4 == 1 && w.r == 0 && w.s == -2 * q;
    const bool case_c = square && p != 2 && w.r == 0 && w.s == -2 * q;
    if (case_a || case_b) {
        const mpz_class F1 = case_a ? mpz_class(q + 1) : mpz_class(q - 1);
        for (int m = 2; m >= 0; --m) {
            std::vector<mpz_class> c(static_cast<std::size_t>(m), F1);
            for (int i = 0; i < 2 - m; ++i) {
                c.push_back(F1 / 2);
                c.push_back(2);
            }
            push(make_group(c));
        }
        return out;
    }
    if (case_c) {
        push(make_group({(q - 1) / 2, (q - 1) / 2, 2, 2}));
        const mpz_class qm = q - 1;
        const unsigned v = static_cast<unsigned>(mpz_scan1(qm.get_mpz_t(), 0));
        for (unsigned m = 0; m <= v; ++m)
            for (unsigned n = m; n <= v; ++n) {
                mpz_class a = qm, b = qm, c = 1;
                mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), m);
                mpz_tdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), n);
                mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), m + n);
                push(make_group({a, b, c}));
            }
        return out;
    }
    std::vector<mpz_class> c;
    for (const auto &[f, e] : factor_weil(w))
        for (unsigned i = 0; i < e; ++i) c.push_back(value_at_one(f));
    push(make_group(c));
    return out;
}

VRelation relation_of(const curve::CurveGeometry &G, std::size_t v) {
    if (v == G.identity() || v == G.iota()) fail(Errc::UnclassifiedOrder, "v must differ from 1 and iota");
    static const VRelation to1[] = {VRelation::Sq1, VRelation::Cube1, VRelation::Sq1, VRelation::Fifth1, VRelation::Sixth1};
    static const VRelation toi[] = {VRelation::SqIota, VRelation::CubeIota, VRelation::FourthIota, VRelation::FifthIota, VRelation::SixthIota};
    for (int k = 2; k <= 6; ++k) {
        const std::size_t pk = G.power(v, k);
        if (pk == G.iota()) return toi[k - 2];
        if (pk == G.identity()) {
            if (k == 4) break;
            return to1[k - 2];
        }
    }
    fail(Errc::UnclassifiedOrder, "automorphism of order " + std::to_string(G.order(v)) + " is outside the classification");
}

WeilCoeffs twisted_weil_qsq(VRelation rel, const mpz_class &q) {
    if (!is_perfect_square(q)) fail(Errc::RowNotApplicable, "q must be a square");
    const mpz_class t = isqrt_exact(q, "sqrt(q)");
    switch (rel) {
    case VRelation::Sq1: return {0, -2 * q, q};
    case VRelation::SqIota: return {0, 2 * q, q};
    case VRelation::Cube1: return {-2 * t, 3 * q, q};
    case VRelation::CubeIota: return {2 * t, 3 * q, q};
    case VRelation::FourthIota: return {0, 0, q};
    case VRelation::Fifth1: return {-t, q, q};
    case VRelation::FifthIota: return {t, q, q};
    case VRelation::Sixth1: return {0, q, q};
    case VRelation::SixthIota: return {0, -q, q};
    }
    fail(Errc::UnclassifiedOrder, "unknown relation");
}

WeilCoeffs twisted_weil_qnsq(unsigned n, int eps, const mpz_class &q) {
    if (eps != 1 && eps != -1) fail(Errc::InvalidOrder, "epsilon must be +-1");
    switch (n) {
    case 1: return {0, 2 * eps * q, q};
    case 2: return {0, -2 * eps * q, q};
    case 3: return {0, -eps * q, q};
    case 4: return {0, 0, q};
    case 6: return {0, eps * q, q};
    default: fail(Errc::InvalidOrder, "order of v v^sigma must be 1, 2, 3, 4 or 6, got " + std::to_string(n));
    }
}

} // namespace sszeta::zeta
