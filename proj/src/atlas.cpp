// Twist tables as data: each row finds its parameters by enumeration,
// materializes its equation and evaluates the printed prediction.

#include <algorithm>

#include "sszeta/families.hpp"

namespace sszeta::families {

namespace {

using P = Polynomial;
using Pred = std::function<bool(const Setting &)>;
using Params = std::vector<std::pair<std::string, FieldElement>>;

unsigned mod(const mpz_class &q, unsigned m) { return static_cast<unsigned>(mpz_fdiv_ui(q.get_mpz_t(), m)); }

P X(const Field &k) { return P::x(k); }
P cst(const FieldElement &c) { return P::constant(c); }
P xp(const Field &k, unsigned d) { return P::monomial(FieldElement::one(k), d); }
P pw(const P &b, unsigned e) {
    P r = cst(FieldElement::one(b.field()));
    for (unsigned i = 0; i < e; ++i) r = r * b;
    return r;
}
P lin(const FieldElement &a) { return X(a.field()) - cst(a); }

Prediction pd(const Setting &s, const mpz_class &r, const mpz_class &sc, bool sd, unsigned aut) {
    return Prediction{WeilCoeffs{r, sc, s.q}, sd, aut, false};
}

Built mk(P f, Prediction pred, Params params = {}) {
    if (!poly::is_separable(f)) fail(Errc::NoParameterFound, f.to_string() + " is not separable");
    return Built{CurveModel::odd(std::move(f)), std::move(pred), std::move(params)};
}

FieldElement scan(const Field &F, std::uint64_t budget, const std::function<bool(const FieldElement &)> &ok, const std::string &what) {
    const std::uint64_t q = F->q_u64();
    for (std::uint64_t i = 1; i < q && i <= budget; ++i) {
        FieldElement e = ff::element_at(F, i);
        if (ok(e)) return e;
    }
    fail(Errc::NoParameterFound, what + " over " + F->to_string());
}

FieldElement scan(const Setting &s, const std::function<bool(const FieldElement &)> &ok, const std::string &what) {
    return scan(s.k, s.budget, ok, what);
}

int nu(const FieldElement &x, unsigned m) { return ff::residue_symbol(x, m); }
bool sq(const FieldElement &x) { return !x.is_zero() && nu(x, 2) == 1; }
bool nonsq(const FieldElement &x) { return !x.is_zero() && nu(x, 2) == -1; }

// (a / sqrt q): whether a is an m-th power in the field with sqrt(q) elements
int sym_half(const Setting &s, std::int64_t a, unsigned m = 2) {
    return ff::residue_symbol(FieldElement(ff::ctx_new(s.p, s.n / 2), a), m);
}
int leg_p(const Setting &s, std::int64_t a) { return ff::residue_symbol(FieldElement(ff::ctx_new(s.p, 1), a), 2); }

mpz_class isqrt(const mpz_class &m) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    if (r * r != m) fail(Errc::VerificationFailed, m.get_str() + " is not a square");
    return r;
}

FieldElement root(const FieldElement &a, unsigned m, const char *what) {
    auto r = ff::nth_root(a, m);
    if (!r) fail(Errc::NoParameterFound, std::string("no ") + what + " of " + a.to_string());
    return *r;
}

bool coprime(const P &a, const P &b) { return poly::gcd(a, b).degree() == 0; }

// Quadratic extension k2 / k.
struct Quad {
    Field k, k2;
    unsigned n;

    explicit Quad(const Setting &s) : k(s.k), k2(ff::ctx_new(s.p, 2 * s.n, std::uint64_t{1} << 48)), n(s.n) {}

    FieldElement up(const FieldElement &a) const { return ff::embedding(k, k2)(a); }
    P up(const P &f) const {
        return f.map(k2, [&](const FieldElement &c) { return up(c); });
    }
    P down(const P &f) const {
        const auto &E = ff::embedding(k, k2);
        return f.map(k, [&](const FieldElement &c) {
            auto r = E.preimage(c);
            if (!r) fail(Errc::VerificationFailed, "coefficient " + c.to_string() + " is not in the base field");
            return *r;
        });
    }
    FieldElement sigma(const FieldElement &a) const { return ff::frobenius_power(a, n); }
    FieldElement norm(const FieldElement &a) const { return a * sigma(a); }
    bool outside_k(const FieldElement &a) const { return !(sigma(a) == a); }
    // minimal polynomial over k of an element outside k
    P minpoly(const FieldElement &t) const { return down(lin(t) * lin(sigma(t))); }

    // Element of k2 with norm `target` (an element of k) passing `extra`.
    FieldElement with_norm(const FieldElement &target, const std::function<bool(const FieldElement &)> &extra, const std::string &what) const {
        const FieldElement T = up(target);
        return scan(k2, k2->q_u64(), [&](const FieldElement &t) { return norm(t) == T && extra(t); }, what);
    }
};

Pred family(FamilyKind kind) {
    return [kind](const Setting &s) { return s.tag.kind == kind; };
}

Pred operator&&(Pred a, Pred b) {
    return [a, b](const Setting &s) { return a(s) && b(s); };
}

void add(std::vector<TwistRow> &rows, int table, FamilyKind fam, const char *eq, const char *cond, Pred applies,
         std::function<Built(const Setting &)> build) {
    const int row = static_cast<int>(std::count_if(rows.begin(), rows.end(), [&](const TwistRow &r) { return r.table == table; })) + 1;
    rows.push_back({table, row, fam, eq, cond, std::move(applies), [build](const Setting &s, unsigned) { return build(s); }, {}});
}

// ---------------------------------------------------------------- x^5 - 1

void table5(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::X5minus1;
    const Pred T = family(F) && [](const Setting &s) { return s.p % 5 == 2 || s.p % 5 == 3 || s.p % 5 == 4; };
    auto eps = [](const Setting &s) { return mod(s.root_q(), 5) == 1 ? 1 : -1; };
    add(rows, 5, F, "y^2=x^5-1", "p = 2,3,4 mod 5", T, [eps](const Setting &s) {
        const unsigned m = mod(s.q, 5);
        Prediction pr = m == 4 ? pd(s, 0, 2 * s.q, false, 2) : m == 1 ? pd(s, -4 * eps(s) * s.root_q(), 6 * s.q, false, 10) : pd(s, 0, 0, false, 2);
        return mk(xp(s.k, 5) - cst(s.el(1)), pr);
    });
    rows.push_back({5, 2, F, "y^2=t x^5-1", "q = 1 mod 5, t not a fifth power (four classes of t)",
                    T && [](const Setting &s) { return mod(s.q, 5) == 1; },
                    [eps](const Setting &s, unsigned v) {
                        const FieldElement t0 = scan(s, [](const FieldElement &t) { return nu(t, 5) == -1; }, "non-fifth power");
                        const FieldElement t = t0.pow(static_cast<std::int64_t>(v + 1));
                        return mk(t * xp(s.k, 5) - cst(s.el(1)), pd(s, eps(s) * s.root_q(), s.q, false, 10), {{"t", t}});
                    },
                    [](const Setting &) { return 4u; }});
}

// ---------------------------------------------------------------- x^5 - x

P t6_sextic(const FieldElement &t, const FieldElement &s) {
    const Field &k = t.field();
    const FieldElement h = FieldElement(k, 2).inverse(), five(k, 5), one(k, 1);
    return P(k, {one, t - FieldElement(k, 3), five * (FieldElement(k, 2) - t - s) * h, five * (s - one), five * (FieldElement(k, 2) + t - s) * h,
                 -(t + FieldElement(k, 3)), one});
}

P t7_cubic(const FieldElement &t) {
    const Field &k = t.field();
    return P(k, {FieldElement(k, 1), t - FieldElement(k, 3), -t, FieldElement(k, 1)});
}

void table6(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::X5minusX;
    const Pred T = family(F) && [](const Setting &s) { return mod(s.q, 8) == 7; };
    add(rows, 6, F, "y^2=x^5-x", "q = -1 mod 8", T, [](const Setting &s) { return mk(xp(s.k, 5) - X(s.k), pd(s, 0, 2 * s.q, true, 8)); });
    add(rows, 6, F, "y^2=x^5+x", "", T, [](const Setting &s) { return mk(xp(s.k, 5) + X(s.k), pd(s, 0, 2 * s.q, true, 4)); });
    add(rows, 6, F, "y^2=(x^2+1)(x^2-2tx-1)(x^2+(2/t)x-1)", "t^2+1 nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, [&](const FieldElement &t) { return nonsq(t * t + s.el(1)); }, "t with t^2+1 nonsquare");
        const P f = (xp(s.k, 2) + cst(s.el(1))) * (xp(s.k, 2) - s.el(2) * t * X(s.k) - cst(s.el(1))) *
                    (xp(s.k, 2) + (s.el(2) / t) * X(s.k) - cst(s.el(1)));
        return mk(f, pd(s, 0, -2 * s.q, true, 24), {{"t", t}});
    });
    add(rows, 6, F, "y^2=(x^2+1)(x^4-4tx^3-6x^2+4tx+1)", "t^2+1 nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, [&](const FieldElement &t) { return nonsq(t * t + s.el(1)); }, "t with t^2+1 nonsquare");
        const P f = (xp(s.k, 2) + cst(s.el(1))) * P(s.k, {s.el(1), s.el(4) * t, s.el(-6), s.el(-4) * t, s.el(1)});
        return mk(f, pd(s, 0, 0, true, 4), {{"t", t}});
    });
    add(rows, 6, F, "y^2=x^6-(t+3)x^5+5((2+t-s)/2)x^4+5(s-1)x^3+5((2-t-s)/2)x^2+(t-3)x+1", "irreducible, s^2+t^2=-2", T,
        [](const Setting &s) {
            FieldElement sv;
            const FieldElement t = scan(s,
                                        [&](const FieldElement &t) {
                                            for (const auto &r : ff::all_nth_roots(s.el(-2) - t * t, 2))
                                                if (!r.is_zero() && poly::is_irreducible(t6_sextic(t, r))) {
                                                    sv = r;
                                                    return true;
                                                }
                                            return false;
                                        },
                                        "(s, t) with s^2+t^2=-2 and an irreducible sextic");
            return mk(t6_sextic(t, sv), pd(s, 0, s.q, false, 6), {{"t", t}, {"s", sv}});
        });
}

void table7(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::X5minusX;
    const Pred T = family(F) && [](const Setting &s) { return mod(s.q, 8) == 5; };
    const Pred p5 = T && [](const Setting &s) { return s.p == 5; };
    add(rows, 7, F, "y^2=x^5-x", "q = 5 mod 8", T,
        [](const Setting &s) { return mk(xp(s.k, 5) - X(s.k), pd(s, 0, -2 * s.q, true, s.p == 5 ? 120 : 24)); });
    add(rows, 7, F, "y^2=x^5-4x", "", T, [](const Setting &s) { return mk(xp(s.k, 5) - s.el(4) * X(s.k), pd(s, 0, 2 * s.q, true, 8)); });
    add(rows, 7, F, "y^2=x^5-2x", "", T, [](const Setting &s) { return mk(xp(s.k, 5) - s.el(2) * X(s.k), pd(s, 0, 0, true, 4)); });
    add(rows, 7, F, "y^2=(x^2+2)(x^4-12x^2+4)", "", T, [](const Setting &s) {
        const P f = (xp(s.k, 2) + cst(s.el(2))) * P(s.k, {s.el(4), s.el(0), s.el(-12), s.el(0), s.el(1)});
        return mk(f, pd(s, 0, 2 * s.q, true, s.p == 5 ? 12 : 4));
    });
    add(rows, 7, F, "y^2=f(t,x)f((18+(5i-3)t)/((5i+3)-2t),x), f(t,x)=x^3-tx^2+(t-3)x+1", "f(t,x) irreducible", T, [](const Setting &s) {
        const FieldElement i = root(s.el(-1), 2, "square root");
        FieldElement t2;
        const FieldElement t = scan(s,
                                    [&](const FieldElement &t) {
                                        const FieldElement den = s.el(5) * i + s.el(3) - s.el(2) * t;
                                        if (den.is_zero() || !poly::is_irreducible(t7_cubic(t))) return false;
                                        t2 = (s.el(18) + (s.el(5) * i - s.el(3)) * t) / den;
                                        return poly::is_separable(t7_cubic(t) * t7_cubic(t2));
                                    },
                                    "t with f(t,x) irreducible");
        return mk(t7_cubic(t) * t7_cubic(t2), pd(s, 0, s.q, s.p == 5, 6), {{"i", i}, {"t", t}});
    });
    add(rows, 7, F, "y^2=x^5-x-t", "p = 5, tr(t) = 1", p5, [](const Setting &s) {
        const FieldElement t = scan(s, [](const FieldElement &t) { return ff::absolute_trace(t) == 1; }, "trace-one element");
        return mk(xp(s.k, 5) - X(s.k) - cst(t), pd(s, isqrt(5 * s.q), 3 * s.q, false, 10), {{"t", t}});
    });
    add(rows, 7, F, "y^2=x^6+tx^5+(1-t)x+2", "p = 5, irreducible", p5, [](const Setting &s) {
        auto f = [&](const FieldElement &t) { return P(s.k, {s.el(2), s.el(1) - t, s.el(0), s.el(0), s.el(0), t, s.el(1)}); };
        const FieldElement t = scan(s, [&](const FieldElement &t) { return poly::is_irreducible(f(t)); }, "t with an irreducible sextic");
        return mk(f(t), pd(s, 0, -s.q, true, 6), {{"t", t}});
    });
}

void table9(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::X5minusX;
    const Pred T = family(F) && [](const Setting &s) { return s.q_square && (s.p % 8 == 5 || s.p % 8 == 7); };
    const Pred p5 = T && [](const Setting &s) { return s.p == 5; };
    add(rows, 9, F, "y^2=x^5-x", "q square, p = 5,7 mod 8", T, [](const Setting &s) {
        return mk(xp(s.k, 5) - X(s.k), pd(s, -4 * sym_half(s, -1) * s.root_q(), 6 * s.q, false, s.p == 5 ? 240 : 48));
    });
    add(rows, 9, F, "y^2=x^5-t^2x", "t nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, nonsq, "nonsquare");
        return mk(xp(s.k, 5) - (t * t) * X(s.k), pd(s, 0, 2 * s.q, true, 8), {{"t", t}});
    });
    add(rows, 9, F, "y^2=x^5-tx", "t nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, nonsq, "nonsquare");
        return mk(xp(s.k, 5) - t * X(s.k), pd(s, 0, 0, false, 8), {{"t", t}});
    });
    add(rows, 9, F, "y^2=(x^2-t)(x^4+6tx^2+t^2)", "t nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, nonsq, "nonsquare");
        const P f = (xp(s.k, 2) - cst(t)) * P(s.k, {t * t, s.el(0), s.el(6) * t, s.el(0), s.el(1)});
        return mk(f, pd(s, 0, -2 * s.q, true, s.p == 5 ? 12 : 4), {{"t", t}});
    });
    add(rows, 9, F, "y^2=(x^3-t)(x^3-(15sqrt(3)-26)t)", "t not a cube", T, [](const Setting &s) {
        const FieldElement r3 = root(s.el(3), 2, "square root");
        const FieldElement t = scan(s, [](const FieldElement &t) { return nu(t, 3) == -1; }, "non-cube");
        const P f = (xp(s.k, 3) - cst(t)) * (xp(s.k, 3) - cst((s.el(15) * r3 - s.el(26)) * t));
        return mk(f, pd(s, 2 * sym_half(s, -3) * s.root_q(), 3 * s.q, false, s.p == 5 ? 12 : 6), {{"sqrt3", r3}, {"t", t}});
    });
    add(rows, 9, F, "y^2=x^5-x-t", "p = 5, tr(t) = 1", p5, [](const Setting &s) {
        const FieldElement t = scan(s, [](const FieldElement &t) { return ff::absolute_trace(t) == 1; }, "trace-one element");
        return mk(xp(s.k, 5) - X(s.k) - cst(t), pd(s, s.root_q(), s.q, false, 10), {{"t", t}});
    });
    add(rows, 9, F, "y^2=x^6+tx^5+(1-t)x+2", "p = 5, irreducible", p5, [](const Setting &s) {
        auto f = [&](const FieldElement &t) { return P(s.k, {s.el(2), s.el(1) - t, s.el(0), s.el(0), s.el(0), t, s.el(1)}); };
        const FieldElement t = scan(s, [&](const FieldElement &t) { return poly::is_irreducible(f(t)); }, "t with an irreducible sextic");
        return mk(f(t), pd(s, 0, s.q, false, 12), {{"t", t}});
    });
}


// ---------------------------------------------------------------- x^6 - 1

void table10(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::X6minus1;
    const Pred T = family(F) && [](const Setting &s) { return mod(s.q, 3) == 2 && s.p != 5; };
    add(rows, 10, F, "y^2=x^6-1", "q = -1 mod 3, p != 5", T, [](const Setting &s) {
        const int e = leg_p(s, -1);
        return mk(xp(s.k, 6) - cst(s.el(1)), pd(s, 0, 2 * s.q, e == -1, 6 + 2 * e));
    });
    add(rows, 10, F, "y^2=x^6-t", "t nonsquare", T, [](const Setting &s) {
        const int e = leg_p(s, -1);
        const FieldElement t = scan(s, nonsq, "nonsquare");
        return mk(xp(s.k, 6) - cst(t), pd(s, 0, 2 * s.q, e == 1, 6 - 2 * e), {{"t", t}});
    });
    add(rows, 10, F, "y^2=x(x^2-1)(x^2-9)", "", T, [](const Setting &s) {
        const P f = X(s.k) * (xp(s.k, 2) - cst(s.el(1))) * (xp(s.k, 2) - cst(s.el(9)));
        return mk(f, pd(s, 0, -2 * leg_p(s, -1) * s.q, true, 12));
    });
    add(rows, 10, F, "y^2=(x^4-2stx^3+(7s+1)x^2+2tsx+1)(x^2-(4/t)x-1)", "t^2+4 nonsquare, 1/s=t^2+3", T, [](const Setting &s) {
        const FieldElement t = scan(s, [&](const FieldElement &t) { return nonsq(t * t + s.el(4)) && !(t * t + s.el(3)).is_zero(); },
                                    "t with t^2+4 nonsquare");
        const FieldElement sv = (t * t + s.el(3)).inverse();
        const P f = P(s.k, {s.el(1), s.el(2) * t * sv, s.el(7) * sv + s.el(1), s.el(-2) * sv * t, s.el(1)}) *
                    (xp(s.k, 2) - (s.el(4) / t) * X(s.k) - cst(s.el(1)));
        return mk(f, pd(s, 0, 2 * leg_p(s, -1) * s.q, true, 12), {{"t", t}, {"s", sv}});
    });
    auto sextic = [](const FieldElement &t, const FieldElement &sv) {
        const Field &k = sv.field();
        auto el = [&](std::int64_t v) { return FieldElement(k, v); };
        return P(k, {sv.pow(3), el(6) * t * sv * sv, el(15) * sv * sv, el(20) * t * sv, el(15) * sv, el(6) * t, el(1)});
    };
    add(rows, 10, F, "y^2=x^6+6tx^5+15sx^4+20tsx^3+15s^2x^2+6ts^2x+s^3", "s=t^2-4 nonsquare, gcd(x^((q+1)/3)-1, x^2-tx+1)=1", T,
        [sextic](const Setting &s) {
            const mpz_class e = (s.q + 1) / 3;
            const FieldElement t = scan(s,
                                        [&](const FieldElement &t) {
                                            if (!nonsq(t * t - s.el(4))) return false;
                                            const P m(s.k, {s.el(1), -t, s.el(1)});
                                            return coprime(poly::powmod(X(s.k), e, m) - cst(s.el(1)), m);
                                        },
                                        "t for the sextic");
            const FieldElement sv = t * t - s.el(4);
            return mk(sextic(t, sv), pd(s, 0, leg_p(s, -1) * s.q, true, 6), {{"t", t}, {"s", sv}});
        });
    add(rows, 10, F, "y^2=x^6+6x^5+15sx^4+20sx^3+15s^2x^2+6s^2x+s^3", "s=t^2/(t^2+4) nonsquare, gcd(x^((q+1)/3)+1, x^2-tx-1)=1", T,
        [sextic](const Setting &s) {
            const mpz_class e = (s.q + 1) / 3;
            const FieldElement t = scan(s,
                                        [&](const FieldElement &t) {
                                            const FieldElement d = t * t + s.el(4);
                                            if (d.is_zero() || !nonsq(t * t / d)) return false;
                                            const P m(s.k, {s.el(-1), -t, s.el(1)});
                                            return coprime(poly::powmod(X(s.k), e, m) + cst(s.el(1)), m);
                                        },
                                        "t for the sextic");
            const FieldElement sv = t * t / (t * t + s.el(4));
            return mk(sextic(s.el(1), sv), pd(s, 0, -leg_p(s, -1) * s.q, true, 6), {{"t", t}, {"s", sv}});
        });
}

void table11(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::X6minus1;
    const Pred T = family(F) && [](const Setting &s) { return s.q_square && s.p % 3 == 2 && s.p != 5; };
    auto eps = [](const Setting &s) { return sym_half(s, -3); };
    add(rows, 11, F, "y^2=x^6-1", "q square, p = -1 mod 3, p != 5", T,
        [eps](const Setting &s) { return mk(xp(s.k, 6) - cst(s.el(1)), pd(s, -4 * eps(s) * s.root_q(), 6 * s.q, false, 24)); });
    add(rows, 11, F, "y^2=x^6-t^3", "t nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, nonsq, "nonsquare");
        return mk(xp(s.k, 6) - cst(t.pow(3)), pd(s, 0, -2 * s.q, true, 12), {{"t", t}});
    });
    add(rows, 11, F, "y^2=x^6-t^2", "t not a cube", T, [eps](const Setting &s) {
        const FieldElement t = scan(s, [](const FieldElement &t) { return nu(t, 3) == -1; }, "non-cube");
        return mk(xp(s.k, 6) - cst(t * t), pd(s, 2 * eps(s) * s.root_q(), 3 * s.q, false, 12), {{"t", t}});
    });
    add(rows, 11, F, "y^2=x^6-t", "t neither a square nor a cube", T, [](const Setting &s) {
        const FieldElement t = scan(s, [](const FieldElement &t) { return nu(t, 2) == -1 && nu(t, 3) == -1; }, "non-square non-cube");
        return mk(xp(s.k, 6) - cst(t), pd(s, 0, s.q, false, 12), {{"t", t}});
    });
    add(rows, 11, F, "y^2=x(x^2+3t)(x^2+t/3)", "t nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, nonsq, "nonsquare");
        const P f = X(s.k) * (xp(s.k, 2) + cst(s.el(3) * t)) * (xp(s.k, 2) + cst(t / s.el(3)));
        return mk(f, pd(s, 0, 2 * s.q, true, 4), {{"t", t}});
    });
    add(rows, 11, F, "y^2=x^6+15tx^4+15t^2x^2+t^3", "t nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, nonsq, "nonsquare");
        const P f(s.k, {t.pow(3), s.el(0), s.el(15) * t * t, s.el(0), s.el(15) * t, s.el(0), s.el(1)});
        return mk(f, pd(s, 0, -2 * s.q, true, 4), {{"t", t}});
    });
}

// ---------------------------------------------------------------- x^6 + x^3 + a

bool d12_ss(const Setting &s) { return s.tag.kind == FamilyKind::D12 && s.p > 3; }

P d12_base(const Setting &s, const FieldElement &c3, const FieldElement &c0) { return xp(s.k, 6) + c3 * xp(s.k, 3) + cst(c0); }

// theta^-m (x-theta)^6 - g^3 + a theta^m (x-theta^sigma)^6, g the minimal polynomial of theta
P d12_glued(const Quad &K, const FieldElement &a, const FieldElement &theta, unsigned m) {
    const P g = K.up(K.minpoly(theta));
    const FieldElement tm = theta.pow(static_cast<std::int64_t>(m));
    const P f = tm.inverse() * pw(lin(theta), 6) - pw(g, 3) + (K.up(a) * tm) * pw(lin(K.sigma(theta)), 6);
    return K.down(f);
}

// The cube root of a in k when there is one, else a itself; and the exponent n.
std::pair<FieldElement, unsigned> d12_A(const Setting &s) {
    if (nu(s.tag.a, 3) == 1) return {root(s.tag.a, 3, "cube root"), 3};
    return {s.tag.a, 1};
}

Built d12_theta_row(const Setting &s, Prediction pr) {
    const Quad K(s);
    const auto [A, m] = d12_A(s);
    const FieldElement theta = K.with_norm(A.inverse(), [&](const FieldElement &t) { return K.outside_k(t); }, "theta with N(theta)=1/A");
    return mk(d12_glued(K, s.tag.a, theta, m), pr, {{"A", A}, {"theta", theta}});
}

void table12(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::D12;
    const Pred T = family(F) && [](const Setting &s) { return d12_ss(s) && mod(s.q, 3) == 2; };
    add(rows, 12, F, "y^2=x^6+x^3+a", "q = -1 mod 3", T, [](const Setting &s) {
        const int e = nu(s.tag.a, 2);
        return mk(d12_base(s, s.el(1), s.tag.a), pd(s, 0, 2 * s.q, e == -1, 3 + e));
    });
    add(rows, 12, F, "y^2=theta^-3(x-theta)^6-g(x)^3+a theta^3(x-theta^sigma)^6", "theta in k2 \\ k, N(theta)=1/A", T, [](const Setting &s) {
        const int e = nu(s.tag.a, 2);
        return d12_theta_row(s, pd(s, 0, 2 * e * s.q, e == -1, 9 + 3 * e));
    });
    add(rows, 12, F, "y^2=theta(x-eta)^6-(x^2+x+1)^3+a theta^-1(x-eta^2)^6", "theta in k2 not a cube, N(theta)=a", T, [](const Setting &s) {
        const int e = nu(s.tag.a, 2);
        const Quad K(s);
        const P g(K.k2, {FieldElement::one(K.k2), FieldElement::one(K.k2), FieldElement::one(K.k2)});
        const FieldElement eta = poly::roots_in_field(g).front();
        const FieldElement theta = K.with_norm(s.tag.a, [](const FieldElement &t) { return nu(t, 3) == -1; }, "non-cube theta with N(theta)=a");
        const P f = theta * pw(lin(eta), 6) - pw(g, 3) + (K.up(s.tag.a) / theta) * pw(lin(eta * eta), 6);
        return mk(K.down(f), pd(s, 0, -e * s.q, false, 6), {{"eta", eta}, {"theta", theta}});
    });
}

void table13(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::D12;
    const Pred T = family(F) && [](const Setting &s) { return d12_ss(s) && mod(s.q, 3) == 1 && !s.q_square; };
    add(rows, 13, F, "y^2=x^6+x^3+a", "q = 1 mod 3, q nonsquare", T, [](const Setting &s) {
        const bool cube = nu(s.tag.a, 3) == 1;
        return mk(d12_base(s, s.el(1), s.tag.a), cube ? pd(s, 0, -2 * s.q, true, 6) : pd(s, 0, s.q, false, 6));
    });
    add(rows, 13, F, "y^2=x^6+tx^3+t^2a (a cube, t not a cube) | y^2=x^6+ax^3+a^3", "", T, [](const Setting &s) {
        const FieldElement &a = s.tag.a;
        if (nu(a, 3) == -1) return mk(d12_base(s, a, a.pow(3)), pd(s, 0, -2 * s.q, true, 6));
        const FieldElement t = scan(s, [](const FieldElement &t) { return nu(t, 3) == -1; }, "non-cube");
        return mk(d12_base(s, t, t * t * a), pd(s, 0, s.q, false, 6), {{"t", t}});
    });
    add(rows, 13, F, "y^2=theta^-n(x-theta)^6-g(x)^3+a theta^n(x-theta^sigma)^6", "theta in k2 \\ k, N(theta)=1/A", T,
        [](const Setting &s) { return d12_theta_row(s, pd(s, 0, 2 * s.q, true, 2)); });
}

void table14(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::D12;
    const Pred T = family(F) && [](const Setting &s) { return d12_ss(s) && s.q_square; };
    auto big = [](const Setting &s) { return pd(s, -4 * sym_half(s, -3) * s.root_q(), 6 * s.q, false, 12); };
    auto mid = [](const Setting &s) { return pd(s, 2 * sym_half(s, -3) * s.root_q(), 3 * s.q, false, 6); };
    add(rows, 14, F, "y^2=x^6+x^3+a", "q square", T,
        [=](const Setting &s) { return mk(d12_base(s, s.el(1), s.tag.a), nu(s.tag.a, 3) == 1 ? big(s) : mid(s)); });
    add(rows, 14, F, "y^2=x^6+tx^3+t^2a (a cube, t not a cube) | y^2=x^6+ax^3+a^3", "", T, [=](const Setting &s) {
        const FieldElement &a = s.tag.a;
        if (nu(a, 3) == -1) return mk(d12_base(s, a, a.pow(3)), big(s));
        const FieldElement t = scan(s, [](const FieldElement &t) { return nu(t, 3) == -1; }, "non-cube");
        return mk(d12_base(s, t, t * t * a), mid(s), {{"t", t}});
    });
    add(rows, 14, F, "y^2=theta^-n(x-theta)^6-g(x)^3+a theta^n(x-theta^sigma)^6", "theta in k2 \\ k, N(theta)=1/A", T,
        [](const Setting &s) { return d12_theta_row(s, pd(s, 0, -2 * s.q, false, 4)); });
}

// ---------------------------------------------------------------- x^5 + x^3 + a x

P d8_base(const Setting &s, const FieldElement &t) { return xp(s.k, 5) + t * xp(s.k, 3) + (s.tag.a * t * t) * X(s.k); }

// g (theta^2 (x-theta^sigma)^4 + g^2 + a theta^-2 (x-theta)^4), N(theta) = w
Built d8_theta_row(const Setting &s, const FieldElement &w, Prediction pr) {
    const Quad K(s);
    const FieldElement theta = K.with_norm(w, [&](const FieldElement &t) { return K.outside_k(t); }, "theta with N(theta)=" + w.to_string());
    const P g = K.up(K.minpoly(theta));
    const FieldElement t2 = theta * theta;
    const P f = g * (t2 * pw(lin(K.sigma(theta)), 4) + g * g + (K.up(s.tag.a) / t2) * pw(lin(theta), 4));
    return mk(K.down(f), pr, {{"sqrt_a", w}, {"theta", theta}});
}

void table15(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::D8;
    const Pred T = family(F) && [](const Setting &s) { return s.q_square; };
    // -(-1/sqrt q) nu_4(z u), z the smallest root of z^2+z+a
    auto eps = [](const Setting &s, const FieldElement &u) {
        const auto zs = poly::roots_in_field(P(s.k, {s.tag.a, s.el(1), s.el(1)}));
        if (zs.empty()) fail(Errc::NoParameterFound, "z^2+z+a has no root in k");
        return -sym_half(s, -1) * nu(zs.front() * u, 4);
    };
    add(rows, 15, F, "y^2=x^5+x^3+ax", "q square", T, [eps](const Setting &s) {
        const Prediction pr = nu(s.tag.a, 4) == 1 ? pd(s, 4 * eps(s, s.el(1)) * s.root_q(), 6 * s.q, false, 8) : pd(s, 0, 2 * s.q, true, 4);
        return mk(d8_base(s, s.el(1)), pr);
    });
    add(rows, 15, F, "y^2=x^5+tx^3+at^2x", "t nonsquare", T, [eps](const Setting &s) {
        const FieldElement t = scan(s, nonsq, "nonsquare");
        const Prediction pr = nu(s.tag.a, 4) == 1 ? pd(s, 0, 2 * s.q, true, 4) : pd(s, 4 * eps(s, t) * s.root_q(), 6 * s.q, false, 8);
        return mk(d8_base(s, t), pr, {{"t", t}});
    });
    rows.push_back({15, 3, F, "y^2=g(x)(theta^2(x-theta^sigma)^4+g(x)^2+a theta^-2(x-theta)^4)",
                    "theta in k2 \\ k, N(theta)=sqrt(a), one twist per square root", T,
                    [](const Setting &s, unsigned v) {
                        const auto r = ff::all_nth_roots(s.tag.a, 2);
                        if (r.size() != 2) fail(Errc::NoParameterFound, "a is not a square");
                        return d8_theta_row(s, r[v], pd(s, 0, -2 * s.q, true, 4));
                    },
                    [](const Setting &) { return 2u; }});
}

void table16(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::D8;
    const Pred T = family(F) && [](const Setting &s) { return !s.q_square && nonsq(s.tag.a); };
    add(rows, 16, F, "y^2=x^5+x^3+ax", "q nonsquare, a nonsquare", T, [](const Setting &s) {
        return mk(d8_base(s, s.el(1)), leg_p(s, -1) == 1 ? pd(s, 0, 0, false, 4) : pd(s, 0, 2 * s.q, true, 2));
    });
    add(rows, 16, F, "y^2=(x^2-a)(theta(x-sqrt(a))^4+(x^2-a)^2+a theta^-1(x+sqrt(a))^4)", "theta in k2, N(theta)=a", T, [](const Setting &s) {
        const Quad K(s);
        const FieldElement A = K.up(s.tag.a);
        const FieldElement ra = root(A, 2, "square root");
        const FieldElement theta = K.with_norm(s.tag.a, [](const FieldElement &) { return true; }, "theta with N(theta)=a");
        const P h = xp(K.k2, 2) - cst(A);
        const P f = h * (theta * pw(lin(ra), 4) + h * h + (A / theta) * pw(lin(-ra), 4));
        return mk(K.down(f), leg_p(s, -1) == 1 ? pd(s, 0, 2 * s.q, true, 2) : pd(s, 0, 0, false, 4), {{"sqrt_a", ra}, {"theta", theta}});
    });
}

// sqrt(a) in k; for p = 3 mod 4 the root that is itself a square
FieldElement t17_root(const Setting &s) {
    const auto r = ff::all_nth_roots(s.tag.a, 2);
    if (r.empty()) fail(Errc::NoParameterFound, "a is not a square");
    if (s.p % 4 == 3)
        for (const auto &x : r)
            if (sq(x)) return x;
    return r.front();
}

void table17(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::D8;
    const Pred T = family(F) && [](const Setting &s) { return !s.q_square && sq(s.tag.a); };
    add(rows, 17, F, "y^2=x^5+x^3+ax", "q nonsquare, a square", T, [](const Setting &s) {
        const int e = leg_p(s, -1);
        return mk(d8_base(s, s.el(1)), nu(s.tag.a, 4) == 1 ? pd(s, 0, 2 * s.q, e == -1, 6 + 2 * e) : pd(s, 0, -2 * s.q, true, 4));
    });
    add(rows, 17, F, "y^2=x^5+tx^3+at^2x", "t nonsquare", T, [](const Setting &s) {
        const int e = leg_p(s, -1);
        const FieldElement t = scan(s, nonsq, "nonsquare");
        return mk(d8_base(s, t), nu(s.tag.a, 4) == 1 ? pd(s, 0, -2 * e * s.q, true, 4) : pd(s, 0, 2 * s.q, false, 8), {{"t", t}});
    });
    add(rows, 17, F, "y^2=g(x)(theta^2(x-theta^sigma)^4+g(x)^2+a theta^-2(x-theta)^4)", "theta in k2 \\ k, N(theta)=sqrt(a)", T,
        [](const Setting &s) {
            const int e = leg_p(s, -1);
            return d8_theta_row(s, t17_root(s), pd(s, 0, 2 * s.q, e == 1, 6 - 2 * e));
        });
    add(rows, 17, F, "y^2=g(x)(theta^2(x-theta^sigma)^4+g(x)^2+a theta^-2(x-theta)^4)", "theta in k2 \\ k, N(theta)=-sqrt(a)", T,
        [](const Setting &s) { return d8_theta_row(s, -t17_root(s), pd(s, 0, 2 * leg_p(s, -1) * s.q, true, 4)); });
}

// ---------------------------------------------------------------- x^6 + a x^4 + b x^2 + 1

void table18(std::vector<TwistRow> &rows) {
    const auto F = FamilyKind::Biquadratic;
    const Pred T = family(F) && [](const Setting &s) { return s.p > 3; };
    add(rows, 18, F, "y^2=x^6+ax^4+bx^2+1", "", T, [](const Setting &s) {
        Prediction pr = s.q_square ? pd(s, 4 * s.root_q(), 6 * s.q, false, 4) : pd(s, 0, 2 * s.q, false, 4);
        pr.r_sign_free = s.q_square;
        return mk(s.tag.model().f(), pr);
    });
    add(rows, 18, F, "y^2=x^6+atx^4+bt^2x^2+t^3", "t nonsquare", T, [](const Setting &s) {
        const FieldElement t = scan(s, nonsq, "nonsquare");
        const P f(s.k, {t.pow(3), s.el(0), s.tag.b * t * t, s.el(0), s.tag.a * t, s.el(0), s.el(1)});
        return mk(f, pd(s, 0, (s.q_square ? -2 : 2) * s.q, false, 4), {{"t", t}});
    });
}

} // namespace

const std::vector<TwistRow> &twist_rows() {
    static const std::vector<TwistRow> rows = [] {
        std::vector<TwistRow> r;
        for (auto fn : {table5, table6, table7, table9, table10, table11, table12, table13, table14, table15, table16, table17, table18}) fn(r);
        return r;
    }();
    return rows;
}

std::vector<int> atlas_tables() {
    std::vector<int> out;
    for (const auto &r : twist_rows())
        if (out.empty() || out.back() != r.table) out.push_back(r.table);
    return out;
}

const TwistRow &find_row(int table, int row) {
    for (const auto &r : twist_rows())
        if (r.table == table && r.row == row) return r;
    fail(Errc::RowNotFound, "no row " + std::to_string(row) + " in table " + std::to_string(table));
}

Setting make_setting(const FamilyTag &tag, std::uint64_t budget) {
    Setting s;
    s.tag = tag;
    s.k = tag.k;
    s.p = tag.k->p();
    s.n = tag.k->n();
    s.q = tag.k->q();
    s.q_square = tag.k->q_is_square();
    s.budget = budget;
    return s;
}

bool row_applies(const TwistRow &row, const FamilyTag &tag) {
    if (row.family != tag.kind || tag.k->p() == 2) return false;
    const Setting s = make_setting(tag);
    if (!row.applies(s)) return false;
    return !tag.parametric() || zeta::is_supersingular(tag.model());
}

RowInstance instantiate_row(const TwistRow &row, const FamilyTag &tag, unsigned variant, std::uint64_t budget) {
    if (!row_applies(row, tag))
        fail(Errc::RowNotApplicable, "table " + std::to_string(row.table) + " row " + std::to_string(row.row) + " does not apply to " + tag.to_string() +
                                         " over " + tag.k->to_string());
    const Setting s = make_setting(tag, budget);
    if (variant >= row.variant_count(s)) fail(Errc::RowNotApplicable, "variant out of range");
    return RowInstance{&row, tag, variant, row.build(s, variant)};
}

RowReport verify_row(const RowInstance &inst, std::uint64_t budget) {
    RowReport rep;
    rep.inst = inst;
    const CurveModel &C = inst.built.C;
    const auto counts = zeta::count_both(C, budget);
    rep.oracle.w = zeta::zeta_from_counts(counts, C.field()->q());
    const curve::CurveGeometry G(C);
    rep.oracle.self_dual = curve::is_self_dual(G, G.identity());
    rep.oracle.aut = static_cast<unsigned>(curve::twist_aut_count(G, G.identity()));
    rep.fixed = curve::fixed_rational_count(G);
    const Prediction &pr = inst.built.pred;
    rep.rs_ok = pr.matches(rep.oracle.w);
    rep.sd_ok = pr.self_dual == rep.oracle.self_dual;
    rep.aut_ok = pr.aut == rep.oracle.aut;
    const mpz_class diff = counts.N1 - static_cast<unsigned long>(rep.fixed);
    rep.modauto_ok = mpz_divisible_ui_p(diff.get_mpz_t(), rep.oracle.aut) != 0;
    return rep;
}

namespace {

bool is_qsq_base(const WeilCoeffs &w) { return w.r == 4 * mpz_class(sqrt(w.q)) && w.s == 6 * w.q; }
bool is_qnsq_base(const WeilCoeffs &w) { return w.r == 0 && abs(w.s) == 2 * w.q; }

// Weil polynomial of C_v from a base twist C_b; nullopt when the relation is
// outside the twist law.
std::optional<WeilCoeffs> via_base(const curve::CurveGeometry &G, std::size_t v, std::size_t b, const WeilCoeffs &wb) {
    const std::size_t w = G.mul(v, G.inv(b));
    const mpz_class &q = wb.q;
    if (G.base()->q_is_square()) {
        if (w == G.identity()) return wb;
        if (w == G.iota()) return wb.negated();
        try {
            return zeta::twisted_weil_qsq(zeta::relation_of(G, w), q);
        } catch (const Error &e) {
            if (e.code() != Errc::UnclassifiedOrder) throw;
            return std::nullopt;
        }
    }
    const std::size_t x = G.mul(G.mul(w, b), G.mul(G.sigma(w), G.inv(b)));
    const int eps = wb.s > 0 ? 1 : -1;
    try {
        return zeta::twisted_weil_qnsq(G.order(x), eps, q);
    } catch (const Error &e) {
        if (e.code() != Errc::UnclassifiedOrder && e.code() != Errc::InvalidOrder) throw;
        return std::nullopt;
    }
}

} // namespace

std::vector<CatalogueEntry> twist_catalogue(const FamilyTag &tag, std::uint64_t budget) {
    const CurveModel base = tag.model();
    if (!zeta::is_supersingular(base)) fail(Errc::NotSupersingular, base.to_string() + " is not supersingular");
    const curve::CurveGeometry G(base);
    const auto classes = curve::twist_classes(G);
    const mpz_class q = tag.k->q();
    std::vector<CatalogueEntry> out;
    for (const auto &cls : classes) {
        CatalogueEntry e;
        e.v = cls.front();
        e.C = e.v == G.identity() ? base : curve::materialize_twist(G, e.v);
        e.counted = zeta::zeta_from_counts(zeta::count_both(e.C, budget), q);
        e.w = e.counted;
        e.self_dual = curve::is_self_dual(G, e.v);
        e.aut = static_cast<unsigned>(curve::twist_aut_count(G, e.v));
        e.method = "count";
        out.push_back(std::move(e));
    }
    const bool qsq = tag.k->q_is_square();
    for (auto &e : out) {
        std::optional<WeilCoeffs> first;
        for (std::size_t c = 0; c < out.size(); ++c) {
            const auto &b = out[c];
            if (!(qsq ? is_qsq_base(b.counted) : is_qnsq_base(b.counted))) continue;
            // every cocycle in the class of b is a valid base
            for (std::size_t bb : classes[c]) {
                const auto w = via_base(G, e.v, bb, b.counted);
                if (!w) continue;
                if (!first)
                    first = w;
                else if (!(*w == *first))
                    e.rebase_consistent = false;
            }
        }
        if (first) {
            e.w = *first;
            e.method = qsq ? "qsq" : "qnsq";
        }
    }
    return out;
}

unsigned appendix_twist_count(const FamilyTag &tag, std::uint64_t budget) {
    unsigned total = 0;
    for (const auto &row : twist_rows()) {
        if (!row_applies(row, tag)) continue;
        const Setting s = make_setting(tag, budget);
        for (unsigned v = 0; v < row.variant_count(s); ++v) total += instantiate_row(row, tag, v, budget).built.pred.self_dual ? 1 : 2;
    }
    return total;
}

} // namespace sszeta::families
