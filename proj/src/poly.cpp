#include "sszeta/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace sszeta::poly {

Polynomial::Polynomial(Field f, std::vector<FieldElement> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto &c : c_)
        if (c.field() != f_) fail(Errc::ContextMismatch, "polynomial coefficients from different fields");
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement &c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldElement &c, unsigned degree) {
    std::vector<FieldElement> v(degree + 1, FieldElement::zero(c.field()));
    v[degree] = c;
    return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::from_ints(const Field &f, const std::vector<std::int64_t> &c) {
    std::vector<FieldElement> v;
    v.reserve(c.size());
    for (auto x : c) v.emplace_back(f, x);
    return Polynomial(f, std::move(v));
}

FieldElement Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : FieldElement::zero(f_);
}

FieldElement Polynomial::leading() const {
    if (c_.empty()) fail(Errc::ZeroInput, "leading coefficient of zero polynomial");
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto &c : r.c_) c = -c;
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
    if (f_ != o.f_) fail(Errc::ContextMismatch, "polynomials over different fields");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement::zero(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
    if (f_ != o.f_) fail(Errc::ContextMismatch, "polynomials over different fields");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement::zero(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.f_ != b.f_) fail(Errc::ContextMismatch, "polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.f_);
    std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.f_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.f_, std::move(r));
}

Polynomial operator*(const FieldElement &c, const Polynomial &a) {
    Polynomial r = a;
    for (auto &x : r.c_) x = c * x;
    r.normalize();
    return r;
}

DivMod divmod(const Polynomial &a, const Polynomial &b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (a.field() != b.field()) fail(Errc::ContextMismatch, "polynomials over different fields");
    const Field &f = a.field();
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    std::vector<FieldElement> rem = a.coeffs();
    const auto &bc = b.coeffs();
    const FieldElement li = b.leading().inverse();
    const std::size_t db = bc.size() - 1;
    std::vector<FieldElement> quot(rem.size() - db, FieldElement::zero(f));
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const FieldElement c = rem[k] * li;
        quot[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= c * bc[i];
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator/(const Polynomial &a, const Polynomial &b) { return divmod(a, b).quot; }
Polynomial operator%(const Polynomial &a, const Polynomial &b) { return divmod(a, b).rem; }

bool operator==(const Polynomial &a, const Polynomial &b) {
    if (a.c_.size() != b.c_.size()) return false;
    if (a.c_.empty()) return true;
    return a.f_ == b.f_ && a.c_ == b.c_;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial(f_);
    std::vector<FieldElement> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(FieldElement(f_, static_cast<std::int64_t>(i % f_->p())) * c_[i]);
    return Polynomial(f_, std::move(r));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return *this;
    return leading().inverse() * *this;
}

FieldElement Polynomial::operator()(const FieldElement &x) const {
    FieldElement acc = FieldElement::zero(f_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Polynomial Polynomial::map(const Field &to, const std::function<FieldElement(const FieldElement &)> &fn) const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto &c : c_) r.push_back(fn(c));
    return Polynomial(to, std::move(r));
}

Polynomial Polynomial::frobenius(unsigned m) const {
    return map(f_, [m](const FieldElement &a) { return ff::frobenius_power(a, m); });
}

Polynomial Polynomial::reversed(unsigned d) const {
    if (degree() > static_cast<int>(d)) fail(Errc::DegreeMismatch, "reversal degree below polynomial degree");
    std::vector<FieldElement> r(d + 1, FieldElement::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
    return Polynomial(f_, std::move(r));
}

namespace {

std::string coeff_string(const FieldElement &c) {
    if (c.in_prime_field()) return std::to_string(c.coords()[0]);
    return c.to_string();
}

} // namespace

std::string Polynomial::to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i].is_one();
        if (i == 0) {
            os << coeff_string(c_[i]);
            continue;
        }
        if (!unit) os << coeff_string(c_[i]) << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

// ---------------------------------------------------------------- Euclid

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const Polynomial &a, const Polynomial &b) {
    const Field &f = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(FieldElement::one(f)), s1(f);
    Polynomial t0(f), t1 = Polynomial::constant(FieldElement::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FieldElement li = r0.leading().inverse();
    return {li * r0, li * s0, li * t0};
}

Polynomial powmod(const Polynomial &base, const mpz_class &e, const Polynomial &m) {
    if (e < 0) fail(Errc::DegreeMismatch, "negative exponent in powmod");
    Polynomial b = base % m;
    Polynomial r = Polynomial::constant(FieldElement::one(m.field())) % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
    }
    return r;
}

bool is_separable(const Polynomial &f) {
    if (f.degree() < 1) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

// ---------------------------------------------------------------- ordering

bool element_less(const FieldElement &a, const FieldElement &b) {
    return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
}

bool poly_less(const Polynomial &a, const Polynomial &b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        const auto &x = a.coeffs()[i];
        const auto &y = b.coeffs()[i];
        if (element_less(x, y)) return true;
        if (element_less(y, x)) return false;
    }
    return false;
}

// ---------------------------------------------------------------- shapes

unsigned FactorShape::total() const {
    unsigned t = 0;
    for (auto [d, r] : parts) t += d * r;
    return t;
}

unsigned FactorShape::count() const {
    unsigned t = 0;
    for (auto [d, r] : parts) t += r;
    return t;
}

unsigned FactorShape::count_of(unsigned d) const {
    auto it = parts.find(d);
    return it == parts.end() ? 0 : it->second;
}

std::string FactorShape::to_string() const {
    std::ostringstream os;
    for (auto [d, r] : parts) {
        os << "(" << d << ")";
        if (r > 1) os << "^" << r;
    }
    return os.str();
}

FactorShape FactorShape::parse(std::string_view s) {
    FactorShape out;
    std::size_t i = 0;
    auto read_int = [&]() {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail(Errc::ParseError, "bad shape: " + std::string(s));
        unsigned v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return v;
    };
    while (i < s.size()) {
        if (s[i] == ' ') {
            ++i;
            continue;
        }
        if (s[i] != '(') fail(Errc::ParseError, "bad shape: " + std::string(s));
        ++i;
        unsigned d = read_int();
        if (i >= s.size() || s[i] != ')') fail(Errc::ParseError, "bad shape: " + std::string(s));
        ++i;
        unsigned r = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            r = read_int();
        }
        out.parts[d] += r;
    }
    return out;
}

// ---------------------------------------------------------------- factoring

namespace {

FieldElement pth_root(const FieldElement &a) {
    return ff::frobenius_power(a, a.field()->n() - 1);
}

Polynomial x_minus_x_power(const Polynomial &xq, const Field &f) { return xq - Polynomial::x(f); }

// Deterministic stream of splitting candidates of degree < deg f.
class Candidates {
public:
    Candidates(const Field &f, int deg) : f_(f), deg_(deg), rng_(0x5eedf00dULL) {
        small_ = 0;
        if (f->q() <= 64) small_ = f->q_u64();
        else small_ = 64;
    }

    Polynomial next() {
        if (j_ < small_ && deg_ > 1) {
            FieldElement c = small_element(j_++);
            return Polynomial::x(f_) + Polynomial::constant(c);
        }
        std::vector<FieldElement> v;
        std::uniform_int_distribution<std::uint64_t> dist(0, f_->p() - 1);
        for (int i = 0; i < deg_; ++i) {
            FieldElement::Coeffs c(f_->n());
            for (auto &x : c) x = static_cast<ff::Residue>(dist(rng_));
            v.emplace_back(f_, std::move(c));
        }
        return Polynomial(f_, std::move(v));
    }

private:
    FieldElement small_element(std::uint64_t j) const {
        FieldElement::Coeffs c(f_->n(), 0);
        for (unsigned i = f_->n(); i-- > 0 && j;) {
            c[i] = static_cast<ff::Residue>(j % f_->p());
            j /= f_->p();
        }
        return FieldElement(f_, std::move(c));
    }

    Field f_;
    int deg_;
    std::mt19937_64 rng_;
    std::uint64_t small_;
    std::uint64_t j_ = 0;
};

Polynomial splitting_map(const Polynomial &t, const Polynomial &f, unsigned d) {
    const Field &F = f.field();
    if (F->p() == 2) {
        // absolute trace map t + t^2 + ... + t^(2^(nd-1)) mod f
        const unsigned steps = F->n() * d;
        Polynomial cur = t % f, acc = cur;
        for (unsigned i = 1; i < steps; ++i) {
            cur = (cur * cur) % f;
            acc += cur;
        }
        return acc;
    }
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), F->q().get_mpz_t(), d);
    e = (e - 1) / 2;
    return powmod(t, e, f) - Polynomial::constant(FieldElement::one(F));
}

void edf_rec(const Polynomial &f, unsigned d, Candidates &cand, std::vector<Polynomial> &out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    for (;;) {
        Polynomial t = cand.next();
        if (t.degree() < 1) continue;
        Polynomial g = gcd(f, splitting_map(t, f, d));
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf_rec(g, d, cand, out);
            edf_rec(f / g, d, cand, out);
            return;
        }
    }
}

} // namespace

std::vector<Factor> squarefree_decomposition(const Polynomial &f0) {
    std::vector<Factor> out;
    if (f0.degree() < 1) return out;
    const Polynomial f = f0.monic();
    const Field &F = f.field();
    const unsigned p = static_cast<unsigned>(F->p());
    Polynomial c = gcd(f, f.derivative());
    Polynomial w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial z = w / y;
        if (z.degree() > 0) out.push_back({z, i});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        std::vector<FieldElement> r;
        for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) r.push_back(pth_root(c.coeffs()[k]));
        for (auto &[g, m] : squarefree_decomposition(Polynomial(F, std::move(r)))) out.push_back({g, m * p});
    }
    return out;
}

std::vector<std::pair<unsigned, Polynomial>> distinct_degree(const Polynomial &f0) {
    std::vector<std::pair<unsigned, Polynomial>> out;
    Polynomial f = f0.monic();
    const Field &F = f.field();
    Polynomial h = Polynomial::x(F) % f;
    for (unsigned d = 1; f.degree() >= 2 * static_cast<int>(d); ++d) {
        h = powmod(h, F->q(), f);
        Polynomial g = gcd(f, x_minus_x_power(h, F));
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(static_cast<unsigned>(f.degree()), f);
    return out;
}

std::vector<Polynomial> equal_degree(const Polynomial &f, unsigned d) {
    std::vector<Polynomial> out;
    if (f.degree() < 1) return out;
    Candidates cand(f.field(), f.degree());
    edf_rec(f.monic(), d, cand, out);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

FactorShape factor_shape(const Polynomial &f) {
    if (f.degree() < 1) fail(Errc::ConstantInput, "factor shape of a constant");
    if (!is_separable(f)) fail(Errc::NotSeparable, f.to_string() + " is not separable");
    FactorShape s;
    for (auto &[d, g] : distinct_degree(f)) s.parts[d] += static_cast<unsigned>(g.degree()) / d;
    return s;
}

std::vector<Factor> factor_full(const Polynomial &f) {
    if (f.degree() < 1) fail(Errc::ConstantInput, "factorization of a constant");
    std::vector<Factor> out;
    for (auto &[g, m] : squarefree_decomposition(f))
        for (auto &[d, h] : distinct_degree(g))
            for (auto &irr : equal_degree(h, d)) out.push_back({irr, m});
    std::sort(out.begin(), out.end(), [](const Factor &a, const Factor &b) {
        if (poly_less(a.f, b.f)) return true;
        if (poly_less(b.f, a.f)) return false;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

bool is_irreducible(const Polynomial &f) {
    if (f.degree() < 1) fail(Errc::ConstantInput, "irreducibility of a constant");
    if (!is_separable(f)) return false;
    auto dd = distinct_degree(f);
    return dd.size() == 1 && static_cast<int>(dd[0].first) == f.degree();
}

std::vector<FieldElement> roots_in_field(const Polynomial &f) {
    if (f.is_zero()) fail(Errc::ZeroInput, "roots of the zero polynomial");
    std::vector<FieldElement> out;
    if (f.degree() < 1) return out;
    const Field &F = f.field();
    Polynomial m = f.monic();
    Polynomial g = gcd(m, x_minus_x_power(powmod(Polynomial::x(F), F->q(), m), F));
    for (auto &lin : equal_degree(g, 1)) out.push_back(-lin.coeffs()[0]);
    std::sort(out.begin(), out.end(), element_less);
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(const Field &f, std::string_view s, char var) : f_(f), s_(s), var_(var) {}

    Polynomial parse() {
        Polynomial acc(f_);
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                error("expected '+' or '-'");
            }
            Polynomial t = term();
            acc = sign > 0 ? acc + t : acc - t;
            first = false;
            skip();
        }
        if (first) error("empty polynomial");
        return acc;
    }

private:
    Polynomial term() {
        FieldElement c = FieldElement::one(f_);
        bool have_coeff = false;
        if (peek() == '[' || std::isdigit(static_cast<unsigned char>(peek()))) {
            c = coefficient();
            have_coeff = true;
            skip();
            if (peek() == '*') {
                get();
                skip();
            } else if (peek() != var_) {
                return Polynomial::constant(c);
            }
        }
        if (peek() != var_) {
            if (have_coeff) return Polynomial::constant(c);
            error("expected term");
        }
        get();
        skip();
        unsigned e = 1;
        if (peek() == '^') {
            get();
            skip();
            e = static_cast<unsigned>(integer());
        }
        return Polynomial::monomial(c, e);
    }

    FieldElement coefficient() {
        if (peek() == '[') {
            get();
            std::vector<std::int64_t> coords;
            for (;;) {
                skip();
                int sign = 1;
                if (peek() == '-') {
                    get();
                    sign = -1;
                }
                coords.push_back(sign * integer());
                skip();
                char ch = get();
                if (ch == ']') break;
                if (ch != ',') error("expected ',' or ']'");
            }
            return FieldElement::from_coords(f_, coords);
        }
        return FieldElement(f_, integer());
    }

    std::int64_t integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected integer");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > (std::int64_t{1} << 50)) error("integer too large");
        }
        return v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void error(const std::string &msg) const {
        fail(Errc::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    Field f_;
    std::string_view s_;
    char var_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const Field &f, std::string_view text, char var) { return Parser(f, text, var).parse(); }

} // namespace sszeta::poly
