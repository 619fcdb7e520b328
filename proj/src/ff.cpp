#include "sszeta/ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace sszeta {

std::string_view errc_name(Errc e) noexcept {
    switch (e) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::ModelMismatch: return "ModelMismatch";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::WrongModel: return "WrongModel";
    case Errc::NoRationalPoints: return "NoRationalPoints";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InconsistentCounts: return "InconsistentCounts";
    case Errc::RowNotFound: return "RowNotFound";
    case Errc::NonIntegerRank: return "NonIntegerRank";
    case Errc::NotSupersingular: return "NotSupersingular";
    case Errc::AmbiguityUnresolved: return "AmbiguityUnresolved";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::UnclassifiedOrder: return "UnclassifiedOrder";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::NotSimpleOrUncovered: return "NotSimpleOrUncovered";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::NoParameterFound: return "NoParameterFound";
    case Errc::RowNotApplicable: return "RowNotApplicable";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace sszeta

namespace sszeta::ff {

namespace {

using Vec = std::vector<std::uint64_t>;

void trim(Vec &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::int64_t tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) fail(Errc::DivisionByZero, "residue not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

// Prime-field polynomial helpers, used only for modulus search.
Vec pmul(const Vec &a, const Vec &b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

Vec pmod(Vec a, const Vec &m, std::uint64_t p) {
    trim(a);
    std::uint64_t li = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        std::uint64_t c = a.back() * li % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        trim(a);
    }
    return a;
}

Vec pgcd(Vec a, Vec b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Vec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Vec ppowmod(Vec base, std::uint64_t e, const Vec &m, std::uint64_t p) {
    Vec r{1};
    base = pmod(base, m, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), m, p);
        e >>= 1;
        if (e) base = pmod(pmul(base, base, p), m, p);
    }
    return r;
}

bool prime_poly_irreducible(const Vec &g, std::uint64_t p) {
    const std::size_t n = g.size() - 1;
    if (n <= 1) return n == 1;
    if (g[0] == 0) return false;
    Vec h{0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = ppowmod(h, p, g, p);
        Vec t = h;
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        if (pgcd(g, t, p).size() > 1) return false;
    }
    return true;
}

std::vector<Residue> smallest_irreducible(std::uint64_t p, unsigned n) {
    if (n == 1) return {0, 1};
    std::vector<std::uint64_t> digits(n, 0);
    for (;;) {
        // lexicographic order with the constant coefficient most significant
        unsigned pos = n;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            if (pos == 0) fail(Errc::SizeExceeded, "modulus search exhausted");
        }
        if (digits[0] == 0) {
            digits[0] = 1;
            std::fill(digits.begin() + 1, digits.end(), 0);
        }
        Vec g(digits.begin(), digits.end());
        g.push_back(1);
        if (prime_poly_irreducible(g, p)) return {g.begin(), g.end()};
    }
}

struct Registry {
    std::mutex mu;
    std::map<std::pair<std::uint64_t, unsigned>, Field> fields;
    std::map<std::pair<const FieldCtx *, const FieldCtx *>, std::unique_ptr<Embedding>> embeddings;
    std::map<const FieldCtx *, std::unique_ptr<LogTable>> tables;
};

Registry &registry() {
    static Registry r;
    return r;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field make_field(std::uint64_t p, unsigned n, std::vector<Residue> modulus) {
    auto ctx = std::make_shared<FieldCtx>();
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->modulus_ = std::move(modulus);
    ctx->neg_low_.resize(n);
    for (unsigned i = 0; i < n; ++i) ctx->neg_low_[i] = static_cast<Residue>((p - ctx->modulus_[i]) % p);
    mpz_ui_pow_ui(ctx->q_.get_mpz_t(), p, n);
    return ctx;
}

Field extension_field(std::uint64_t p, unsigned n) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n == 0) fail(Errc::DegreeMismatch, "extension degree must be positive");
    if (p >= (std::uint64_t{1} << 24)) fail(Errc::SizeExceeded, "characteristic too large");
    auto &reg = registry();
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.fields.find({p, n});
        if (it != reg.fields.end()) return it->second;
    }
    Field f = make_field(p, n, smallest_irreducible(p, n));
    std::lock_guard lock(reg.mu);
    auto [it, inserted] = reg.fields.emplace(std::make_pair(p, n), f);
    return it->second;
}

Field ctx_new(std::uint64_t p, unsigned n, std::uint64_t max_q) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (n == 0) fail(Errc::DegreeMismatch, "extension degree must be positive");
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, n);
    if (q > mpz_class(static_cast<unsigned long>(max_q)))
        fail(Errc::SizeExceeded, std::to_string(p) + "^" + std::to_string(n) + " exceeds the field size bound");
    return extension_field(p, n);
}

mpz_class FieldCtx::sqrt_q() const {
    if (n_ % 2) fail(Errc::DegreeMismatch, "q is not a square");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p_, n_ / 2);
    return r;
}

std::uint64_t FieldCtx::q_u64() const {
    if (!q_.fits_ulong_p()) fail(Errc::SizeExceeded, "field too large for machine-word indexing");
    return q_.get_ui();
}

std::string FieldCtx::to_string() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (n_ > 1) os << "^" << n_;
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- elements

FieldElement::FieldElement(Field f) : f_(std::move(f)), c_(f_->n(), 0) {}

FieldElement::FieldElement(Field f, std::int64_t v) : FieldElement(std::move(f)) {
    std::int64_t p = static_cast<std::int64_t>(f_->p());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    c_[0] = static_cast<Residue>(r);
}

FieldElement::FieldElement(Field f, Coeffs c) : f_(std::move(f)), c_(std::move(c)) {
    if (c_.size() != f_->n()) fail(Errc::DegreeMismatch, "coordinate vector has wrong length");
}

FieldElement FieldElement::from_coords(const Field &f, std::span<const std::int64_t> c) {
    if (c.size() > f->n()) fail(Errc::DegreeMismatch, "too many coordinates for " + f->to_string());
    FieldElement r(f);
    std::int64_t p = static_cast<std::int64_t>(f->p());
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::int64_t v = c[i] % p;
        if (v < 0) v += p;
        r.c_[i] = static_cast<Residue>(v);
    }
    return r;
}

FieldElement FieldElement::generator(const Field &f) {
    FieldElement r(f);
    if (f->n() == 1) {
        // x mod x = 0 in the degree-one convention
        return r;
    }
    r.c_[1] = 1;
    return r;
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Residue v) { return v == 0; });
}

bool FieldElement::is_one() const noexcept {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](Residue v) { return v == 0; });
}

bool FieldElement::in_prime_field() const noexcept {
    return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](Residue v) { return v == 0; });
}

void FieldElement::check_same(const FieldElement &o) const {
    if (f_ != o.f_) fail(Errc::ContextMismatch, "operands live in different fields");
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    const std::uint64_t p = f_->p();
    for (auto &v : r.c_)
        if (v) v = static_cast<Residue>(p - v);
    return r;
}

FieldElement &FieldElement::operator+=(const FieldElement &o) {
    check_same(o);
    const std::uint64_t p = f_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::uint64_t s = std::uint64_t{c_[i]} + o.c_[i];
        c_[i] = static_cast<Residue>(s >= p ? s - p : s);
    }
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &o) {
    check_same(o);
    const std::uint64_t p = f_->p();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::uint64_t s = std::uint64_t{c_[i]} + p - o.c_[i];
        c_[i] = static_cast<Residue>(s >= p ? s - p : s);
    }
    return *this;
}

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
    a.check_same(b);
    const FieldCtx &F = *a.f_;
    const std::uint64_t p = F.p();
    const unsigned n = F.n();
    FieldElement r(a.f_);
    if (n == 1) {
        r.c_[0] = static_cast<Residue>(std::uint64_t{a.c_[0]} * b.c_[0] % p);
        return r;
    }
    boost::container::small_vector<std::uint64_t, 16> acc(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t ai = a.c_[i];
        if (!ai) continue;
        for (unsigned j = 0; j < n; ++j) acc[i + j] += ai * b.c_[j];
    }
    const auto &neg = F.neg_low();
    for (unsigned k = 2 * n - 2; k >= n; --k) {
        const std::uint64_t t = acc[k] % p;
        if (!t) continue;
        for (unsigned i = 0; i < n; ++i) acc[k - n + i] += t * neg[i];
        // keep partial sums well below 2^64
        if ((k & 7) == 0)
            for (unsigned i = 0; i < n; ++i) acc[k - n + i] %= p;
    }
    for (unsigned i = 0; i < n; ++i) r.c_[i] = static_cast<Residue>(acc[i] % p);
    return r;
}

FieldElement &FieldElement::operator*=(const FieldElement &o) { return *this = *this * o; }

FieldElement &FieldElement::operator/=(const FieldElement &o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const FieldElement &a, const FieldElement &b) {
    if (a.f_ != b.f_) return false;
    return std::equal(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    const FieldCtx &F = *f_;
    const std::uint64_t p = F.p();
    if (F.n() == 1) {
        FieldElement r(f_);
        r.c_[0] = static_cast<Residue>(inv_mod(c_[0], p));
        return r;
    }
    // extended Euclid on (a, modulus) over GF(p)
    Vec r0(F.modulus().begin(), F.modulus().end());
    Vec r1(c_.begin(), c_.end());
    trim(r1);
    Vec s0{}, s1{1};
    while (r1.size() > 1) {
        // r0 = qq * r1 + rem
        Vec rem = r0;
        Vec qq(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
        const std::uint64_t li = inv_mod(r1.back(), p);
        while (rem.size() >= r1.size()) {
            const std::uint64_t c = rem.back() * li % p;
            const std::size_t shift = rem.size() - r1.size();
            qq[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = (rem[shift + i] + (p - c) * r1[i]) % p;
            trim(rem);
        }
        Vec ns = pmul(qq, s1, p);
        Vec t(std::max(s0.size(), ns.size()), 0);
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::uint64_t x = i < s0.size() ? s0[i] : 0;
            std::uint64_t y = i < ns.size() ? ns[i] : 0;
            t[i] = (x + p - y) % p;
        }
        trim(t);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(t);
    }
    const std::uint64_t c = inv_mod(r1[0], p);
    FieldElement r(f_);
    for (std::size_t i = 0; i < s1.size() && i < F.n(); ++i) r.c_[i] = static_cast<Residue>(s1[i] * c % p);
    return r;
}

FieldElement FieldElement::pow(const mpz_class &e) const {
    if (e < 0) return inverse().pow(mpz_class(-e));
    FieldElement r = one(f_);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
    }
    return r;
}

FieldElement FieldElement::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = one(f_);
    FieldElement b = *this;
    auto u = static_cast<std::uint64_t>(e);
    while (u) {
        if (u & 1) r = r * b;
        u >>= 1;
        if (u) b = b * b;
    }
    return r;
}

std::uint64_t FieldElement::index() const {
    const std::uint64_t p = f_->p();
    f_->q_u64();
    std::uint64_t idx = 0;
    for (Residue v : c_) idx = idx * p + v;
    return idx;
}

std::string FieldElement::to_string() const {
    if (!f_) return "<null>";
    if (f_->n() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << "]";
    return os.str();
}

FieldElement element_at(const Field &f, std::uint64_t idx) {
    if (idx >= f->q_u64()) fail(Errc::SizeExceeded, "enumeration index out of range");
    FieldElement r(f);
    FieldElement::Coeffs c(f->n(), 0);
    for (unsigned i = f->n(); i-- > 0;) {
        c[i] = static_cast<Residue>(idx % f->p());
        idx /= f->p();
    }
    return FieldElement(f, std::move(c));
}

FieldElement arith(const FieldElement &a, const FieldElement &b, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Pow: {
        // exponent read from the enumeration index of b
        return a.pow(mpz_class(static_cast<unsigned long>(b.index())));
    }
    }
    return a;
}

FieldElement frobenius_power(const FieldElement &a, unsigned m) {
    const unsigned n = a.field()->n();
    m %= n;
    FieldElement r = a;
    const auto p = static_cast<std::int64_t>(a.field()->p());
    for (unsigned i = 0; i < m; ++i) r = r.pow(p);
    return r;
}

FieldElement frobenius(const FieldElement &a, unsigned m) {
    if (m == 0 || a.field()->n() % m) fail(Errc::DegreeMismatch, "frobenius degree must divide the field degree");
    return frobenius_power(a, m);
}

int residue_symbol(const FieldElement &a, const mpz_class &m) {
    if (a.is_zero()) fail(Errc::ZeroInput, "residue symbol of zero");
    if (m <= 0) fail(Errc::DegreeMismatch, "residue symbol needs a positive exponent");
    const mpz_class qm1 = a.field()->q() - 1;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), qm1.get_mpz_t());
    return a.pow(mpz_class(qm1 / g)).is_one() ? 1 : -1;
}

bool is_square(const FieldElement &a) {
    if (a.is_zero() || a.field()->p() == 2) return true;
    return residue_symbol(a, 2) == 1;
}

FieldElement trace_norm(const FieldElement &a, unsigned m, TraceOrNorm which) {
    const unsigned n = a.field()->n();
    if (m == 0 || n % m) fail(Errc::DegreeMismatch, "subfield degree must divide the field degree");
    FieldElement acc = a;
    FieldElement cur = a;
    for (unsigned j = 1; j < n / m; ++j) {
        cur = frobenius_power(cur, m);
        if (which == TraceOrNorm::Trace)
            acc += cur;
        else
            acc *= cur;
    }
    return acc;
}

Residue absolute_trace(const FieldElement &a) { return trace(a, 1).coords()[0]; }

FieldElement first_nonsquare(const Field &f) {
    if (f->p() == 2) fail(Errc::WrongCharacteristic, "every element is a square in characteristic 2");
    for (std::uint64_t i = 1;; ++i) {
        FieldElement e = element_at(f, i);
        if (!is_square(e)) return e;
    }
}

// ---------------------------------------------------------------- embeddings

std::optional<FieldElement> Embedding::preimage(const FieldElement &b) const {
    if (b.field() != to_) fail(Errc::ContextMismatch, "preimage: element not in target field");
    const std::uint64_t p = to_->p();
    const unsigned a = from_->n();
    std::vector<Residue> v(b.coords().begin(), b.coords().end());
    std::vector<std::uint64_t> coeff(a, 0);
    // eliminate using the stored echelon rows
    for (unsigned r = 0; r < a; ++r) {
        const unsigned col = pivots_[r];
        const std::uint64_t c = v[col];
        if (!c) continue;
        const auto &row = echelon_[r];
        for (std::size_t j = 0; j < row.size(); ++j) v[j] = static_cast<Residue>((v[j] + (p - c) * row[j]) % p);
        for (unsigned i = 0; i < a; ++i) coeff[i] = (coeff[i] + c * transform_[r][i]) % p;
    }
    if (std::any_of(v.begin(), v.end(), [](Residue x) { return x != 0; })) return std::nullopt;
    FieldElement::Coeffs c(a);
    for (unsigned i = 0; i < a; ++i) c[i] = static_cast<Residue>(coeff[i]);
    return FieldElement(from_, std::move(c));
}

FieldElement Embedding::operator()(const FieldElement &a) const {
    if (a.field() != from_) fail(Errc::ContextMismatch, "embedding applied to element of another field");
    FieldElement r = FieldElement::zero(to_);
    for (unsigned i = 0; i < from_->n(); ++i)
        if (a.coords()[i]) r += powers_[i] * FieldElement(to_, static_cast<std::int64_t>(a.coords()[i]));
    return r;
}

const Embedding &embedding(const Field &from, const Field &to) {
    auto &reg = registry();
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.embeddings.find({from.get(), to.get()});
        if (it != reg.embeddings.end()) return *it->second;
    }
    auto e = std::make_unique<Embedding>(from, to);
    std::lock_guard lock(reg.mu);
    auto [it, inserted] = reg.embeddings.emplace(std::make_pair(from.get(), to.get()), std::move(e));
    return *it->second;
}

// ---------------------------------------------------------------- log tables

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

LogTable::LogTable(Field f) : f_(std::move(f)) {
    const std::uint64_t q = f_->q_u64();
    if (q > (std::uint64_t{1} << 22)) fail(Errc::SizeExceeded, "field too large for log tables");
    q_ = static_cast<std::uint32_t>(q);
    const auto factors = prime_factors(q - 1);
    FieldElement g;
    for (std::uint64_t idx = 1; idx < q; ++idx) {
        FieldElement e = element_at(f_, idx);
        bool primitive = true;
        for (auto r : factors)
            if (e.pow(static_cast<std::int64_t>((q - 1) / r)).is_one()) {
                primitive = false;
                break;
            }
        if (primitive) {
            g = e;
            break;
        }
    }
    log_of_index_.assign(q_, zero());
    index_of_log_.assign(q_ - 1, 0);
    FieldElement cur = FieldElement::one(f_);
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        const auto idx = static_cast<std::uint32_t>(cur.index());
        log_of_index_[idx] = i;
        index_of_log_[i] = idx;
        cur *= g;
    }
    std::uint64_t top = 1;
    for (unsigned i = 1; i < f_->n(); ++i) top *= f_->p();
    zech_.assign(q_ - 1, zero());
    for (std::uint32_t d = 0; d + 1 < q_; ++d) {
        const std::uint64_t idx = index_of_log_[d];
        const std::uint64_t c0 = idx / top;
        const std::uint64_t next = c0 + 1 < f_->p() ? idx + top : idx - c0 * top;
        zech_[d] = log_of_index_[next];
    }
    minus_one_ = f_->p() == 2 ? 0 : (q_ - 1) / 2;
    if (f_->p() == 2) {
        trace_bits_.assign(q_, false);
        for (Code a = 0; a < q_; ++a) {
            Code acc = zero(), cur2 = a;
            for (unsigned i = 0; i < f_->n(); ++i) {
                acc = add(acc, cur2);
                cur2 = mul(cur2, cur2);
            }
            trace_bits_[a] = acc == one();
        }
    }
}

LogTable::Code LogTable::encode(const FieldElement &a) const {
    if (a.field() != f_) fail(Errc::ContextMismatch, "log table of another field");
    return log_of_index_[a.index()];
}

FieldElement LogTable::decode(Code c) const {
    if (c == zero()) return FieldElement::zero(f_);
    return element_at(f_, index_of_log_[c]);
}

const LogTable &log_table(const Field &f) {
    auto &reg = registry();
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.tables.find(f.get());
        if (it != reg.tables.end()) return *it->second;
    }
    auto t = std::make_unique<LogTable>(f);
    std::lock_guard lock(reg.mu);
    auto [it, inserted] = reg.tables.emplace(f.get(), std::move(t));
    return *it->second;
}

} // namespace sszeta::ff
