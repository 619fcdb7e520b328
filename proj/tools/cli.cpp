#include "cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sszeta/crypto.hpp"
#include "sszeta/families.hpp"
#include "sszeta/zeta.hpp"

namespace sszeta::cli {

namespace {

using nlohmann::json;
using curve::CurveModel;
using families::FamilyTag;
using zeta::WeilCoeffs;
using ff::Field;
using ff::FieldElement;
using poly::Polynomial;

// Integers that fit in 64 bits go out as numbers, larger ones as decimal strings.
json num(const mpz_class &v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

struct Globals {
    std::uint64_t p = 0;
    unsigned n = 1;
    bool json_out = false;
    std::uint64_t budget = zeta::kDefaultBudget;
    std::uint64_t seed = 0;
};

Field field_of(const Globals &g) {
    if (g.p == 0) fail(Errc::ParseError, "--p is required");
    if (!ff::is_prime(g.p)) fail(Errc::NotPrime, std::to_string(g.p) + " is not prime");
    if (g.n == 0) fail(Errc::ParseError, "--n must be positive");
    return ff::ctx_new(g.p, g.n);
}

// Scalars use the polynomial syntax: "3", "-1", "[1,2]".
FieldElement parse_element(const Field &k, const std::string &text) {
    const Polynomial c = poly::parse_polynomial(k, text);
    if (c.degree() > 0) fail(Errc::ParseError, "expected a field element, got '" + text + "'");
    return c.coeff(0);
}

zeta::ZetaOptions zeta_options(const Globals &g, bool force_count = false) {
    zeta::ZetaOptions o;
    o.budget = g.budget;
    o.seed = g.seed;
    o.force_count = force_count;
    return o;
}

json zeta_json(const zeta::ZetaReport &rep) {
    json j = {{"supersingular", true}, {"r", num(rep.w.r)}, {"s", num(rep.w.s)}, {"q", num(rep.w.q)},
              {"weil", rep.w.to_string()}, {"J_order", num(rep.w.jacobian_order())}};
    j["rk2"] = rep.rk2 ? json(*rep.rk2) : json(nullptr);
    j["shape"] = rep.shape ? json(rep.shape->to_string()) : json(nullptr);
    j["method"] = rep.method;
    return j;
}

void print_zeta_text(std::ostream &out, const zeta::ZetaReport &rep) {
    out << "weil     " << rep.w.to_string() << "\n"
        << "r, s     " << rep.w.r << ", " << rep.w.s << "\n"
        << "#J(k)    " << rep.w.jacobian_order() << "\n";
    if (rep.shape) out << "shape    " << rep.shape->to_string() << "\n";
    if (rep.rk2) out << "rk2      " << *rep.rk2 << "\n";
    out << "method   " << rep.method << "\n";
}

int cmd_ss_test(const Globals &g, const std::string &curve_text, std::ostream &out, std::ostream &err) {
    const CurveModel C = curve::parse_curve(field_of(g), curve_text);
    // y^2 + y = f with deg f = 5 is always supersingular
    const bool ss = C.is_char2() || zeta::is_supersingular(C);
    if (g.json_out)
        out << json{{"supersingular", ss}}.dump() << "\n";
    else
        out << (ss ? "supersingular" : "not supersingular") << "\n";
    if (ss) return 0;
    err << errc_name(Errc::NotSupersingular) << "\n";
    return 2;
}

int cmd_zeta(const Globals &g, const std::string &curve_text, bool force_count, std::ostream &out) {
    const CurveModel C = curve::parse_curve(field_of(g), curve_text);
    const auto rep = zeta::zeta_report(C, zeta_options(g, force_count));
    if (g.json_out)
        out << zeta_json(rep).dump() << "\n";
    else
        print_zeta_text(out, rep);
    return 0;
}

int cmd_crypto(const Globals &g, std::optional<std::string> curve_text, std::optional<std::string> r, std::optional<std::string> s,
               std::ostream &out) {
    const Field k = field_of(g);
    WeilCoeffs w;
    if (curve_text) {
        if (r || s) fail(Errc::ParseError, "give either --curve or --r/--s");
        w = zeta::zeta_report(curve::parse_curve(k, *curve_text), zeta_options(g)).w;
    } else {
        if (!r || !s) fail(Errc::ParseError, "crypto-exp needs --curve or both --r and --s");
        try {
            w = WeilCoeffs{mpz_class(*r), mpz_class(*s), k->q()};
        } catch (const std::invalid_argument &) {
            fail(Errc::ParseError, "--r and --s must be integers");
        }
    }
    const auto c = crypto::crypto_exponent(w, g.p);
    const auto rep = crypto::verify_exponent(w, g.p, c);
    // q^c is an integer unless c is a half-integer and q is not a square
    std::optional<std::size_t> bits;
    if ((g.n * c.twice) % 2 == 0) bits = mpz_sizeinbase(crypto::embedding_field_size(w, g.p).get_mpz_t(), 2);
    if (g.json_out) {
        json primes = json::array();
        for (const auto &l : rep.large_primes) primes.push_back(num(l));
        json j = {{"c_A", c.to_string()}, {"weil", w.to_string()}, {"large_primes", primes}, {"verified", rep.verified}};
        j["embedding_field_bits"] = bits ? json(*bits) : json(nullptr);
        if (rep.inconclusive) j["inconclusive"] = true;
        out << j.dump() << "\n";
    } else {
        out << "c_A      " << c.to_string() << "\n";
        if (bits) out << "bits     " << *bits << "\n";
        out << "primes  ";
        for (const auto &l : rep.large_primes) out << " " << l;
        out << "\n" << "verified " << (rep.verified ? "yes" : rep.inconclusive ? "inconclusive" : "no") << "\n";
    }
    return 0;
}

int cmd_twists(const Globals &g, const std::string &family, std::optional<std::string> a, std::optional<std::string> b, std::ostream &out) {
    const Field k = field_of(g);
    const auto kind = curve::parse_family(family);
    std::vector<FamilyTag> tags;
    switch (kind) {
    case curve::FamilyKind::D8:
    case curve::FamilyKind::D12:
        if (b) fail(Errc::ParseError, "--b only applies to the biquadratic family");
        if (a)
            tags.push_back(kind == curve::FamilyKind::D8 ? FamilyTag::d8(parse_element(k, *a)) : FamilyTag::d12(parse_element(k, *a)));
        else
            tags = families::find_ss_parameters(kind, k, g.budget);
        break;
    case curve::FamilyKind::Biquadratic:
        if (a.has_value() != b.has_value()) fail(Errc::ParseError, "the biquadratic family needs both --a and --b");
        if (a)
            tags.push_back(FamilyTag::biquadratic(parse_element(k, *a), parse_element(k, *b)));
        else
            tags = families::find_ss_parameters(kind, k, g.budget);
        break;
    default:
        if (a || b) fail(Errc::ParseError, family + " takes no parameters");
        tags.push_back(FamilyTag::rigid(kind, k));
    }
    if (tags.empty()) fail(Errc::NotSupersingular, "no supersingular member of " + family + " over " + k->to_string());
    json all = json::array();
    for (const auto &tag : tags) {
        const auto cat = families::twist_catalogue(tag, g.budget);
        json list = json::array();
        if (!g.json_out) out << tag.to_string() << " over " << k->to_string() << ": " << cat.size() << " twists\n";
        for (const auto &e : cat) {
            list.push_back({{"v", e.v},
                            {"curve", e.C.to_string()},
                            {"r", num(e.w.r)},
                            {"s", num(e.w.s)},
                            {"self_dual", e.self_dual},
                            {"aut", e.aut},
                            {"method", e.method},
                            {"rebase_consistent", e.rebase_consistent}});
            if (!g.json_out)
                out << "  v=" << e.v << "  (" << e.w.r << ", " << e.w.s << ")  aut " << e.aut << (e.self_dual ? "  self-dual" : "") << "  "
                    << e.C.to_string() << "\n";
        }
        all.push_back({{"family", tag.to_string()}, {"twists", list}});
    }
    if (g.json_out) out << all.dump() << "\n";
    return 0;
}

json row_json(const families::RowReport &rep) {
    const auto &inst = rep.inst;
    const auto &pred = inst.built.pred;
    return {{"table", inst.row->table},
            {"row", inst.row->row},
            {"variant", inst.variant},
            {"p", inst.tag.k->p()},
            {"n", inst.tag.k->n()},
            {"family", inst.tag.to_string()},
            {"equation", inst.built.C.to_string()},
            {"predicted", {{"r", num(pred.w.r)}, {"s", num(pred.w.s)}, {"sd", pred.self_dual}, {"aut", pred.aut}}},
            {"oracle", {{"r", num(rep.oracle.w.r)}, {"s", num(rep.oracle.w.s)}, {"sd", rep.oracle.self_dual}, {"aut", rep.oracle.aut}}},
            {"pass", rep.pass()}};
}

int cmd_verify_appendix(const Globals &g, const std::vector<std::uint64_t> &primes, std::uint64_t max_q, std::ostream &out) {
    json all = json::array();
    unsigned passed = 0, total = 0;
    for (auto p : primes) {
        if (!ff::is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
        for (unsigned n : {1u, 2u}) {
            if (n == 2 ? p > max_q / p : p > max_q) continue;
            const Field k = ff::ctx_new(p, n);
            for (const auto &tag : families::supersingular_members(k, g.budget))
                for (const auto &row : families::twist_rows()) {
                    if (!families::row_applies(row, tag)) continue;
                    const auto s = families::make_setting(tag, g.budget);
                    for (unsigned v = 0; v < row.variant_count(s); ++v) {
                        const auto rep = families::verify_row(families::instantiate_row(row, tag, v, g.budget), g.budget);
                        ++total;
                        passed += rep.pass();
                        if (g.json_out) {
                            all.push_back(row_json(rep));
                        } else {
                            out << (rep.pass() ? "PASS" : "FAIL") << "  T" << row.table << "." << row.row;
                            if (row.variant_count(s) > 1) out << "/" << v;
                            out << "  " << k->to_string() << "  " << tag.to_string() << "  (" << rep.oracle.w.r << ", " << rep.oracle.w.s
                                << ")  aut " << rep.oracle.aut << "\n";
                        }
                    }
                }
        }
    }
    if (g.json_out)
        out << all.dump() << "\n";
    else
        out << passed << "/" << total << " rows pass\n";
    return passed == total ? 0 : 2;
}

// Coefficient vectors in lexicographic index order.
template <class F> void for_each_tuple(const Field &k, unsigned len, F &&fn) {
    const std::uint64_t q = k->q_u64();
    std::vector<std::uint64_t> idx(len, 0);
    std::vector<FieldElement> c(len);
    for (;;) {
        for (unsigned i = 0; i < len; ++i) c[i] = ff::element_at(k, idx[i]);
        fn(c);
        unsigned i = len;
        while (i > 0 && ++idx[i - 1] == q) idx[--i] = 0;
        if (i == 0) return;
    }
}

int cmd_scan(const Globals &g, const std::string &cls, std::ostream &out) {
    const Field k = field_of(g);
    const mpz_class q = k->q();
    mpz_class models;
    if (cls == "char2") {
        if (g.p != 2) fail(Errc::WrongCharacteristic, "class char2 needs p = 2");
        models = (q - 1) * q * q;
    } else if (cls == "deg5" || cls == "deg6") {
        if (g.p == 2) fail(Errc::WrongCharacteristic, "class " + cls + " needs odd p");
        mpz_pow_ui(models.get_mpz_t(), q.get_mpz_t(), cls == "deg5" ? 5 : 6);
    } else {
        fail(Errc::UnknownClass, "unknown model class '" + cls + "'");
    }
    if (models > g.budget) fail(Errc::BudgetExceeded, "class " + cls + " has " + models.get_str() + " models");
    const auto opt = zeta_options(g);
    json all = json::array();
    auto emit = [&](const CurveModel &C) {
        const auto rep = zeta::zeta_report(C, opt);
        if (g.json_out) {
            json j = zeta_json(rep);
            j["curve"] = C.to_string();
            all.push_back(std::move(j));
        } else {
            out << C.to_string() << "  (" << rep.w.r << ", " << rep.w.s << ")  " << (rep.shape ? rep.shape->to_string() : "") << "  " << rep.method
                << "\n";
        }
    };
    if (cls == "char2") {
        const FieldElement zero = FieldElement::zero(k);
        for_each_tuple(k, 3, [&](const std::vector<FieldElement> &c) {
            if (!c[0].is_zero()) emit(CurveModel::artin_schreier(c[0], c[1], c[2], zero));
        });
    } else {
        const unsigned deg = cls == "deg5" ? 5 : 6;
        for_each_tuple(k, deg, [&](const std::vector<FieldElement> &c) {
            std::vector<FieldElement> coeffs(c.rbegin(), c.rend());
            coeffs.push_back(FieldElement::one(k));
            const Polynomial f(k, std::move(coeffs));
            if (!poly::is_separable(f)) return;
            const CurveModel C = CurveModel::odd(f);
            if (zeta::is_supersingular(C)) emit(C);
        });
    }
    if (g.json_out) out << all.dump() << "\n";
    return 0;
}

int usage_code(Errc e) {
    switch (e) {
    case Errc::ParseError:
    case Errc::NotPrime:
    case Errc::UnknownFamily:
    case Errc::UnknownClass:
    case Errc::SizeExceeded: return 1;
    default: return 2;
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Zeta functions, exponents and twists of supersingular genus-2 curves", "sszeta"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--p", g.p, "characteristic");
    app.add_option("--n", g.n, "extension degree")->capture_default_str();
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--budget", g.budget, "enumeration budget")->envname("SS_ZETA_BUDGET")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized tests")->capture_default_str();

    std::string curve_text, family, cls = "deg5", p_list;
    std::optional<std::string> opt_curve, opt_r, opt_s, opt_a, opt_b;
    bool force_count = false;
    std::uint64_t max_q = 1000000;

    auto *ss = app.add_subcommand("ss-test", "supersingularity test");
    ss->add_option("--curve", curve_text, "e.g. \"y^2 = x^5 - 1\"")->required();
    auto *zt = app.add_subcommand("zeta", "Weil polynomial");
    zt->add_option("--curve", curve_text)->required();
    zt->add_flag("--force-count", force_count, "count points instead of using the tables");
    auto *cr = app.add_subcommand("crypto-exp", "cryptographic exponent");
    cr->add_option("--curve", opt_curve);
    cr->add_option("--r", opt_r);
    cr->add_option("--s", opt_s);
    auto *tw = app.add_subcommand("twists", "twist catalogue of a family");
    tw->add_option("--family", family, "x5-1 | x5-x | x6-1 | d8 | d12 | biquadratic")->required();
    tw->add_option("--a", opt_a);
    tw->add_option("--b", opt_b);
    auto *va = app.add_subcommand("verify-appendix", "check every atlas row against point counts");
    va->add_option("--p-list", p_list, "comma-separated primes")->required();
    va->add_option("--max-q", max_q)->capture_default_str();
    auto *sc = app.add_subcommand("scan", "report every supersingular model of a class");
    sc->add_option("--class", cls, "deg5 | deg6 | char2")->capture_default_str();
    for (auto *s : {ss, zt, cr, tw, va, sc}) s->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (*ss) return cmd_ss_test(g, curve_text, out, err);
        if (*zt) return cmd_zeta(g, curve_text, force_count, out);
        if (*cr) return cmd_crypto(g, opt_curve, opt_r, opt_s, out);
        if (*tw) return cmd_twists(g, family, opt_a, opt_b, out);
        if (*va) {
            std::vector<std::uint64_t> primes;
            std::stringstream ls(p_list);
            for (std::string item; std::getline(ls, item, ',');) {
                try {
                    primes.push_back(std::stoull(item));
                } catch (const std::exception &) {
                    fail(Errc::ParseError, "bad prime '" + item + "'");
                }
            }
            return cmd_verify_appendix(g, primes, max_q, out);
        }
        return cmd_scan(g, cls, out);
    } catch (const Error &e) {
        err << e.what() << "\n";
        return usage_code(e.code());
    }
}

} // namespace sszeta::cli
