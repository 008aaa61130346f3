#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "chebykit/arith.hpp"
#include "chebykit/factorcyc.hpp"
#include "chebykit/solver.hpp"

namespace chebykit::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Json complex_list(const std::vector<Complex>& zs) {
    Json a = Json::array();
    for (auto z : zs) a.push_back(complex_to_json(z));
    return a;
}

std::string field_name(const QuadFieldInfo& f) { return "Q(sqrt(" + f.kernel.get_str() + "))"; }

Json prime_list(const std::vector<Int>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(int_to_json(p));
    return a;
}

std::vector<Rat> rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::string t = trim(s);
    if (!t.empty() && t.front() == '[') {
        for (const auto& v : Json::parse(t)) out.push_back(rat_from_json(v));
        return out;
    }
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    return out;
}

Json witness_json(const TowerWitness& w) {
    Json steps = Json::array();
    for (const auto& s : w.steps)
        steps.push_back({{"kind", s.kind},
                         {"degree", s.degree},
                         {"radicand", complex_to_json(s.radicand)},
                         {"value", complex_to_json(s.value)},
                         {"residual", s.residual}});
    return {{"q", w.q},
            {"t", complex_to_json(w.t)},
            {"target", w.target},
            {"steps", steps},
            {"values", complex_list(w.values)},
            {"max_residual", w.max_residual},
            {"verified", w.verified}};
}

Json d4_json(const D4Report& r) {
    Json f = Json::array();
    for (const auto& [g, m] : r.w_factors) f.push_back({{"factor", poly_to_json(g)}, {"multiplicity", m}});
    Json j = {{"scale", int_to_json(r.scale)},
              {"quartic", poly_to_json(r.quartic)},
              {"resolvent", poly_to_json(r.resolvent)},
              {"resolvent_w", poly_to_json(r.resolvent_w)},
              {"w_factors", f},
              {"separable", r.separable},
              {"irreducible", r.irreducible},
              {"structure", r.structure},
              {"is_d4", r.is_d4},
              {"root_match", r.root_match}};
    if (r.B && r.C) j["biquadratic"] = {{"B", rat_to_json(*r.B)}, {"C", rat_to_json(*r.C)}};
    return j;
}

Json radius_json(const RadiusCheck& r) {
    return {{"converges", r.converges}, {"nu", r.nu}, {"kappa", r.kappa}, {"rule", r.rule}};
}

Json hensel_json(const HenselResult& h) {
    return {{"root", padic_to_json(h.root)}, {"derivative_valuation", h.derivative_valuation}, {"trace", h.trace}};
}

std::pair<long, long> parse_range(const std::string& s) {
    const auto pos = s.find(':', s[0] == '-' ? 1 : 0);
    if (pos == std::string::npos) throw DomainError("range must look like lo:hi");
    return {parse_int(s.substr(0, pos)).get_si(), parse_int(s.substr(pos + 1)).get_si()};
}

// Values shared by all leaf commands; each leaf registers the flags it reads.
struct Opts {
    std::string n = "", k = "", b = "", c = "", t = "", u = "", s = "", p = "", x = "", l = "0", i = "0";
    std::string kind, poly, coeffs, to = "cheby", range = "-50:50", value = "0";
    long prec = 0, modulus = 0, depth = 0, m = 4, count = 500, bound = 50;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool csv = false, oracle = false;
};

template <class T>
T need(const std::string& v, const char* flag, T (*parse)(const std::string&)) {
    if (v.empty()) throw DomainError(std::string("missing ") + flag);
    return parse(v);
}

long need_long(const std::string& v, const char* flag) { return need(v, flag, parse_int).get_si(); }

class Parser {
public:
    Parser() : app_("chebykit: Chebyshev-exponent calculus toolkit") {
        app_.require_subcommand(1);
        app_.set_help_all_flag("--help-all", "Expand all help");
        build();
    }

    CommandResult run(const std::vector<std::string>& argv) {
        std::vector<std::string> store{"chebykit"};
        store.insert(store.end(), argv.begin(), argv.end());
        std::vector<char*> ptrs;
        for (auto& s : store) ptrs.push_back(s.data());
        try {
            app_.parse(static_cast<int>(ptrs.size()), ptrs.data());
        } catch (const CLI::CallForHelp&) {
            return {Status::ok, Json(), help_text()};
        } catch (const CLI::CallForAllHelp&) {
            return {Status::ok, Json(), app_.help("", CLI::AppFormatMode::All)};
        } catch (const CLI::ParseError& e) {
            return {Status::domain_error, Json{{"error", e.what()}, {"usage", help_text()}}, ""};
        }
        if (!action_) return {Status::domain_error, Json{{"error", "unknown command"}, {"usage", help_text()}}, ""};
        try {
            return action_();
        } catch (const DomainError& e) {
            return {Status::domain_error, Json{{"error", e.what()}}, ""};
        } catch (const NonConvergence& e) {
            return {Status::nonconvergence, Json{{"error", e.what()}}, ""};
        } catch (const Undecided& e) {
            return {Status::undecided, Json{{"error", e.what()}}, ""};
        } catch (const Json::exception& e) {
            return {Status::domain_error, Json{{"error", std::string("bad JSON argument: ") + e.what()}}, ""};
        } catch (const std::invalid_argument& e) {
            return {Status::domain_error, Json{{"error", std::string("bad number: ") + e.what()}}, ""};
        }
    }

private:
    std::string help_text() const {
        const CLI::App* deepest = &app_;
        for (bool moved = true; moved;) {
            moved = false;
            for (const CLI::App* sub : deepest->get_subcommands())
                if (sub->parsed()) {
                    deepest = sub;
                    moved = true;
                    break;
                }
        }
        return deepest->help();
    }

    CLI::App* group(const std::string& name, const std::string& desc) {
        CLI::App* g = app_.add_subcommand(name, desc);
        g->require_subcommand(1);
        return g;
    }

    void leaf(CLI::App* g, const std::string& name, const std::string& desc, const std::string& flags,
              std::function<CommandResult()> act) {
        CLI::App* c = g->add_subcommand(name, desc);
        for (char f : flags) {
            switch (f) {
                case 'n': c->add_option("-n", o_.n, "order or index"); break;
                case 'k': c->add_option("-k", o_.k, "exponent"); break;
                case 'b': c->add_option("-b", o_.b, "coefficient b"); break;
                case 'c': c->add_option("-c", o_.c, "coefficient c"); break;
                case 't': c->add_option("-t", o_.t, "parameter t"); break;
                case 'u': c->add_option("-u", o_.u, "parameter u"); break;
                case 's': c->add_option("-s", o_.s, "family selector s"); break;
                case 'p': c->add_option("-p", o_.p, "prime"); break;
                case 'x': c->add_option("-x", o_.x, "argument"); break;
                case 'l': c->add_option("-l", o_.l, "branch index"); break;
                case 'i': c->add_option("-i", o_.i, "index"); break;
                case 'K': c->add_option("--kind", o_.kind, "variant"); break;
                case 'P': c->add_option("--poly", o_.poly, "JSON coefficient array, ascending degree"); break;
                case 'C': c->add_option("--coeffs", o_.coeffs, "comma separated rationals"); break;
                case 'T': c->add_option("--to", o_.to, "cheby | cheb | pow"); break;
                case 'r': c->add_option("--prec", o_.prec, "p-adic precision in digits"); break;
                case 'M': c->add_option("--modulus", o_.modulus, "modulus"); break;
                case 'R': c->add_option("--range", o_.range, "lo:hi"); break;
                case 'j': c->add_option("--jobs", o_.jobs, "worker threads"); break;
                case 'S': c->add_option("--seed", o_.seed, "random seed"); break;
                case 'v': c->add_flag("--csv", o_.csv, "CSV output"); break;
                case 'o': c->add_flag("--oracle", o_.oracle, "also run the local-root oracle"); break;
                case 'd': c->add_option("--depth", o_.depth, "search depth in p-adic digits"); break;
                case 'm': c->add_option("-m", o_.m, "field degree m of GF(2^m)"); break;
                case 'V': c->add_option("--value", o_.value, "field element as an integer bit pattern"); break;
                case 'N': c->add_option("--count", o_.count, "sample size"); break;
                case 'B': c->add_option("--bound", o_.bound, "coefficient bound"); break;
                default: break;
            }
        }
        c->callback([this, act] { action_ = act; });
    }

    long prec() const { return o_.prec > 0 ? o_.prec : default_precision(); }

    static CommandResult ok(Json j) { return {Status::ok, std::move(j), ""}; }

    void build();
    void build_cheb();
    void build_factor();
    void build_branch();
    void build_solve();
    void build_padic();
    void build_unram();

    CLI::App app_;
    Opts o_;
    std::function<CommandResult()> action_;
};

void Parser::build() {
    build_cheb();
    build_factor();
    build_branch();
    build_solve();
    build_padic();
    build_unram();
}

void Parser::build_cheb() {
    CLI::App* g = group("cheb", "Chebyshev polynomials, transforms and evaluation");
    leaf(g, "poly", "coefficients; --kind first (C_n, default), second (S_n), u, fibonacci, lucas, cyclotomic, psi or k-row", "nK", [this] {
        const long n = need_long(o_.n, "-n");
        const std::string kind = o_.kind.empty() ? "first" : o_.kind;
        if (kind == "first") return ok(poly_to_json(cheb_first_kind(n)));
        if (kind == "second") {
            if (n < 0) throw DomainError("second kind needs n >= 0");
            return ok(poly_to_json(cheb_second_kind(n)));
        }
        if (kind == "u") return ok(poly_to_json(u_odd_poly(n)));
        if (kind == "fibonacci" || kind == "lucas") {
            if (n < 0) throw DomainError("Fibonacci and Lucas polynomials need n >= 0");
            auto [f, l] = fib_lucas_polys(n);
            return ok(poly_to_json(kind == "fibonacci" ? f : l));
        }
        if (kind == "cyclotomic") return ok(poly_to_json(cyclotomic(n)));
        if (kind == "psi") return ok(poly_to_json(cheb_cyclotomic(n)));
        if (kind == "k-row") {
            Json row = Json::array();
            for (long m = 0; m <= n; ++m) row.push_back(int_to_json(k_coeff(n, m)));
            return ok(row);
        }
        throw DomainError("unknown --kind " + kind);
    });
    leaf(g, "transform", "the (c) transform, or conversion between the power and Chebyshev bases", "PT", [this] {
        if (o_.poly.empty()) throw DomainError("missing --poly");
        Json in = Json::parse(o_.poly);
        if (o_.to == "cheby") {
            if (!in.empty() && in[0].is_array()) return ok(bipoly_to_json(cheby_transform(bipoly_from_json(in))));
            return ok(poly_to_json(cheby_transform(poly_from_json(in))));
        }
        if (o_.to == "cheb") return ok(expansion_to_json(pow_to_cheb(poly_from_json(in))));
        if (o_.to == "pow") {
            ChebExpansion e = in.is_object() ? expansion_from_json(in) : ChebExpansion{};
            if (in.is_array()) {
                e.constant = in.empty() ? Int(0) : int_from_json(in[0]);
                for (std::size_t k = 1; k < in.size(); ++k) e.add(static_cast<unsigned>(k), int_from_json(in[k]));
            }
            return ok(poly_to_json(cheb_to_pow(e)));
        }
        throw DomainError("--to must be cheby, cheb or pow");
    });
    leaf(g, "eval", "x^(c)n exactly for rational x, or x^(c)k numerically for complex k (--kind second gives S_k and U_k)", "nkxK", [this] {
        if (!o_.k.empty()) {
            const Complex x = need(o_.x, "-x", parse_complex), k = parse_complex(o_.k);
            const std::string kind = o_.kind.empty() ? "first" : o_.kind;
            if (kind == "first") return ok({{"value", complex_to_json(cheb_pow_complex(x, k))}});
            SecondKindValue v = second_kind_num(k, x);
            return ok({{"s", complex_to_json(v.s)}, {"u", complex_to_json(v.u)}});
        }
        const long n = need_long(o_.n, "-n");
        const Rat x = need(o_.x, "-x", parse_rat);
        return ok({{"value", rat_to_json(cheb_first_kind(n).eval(x))}});
    });
    leaf(g, "ladder", "x^(c)n by the pair ladder, over Q or Z/mZ", "nxM", [this] {
        const long n = need_long(o_.n, "-n");
        if (n < 0) throw DomainError("ladder needs n >= 0");
        const auto un = static_cast<std::uint64_t>(n);
        if (o_.modulus != 0) {
            if (o_.modulus < 1) throw DomainError("modulus must be positive");
            ResidueElement x(Int(o_.modulus), need(o_.x, "-x", parse_int));
            return ok({{"value", int_to_json(cheb_pow_ladder(x, un).value())}, {"modulus", o_.modulus}});
        }
        return ok({{"value", rat_to_json(cheb_pow_ladder(need(o_.x, "-x", parse_rat), un))}});
    });
}

void Parser::build_factor() {
    CLI::App* g = group("factor", "factorizations of Chebyshev expressions");
    leaf(g, "diff", "cofactor of x - y in x^(c)n - y^(c)n, or of x - a at -x a", "nx", [this] {
        const long n = need_long(o_.n, "-n");
        if (!o_.x.empty()) return ok(poly_to_json(cofactor_at(n, parse_int(o_.x))));
        return ok(bipoly_to_json(diff_factor(n)));
    });
    leaf(g, "psi", "Chebyshev-cyclotomic polynomial Psi_n", "n",
         [this] { return ok(poly_to_json(cheb_cyclotomic(need_long(o_.n, "-n")))); });
    leaf(g, "u", "U_n as a product of Psi_d over d | n", "n", [this] {
        const long n = need_long(o_.n, "-n");
        FactorList fl = u_psi_factorization(n);
        Json fs = Json::array();
        std::vector<long> ds = divisors_of(n);
        for (std::size_t i = 0; i < fl.factors.size(); ++i)
            fs.push_back({{"order", ds[i]}, {"poly", poly_to_json(fl.factors[i].first)}});
        return ok({{"u", poly_to_json(u_odd_poly(n))}, {"factors", fs}, {"holds", fl.product() == u_odd_poly(n)}});
    });
    leaf(g, "structural", "named factor identities for C_n and S_n", "n", [this] {
        Json out = Json::array();
        for (const auto& id : structural_factorizations(need_long(o_.n, "-n"))) {
            Json fs = Json::array();
            for (const auto& [f, m] : id.rhs.factors) fs.push_back({{"poly", poly_to_json(f)}, {"multiplicity", m}});
            out.push_back({{"name", id.name},
                           {"lhs", poly_to_json(id.lhs)},
                           {"scalar", int_to_json(id.rhs.scalar)},
                           {"factors", fs},
                           {"holds", id.holds()}});
        }
        return ok(out);
    });
}

void Parser::build_branch() {
    CLI::App* g = group("branch", "Chebyshev radicals and their branches");
    leaf(g, "radical", "branch l of the n-th Chebyshev radical of t", "tnl", [this] {
        const Complex t = need(o_.t, "-t", parse_complex);
        const long n = need_long(o_.n, "-n"), l = parse_int(o_.l).get_si();
        const Complex v = branch_radical(t, n, l);
        return ok({{"value", complex_to_json(v)}, {"residual", std::abs(cheb_pow_ladder(v, static_cast<std::uint64_t>(n)) - t)}});
    });
    leaf(g, "combination", "branch i as a combination of the radicals of t and -t", "tni", [this] {
        const Complex t = need(o_.t, "-t", parse_complex);
        const long n = need_long(o_.n, "-n"), i = parse_int(o_.i).get_si();
        const Complex v = branch_combination(t, n, i);
        return ok({{"value", complex_to_json(v)}, {"residual", std::abs(cheb_pow_ladder(v, static_cast<std::uint64_t>(n)) - t)}});
    });
}

void Parser::build_solve() {
    CLI::App* g = group("solve", "equation solving in Chebyshev radicals");
    leaf(g, "cubic", "roots of x^3 + b x + c", "bc", [this] {
        const Rat b = need(o_.b, "-b", parse_rat), c = need(o_.c, "-c", parse_rat);
        auto roots = cubic_cheb_solve(b, c);
        const Complex bd(b.get_d()), cd(c.get_d());
        Json res = Json::array();
        for (auto r : roots) res.push_back(std::abs(r * r * r + bd * r + cd));
        CubicEps e = cubic_eps(b, c);
        return ok({{"roots", complex_list({roots.begin(), roots.end()})},
                   {"residuals", res},
                   {"delta", rat_to_json(e.delta)},
                   {"eps", rat_to_json(e.eps)}});
    });
    leaf(g, "tower", "radical tower witness: --kind cheb (x^(c)q = t) or radical (x^q = t)", "ntK", [this] {
        const long q = need_long(o_.n, "-n");
        const Complex t = need(o_.t, "-t", parse_complex);
        const std::string kind = o_.kind.empty() ? "cheb" : o_.kind;
        if (kind == "cheb") return ok(witness_json(cheb_to_radical_witness(q, t)));
        if (kind == "radical") return ok(witness_json(radical_to_cheb_witness(q, t)));
        throw DomainError("--kind must be cheb or radical");
    });
    leaf(g, "char2", "characteristic-two constructions: --kind unit (c^2+ac+1) or as (w^2+w+t)", "KmV", [this] {
        if (o_.m < 1 || o_.m > 16) throw DomainError("-m must be in 1..16");
        const auto bits = parse_int(o_.value);
        if (bits < 0 || bits >= (Int(1) << static_cast<unsigned>(o_.m))) throw DomainError("--value outside GF(2^m)");
        const GF2mElement a = gf2_element(static_cast<unsigned>(o_.m), static_cast<std::uint32_t>(bits.get_ui()));
        const std::string kind = o_.kind.empty() ? "unit" : o_.kind;
        Char2Solution s;
        GF2mElement check;
        if (kind == "unit") {
            s = char2_unit_quadratic(a);
            GF2mElement aa = s.in_extension ? gf2_embed(a) : a;
            check = s.value * s.value + aa * s.value + gf2_one(s.value.m);
        } else if (kind == "as") {
            s = char2_artin_schreier(a);
            GF2mElement tt = s.in_extension ? gf2_embed(a) : a;
            check = s.value * s.value + s.value + tt;
        } else {
            throw DomainError("--kind must be unit or as");
        }
        return ok({{"input", gf_to_json(a)},
                   {"value", gf_to_json(s.value)},
                   {"in_extension", s.in_extension},
                   {"aux", gf_to_json(s.aux)},
                   {"verified", check.bits == 0}});
    });
    leaf(g, "quartic-resolvent", "degree-12 difference resolvent of x^4 + a1 x^3 + a2 x^2 + a3 x + a4", "C", [this] {
        auto a = rat_list(o_.coeffs);
        if (a.size() != 4) throw DomainError("--coeffs needs a1,a2,a3,a4");
        return ok(d4_json(d4_resolvent(a[0], a[1], a[2], a[3])));
    });
}

void Parser::build_padic() {
    CLI::App* g = group("padic", "p-adic Chebyshev series and root finding");
    auto series = [this](bool u) {
        const Int p = need(o_.p, "-p", parse_int);
        const long N = prec();
        PAdicNumber x = from_rational(need(o_.x, "-x", parse_rat), p, N);
        PAdicNumber k = from_rational(need(o_.k, "-k", parse_rat), p, N);
        RadiusCheck rc = u ? u_radius(x, k) : cheb_pow_radius(x, k);
        PAdicNumber v = u ? padic_u(x, k) : padic_cheb_pow(x, k);
        return ok({{"value", padic_to_json(v)}, {"radius", radius_json(rc)}});
    };
    leaf(g, "eval", "x^(c)k by its series about 2", "pxkr", [series] { return series(false); });
    leaf(g, "u", "U_k(x) by its series about 2", "pxkr", [series] { return series(true); });
    leaf(g, "hensel", "Newton lift of an approximate root -x of --poly", "pxPr", [this] {
        const Int p = need(o_.p, "-p", parse_int);
        if (o_.poly.empty()) throw DomainError("missing --poly");
        std::vector<Rat> c;
        for (const auto& v : Json::parse(o_.poly)) c.push_back(rat_from_json(v));
        PAdicPoly f = PAdicPoly::from_rationals(c, p, prec());
        return ok(hensel_json(hensel_root(f, from_rational(need(o_.x, "-x", parse_rat), p, prec()), prec())));
    });
    leaf(g, "roots", "roots of --poly in Z_p by residue-class refinement", "pPdr", [this] {
        const Int p = need(o_.p, "-p", parse_int);
        if (o_.poly.empty()) throw DomainError("missing --poly");
        std::vector<Rat> c;
        for (const auto& v : Json::parse(o_.poly)) c.push_back(rat_from_json(v));
        PAdicPoly f = PAdicPoly::from_rationals(c, p, prec());
        RootSearchResult r = padic_root_search(f, o_.depth > 0 ? o_.depth : 8, prec());
        Json roots = Json::array(), und = Json::array();
        for (const auto& x : r.roots) roots.push_back(padic_to_json(x));
        for (const auto& x : r.undecided) und.push_back(int_to_json(x));
        Json j = {{"roots", roots}, {"undecided", und}, {"depth", r.depth}, {"complete", r.complete()}};
        if (!r.complete()) return CommandResult{Status::undecided, j, ""};
        return ok(j);
    });
}

void Parser::build_unram() {
    CLI::App* g = group("unram", "unramified cubic and quartic extensions of quadratic fields");
    auto report = [](const RamificationReport& r) {
        Status s = r.verdict == "undecided" ? Status::undecided : Status::ok;
        return CommandResult{s, report_to_json(r), ""};
    };
    leaf(g, "cubic", "criterion and local oracle for x^3 + b x + c", "bc", [this, report] {
        return report(cubic_report({need(o_.b, "-b", parse_rat), need(o_.c, "-c", parse_rat)}));
    });
    leaf(g, "scan", "congruence scan of x^3 + b x + c over a range of c", "bMRjvo", [this] {
        const Int b = need(o_.b, "-b", parse_int);
        auto [lo, hi] = parse_range(o_.range);
        CongruenceScan sc = congruence_scan(b, o_.modulus, lo, hi, o_.oracle, o_.jobs);
        if (o_.csv) {
            std::ostringstream os;
            os << "c,delta,kernel,verdict,passes" << (o_.oracle ? ",agreed" : "") << "\n";
            for (const auto& r : sc.rows) {
                os << r.c.get_str() << "," << r.delta.get_str() << "," << r.kernel.get_str() << ",\"" << r.verdict
                   << "\"," << (r.passes ? 1 : 0);
                if (o_.oracle) os << "," << (r.agreed && *r.agreed ? 1 : 0);
                os << "\n";
            }
            return CommandResult{Status::ok, Json(), os.str()};
        }
        Json rows = Json::array();
        for (const auto& r : sc.rows) {
            Json row = {{"c", int_to_json(r.c)},
                        {"delta", rat_to_json(r.delta)},
                        {"kernel", int_to_json(r.kernel)},
                        {"verdict", r.verdict},
                        {"passes", r.passes}};
            if (r.agreed) row["agreed"] = *r.agreed;
            rows.push_back(row);
        }
        return ok({{"b", int_to_json(sc.b)},
                   {"modulus", sc.modulus},
                   {"minimal_modulus", sc.minimal_modulus},
                   {"passing_residues", sc.passing_residues},
                   {"mixed_classes", sc.mixed_classes},
                   {"skipped", sc.skipped},
                   {"rows", rows}});
    });
    leaf(g, "family", "one-parameter families: --kind b2t (x^3 + b x + b^2 t) or ut (x^3 + s u x + t u^2)", "Kbtsu",
         [this, report] {
             const std::string kind = o_.kind.empty() ? "b2t" : o_.kind;
             if (kind == "b2t") {
                 FamilyB2T f = family_b2t(need(o_.b, "-b", parse_int), need(o_.t, "-t", parse_int));
                 CommandResult r = report(f.report);
                 r.payload["d"] = int_to_json(f.d);
                 r.payload["field_kernel"] = int_to_json(f.field_kernel);
                 return r;
             }
             if (kind == "ut")
                 return report(cubic_ut_family(need_long(o_.s, "-s"), need(o_.u, "-u", parse_int),
                                               need(o_.t, "-t", parse_int)));
             throw DomainError("--kind must be b2t or ut");
         });
    leaf(g, "quartic", "finite and real place criteria for x^4 + b x^2 + c", "bc", [this, report] {
        return report(quartic_d4_criterion(need(o_.b, "-b", parse_rat), need(o_.c, "-c", parse_rat)));
    });
    leaf(g, "cycle4", "the x^4 - x^3 - t x^2 - x + 1 family", "t", [this] {
        Cycle4Report r = quartic_cycle4_family(need(o_.t, "-t", parse_int));
        return ok({{"t", int_to_json(r.t)},
                   {"identities_hold", r.identities_hold},
                   {"gcd_bounds", r.gcd_bounds},
                   {"coprime_to_30", r.coprime_to_30},
                   {"residue_class", r.residue_class},
                   {"field_radicand", int_to_json(r.field_radicand)},
                   {"field", "Q(sqrt(" + r.field_kernel.get_str() + "))"},
                   {"discriminant", int_to_json(r.discriminant)},
                   {"discriminant_matches", r.discriminant_matches},
                   {"structure", r.structure}});
    });
    leaf(g, "b3", "the mod |b|^3 congruence test for x^3 + b x + c", "bc", [this] {
        B3Check r = b3_congruence_check(need(o_.b, "-b", parse_int), need(o_.c, "-c", parse_int));
        return ok({{"holds", r.holds},
                   {"zero_branch", r.zero_branch},
                   {"second_branch", r.second_branch},
                   {"rhs", int_to_json(r.rhs)},
                   {"degenerate", r.degenerate}});
    });
    leaf(g, "sample", "criterion versus oracle on a seeded sample of admissible cubics", "NSBj", [this] {
        if (o_.count < 0) throw DomainError("--count must be nonnegative");
        auto forms = sample_admissible_cubics(static_cast<std::size_t>(o_.count), o_.seed, o_.bound);
        CriterionSweep sw = criterion_oracle_sweep(forms, o_.jobs);
        Json dis = Json::array();
        for (const auto& d : sw.disagreements)
            dis.push_back({{"b", rat_to_json(d.form.b)},
                           {"c", rat_to_json(d.form.c)},
                           {"prime", int_to_json(d.prime)},
                           {"conditions", d.conditions},
                           {"oracle", d.oracle}});
        return ok({{"cubics", sw.cubics},
                   {"seed", o_.seed},
                   {"decided_primes", sw.decided_primes},
                   {"undecided_primes", sw.undecided_primes},
                   {"disagreements", dis}});
    });
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::domain_error: return "domain-error";
        case Status::nonconvergence: return "nonconvergence";
        case Status::undecided: return "undecided";
    }
    return "unknown";
}

std::string CommandResult::output() const {
    if (!text.empty()) return text;
    Json j = payload;
    if (status != Status::ok && j.is_object()) j["status"] = status_name(status);
    return j.dump(2) + "\n";
}

CommandResult run(const std::vector<std::string>& argv) {
    Parser parser;
    return parser.run(argv);
}

long default_precision() {
    if (const char* env = std::getenv("CHEBYKIT_PREC")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kPadicDefaultPrecision;
}

Int parse_int(const std::string& s) {
    std::string t = trim(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    Int v;
    if (t.empty() || v.set_str(t, 10) != 0) throw DomainError("not an integer: " + s);
    return v;
}

Rat parse_rat(const std::string& s) {
    std::string t = trim(s);
    const auto slash = t.find('/');
    if (slash != std::string::npos) {
        Int d = parse_int(t.substr(slash + 1));
        if (d == 0) throw DomainError("zero denominator: " + s);
        Rat q(parse_int(t.substr(0, slash)), d);
        q.canonicalize();
        return q;
    }
    const auto dot = t.find('.');
    if (dot == std::string::npos) return Rat(parse_int(t));
    std::string frac = t.substr(dot + 1);
    std::string whole = t.substr(0, dot);
    const bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.find_first_not_of("0123456789") != std::string::npos) throw DomainError("not a rational: " + s);
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rat q(frac.empty() ? Int(0) : parse_int(frac), scale);
    q.canonicalize();
    Rat w(parse_int(whole));
    return neg ? Rat(w - q) : Rat(w + q);
}

Complex parse_complex(const std::string& s) {
    std::string t = trim(s);
    if (!t.empty() && t.front() == '[') return complex_from_json(Json::parse(t));
    const auto comma = t.find(',');
    auto num = [&](const std::string& v) {
        std::size_t used = 0;
        const double d = std::stod(trim(v), &used);
        if (used != trim(v).size()) throw DomainError("not a number: " + v);
        return d;
    };
    if (comma == std::string::npos) return {num(t), 0.0};
    return {num(t.substr(0, comma)), num(t.substr(comma + 1))};
}

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw DomainError("expected an integer in JSON");
}

Json rat_to_json(const Rat& v) {
    if (v.get_den() == 1) return int_to_json(v.get_num());
    return Json(v.get_str());
}

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    return Rat(int_from_json(j));
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw DomainError("complex values are [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json poly_to_json(const IntPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(int_to_json(c));
    return a;
}

IntPolynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("polynomials are JSON integer arrays");
    std::vector<Int> c;
    for (const auto& v : j) c.push_back(int_from_json(v));
    return IntPolynomial(std::move(c));
}

Json bipoly_to_json(const BiPolynomial& p) {
    Json a = Json::array();
    for (const auto& row : p.rows()) {
        Json r = Json::array();
        for (const auto& c : row) r.push_back(int_to_json(c));
        a.push_back(r);
    }
    return a;
}

BiPolynomial bipoly_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("bivariate polynomials are JSON matrices");
    std::vector<std::vector<Int>> rows;
    std::size_t width = 0;
    for (const auto& r : j) {
        std::vector<Int> row;
        for (const auto& v : r) row.push_back(int_from_json(v));
        width = std::max(width, row.size());
        rows.push_back(std::move(row));
    }
    for (auto& r : rows) r.resize(width, Int(0));
    return BiPolynomial(std::move(rows));
}

Json expansion_to_json(const ChebExpansion& e) {
    Json c = Json::object();
    for (const auto& [k, v] : e.coeffs) c[std::to_string(k)] = int_to_json(v);
    return {{"constant", int_to_json(e.constant)}, {"coeffs", c}};
}

ChebExpansion expansion_from_json(const Json& j) {
    ChebExpansion e;
    e.constant = int_from_json(j.at("constant"));
    for (const auto& [k, v] : j.at("coeffs").items()) e.add(static_cast<unsigned>(std::stoul(k)), int_from_json(v));
    return e;
}

Json padic_to_json(const PAdicNumber& x) {
    Json j = {{"p", int_to_json(x.p)}};
    if (x.is_exact_zero()) {
        j["val"] = "inf";
        j["digits"] = Json::array();
        j["prec"] = "inf";
        return j;
    }
    j["val"] = x.val;
    j["digits"] = x.digits();
    j["prec"] = x.prec;
    return j;
}

PAdicNumber padic_from_json(const Json& j) {
    PAdicNumber x;
    x.p = int_from_json(j.at("p"));
    if (j.at("val").is_string()) return padic_exact_zero(x.p);
    x.val = j.at("val").get<long>();
    x.prec = j.at("prec").get<long>();
    const auto& d = j.at("digits");
    x.unit = 0;
    for (std::size_t i = d.size(); i-- > 0;) x.unit = x.unit * x.p + d[i].get<long>();
    return x;
}

Json gf_to_json(const GF2mElement& a) {
    std::ostringstream os;
    os << "0x" << std::hex << gf2m_modulus(a.m);
    return {{"m", a.m}, {"bits", a.bits}, {"modulus", os.str()}};
}

GF2mElement gf_from_json(const Json& j) {
    const auto m = j.at("m").get<unsigned>();
    const auto bits = j.at("bits").get<std::uint32_t>();
    if (j.contains("modulus")) {
        const auto mod = std::stoul(j.at("modulus").get<std::string>(), nullptr, 16);
        if (mod != gf2m_modulus(m)) throw DomainError("GF(2^m) element uses an unknown modulus");
    }
    return gf2_element(m, bits);
}

Json report_to_json(const RamificationReport& r) {
    Json primes = Json::array();
    for (const auto& p : r.primes) {
        Json j = {{"prime", int_to_json(p.prime)},
                  {"ramified_in_quadratic", p.ramified_in_quadratic},
                  {"conditions", p.conditions},
                  {"condition", p.condition},
                  {"criterion", p.criterion},
                  {"oracle", p.oracle},
                  {"agreed", p.agreed},
                  {"flagged", p.flagged},
                  {"note", p.note}};
        j["oracle_unramified"] = p.oracle_unramified ? Json(*p.oracle_unramified) : Json();
        primes.push_back(j);
    }
    Json j = {{"polynomial", r.polynomial},
              {"field", r.field.complete ? field_name(r.field) : "undecided"},
              {"quadratic",
               {{"radicand", rat_to_json(r.field.radicand)},
                {"kernel", int_to_json(r.field.kernel)},
                {"discriminant", int_to_json(r.field.discriminant)},
                {"ramified_primes", prime_list(r.field.ramified_primes)},
                {"complete", r.field.complete}}},
              {"primes", primes},
              {"criterion_verdict", r.criterion_verdict},
              {"oracle_verdict", r.oracle_verdict},
              {"verdict", r.verdict},
              {"agreed", r.agreed},
              {"notes", r.notes}};
    j["claim"] = r.claim ? Json(*r.claim) : Json();
    return j;
}

RamificationReport report_from_json(const Json& j) {
    RamificationReport r;
    r.polynomial = j.at("polynomial").get<std::string>();
    const Json& q = j.at("quadratic");
    r.field.radicand = rat_from_json(q.at("radicand"));
    r.field.kernel = int_from_json(q.at("kernel"));
    r.field.discriminant = int_from_json(q.at("discriminant"));
    for (const auto& p : q.at("ramified_primes")) r.field.ramified_primes.push_back(int_from_json(p));
    r.field.complete = q.at("complete").get<bool>();
    for (const auto& pj : j.at("primes")) {
        PrimeReport p;
        p.prime = int_from_json(pj.at("prime"));
        p.ramified_in_quadratic = pj.at("ramified_in_quadratic").get<bool>();
        p.conditions = pj.at("conditions").get<std::vector<bool>>();
        p.condition = pj.at("condition").get<int>();
        p.criterion = pj.at("criterion").get<std::string>();
        p.oracle = pj.at("oracle").get<std::string>();
        if (!pj.at("oracle_unramified").is_null()) p.oracle_unramified = pj.at("oracle_unramified").get<bool>();
        p.agreed = pj.at("agreed").get<bool>();
        p.flagged = pj.at("flagged").get<bool>();
        p.note = pj.at("note").get<std::string>();
        r.primes.push_back(p);
    }
    r.criterion_verdict = j.at("criterion_verdict").get<std::string>();
    r.oracle_verdict = j.at("oracle_verdict").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.agreed = j.at("agreed").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (!j.at("claim").is_null()) r.claim = j.at("claim").get<bool>();
    return r;
}

}  // namespace chebykit::cli
