#include "chebykit/unram.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "chebykit/arith.hpp"
#include "chebykit/factorcyc.hpp"
#include "chebykit/padic.hpp"

namespace chebykit {

namespace {

constexpr long kOracleGuard = 40;
constexpr double kSearchBudget = 1e7;

long vq(const Rat& q, const Int& p) {
    auto v = valuation(q, p);
    return v ? *v : PAdicNumber::kInf;
}

Int mod_4(const Int& a) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), 4);
    return r;
}

bool small_abs(const Rat& q, const Int& p) { return q == 0 || vq(q, p) > 0; }

Rat rpow(const Rat& q, long e) {
    Rat r = 1;
    if (e >= 0)
        for (long i = 0; i < e; ++i) r *= q;
    else
        for (long i = 0; i < -e; ++i) r /= q;
    return r;
}

long ceil_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

std::string join_primes(const std::vector<Int>& ps) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? ", " : "") << ps[i].get_str();
    os << "}";
    return os.str();
}

// Primes dividing numerator or denominator of any of the given nonzero rationals.
std::optional<std::set<Int>> support(const std::vector<Rat>& qs) {
    std::set<Int> out;
    for (const auto& q : qs) {
        if (q == 0) continue;
        for (const Int& n : {Int(q.get_num()), Int(q.get_den())}) {
            if (abs(n) <= 1) continue;
            Factorization f = factorize(n);
            if (!f.complete()) return std::nullopt;
            for (const auto& [p, e] : f.primes) out.insert(p);
        }
    }
    return out;
}

IntPolynomial integral_cubic(const CubicForm& f) {
    Int d = f.b.get_den();
    Int dc = f.c.get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), dc.get_mpz_t());
    Rat bb = f.b * d, cc = f.c * d;
    bb.canonicalize();
    cc.canonicalize();
    return IntPolynomial(std::vector<Int>{cc.get_num(), bb.get_num(), 0, d});
}

std::string verdict_from(const std::vector<Int>& failing, const std::string& prefix = "ramified at ") {
    if (failing.empty()) return "unramified";
    return prefix + join_primes(failing);
}

// Primes of the candidate set where the p-reduced discriminant is divisible by p.
struct CubicPrimes {
    std::vector<Int> primes;
    bool complete = true;
};

CubicPrimes cubic_primes(const CubicForm& f) {
    CubicPrimes out;
    auto sup = support({f.delta(), f.b, f.c});
    if (!sup) {
        out.complete = false;
        return out;
    }
    for (const auto& p : *sup) {
        ReducedForm r = wp_reduce(f.b, f.c, p);
        if (vq(r.form.delta(), p) > 0) out.primes.push_back(p);
    }
    return out;
}

// Newton polygon of the reduced form is a single segment of slope -k/3, 3 not dividing k.
bool totally_ramified_np(const CubicForm& reduced, const Int& p) {
    const long vc = vq(reduced.c, p), vb = vq(reduced.b, p);
    if (vc == PAdicNumber::kInf || vc % 3 == 0) return false;
    return vb == PAdicNumber::kInf || 3 * vb >= 2 * vc;
}

void oracle_at(const CubicForm& f, PrimeReport& pr) {
    const Int& p = pr.prime;
    ReducedForm r = wp_reduce(f.b, f.c, p);
    const long vd = vq(r.form.delta(), p);
    long depth = std::max<long>(vd + 3, 2);
    const double lp = std::log(p.get_d());
    depth = std::min<long>(depth, static_cast<long>(std::floor(std::log(kSearchBudget) / lp + 1e-9)));
    if (depth < 1) {
        pr.oracle = "undecided";
        pr.note = "prime too large for residue search";
        return;
    }
    PAdicPoly poly = PAdicPoly::from_rationals({r.form.c, r.form.b, 0, 1}, p, depth + kOracleGuard);
    RootSearchResult rs = padic_root_search(poly, depth, depth + 8);
    if (!rs.roots.empty()) {
        pr.oracle = "root";
        pr.oracle_unramified = true;
    } else if (totally_ramified_np(r.form, p)) {
        pr.oracle = "totally ramified";
        pr.oracle_unramified = false;
    } else if (!rs.complete()) {
        pr.oracle = "undecided";
    } else if (pr.ramified_in_quadratic) {
        // inertia contains a transposition; no fixed root means it is all of S3
        pr.oracle = "no root";
        pr.oracle_unramified = false;
    } else {
        pr.oracle = "undecided";
        pr.note = "no local root; inert and ramified cases not separated";
    }
}

}  // namespace

std::string CubicForm::to_string() const {
    std::ostringstream os;
    os << "x^3 + (" << b.get_str() << ")*x + (" << c.get_str() << ")";
    return os.str();
}

QuadFieldInfo quad_field(const Rat& radicand) {
    if (radicand == 0) throw DomainError("quadratic field of radicand 0");
    QuadFieldInfo q;
    q.radicand = radicand;
    auto k = squarefree_kernel(radicand);
    if (!k) {
        q.complete = false;
        return q;
    }
    q.kernel = *k;
    Int m = mod_4(q.kernel);
    q.discriminant = m == 1 ? q.kernel : Int(4 * q.kernel);
    Factorization fk = factorize(q.kernel == 1 || q.kernel == -1 ? Int(1) : Int(q.kernel));
    for (const auto& [p, e] : fk.primes)
        if (p != 2) q.ramified_primes.push_back(p);
    if (m != 1) q.ramified_primes.insert(q.ramified_primes.begin(), Int(2));
    return q;
}

ReducedForm wp_reduce(const Rat& b, const Rat& c, const Int& p) {
    if (!is_probable_prime(p)) throw DomainError("wp_reduce needs a prime");
    if (b == 0 && c == 0) throw DomainError("wp_reduce of the zero form");
    long j = LONG_MIN;
    if (b != 0) j = std::max(j, ceil_div(-vq(b, p), 2));
    if (c != 0) j = std::max(j, ceil_div(-vq(c, p), 3));
    const Rat k = rpow(Rat(p), j);
    ReducedForm r;
    r.j = j;
    r.form = {b * k * k, c * k * k * k};
    r.form.b.canonicalize();
    r.form.c.canonicalize();
    return r;
}

std::array<bool, 3> cubic_conditions(const CubicForm& f, const Int& p) {
    const Rat b3 = f.b * f.b * f.b;
    const Rat d = f.delta();
    return {small_abs(f.c * f.c / b3, p), small_abs(d / (27 * b3), p),
            small_abs((d + 2 * b3) * (d + 2 * b3) / (27 * b3 * b3), p)};
}

void check_cubic(const CubicForm& f) {
    if (f.b == 0) throw DomainError("cubic form needs b != 0");
    auto roots = rational_roots(integral_cubic(f));
    if (!roots.empty()) throw DomainError("cubic is reducible: rational root " + roots.front().get_str());
    if (is_square(f.delta())) throw DomainError("discriminant is a square (cyclic cubic)");
}

RamificationReport cubic_criterion(const CubicForm& f) {
    check_cubic(f);
    RamificationReport rep;
    rep.polynomial = f.to_string();
    rep.field = quad_field(f.delta());
    CubicPrimes cp = cubic_primes(f);
    if (!cp.complete || !rep.field.complete) {
        rep.criterion_verdict = rep.verdict = "undecided";
        rep.notes.push_back("discriminant not fully factored");
        return rep;
    }
    std::vector<Int> failing;
    for (const auto& p : cp.primes) {
        PrimeReport pr;
        pr.prime = p;
        pr.ramified_in_quadratic =
            std::find(rep.field.ramified_primes.begin(), rep.field.ramified_primes.end(), p) != rep.field.ramified_primes.end();
        auto cond = cubic_conditions(f, p);
        pr.conditions.assign(cond.begin(), cond.end());
        for (int i = 0; i < 3; ++i)
            if (cond[static_cast<std::size_t>(i)] && !pr.condition) pr.condition = i + 1;
        pr.criterion = pr.condition ? "unramified" : "ramified";
        if (!pr.condition) failing.push_back(p);
        rep.primes.push_back(pr);
    }
    rep.criterion_verdict = rep.verdict = verdict_from(failing);
    return rep;
}

RamificationReport cubic_oracle(const CubicForm& f) {
    RamificationReport rep = cubic_criterion(f);
    if (rep.criterion_verdict == "undecided") {
        rep.oracle_verdict = "undecided";
        return rep;
    }
    std::vector<Int> ramified;
    bool undecided = false;
    for (auto& pr : rep.primes) {
        oracle_at(f, pr);
        if (!pr.oracle_unramified) undecided = true;
        else if (!*pr.oracle_unramified) ramified.push_back(pr.prime);
    }
    if (!ramified.empty()) rep.oracle_verdict = verdict_from(ramified);
    else rep.oracle_verdict = undecided ? "undecided" : "unramified";
    return rep;
}

RamificationReport cubic_report(const CubicForm& f) {
    RamificationReport rep = cubic_oracle(f);
    for (auto& pr : rep.primes) {
        if (!pr.oracle_unramified) continue;
        pr.agreed = (pr.condition != 0) == *pr.oracle_unramified;
        if (!pr.agreed) rep.agreed = false;
    }
    if (!rep.agreed) rep.notes.push_back("criterion and local oracle disagree");
    if (rep.oracle_verdict != "undecided") rep.verdict = rep.oracle_verdict;
    return rep;
}

std::vector<CubicForm> sample_admissible_cubics(std::size_t count, std::uint64_t seed, long bound) {
    if (bound < 1) throw DomainError("sample bound must be positive");
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    auto draw = [&] { return static_cast<long>(rng() % span) - bound; };
    std::vector<CubicForm> out;
    std::set<std::pair<long, long>> seen;
    while (out.size() < count) {
        const long b = draw(), c = draw();
        if (b == 0 || !seen.insert({b, c}).second) continue;
        bool reduced = true;
        for (long p = 2; p * p <= std::labs(b); ++p)
            if (is_prime_small(p) && b % (p * p) == 0 && c % (p * p * p) == 0) reduced = false;
        if (!reduced) continue;
        CubicForm f{Rat(b), Rat(c)};
        try {
            check_cubic(f);
        } catch (const DomainError&) {
            continue;
        }
        out.push_back(f);
    }
    return out;
}

CriterionSweep criterion_oracle_sweep(const std::vector<CubicForm>& forms, unsigned jobs) {
    std::vector<RamificationReport> reps(forms.size());
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < forms.size(); i += stride) reps[i] = cubic_report(forms[i]);
    };
    jobs = std::max(1u, jobs);
    std::vector<std::future<void>> fs;
    for (unsigned j = 0; j < jobs; ++j) fs.push_back(std::async(std::launch::async, work, j, jobs));
    for (auto& f : fs) f.get();

    CriterionSweep out;
    out.cubics = static_cast<long>(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (const auto& pr : reps[i].primes) {
            if (!pr.oracle_unramified) {
                ++out.undecided_primes;
                continue;
            }
            ++out.decided_primes;
            if (!pr.agreed) out.disagreements.push_back({forms[i], pr.prime, pr.conditions, pr.oracle});
        }
    return out;
}

FamilyB2T family_b2t(const Int& b, const Int& t) {
    if (b == 0) throw DomainError("family_b2t needs b != 0");
    FamilyB2T out;
    CubicForm f{Rat(b), Rat(b * b * t)};
    out.report = cubic_report(f);
    out.d = -27 * b * t * t - 4;
    auto k = squarefree_kernel(Rat(b * out.d));
    out.field_kernel = k ? *k : Int(0);
    out.report.claim = true;
    return out;
}

CongruenceScan congruence_scan(const Int& b, long modulus, long c_lo, long c_hi, bool with_oracle, unsigned jobs) {
    if (b == 0) throw DomainError("congruence_scan needs b != 0");
    if (c_lo > c_hi) throw DomainError("empty c range");
    const Int full = 81 * b * b * b * b;
    if (modulus == 0) {
        if (!full.fits_slong_p()) throw DomainError("81 b^4 exceeds the supported modulus range");
        modulus = full.get_si();
    }
    if (modulus < 1 || !mpz_divisible_ui_p(full.get_mpz_t(), static_cast<unsigned long>(modulus)))
        throw DomainError("modulus must divide 81 b^4");
    CongruenceScan out;
    out.b = b;
    out.modulus = modulus;

    const long n = c_hi - c_lo + 1;
    std::vector<std::optional<ScanRow>> rows(static_cast<std::size_t>(n));
    auto work = [&](long start, long stride) {
        for (long i = start; i < n; i += stride) {
            const Int c = c_lo + i;
            CubicForm f{Rat(b), Rat(c)};
            try {
                check_cubic(f);
            } catch (const DomainError&) {
                continue;
            }
            RamificationReport rep = with_oracle ? cubic_report(f) : cubic_criterion(f);
            ScanRow row;
            row.c = c;
            row.delta = f.delta();
            row.kernel = rep.field.kernel;
            row.verdict = rep.criterion_verdict;
            row.passes = rep.criterion_verdict == "unramified";
            if (with_oracle) row.agreed = rep.agreed;
            rows[static_cast<std::size_t>(i)] = row;
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::future<void>> fs;
    for (unsigned j = 0; j < jobs; ++j) fs.push_back(std::async(std::launch::async, work, j, static_cast<long>(jobs)));
    for (auto& f : fs) f.get();

    for (auto& r : rows) {
        if (r) out.rows.push_back(*r);
        else ++out.skipped;
    }
    auto residue = [](const Int& c, long m) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
        return r.get_si();
    };
    auto classes = [&](long m) {
        std::map<long, std::set<bool>> cls;
        for (const auto& r : out.rows) cls[residue(r.c, m)].insert(r.passes);
        return cls;
    };
    for (const auto& [res, vs] : classes(modulus))
        if (vs.size() > 1) out.mixed_classes.push_back(res);
    out.minimal_modulus = modulus;
    for (long m : divisors_of(modulus)) {
        auto cls = classes(m);
        if (std::all_of(cls.begin(), cls.end(), [](const auto& kv) { return kv.second.size() == 1; })) {
            out.minimal_modulus = m;
            for (const auto& [res, vs] : cls)
                if (*vs.begin()) out.passing_residues.push_back(res);
            break;
        }
    }
    return out;
}

B3Check b3_congruence_check(const Int& b, const Int& c) {
    if (b == 0) throw DomainError("b3_congruence_check needs b != 0");
    B3Check r;
    const Int m = abs(b * b * b);
    Int c2 = c * c;
    mpz_mod(c2.get_mpz_t(), c2.get_mpz_t(), m.get_mpz_t());
    const Int num = -4 * b * b * b;
    if (mpz_divisible_ui_p(num.get_mpz_t(), 27)) {
        r.rhs = num / 27;
    } else {
        r.degenerate = true;
        Int inv;
        mpz_invert(inv.get_mpz_t(), Int(27).get_mpz_t(), m.get_mpz_t());
        r.rhs = num * inv;
    }
    if (m == 1) r.rhs = 0;
    else mpz_mod(r.rhs.get_mpz_t(), r.rhs.get_mpz_t(), m.get_mpz_t());
    r.zero_branch = c2 == 0;
    r.second_branch = c2 == r.rhs;
    r.holds = r.zero_branch || r.second_branch;
    return r;
}

bool real_place_rule(const Rat& b, const Rat& c) { return (b < 0 && c > 0) || (b * b - 4 * c < 0); }

RamificationReport quartic_d4_criterion(const Rat& b, const Rat& c) {
    if (b == 0) throw DomainError("quartic criterion needs b != 0");
    D4Report d4 = d4_resolvent(0, b, 0, c);
    if (!d4.is_d4) throw DomainError("x^4 + b x^2 + c is not D4 (" + d4.structure + ")");
    RamificationReport rep;
    std::ostringstream os;
    os << "x^4 + (" << b.get_str() << ")*x^2 + (" << c.get_str() << ")";
    rep.polynomial = os.str();
    const Rat delta = b * b - 4 * c;
    const Rat cd = c * delta;
    rep.field = quad_field(cd);
    auto sup = support({cd});
    if (!sup) {
        rep.criterion_verdict = rep.verdict = "undecided";
        return rep;
    }
    std::vector<Int> uncertified;
    bool oracle_all = true;
    for (const auto& p : *sup) {
        if (vq(cd, p) % 2 == 0) continue;
        PrimeReport pr;
        pr.prime = p;
        pr.ramified_in_quadratic = true;
        const bool c1 = small_abs(c / (b * b), p);
        const bool c2 = small_abs(delta / (2 * b * b), p);
        pr.conditions = {c1, c2};
        pr.condition = c1 ? 1 : (c2 ? 2 : 0);
        pr.criterion = pr.condition ? "unramified" : "not certified";
        const bool sq = is_padic_square(delta, p) || is_padic_square(c, p);
        pr.oracle = sq ? "square" : "no square";
        pr.oracle_unramified = sq;
        if (!sq) oracle_all = false;
        if (p == 2) {
            pr.flagged = true;
            pr.note = "constant 2 placement ambiguous at p = 2; local squares adjudicate";
        } else if (pr.condition && !sq) {
            pr.agreed = false;
            rep.agreed = false;
        }
        if (!pr.condition) uncertified.push_back(p);
        rep.primes.push_back(pr);
    }
    const bool real_ok = real_place_rule(b, c);
    std::string fin = uncertified.empty() ? "unramified at all finite places" : "not certified at " + join_primes(uncertified);
    rep.criterion_verdict = fin + (real_ok ? "; unramified at infinity" : "; ramified at infinity");
    rep.oracle_verdict = oracle_all ? "local square at every odd-valuation prime" : "some odd-valuation prime lacks a local square";
    rep.verdict = rep.criterion_verdict;
    return rep;
}

RamificationReport cubic_ut_family(long s, const Int& u, const Int& t) {
    if (s < 1 || s > 3) throw DomainError("cubic_ut_family needs s in {1, 2, 3}");
    if (u == 0) throw DomainError("cubic_ut_family needs u != 0");
    CubicForm f{Rat(s * u), Rat(t * u * u)};
    RamificationReport rep = cubic_report(f);
    auto m = [](const Int& a, long n) {
        Int r;
        mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n));
        return r.get_si();
    };
    if (s == 1) {
        rep.claim = true;
    } else if (s == 2) {
        rep.claim = m(u, 8) == 0 || (m(u, 2) == 0 && m(t, 2) == 0) || (m(u, 2) == 1 && m(t, 4) != 2);
    } else if (m(u, 3) == 0) {
        if (m(t, 3) == 0) rep.claim = true;
        else rep.notes.push_back("criterion incomplete for 3 | u; oracle only");
    } else {
        Int u9;
        mpz_powm_ui(u9.get_mpz_t(), u.get_mpz_t(), 9, Int(27).get_mpz_t());
        const long u9m = m(u9, 27);
        const long ut2 = m(u * t * t, 27);
        rep.claim = m(t, 9) == 0 || (u9m == 26 && ut2 == 23) || (u9m % 9 == 1 && ut2 % 9 == 7);
    }
    if (rep.claim) {
        const bool crit = rep.criterion_verdict == "unramified";
        if (crit != *rep.claim) rep.notes.push_back("family statement disagrees with the criterion");
    }
    return rep;
}

bool cycle4_gcd_bounds(const Int& t) {
    auto divides = [](const Int& g, long n) { return mpz_divisible_p(Int(n).get_mpz_t(), g.get_mpz_t()) != 0; };
    const Int a = t, b = t - 4, c = 4 * t + 9;
    return divides(gcd(a, b), 4) && divides(gcd(a, c), 9) && divides(gcd(b, c), 25);
}

Cycle4Report quartic_cycle4_family(const Int& t) {
    Cycle4Report r;
    r.t = t;
    // identities in Z[x, t]
    const BiPolynomial X = BiPolynomial::in_x(IntPolynomial::x());
    const BiPolynomial T = BiPolynomial::in_y(IntPolynomial::x());
    const BiPolynomial one = BiPolynomial::constant(1);
    const BiPolynomial X2 = X * X;
    const BiPolynomial f = X2 * X2 - X2 * X - T * X2 - X + one;
    const BiPolynomial id1 = (X2 + X + one) * (X - one) * (X - one) - T * X2;
    const BiPolynomial id2 = (X2 - BiPolynomial::constant(3) * X + one) * (X + one) * (X + one) -
                             (T - BiPolynomial::constant(4)) * X2;
    const BiPolynomial q = BiPolynomial::constant(2) * X2 - X + BiPolynomial::constant(2);
    const BiPolynomial id3 = q * q - (BiPolynomial::constant(4) * T + BiPolynomial::constant(9)) * X2;
    r.identities_hold = id1 == f && id2 == f && id3 == BiPolynomial::constant(4) * f;

    r.gcd_bounds = cycle4_gcd_bounds(t);
    r.field_radicand = t * (t - 4) * (4 * t + 9);
    r.coprime_to_30 = gcd(r.field_radicand, Int(30)) == 1;
    Int res;
    mpz_fdiv_r_ui(res.get_mpz_t(), t.get_mpz_t(), 30);
    r.residue_class = res == 11 || res == 17 || res == 23;
    if (r.field_radicand != 0) {
        auto k = squarefree_kernel(Rat(r.field_radicand));
        r.field_kernel = k ? *k : Int(0);
    }
    const IntPolynomial ft(std::vector<Int>{1, -1, -t, -1, 1});
    r.discriminant = resultant(ft, ft.derivative());
    r.discriminant_matches = r.discriminant == t * (t - 4) * (4 * t + 9) * (4 * t + 9);
    r.structure = d4_resolvent(-1, Rat(-t), -1, 1).structure;
    return r;
}

}  // namespace chebykit
