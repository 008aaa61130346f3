#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chebykit/exactcore.hpp"
#include "chebykit/solver.hpp"

namespace chebykit {

// x^3 + b x + c
struct CubicForm {
    Rat b;
    Rat c;

    Rat delta() const { return -4 * b * b * b - 27 * c * c; }
    Rat eps() const { return -2 - 27 * c * c / (b * b * b); }
    std::string to_string() const;
};

struct QuadFieldInfo {
    Rat radicand;
    Int kernel{1};         // squarefree kernel d
    Int discriminant{1};   // d or 4d
    std::vector<Int> ramified_primes;
    bool complete = true;  // false when the radicand resisted factorization
};

QuadFieldInfo quad_field(const Rat& radicand);

struct PrimeReport {
    Int prime;
    bool ramified_in_quadratic = false;
    std::vector<bool> conditions;  // per criterion condition
    int condition = 0;             // first condition that holds, 0 for none
    std::string criterion;         // unramified | ramified | not certified | not run
    std::string oracle = "not run";  // root | no root | totally ramified | square | no square | undecided
    std::optional<bool> oracle_unramified;
    bool agreed = true;
    bool flagged = false;
    std::string note;
};

struct RamificationReport {
    std::string polynomial;
    QuadFieldInfo field;
    std::vector<PrimeReport> primes;
    std::string criterion_verdict = "not run";
    std::string oracle_verdict = "not run";
    std::string verdict;
    std::optional<bool> claim;  // family statement under test, when there is one
    bool agreed = true;
    std::vector<std::string> notes;
};

// (b, c) -> (k^2 b, k^3 c), k = p^j, so that the form is p-reduced.
struct ReducedForm {
    CubicForm form;
    long j = 0;
};
ReducedForm wp_reduce(const Rat& b, const Rat& c, const Int& p);

// Conditions 1..3 at p, from exact rational valuations.
std::array<bool, 3> cubic_conditions(const CubicForm& f, const Int& p);

// Rejects b = 0, reducible forms and square discriminants.
void check_cubic(const CubicForm& f);
RamificationReport cubic_criterion(const CubicForm& f);
RamificationReport cubic_oracle(const CubicForm& f);
// Both, merged per prime with agreement flags.
RamificationReport cubic_report(const CubicForm& f);

// Seeded sample of admissible integer cubics: b != 0, |b|, |c| <= bound, irreducible,
// p-reduced at every prime, nonsquare discriminant.
std::vector<CubicForm> sample_admissible_cubics(std::size_t count, std::uint64_t seed, long bound);

struct SweepDisagreement {
    CubicForm form;
    Int prime;
    std::vector<bool> conditions;
    std::string oracle;
};

struct CriterionSweep {
    long cubics = 0;
    long decided_primes = 0;
    long undecided_primes = 0;
    std::vector<SweepDisagreement> disagreements;
};
CriterionSweep criterion_oracle_sweep(const std::vector<CubicForm>& forms, unsigned jobs = 1);

struct FamilyB2T {
    RamificationReport report;
    Int d;              // -27 b t^2 - 4
    Int field_kernel;   // squarefree kernel of b d
};
FamilyB2T family_b2t(const Int& b, const Int& t);

struct ScanRow {
    Int c;
    Rat delta;
    Int kernel;
    std::string verdict;
    bool passes = false;
    std::optional<bool> agreed;  // criterion vs oracle, when the oracle ran
};

struct CongruenceScan {
    Int b;
    long modulus = 0;
    long minimal_modulus = 0;
    std::vector<long> passing_residues;  // modulo minimal_modulus
    std::vector<long> mixed_classes;     // residues mod `modulus` with both verdicts
    std::vector<ScanRow> rows;
    long skipped = 0;                    // reducible or square discriminant
};

// Scans c in [c_lo, c_hi]; modulus 0 means 81 b^4. `jobs` worker threads.
CongruenceScan congruence_scan(const Int& b, long modulus, long c_lo, long c_hi, bool with_oracle = false,
                               unsigned jobs = 1);

struct B3Check {
    bool holds = false;
    bool zero_branch = false;  // c^2 = 0 mod |b|^3
    bool second_branch = false;
    Int rhs;                   // -4 b^3 / 27 reduced mod |b|^3
    bool degenerate = false;   // 3 does not divide b: 27 is inverted and the rhs collapses to 0
};
B3Check b3_congruence_check(const Int& b, const Int& c);

// Real place of x^4 + b x^2 + c: b < 0 and c > 0, or b^2 - 4c < 0.
bool real_place_rule(const Rat& b, const Rat& c);
RamificationReport quartic_d4_criterion(const Rat& b, const Rat& c);

// x^3 + s u x + t u^2 for s in {1, 2, 3}.
RamificationReport cubic_ut_family(long s, const Int& u, const Int& t);

struct Cycle4Report {
    Int t;
    bool identities_hold = false;
    bool gcd_bounds = false;      // gcd(t,t-4) | 4, gcd(t,4t+9) | 9, gcd(t-4,4t+9) | 25
    bool coprime_to_30 = false;   // gcd(t (t-4) (4t+9), 30) = 1
    bool residue_class = false;   // t mod 30 in {11, 17, 23}
    Int field_radicand;           // t (t-4) (4t+9)
    Int field_kernel;
    Int discriminant;             // t (t-4) (4t+9)^2
    bool discriminant_matches = false;
    std::string structure;        // from the degree-12 resolvent
};
Cycle4Report quartic_cycle4_family(const Int& t);
bool cycle4_gcd_bounds(const Int& t);

}  // namespace chebykit
