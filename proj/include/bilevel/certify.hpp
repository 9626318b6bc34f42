// Assembly of the general-type inequality, per-level certificates, range
// scans, the even-level corollary, the exact dominance bound, and the
// cross-mode discrepancy report.
#pragma once

#include "bilevel/dimensions.hpp"
#include "bilevel/poly.hpp"
#include "bilevel/rational.hpp"

#include <string>
#include <vector>

namespace bilevel {

enum class Mode { paper, derived };
enum class Verdict { general_type_certified, inconclusive };

inline const char* mode_name(Mode m) { return m == Mode::paper ? "paper" : "derived"; }
inline const char* verdict_name(Verdict v) {
    return v == Verdict::general_type_certified ? "general_type_certified" : "inconclusive";
}

struct Certificate {
    long t = 0;
    Mode mode = Mode::paper;
    Rat dim_term;    // t^4 * prod(1+p^{-2}) / 320
    Rat omega1;      // branch-surface obstruction quadratics evaluated at t
    Rat omega2;
    Rat omega_inf;   // boundary obstruction
    Rat ineq_value;  // dim_term - omega1 - omega2 - omega_inf
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> notes;
};

enum class FactorShape { prime, prime_square, prime_cube_plus, two_primes, other };
const char* factor_shape_name(FactorShape s);
FactorShape factor_shape(long t);

struct ScanRow {
    long t = 0;
    FactorShape shape = FactorShape::other;
    Rat ineq_paper, ineq_derived;
    Verdict verdict_paper = Verdict::inconclusive;
    Verdict verdict_derived = Verdict::inconclusive;
};

// The value of the general-type inequality at odd t >= 3; positive means
// certified.  Rejects even t (use even_corollary).
Rat ineq_value(long t, Mode mode);

Certificate certify(long t, Mode mode);

// Every odd t in [lo, hi], both modes evaluated per row.
std::vector<ScanRow> scan(long lo, long hi, Mode mode);

// Even levels: certified iff the odd part is >= 17 and itself certified.
Verdict even_corollary(long t);

// Exact sign-change bisection for the larger root of
// q(t) = t^2/320 - (11/108) t - 745/864, to width < 1/100.
struct DominanceBound {
    Poly quadratic;  // q, in t
    Rat lo, hi;      // bracket of the larger root
};
DominanceBound dominance_bound();

// One audited inconsistency between the printed constants and exact
// recomputation.
struct Finding {
    std::string id;       // "prime_constant", "omega2_ratio", ...
    std::string title;
    std::string details;  // exact values, ratios, witnesses
    std::string flip_statement;  // effect on scan verdicts over [3, 99]
};
std::vector<Finding> discrepancy_report(long t);

// The exact set of odd t in [lo, hi] whose verdict differs between modes.
std::vector<long> mode_flips(long lo, long hi);

}  // namespace bilevel
