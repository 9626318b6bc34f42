#include "bilevel/certify.hpp"

#include <functional>
#include <stdexcept>

#include "bilevel/arith.hpp"
#include "bilevel/surfaces.hpp"

namespace bilevel {

namespace {

void require_odd_level(long t, const char* who) {
    if (t < 3) throw std::invalid_argument(std::string(who) + ": t must be >= 3");
    if (t % 2 == 0)
        throw std::invalid_argument(std::string(who) +
                                    ": even t unsupported here, use even_corollary");
}

Rat dim_term_of(long t) {
    // t^4 * prod_{p|t} (1 + p^{-2}) / 320, the cusp-form side of the
    // inequality after normalizing by nu^2 k^3.
    Rat t4 = Rat(Int(t) * t * t * t);
    return t4 * euler_product(t, 2, +1) / 320;
}

Rat omega1_of(long t, Mode m) {
    return (m == Mode::paper ? omega_H_printed(1) : omega_H_derived(1)).eval(Rat(t));
}
Rat omega2_of(long t, Mode m) {
    return (m == Mode::paper ? omega_H_printed(2) : omega_H_derived(2)).eval(Rat(t));
}
Rat omega_inf_of(long t, Mode m) {
    return m == Mode::paper ? omega_inf_paper(t) : omega_inf_derived(t);
}

}  // namespace

const char* factor_shape_name(FactorShape s) {
    switch (s) {
        case FactorShape::prime: return "prime";
        case FactorShape::prime_square: return "prime_square";
        case FactorShape::prime_cube_plus: return "prime_cube_plus";
        case FactorShape::two_primes: return "two_primes";
        case FactorShape::other: return "other";
    }
    return "?";
}

FactorShape factor_shape(long t) {
    std::vector<int> exponents;
    long n = t;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        exponents.push_back(e);
    }
    if (n > 1) exponents.push_back(1);
    if (exponents.size() == 1) {
        if (exponents[0] == 1) return FactorShape::prime;
        if (exponents[0] == 2) return FactorShape::prime_square;
        return FactorShape::prime_cube_plus;
    }
    if (exponents.size() == 2 && exponents[0] == 1 && exponents[1] == 1)
        return FactorShape::two_primes;
    return FactorShape::other;
}

Rat ineq_value(long t, Mode mode) {
    require_odd_level(t, "ineq_value");
    Rat v = dim_term_of(t) - omega1_of(t, mode) - omega2_of(t, mode) - omega_inf_of(t, mode);
    if (mode == Mode::paper) {
        // The two branch-surface quadratics must aggregate to the single
        // quadratic of the assembled inequality.
        Rat tt(t);
        Rat display = dim_term_of(t) - Rat(481, 864) * tt * tt + Rat(7, 12) * tt +
                      Rat(43, 24) - omega_inf_paper(t);
        if (v != display) throw std::logic_error("ineq_value: aggregation mismatch");
    }
    return v;
}

Certificate certify(long t, Mode mode) {
    require_odd_level(t, "certify");
    Certificate c;
    c.t = t;
    c.mode = mode;
    c.dim_term = dim_term_of(t);
    c.omega1 = omega1_of(t, mode);
    c.omega2 = omega2_of(t, mode);
    c.omega_inf = omega_inf_of(t, mode);
    c.ineq_value = c.dim_term - c.omega1 - c.omega2 - c.omega_inf;
    if (c.ineq_value != ineq_value(t, mode))
        throw std::logic_error("certify: stored terms do not reproduce ineq_value");
    c.verdict =
        c.ineq_value > 0 ? Verdict::general_type_certified : Verdict::inconclusive;

    Mode other = mode == Mode::paper ? Mode::derived : Mode::paper;
    bool other_pos = ineq_value(t, other) > 0;
    if (other_pos != (c.ineq_value > 0))
        c.notes.push_back(std::string("verdict differs in ") + mode_name(other) + " mode");
    if (c.verdict == Verdict::inconclusive)
        c.notes.push_back("inconclusive: the criterion is one-sided, no claim of non-general type");
    return c;
}

std::vector<ScanRow> scan(long lo, long hi, Mode /*mode: rows carry both*/) {
    if (lo > hi) throw std::invalid_argument("scan: lo > hi");
    std::vector<ScanRow> rows;
    for (long t = lo % 2 == 0 ? lo + 1 : lo; t <= hi; t += 2) {
        if (t < 3) continue;
        ScanRow row;
        row.t = t;
        row.shape = factor_shape(t);
        row.ineq_paper = ineq_value(t, Mode::paper);
        row.ineq_derived = ineq_value(t, Mode::derived);
        row.verdict_paper = row.ineq_paper > 0 ? Verdict::general_type_certified
                                               : Verdict::inconclusive;
        row.verdict_derived = row.ineq_derived > 0 ? Verdict::general_type_certified
                                                   : Verdict::inconclusive;
        rows.push_back(row);
    }
    return rows;
}

Verdict even_corollary(long t) {
    if (t < 2 || t % 2 != 0) throw std::invalid_argument("even_corollary: t must be even, use certify for odd t");
    long b = t;
    while (b % 2 == 0) b /= 2;
    if (b < 17) return Verdict::inconclusive;
    return certify(b, Mode::paper).verdict;  // covering: level b certifies level t
}

DominanceBound dominance_bound() {
    DominanceBound db;
    // Quadratic dominating growth beyond the scan horizon; the constant is
    // assembled from the two obstruction constants 481/864 and 11/36.
    db.quadratic = Poly({Rat(0) - (Rat(481, 864) + Rat(11, 36)), Rat(-11, 108), Rat(1, 320)},
                        Var::t);
    Rat lo(32), hi(64);
    Rat qlo = db.quadratic.eval(lo), qhi = db.quadratic.eval(hi);
    if (!(qlo < 0 && qhi > 0)) throw std::logic_error("dominance_bound: bad initial bracket");
    while (hi - lo >= Rat(1, 100)) {
        Rat mid = (lo + hi) / 2;
        if (db.quadratic.eval(mid) > 0)
            hi = mid;
        else
            lo = mid;
    }
    db.lo = lo;
    db.hi = hi;
    return db;
}

std::vector<long> mode_flips(long lo, long hi) {
    std::vector<long> flips;
    for (const ScanRow& row : scan(lo, hi, Mode::paper))
        if (row.verdict_paper != row.verdict_derived) flips.push_back(row.t);
    return flips;
}

namespace {

std::string join_levels(const std::vector<long>& xs) {
    if (xs.empty()) return "none";
    std::string s;
    for (long x : xs) {
        if (!s.empty()) s += ", ";
        s += std::to_string(x);
    }
    return s;
}

// Odd levels in [3, 99] whose certification sign changes when the paper-mode
// inequality is recomputed with `alt` in place of the paper value.
std::vector<long> substitution_flips(const std::function<Rat(long)>& alt) {
    std::vector<long> flips;
    for (long t = 3; t <= 99; t += 2)
        if ((alt(t) > 0) != (ineq_value(t, Mode::paper) > 0)) flips.push_back(t);
    return flips;
}

// k^3-coefficient of sum_{j=0}^{k/2-1} (A(t) k + B(t) j)^2: the Faulhaber
// image A^2/2 + A B/4 + B^2/24, validated below against the independent
// summation machinery.
Poly quadratic_from_linear(const Poly& A, const Poly& B) {
    return Rat(1, 2) * (A * A) + Rat(1, 4) * (A * B) + Rat(1, 24) * (B * B);
}

}  // namespace

std::vector<Finding> discrepancy_report(long t) {
    require_odd_level(t, "discrepancy_report");
    std::vector<Finding> findings;
    const std::vector<long> flips = mode_flips(3, 99);
    const std::string global_flips =
        "paper vs derived mode verdicts on [3,99] differ exactly at {" + join_levels(flips) +
        "} (derived certifies, paper does not)";

    // (a) the prime-case polynomial constant.
    {
        // Specializing the inequality to prime t: dim contributes t^4/320 +
        // t^2/320, the surface quadratics -481/864 t^2 + 7/12 t + 43/24, the
        // boundary sum 11/36 t^2 + 11/36 t.
        const Rat derived_c2 = Rat(1, 320) - Rat(481, 864) - Rat(11, 36);
        const Rat printed_c2 = Rat(-7433, 8640);
        const Rat linear_c = Rat(7, 12) - Rat(11, 36);  // = 5/18, as printed
        std::vector<long> sign_mismatch;
        for (long p = 3; p <= 97; p += 2) {
            if (factor_shape(p) != FactorShape::prime) continue;
            Rat pp(p);
            Rat exact = ineq_value(p, Mode::paper);
            Rat via_spec = pp * pp * pp * pp / 320 + derived_c2 * pp * pp + linear_c * pp +
                           Rat(43, 24);
            if (exact != via_spec)
                throw std::logic_error("discrepancy_report: prime specialization mismatch");
            Rat printed_poly = pp * pp * pp * pp / 320 + printed_c2 * pp * pp +
                               Rat(5, 18) * pp + Rat(43, 24);
            if ((printed_poly > 0) != (exact > 0)) sign_mismatch.push_back(p);
        }
        Finding f;
        f.id = "prime_constant";
        f.title = "prime-case quadratic constant";
        f.details = "specializing the inequality to prime t gives t^2-coefficient " +
                    rat_str(derived_c2) + "; the printed prime-case polynomial carries " +
                    rat_str(printed_c2) + " (difference " + rat_str(printed_c2 - derived_c2) +
                    ", printed is the smaller, hence a safe lower bound); linear and constant "
                    "terms 5/18 and 43/24 match; sign agreement at every odd prime <= 97: " +
                    (sign_mismatch.empty() ? "yes" : "NO at " + join_levels(sign_mismatch));
        f.flip_statement = "the constant appears only in the prime-case shortcut, not in "
                           "either certification mode; " + global_flips;
        findings.push_back(f);
    }

    // (b) printed vs derived Omega_2.
    {
        const Poly printed = omega_H_printed(2);
        const Poly derived = omega_H_derived(2);
        std::string ratios;
        for (long s : {7L, 15L, 25L}) {
            Rat rp = printed.eval(Rat(s)), rd = derived.eval(Rat(s));
            if (!ratios.empty()) ratios += ", ";
            ratios += "t=" + std::to_string(s) + ": " + rat_str(rp / rd);
        }
        const std::vector<long> local =
            substitution_flips([&](long s) {
                return ineq_value(s, Mode::paper) + printed.eval(Rat(s)) - derived.eval(Rat(s));
            });
        Finding f;
        f.id = "omega2_ratio";
        f.title = "second branch-surface obstruction: printed vs recomputed";
        f.details = "printed quadratic " + printed.str() + "; recomputed from the lattice sum " +
                    derived.str() + "; exact ratio at sample levels: " + ratios +
                    " (the printed form is exactly twice the recomputed one, so the printed "
                    "inequality is the more conservative)";
        f.flip_statement = "substituting the recomputed Omega_2 alone flips the verdict at {" +
                           join_levels(local) + "}; " + global_flips;
        findings.push_back(f);
    }

    // (c) boundary obstruction per divisor.
    {
        std::vector<OmegaInfRow> rows = omega_inf_rows(t);
        Rat total_paper(0), total_derived(0);
        std::string table;
        for (const auto& row : rows) {
            Rat expect = Rat(2 * t) / Rat(Int(row.r) * row.r);
            if (row.ratio != expect)
                throw std::logic_error("discrepancy_report: per-divisor ratio is not 2t/r^2");
            total_paper += row.paper_term;
            total_derived += row.derived_term;
            if (!table.empty()) table += "; ";
            table += "r=" + std::to_string(row.r) + ": " + rat_str(row.paper_term) + " vs " +
                     rat_str(row.derived_term) + " (ratio " + rat_str(row.ratio) + ")";
        }
        if (total_paper != Rat(2) * total_derived)
            throw std::logic_error("discrepancy_report: total boundary ratio is not 2");
        const std::vector<long> local =
            substitution_flips([&](long s) {
                return ineq_value(s, Mode::paper) + omega_inf_paper(s) - omega_inf_derived(s);
            });
        Finding f;
        f.id = "omega_inf_table";
        f.title = "boundary obstruction per t-divisor at t=" + std::to_string(t);
        f.details = "per-divisor terms (assembled display vs per-class count route): " + table +
                    "; every ratio equals 2t/r^2 and the totals " + rat_str(total_paper) +
                    " vs " + rat_str(total_derived) +
                    " sit in exact ratio 2 (the display route is the larger, hence safe)";
        f.flip_statement = "substituting the per-class boundary route alone flips the verdict "
                           "at {" + join_levels(local) + "}; " + global_flips;
        findings.push_back(f);
    }

    // (d) genus normalization sensitivity.
    {
        const Rat g_std = genus_X(5);
        const Rat g_raw = genus_X_unhalved_convention(5);
        // The printed curve relation 2g-2 = mu/6 - nu matches the halved-cusp
        // normalization; the unhalved variant would shift b_1 by -nu and the
        // first obstruction with it.
        const Poly A_std({Rat(-1), Rat(1, 4)}, Var::t);   // t/4 - 1
        const Poly A_alt({Rat(-2), Rat(1, 4)}, Var::t);   // t/4 - 2
        const Poly B({Rat(0), Rat(1, 6)}, Var::t);        // t/6
        if (quadratic_from_linear(A_std, B) != omega_H_derived(1))
            throw std::logic_error("discrepancy_report: Faulhaber shortcut mismatch");
        const Poly omega1_alt = quadratic_from_linear(A_alt, B);
        const std::vector<long> local =
            substitution_flips([&](long s) {
                return ineq_value(s, Mode::paper) + omega_H_printed(1).eval(Rat(s)) -
                       omega1_alt.eval(Rat(s));
            });
        Finding f;
        f.id = "genus_normalization";
        f.title = "genus normalization of the level curve";
        f.details = "at level 5 the standard halved-cusp normalization gives genus " +
                    rat_str(g_std) + " while feeding the printed lemma constants in unhalved "
                    "form gives " + rat_str(g_raw) + " (enumeration census agrees with the "
                    "standard value); the printed curve relation 2g-2 = mu/6 - nu is coherent "
                    "under the halved convention with mu = t*nu and nu cusps; under the "
                    "unhalved reading b_1 would drop by nu and the first obstruction would "
                    "become " + omega1_alt.str();
        f.flip_statement = "the unhalved reading only lowers the obstruction for t >= 7, so it "
                           "certifies a superset; substituting it alone flips the verdict at {" +
                           join_levels(local) + "}; " + global_flips;
        findings.push_back(f);
    }
    return findings;
}

}  // namespace bilevel
