#include "bilevel/dimensions.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "bilevel/arith.hpp"

namespace bilevel {

IndexChain index_chain(long t) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("index_chain: t must be odd and >= 3");
    IndexChain ic;
    ic.t = t;
    ic.index_lev = Int(t) * phi_m(4, t) / 2;
    ic.index_nat_over_lev = Int(t) * phi_m(2, t);
    ic.index_bil = Int(t) * Int(t) * phi_m(2, t) * phi_m(4, t) / 4;
    // The full index is half the product through the chain.
    if (ic.index_bil != ic.index_lev * ic.index_nat_over_lev / 2)
        throw std::logic_error("index_chain: chain product mismatch");
    return ic;
}

Rat cuspform_leading(long t) {
    if (t < 3 || t % 2 == 0)
        throw std::invalid_argument("cuspform_leading: t must be odd and >= 3");
    Rat direct = Rat(Int(t) * Int(t) * phi_m(2, t) * phi_m(4, t), Int(34560));
    Rat via_index = Rat(index_chain(t).index_bil, Int(8640));
    if (direct != via_index) throw std::logic_error("cuspform_leading: route mismatch");
    return direct;
}

Int nu_value(long t) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("nu_value: t must be odd and >= 3");
    return phi_m(2, t) / 2;
}

bool gamma_tr_member(long a, long b, long c, long d, long t, long r) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("gamma_tr_member: bad t");
    if (r < 1 || t % r != 0) throw std::invalid_argument("gamma_tr_member: r must divide t");
    if (Int(a) * d - Int(b) * c != 1)
        throw std::invalid_argument("gamma_tr_member: determinant must be 1");
    const Int T2 = Int(t) * t;
    auto div0 = [](const Int& x, const Int& m) { return x % m == 0; };
    return div0(Int(a) - 1, t) && div0(Int(d) - 1, t) && div0(Int(b), T2) && div0(Int(c), r);
}

Int index_gamma_tr(long t, long r) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("index_gamma_tr: bad t");
    if (r < 1 || t % r != 0) throw std::invalid_argument("index_gamma_tr: r must divide t");
    return Int(r) * Int(t) * phi_m(2, t);
}

Int index_gamma_tr_oracle(long t, long r) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("index_gamma_tr_oracle: bad t");
    if (r < 1 || t % r != 0) throw std::invalid_argument("index_gamma_tr_oracle: r must divide t");
    const long m = t * t;  // the group is a congruence group of level t^2
    if (m > 100) throw std::invalid_argument("index_gamma_tr_oracle: t too large (t*t > 100)");
    // |SL2(Z/m)| and the order of the image of the subgroup in SL2(Z/m);
    // the index in SL2(Z) equals the ratio since both contain the kernel
    // of reduction (all entries of the subgroup pattern are congruence
    // conditions mod m).
    auto pm = [m](long x) { return ((x % m) + m) % m; };
    Int total = 0;
    Int in_sub = 0;
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b)
            for (long c = 0; c < m; ++c)
                for (long d = 0; d < m; ++d) {
                    if (pm(a * d - b * c) != 1 % m) continue;
                    ++total;
                    if (pm(a - 1) % t == 0 && pm(d - 1) % t == 0 && pm(b) == 0 &&
                        pm(c) % r == 0)
                        ++in_sub;
                }
    if (in_sub == 0) throw std::logic_error("index_gamma_tr_oracle: empty image");
    if (total % in_sub != 0) throw std::logic_error("index_gamma_tr_oracle: non-integral index");
    return total / in_sub;
}

Rat mu_tr(long t, long r) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("mu_tr: bad t");
    if (r < 1 || t % r != 0) throw std::invalid_argument("mu_tr: r must divide t");
    Rat delta = (r == 1 || r == t) ? Rat(1, 2) : Rat(1);
    return delta * Rat(Int(r) * Int(t) * nu_value(t));
}

PolyKW jacobi_dim_leading(long t, long r) {
    Rat mu = mu_tr(t, r);
    PolyKW p;
    p.add_term(mu / 2, 1, 1);  // mu * k*w/2
    p.add_term(mu / 6, 0, 2);  // mu * w^2/6
    return p;
}

Rat omega_v_leading(long t, long r) {
    // sum_{w=0}^{k-1} mu*(k*w/2 + w^2/6), leading k^3 coefficient.
    PolyKW jac = jacobi_dim_leading(t, r);
    Poly upper = Poly::monomial(1, 1, Var::k);  // w runs over 0..k-1
    Poly summed = jac.sum_over_second(upper);
    Rat lead = summed.coeff(3);
    if (lead != mu_tr(t, r) * Rat(11, 36))
        throw std::logic_error("omega_v_leading: closed form mismatch");
    return lead;
}

Rat omega_inf_paper(long t) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("omega_inf_paper: bad t");
    Rat total(0);
    for (long r : divisors_of(t)) {
        long h = t / r;
        Rat term = Rat(11, Int(36) * r) * Rat(Int(t) * t);
        term *= euler_product(std::gcd(r, h), 2, -1);
        total += term;
    }
    return total;
}

Rat omega_inf_derived(long t) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("omega_inf_derived: bad t");
    const Int nu = nu_value(t);
    Rat total(0);
    for (long r : divisors_of(t)) {
        long h = t / r;
        // number of boundary classes with this t-divisor, times the per-class
        // leading term, normalised by nu^2 (each class carries weight 1/nu^2
        // against the mu-normalised volume form).
        Rat classes = Rat(count_Phi_bar2(h) * count_Phi_bar2(r));
        total += omega_v_leading(t, r) * classes / Rat(nu * nu);
    }
    return total;
}

std::vector<OmegaInfRow> omega_inf_rows(long t) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("omega_inf_rows: bad t");
    const Int nu = nu_value(t);
    std::vector<OmegaInfRow> rows;
    for (long r : divisors_of(t)) {
        long h = t / r;
        OmegaInfRow row;
        row.r = r;
        row.paper_term = Rat(11, Int(36) * r) * Rat(Int(t) * t) * euler_product(std::gcd(r, h), 2, -1);
        row.derived_term =
            omega_v_leading(t, r) * Rat(count_Phi_bar2(h) * count_Phi_bar2(r)) / Rat(nu * nu);
        row.ratio = row.paper_term / row.derived_term;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace bilevel
