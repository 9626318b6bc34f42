// Index chains and dimension asymptotics: the bilevel-group index, the
// cusp-form leading coefficient, the boundary congruence groups Gamma(t,r)
// with their indices, Jacobi-form dimension leading terms, and the boundary
// obstruction Omega_inf in both printed and derived modes.
#pragma once

#include "bilevel/arith.hpp"
#include "bilevel/poly.hpp"

#include <map>
#include <vector>

namespace bilevel {

struct IndexChain {
    long t = 0;
    Int index_lev;           // [full : level group] = t*phi_4(t)/2
    Int index_nat_over_lev;  // [level : core] = t*phi_2(t) = |SL(2,Z_t)|
    Int index_bil;           // [full : bilevel] = t^2*phi_2(t)*phi_4(t)/4
};

IndexChain index_chain(long t);  // t odd > 2

// Leading coefficient (of n^3) of the weight-n cusp-form dimension:
// t^2*phi_2(t)*phi_4(t)/34560, which must equal index_bil/8640.
Rat cuspform_leading(long t);

// nu = phi_2(t)/2, the working normalization used by every dimension
// formula downstream.
Int nu_value(long t);

// Membership in Gamma(t,r) <= SL(2, Z): a = d = 1 mod t, b = 0 mod t^2,
// c = 0 mod r.  Throws std::invalid_argument unless det = 1.
bool gamma_tr_member(long a, long b, long c, long d, long t, long r);

// [SL(2,Z) : Gamma(t,r)] = r*t*phi_2(t), plus a congruence-image
// enumeration oracle for small parameters (modulus t^2 loop).
Int index_gamma_tr(long t, long r);
Int index_gamma_tr_oracle(long t, long r);  // t^2 <= 100 guard

// mu(t,r) = delta*r*t*nu with delta = 1/2 iff r is 1 or t.
Rat mu_tr(long t, long r);

// Leading form delta*r*t*nu*(k*w/2 + w^2/6) of the Jacobi-form dimension.
PolyKW jacobi_dim_leading(long t, long r);

// k^3-coefficient of sum_{w=0}^{k-1} jacobi_dim_leading, extracted by exact
// Faulhaber summation; equals delta*r*t*nu*(11/36).
Rat omega_v_leading(long t, long r);

// Boundary obstruction coefficient of nu^2*k^3.
//   printed mode: sum_{r|t} (11/(36r)) * t^2 * prod_{p | gcd(r,h)} (1-p^{-2})
//   derived mode: sum_{r|t} omega_v_leading(t,r) * Phi_bar2(h) * Phi_bar2(r) / nu^2
Rat omega_inf_paper(long t);
Rat omega_inf_derived(long t);

// Per-divisor decomposition of both routes, with exact ratios, for the
// discrepancy report.
struct OmegaInfRow {
    long r = 0;
    Rat paper_term;
    Rat derived_term;
    Rat ratio;  // paper / derived
};
std::vector<OmegaInfRow> omega_inf_rows(long t);

}  // namespace bilevel
