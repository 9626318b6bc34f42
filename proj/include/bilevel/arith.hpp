// Multiplicative arithmetic: the functions phi_m, the primitive-tuple sets
// behind them, Euler-type products, divisor machinery, and the modular-curve
// invariants (index, cusp count, genus) for principal congruence levels.
#pragma once

#include "bilevel/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace bilevel {

// Factorization profile of a modulus.
struct ModulusProfile {
    long t = 0;
    std::vector<long> prime_factors;  // sorted distinct primes
    std::vector<long> divisors;       // sorted, includes 1 and t

    explicit ModulusProfile(long t_);
};

std::vector<long> prime_factors_of(long n);
std::vector<long> divisors_of(long n);

// phi_m(r) = r^m * prod_{p | r} (1 - p^{-m}), the number of m-tuples over Z_r
// that are not a multiple of a zerodivisor.  phi_1 is the Euler totient.
Int phi_m(unsigned m, long r);

// The literal set {a in Z_r^m : a = z*a' implies z is a unit}, i.e. tuples
// with gcd(a_1,...,a_m, r) = 1.  Guarded enumeration (r^m <= 10^8).
std::vector<std::vector<int>> enumerate_Phi_m(unsigned m, long r);

// Streaming count of the same set, without materializing it.
Int count_Phi_m_enumerated(unsigned m, long r);

// |Phi_2(r) / ±1|: 1 if r = 1, phi_2(r)/2 otherwise.  r = 2 is rejected
// (the library works with odd moduli throughout).
Int count_Phi_bar2(long r);

// prod_{p | t} (1 + sign * p^{-m}) as an exact rational; empty product = 1.
Rat euler_product(long t, unsigned m, int sign);

// |SL(2, Z_t)| = t * phi_2(t), and its brute-force enumeration twin.
Int sl2_order(long t);
Int sl2_order_oracle(long t);  // t <= 16 guard

// Modular-curve invariants at principal level r.
//   mu_paper(r)  = r^3 prod (1 - p^{-2})   (the unhalved index convention)
//   nu_paper(r)  = mu_paper(r) / r = phi_2(r)
//   nu_cusps(r)  = nu_paper(r) / 2         (standard cusp count, r > 2)
//   genus_X(r)   = 1 + (mu_paper/2)/12 - nu_cusps/2  (standard normalization)
Int mu_paper(long r);
Int nu_paper(long r);
Int nu_cusps(long r);
Rat genus_X(long r);

// The value the printed genus formula would give when fed the unhalved
// mu_paper / nu_paper directly; kept for the discrepancy report only.
Rat genus_X_unhalved_convention(long r);

// Independent genus census: enumerate SL(2, Z_r), compute the PSL index,
// cusps = index / r, genus = 1 + index/12 - cusps/2.  r <= 16 guard.
struct GenusCensus {
    Int psl_index;
    Int cusps;
    Rat genus;
};
GenusCensus genus_census(long r);

}  // namespace bilevel
