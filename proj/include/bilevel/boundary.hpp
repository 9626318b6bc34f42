// Boundary-divisor bookkeeping: t-divisors, canonical orbit representatives
// of isotropic lines, closed-form orbit counts, and the independent
// union-find enumeration oracle over (Z_t)^4.
#pragma once

#include "bilevel/arith.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace bilevel {

// Canonical descriptor of a boundary-divisor orbit.
struct DivisorClass {
    long t = 0;
    long r = 0;                    // gcd(t, v1, v3)
    std::array<long, 2> a13{};     // (v1, v3) mod t, sign-normalized
    std::array<long, 2> a24{};     // (v2, v4) mod r, sign-normalized

    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.t == y.t && x.r == y.r && x.a13 == y.a13 && x.a24 == y.a24;
    }
    friend bool operator<(const DivisorClass& x, const DivisorClass& y) {
        if (x.r != y.r) return x.r < y.r;
        if (x.a13 != y.a13) return x.a13 < y.a13;
        return x.a24 < y.a24;
    }
    std::string str() const;
};

// gcd(t, v1, v3) for a primitive integer 4-vector; throws on non-primitive.
long t_divisor(const std::array<long, 4>& v, long t);

// Canonical orbit descriptor of the line spanned by a primitive vector:
// (v1, v3) kept mod t and (v2, v4) reduced mod r, each pair normalized so
// its first nonzero coordinate lies in {1..floor(mod/2)}.
DivisorClass normalize_line(const std::array<long, 4>& v, long t);

// Closed-form orbit count per t-divisor r: Phi_bar2(t/r) * Phi_bar2(r).
std::map<long, Int> count_boundary_closed(long t);

// Union-find enumeration over all residue vectors in (Z_t)^4 with
// gcd(entries, t) = 1, under the unipotent translations, the sign flip on
// (v2, v4), and the global sign.  Guarded at t <= 45.
std::map<long, Int> count_boundary_oracle(long t);

// The 2*nu standard representatives: (0,a,0,b) with t-divisor t and
// (a,0,b,0) with t-divisor 1, where (a,b) ranges over gcd(a,b,t) = 1,
// 0 <= a <= (t-1)/2, 0 <= b < t, and a = 0 forces 1 <= b <= (t-1)/2.
std::vector<std::array<long, 4>> standard_components(long t);

}  // namespace bilevel
