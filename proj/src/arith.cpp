#include "bilevel/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace bilevel {

std::vector<long> prime_factors_of(long n) {
    if (n < 1) throw std::invalid_argument("prime_factors_of: n must be positive");
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::vector<long> divisors_of(long n) {
    if (n < 1) throw std::invalid_argument("divisors_of: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

ModulusProfile::ModulusProfile(long t_) : t(t_) {
    if (t < 3 || t % 2 == 0)
        throw std::invalid_argument("ModulusProfile: modulus must be odd and >= 3");
    prime_factors = prime_factors_of(t);
    divisors = divisors_of(t);
}

Int phi_m(unsigned m, long r) {
    if (m < 1 || r < 1) throw std::invalid_argument("phi_m: require m >= 1, r >= 1");
    Int result = ipow(Int(r), m);
    for (long p : prime_factors_of(r)) {
        Int pm = ipow(Int(p), m);
        result = result / pm * (pm - 1);
    }
    return result;
}

namespace {

// Iterate over all m-tuples in Z_r^m; call f on each tuple.
template <typename F>
void for_each_tuple(unsigned m, long r, F&& f) {
    std::vector<int> a(m, 0);
    while (true) {
        f(a);
        unsigned i = 0;
        while (i < m) {
            if (++a[i] < r) break;
            a[i] = 0;
            ++i;
        }
        if (i == m) return;
    }
}

void check_enum_guard(unsigned m, long r) {
    double size = 1;
    for (unsigned i = 0; i < m; ++i) size *= static_cast<double>(r);
    if (size > 1e8)
        throw std::length_error("enumerate_Phi_m: r^m exceeds the 10^8 enumeration guard");
}

bool tuple_primitive(const std::vector<int>& a, long r) {
    long g = r;
    for (int x : a) g = std::gcd(g, static_cast<long>(x));
    return g == 1;
}

}  // namespace

std::vector<std::vector<int>> enumerate_Phi_m(unsigned m, long r) {
    check_enum_guard(m, r);
    std::vector<std::vector<int>> out;
    for_each_tuple(m, r, [&](const std::vector<int>& a) {
        if (tuple_primitive(a, r)) out.push_back(a);
    });
    return out;
}

Int count_Phi_m_enumerated(unsigned m, long r) {
    check_enum_guard(m, r);
    Int n = 0;
    for_each_tuple(m, r, [&](const std::vector<int>& a) {
        if (tuple_primitive(a, r)) ++n;
    });
    return n;
}

Int count_Phi_bar2(long r) {
    if (r == 1) return 1;
    if (r == 2) throw std::invalid_argument("count_Phi_bar2: modulus 2 unsupported");
    return phi_m(2, r) / 2;
}

Rat euler_product(long t, unsigned m, int sign) {
    if (t < 1) throw std::invalid_argument("euler_product: t >= 1 required");
    if (sign != 1 && sign != -1) throw std::invalid_argument("euler_product: sign must be ±1");
    Rat prod = 1;
    for (long p : prime_factors_of(t)) {
        Int pm = ipow(Int(p), m);
        prod *= Rat(pm + sign, pm);
    }
    return prod;
}

Int sl2_order(long t) {
    if (t < 2) throw std::invalid_argument("sl2_order: t >= 2 required");
    return Int(t) * phi_m(2, t);
}

Int sl2_order_oracle(long t) {
    if (t < 2) throw std::invalid_argument("sl2_order_oracle: t >= 2 required");
    if (t > 16) throw std::length_error("sl2_order_oracle: t <= 16 enumeration guard");
    Int count = 0;
    for (long a = 0; a < t; ++a)
        for (long b = 0; b < t; ++b)
            for (long c = 0; c < t; ++c)
                for (long d = 0; d < t; ++d)
                    if (((a * d - b * c) % t + t) % t == 1) ++count;
    return count;
}

Int mu_paper(long r) { return Int(r) * phi_m(2, r); }

Int nu_paper(long r) { return phi_m(2, r); }

Int nu_cusps(long r) {
    if (r <= 2) throw std::invalid_argument("nu_cusps: r > 2 required");
    return phi_m(2, r) / 2;
}

Rat genus_X(long r) {
    if (r <= 2) throw std::invalid_argument("genus_X: r > 2 required");
    Rat mu_psl = Rat(mu_paper(r), 2);
    Rat cusps = nu_cusps(r);
    return 1 + mu_psl / 12 - cusps / 2;
}

Rat genus_X_unhalved_convention(long r) {
    if (r <= 2) throw std::invalid_argument("genus_X_unhalved_convention: r > 2 required");
    // Same shape of formula fed with the unhalved index and cusp count.
    return 1 + Rat(mu_paper(r)) / 12 - Rat(nu_paper(r)) / 2;
}

GenusCensus genus_census(long r) {
    if (r <= 2) throw std::invalid_argument("genus_census: r > 2 required");
    if (r > 16) throw std::length_error("genus_census: r <= 16 enumeration guard");
    Int sl2 = sl2_order_oracle(r);
    GenusCensus g;
    g.psl_index = sl2 / 2;          // -1 is central and nontrivial for r > 2
    g.cusps = g.psl_index / r;      // principal level r >= 3: cusp width r
    g.genus = 1 + Rat(g.psl_index) / 12 - Rat(g.cusps) / 2;
    return g;
}

}  // namespace bilevel
