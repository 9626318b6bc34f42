#include "bilevel/boundary.hpp"

#include <numeric>
#include <stdexcept>

namespace bilevel {

std::string DivisorClass::str() const {
    return "r=" + std::to_string(r) + " (v1,v3)=(" + std::to_string(a13[0]) + "," +
           std::to_string(a13[1]) + ") (v2,v4)=(" + std::to_string(a24[0]) + "," +
           std::to_string(a24[1]) + ") mod " + std::to_string(r);
}

namespace {

long positive_mod(long x, long m) {
    long v = x % m;
    return v < 0 ? v + m : v;
}

void require_primitive(const std::array<long, 4>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g != 1) throw std::invalid_argument("boundary: vector must be primitive");
}

// Normalize a residue pair modulo m under simultaneous sign flip: the first
// nonzero coordinate lands in {1..floor(m/2)} (scanning left to right).
std::array<long, 2> sign_normalize(long x, long y, long m) {
    if (m == 1) return {0, 0};
    x = positive_mod(x, m);
    y = positive_mod(y, m);
    long lead = x != 0 ? x : y;
    if (lead == 0) return {0, 0};
    if (lead > m / 2) return {positive_mod(-x, m), positive_mod(-y, m)};
    return {x, y};
}

}  // namespace

long t_divisor(const std::array<long, 4>& v, long t) {
    require_primitive(v);
    long g = std::gcd(t, std::gcd(positive_mod(v[0], t), positive_mod(v[2], t)));
    return g == 0 ? t : g;
}

DivisorClass normalize_line(const std::array<long, 4>& v, long t) {
    require_primitive(v);
    DivisorClass d;
    d.t = t;
    d.r = t_divisor(v, t);
    d.a13 = sign_normalize(v[0], v[2], t);
    // The unipotent translations shift v2 and v4 by multiples of r, so only
    // their residues mod r survive; the pair keeps an overall sign flip that
    // is independent of the one on (v1, v3).
    d.a24 = sign_normalize(v[1], v[3], d.r);
    return d;
}

std::map<long, Int> count_boundary_closed(long t) {
    ModulusProfile prof(t);  // validates odd t >= 3
    std::map<long, Int> counts;
    for (long r : prof.divisors) counts[r] = count_Phi_bar2(t / r) * count_Phi_bar2(r);
    return counts;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n, -1) {}
    int find(int x) {
        while (parent[static_cast<size_t>(x)] >= 0) {
            int p = parent[static_cast<size_t>(x)];
            int gp = parent[static_cast<size_t>(p)];
            if (gp >= 0) parent[static_cast<size_t>(x)] = gp;
            x = p;
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // union by size (parent holds -size at roots)
        if (parent[static_cast<size_t>(a)] > parent[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(a)] += parent[static_cast<size_t>(b)];
        parent[static_cast<size_t>(b)] = a;
    }
};

}  // namespace

std::map<long, Int> count_boundary_oracle(long t) {
    ModulusProfile prof(t);
    if (t > 45) throw std::length_error("count_boundary_oracle: t <= 45 enumeration guard");
    const long n = t;
    const size_t total = static_cast<size_t>(n) * static_cast<size_t>(n) *
                         static_cast<size_t>(n) * static_cast<size_t>(n);
    auto index = [n](long v1, long v2, long v3, long v4) {
        return static_cast<int>(((v1 * n + v2) * n + v3) * n + v4);
    };
    UnionFind uf(total);

    for (long v1 = 0; v1 < n; ++v1)
        for (long v2 = 0; v2 < n; ++v2)
            for (long v3 = 0; v3 < n; ++v3)
                for (long v4 = 0; v4 < n; ++v4) {
                    int self = index(v1, v2, v3, v4);
                    // unipotent translations (generators suffice; k,l,k',l'
                    // close under iteration)
                    uf.unite(self, index(v1, (v2 + v1) % n, v3, v4));
                    uf.unite(self, index(v1, (v2 + v3) % n, v3, v4));
                    uf.unite(self, index(v1, v2, v3, (v4 + v1) % n));
                    uf.unite(self, index(v1, v2, v3, (v4 + v3) % n));
                    // sign flip on (v2, v4)
                    uf.unite(self, index(v1, (n - v2) % n, v3, (n - v4) % n));
                    // global sign
                    uf.unite(self, index((n - v1) % n, (n - v2) % n, (n - v3) % n,
                                         (n - v4) % n));
                }

    std::map<long, Int> counts;
    for (long r : prof.divisors) counts[r] = 0;
    for (long v1 = 0; v1 < n; ++v1)
        for (long v2 = 0; v2 < n; ++v2)
            for (long v3 = 0; v3 < n; ++v3)
                for (long v4 = 0; v4 < n; ++v4) {
                    long g = std::gcd(std::gcd(v1, v2), std::gcd(v3, std::gcd(v4, n)));
                    if (g != 1) continue;  // not liftable to a primitive vector
                    int self = index(v1, v2, v3, v4);
                    if (uf.find(self) != self) continue;  // count roots once
                    long r = std::gcd(n, std::gcd(v1, v3));
                    if (r == 0) r = n;
                    counts[r] += 1;
                }
    return counts;
}

std::vector<std::array<long, 4>> standard_components(long t) {
    ModulusProfile prof(t);
    (void)prof;
    std::vector<std::array<long, 2>> pairs;
    for (long a = 0; a <= (t - 1) / 2; ++a)
        for (long b = 0; b < t; ++b) {
            if (std::gcd(std::gcd(a, b), t) != 1) continue;
            if (a == 0 && !(1 <= b && b <= (t - 1) / 2)) continue;
            pairs.push_back({a, b});
        }
    std::vector<std::array<long, 4>> out;
    out.reserve(2 * pairs.size());
    // Representatives must be primitive integer vectors; when gcd(a,b) > 1
    // (still coprime to t) shift one zero slot by t, which keeps every
    // residue and hence the class.
    for (const auto& [a, b] : pairs)
        out.push_back(std::gcd(a, b) == 1 ? std::array<long, 4>{0, a, 0, b}
                                          : std::array<long, 4>{t, a, 0, b});
    for (const auto& [a, b] : pairs)
        out.push_back(std::gcd(a, b) == 1 ? std::array<long, 4>{a, 0, b, 0}
                                          : std::array<long, 4>{a, t, b, 0});
    return out;
}

}  // namespace bilevel
