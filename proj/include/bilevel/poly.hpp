// Dense univariate polynomials over the exact rationals, with closed-form
// (Faulhaber) summation over integer ranges, plus the small bivariate helper
// needed to sum expressions like k*w/2 + w^2/6 over w = 0..k-1 symbolically.
#pragma once

#include "bilevel/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bilevel {

// Advisory variable tag; operations do not unify distinct variables.
enum class Var { k, t, j, w, x };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::k: return "k";
        case Var::t: return "t";
        case Var::j: return "j";
        case Var::w: return "w";
        case Var::x: return "x";
    }
    return "?";
}

struct Poly {
    std::vector<Rat> c;  // ascending degree; empty = zero polynomial
    Var var = Var::x;

    Poly() = default;
    explicit Poly(Var v) : var(v) {}
    Poly(std::initializer_list<Rat> coeffs, Var v = Var::x) : c(coeffs), var(v) { trim(); }

    static Poly constant(const Rat& a, Var v = Var::x) {
        Poly p(v);
        if (a != 0) p.c = {a};
        return p;
    }
    // The monomial coeff * var^deg.
    static Poly monomial(const Rat& coeff, unsigned deg, Var v) {
        Poly p(v);
        if (coeff != 0) {
            p.c.assign(deg + 1, Rat(0));
            p.c[deg] = coeff;
        }
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero poly

    Rat coeff(unsigned deg) const { return deg < c.size() ? c[deg] : Rat(0); }

    Rat eval(const Rat& x) const {
        Rat r = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(a.var);
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r(a.var);
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.var);
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& p) {
        Poly r(p.var);
        if (s == 0) return r;
        r.c = p.c;
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            Rat a = c[d];
            if (a == 0) continue;
            if (!s.empty()) s += (a > 0 ? " + " : " - ");
            else if (a < 0) s += "-";
            Rat mag = a < 0 ? Rat(-a) : a;
            bool unit = (mag == 1) && d > 0;
            if (!unit) s += rat_str(mag);
            if (d > 0) {
                if (!unit) s += "*";
                s += var_name(var);
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }
};

// coefficient of the given degree (0 if absent)
inline Rat leading_coefficient(const Poly& p, unsigned degree) { return p.coeff(degree); }

// Faulhaber closed forms: F_e(m) = sum_{j=0}^{m-1} j^e as a polynomial in m,
// for e = 0..4 (the only powers the obstruction sums ever need).
inline Poly faulhaber(unsigned e, Var v) {
    const Poly m = Poly::monomial(1, 1, v);
    const Poly one = Poly::constant(1, v);
    switch (e) {
        case 0: return m;                                                // m
        case 1: return Rat(1, 2) * (m * (m - one));                     // m(m-1)/2
        case 2: return Rat(1, 6) * (m * (m - one) * (Rat(2) * m - one)); // m(m-1)(2m-1)/6
        case 3: {
            Poly q = m * (m - one);
            return Rat(1, 4) * (q * q);                                  // m^2(m-1)^2/4
        }
        case 4: {
            Poly mm = m * m;
            Poly inner = Rat(3) * mm - Rat(3) * m - one;                 // 3m^2-3m-1
            return Rat(1, 30) * (m * (m - one) * (Rat(2) * m - one) * inner);
        }
        default:
            throw std::invalid_argument(
                "faulhaber: degree > 4 unsupported (extend the closed-form table)");
    }
}

// Exact symbolic sum  sum_{j=0}^{upper-1} p(j)  as a polynomial in upper's
// variable.  p must have degree <= 4 and upper degree <= 1.
inline Poly poly_sum_range(const Poly& p, const Poly& upper) {
    if (p.degree() > 4)
        throw std::invalid_argument(
            "poly_sum_range: summand degree > 4 unsupported (extend the Faulhaber table)");
    if (upper.degree() > 1)
        throw std::invalid_argument("poly_sum_range: upper bound must have degree <= 1");
    Poly result(upper.var);
    for (int e = 0; e <= p.degree(); ++e) {
        if (p.c[e] == 0) continue;
        // Compose F_e with the degree-<=1 bound: F_e(upper).
        Poly fe = faulhaber(static_cast<unsigned>(e), upper.var);
        Poly composed = Poly::constant(0, upper.var);
        Poly pow = Poly::constant(1, upper.var);
        for (int d = 0; d <= fe.degree(); ++d) {
            composed = composed + fe.c[d] * pow;
            pow = pow * upper;
        }
        result = result + p.c[e] * composed;
    }
    return result;
}

// Bivariate polynomial in (k, j-or-w): entry c[a][b] multiplies k^a * j^b.
// Just enough structure to build the obstruction summands and push a
// symbolic sum over the second variable back into a univariate k-polynomial.
struct PolyKW {
    std::vector<std::vector<Rat>> c;  // c[a][b] * k^a * w^b

    static PolyKW zero() { return {}; }
    static PolyKW term(const Rat& coeff, unsigned ka, unsigned wb) {
        PolyKW p;
        if (coeff == 0) return p;
        p.c.assign(ka + 1, {});
        p.c[ka].assign(wb + 1, Rat(0));
        p.c[ka][wb] = coeff;
        return p;
    }
    Rat coeff(unsigned ka, unsigned wb) const {
        if (ka >= c.size() || wb >= c[ka].size()) return 0;
        return c[ka][wb];
    }
    void add_term(const Rat& v, unsigned ka, unsigned wb) {
        if (c.size() <= ka) c.resize(ka + 1);
        if (c[ka].size() <= wb) c[ka].resize(wb + 1, Rat(0));
        c[ka][wb] += v;
    }
    friend PolyKW operator+(const PolyKW& a, const PolyKW& b) {
        PolyKW r = a;
        for (size_t i = 0; i < b.c.size(); ++i)
            for (size_t j = 0; j < b.c[i].size(); ++j) r.add_term(b.c[i][j], i, j);
        return r;
    }
    friend PolyKW operator*(const PolyKW& a, const PolyKW& b) {
        PolyKW r;
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < a.c[i].size(); ++j) {
                if (a.c[i][j] == 0) continue;
                for (size_t p = 0; p < b.c.size(); ++p)
                    for (size_t q = 0; q < b.c[p].size(); ++q)
                        if (b.c[p][q] != 0) r.add_term(a.c[i][j] * b.c[p][q], i + p, j + q);
            }
        return r;
    }
    friend PolyKW operator*(const Rat& s, const PolyKW& p) {
        PolyKW r = p;
        for (auto& row : r.c)
            for (auto& x : row) x *= s;
        return r;
    }

    // sum_{w=0}^{upper-1} of this polynomial, with upper a degree-<=1
    // polynomial in k; the second variable disappears.
    Poly sum_over_second(const Poly& upper) const {
        Poly result(upper.var);
        size_t maxw = 0;
        for (const auto& row : c) maxw = std::max(maxw, row.size());
        for (size_t b = 0; b < maxw; ++b) {
            Poly kcoef(upper.var);  // sum_a c[a][b] k^a
            for (size_t a = 0; a < c.size(); ++a)
                if (b < c[a].size() && c[a][b] != 0)
                    kcoef = kcoef + Poly::monomial(c[a][b], static_cast<unsigned>(a), upper.var);
            if (kcoef.is_zero()) continue;
            Poly jb = Poly::monomial(1, static_cast<unsigned>(b), Var::j);
            result = result + kcoef * poly_sum_range(jb, upper);
        }
        return result;
    }

    Rat eval(const Rat& kval, const Rat& wval) const {
        Rat r = 0;
        for (size_t a = 0; a < c.size(); ++a)
            for (size_t b = 0; b < c[a].size(); ++b)
                if (c[a][b] != 0) {
                    Rat term = c[a][b];
                    for (size_t i = 0; i < a; ++i) term *= kval;
                    for (size_t i = 0; i < b; ++i) term *= wval;
                    r += term;
                }
        return r;
    }
};

}  // namespace bilevel
