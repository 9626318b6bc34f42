#include "bilevel/surfaces.hpp"

#include <stdexcept>

#include "bilevel/dimensions.hpp"

namespace bilevel {

namespace {

void check_same_lattice(const SurfaceClass& x, const SurfaceClass& y) {
    if (x.surface != y.surface)
        throw std::invalid_argument("pairing: classes live on different surfaces");
    if (x.surface == Surface::H1 && (x.r != 0 || y.r != 0))
        throw std::invalid_argument("pairing: H1 has no exceptional class");
}

}  // namespace

Rat pairing_reduced(const SurfaceClass& x, const SurfaceClass& y) {
    check_same_lattice(x, y);
    Rat cross = x.s * y.p + x.p * y.s;
    if (x.surface == Surface::H1) return cross;
    return Rat(6) * cross - Rat(2) * x.r * y.r;
}

Rat pairing(const SurfaceClass& x, const SurfaceClass& y, long t) {
    check_same_lattice(x, y);
    Rat cross = x.s * y.p + x.p * y.s;
    if (x.surface == Surface::H1) return cross;
    Rat nu(nu_value(t));
    return Rat(6) * cross - Rat(2) * nu * nu * x.r * y.r;
}

SurfaceCoeffs derive_surface_coeffs(Surface surf, long t) {
    if (t < 3 || t % 2 == 0)
        throw std::invalid_argument("derive_surface_coeffs: t must be odd and >= 3");
    SurfaceCoeffs sc;
    sc.surface = surf;
    sc.nu = Rat(nu_value(t));
    sc.mu = Rat(t) * sc.nu;

    // Gram entries needed for the solve.
    const Rat sp = (surf == Surface::H1) ? Rat(1) : Rat(6);  // S.P
    const Rat rr = Rat(-2) * sc.nu * sc.nu;                  // R.R (aggregate)

    // Restriction class H|_H = a(S+P) + c2 R, solved from
    //   S.H|_H = ambient S.H   and   R.H|_H = ambient R.H.
    const Rat ambient_sigma_H = (surf == Surface::H1) ? Rat(-sc.mu / 6) : Rat(-sc.mu);
    sc.a = ambient_sigma_H / sp;
    if (surf == Surface::H2) {
        const Rat ambient_R_H = Rat(-4) * sc.nu * sc.nu;
        sc.c2 = ambient_R_H / rr;
    } else {
        sc.c2 = 0;
    }

    // Canonical class K = b(S+P) + d2 R, solved from
    //   K.S = 2g(S) - 2   and   R.K = 0,
    // with the genus relations 2g(S1)-2 = mu/6 - nu and 2g(S2)-2 = mu - nu/2.
    const Rat two_g_minus_2 =
        (surf == Surface::H1) ? Rat(sc.mu / 6 - sc.nu) : Rat(sc.mu - sc.nu / 2);
    sc.b = two_g_minus_2 / sp;
    sc.d2 = (surf == Surface::H2) ? Rat(0) / rr : Rat(0);

    // Symbolic reduced forms (coefficients of nu, polynomials in t).
    sc.a_over_nu = Poly({Rat(0), Rat(-1, 6)}, Var::t);
    sc.b_over_nu = (surf == Surface::H1) ? Poly({Rat(-1), Rat(1, 6)}, Var::t)
                                         : Poly({Rat(-1, 12), Rat(1, 6)}, Var::t);
    if (sc.a != sc.nu * sc.a_over_nu.eval(Rat(t)) || sc.b != sc.nu * sc.b_over_nu.eval(Rat(t)))
        throw std::logic_error("derive_surface_coeffs: symbolic/numeric mismatch");
    return sc;
}

Poly omega_H_printed(int i) {
    if (i == 1) return Poly({Rat(1, 2), Rat(-7, 24), Rat(37, 864)}, Var::t);
    if (i == 2) return Poly({Rat(-55, 24), Rat(-7, 24), Rat(37, 72)}, Var::t);
    throw std::invalid_argument("omega_H_printed: i must be 1 or 2");
}

namespace {

// Bivariate (k, j) polynomial with coefficients that are polynomials in t:
// c[d] is the PolyKW multiplying t^d.  Just enough arithmetic to square the
// obstruction classes and push the j-sum through per t-degree.
struct TPoly {
    std::vector<PolyKW> c;

    void add_term(const Rat& v, unsigned tdeg, unsigned ka, unsigned jb) {
        if (v == 0) return;
        if (c.size() <= tdeg) c.resize(tdeg + 1);
        c[tdeg].add_term(v, ka, jb);
    }
    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        TPoly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
        for (size_t d = 0; d < b.c.size(); ++d) r.c[d] = r.c[d] + b.c[d];
        return r;
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        TPoly r;
        if (a.c.empty() || b.c.empty()) return r;
        r.c.resize(a.c.size() + b.c.size() - 1);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        return r;
    }
    friend TPoly operator*(const Rat& s, const TPoly& p) {
        TPoly r = p;
        for (auto& q : r.c) q = s * q;
        return r;
    }
};

// The linear form  A(t)*k + B(t)*j  as a TPoly.
TPoly linear_form(const Poly& A, const Poly& B) {
    TPoly r;
    for (int d = 0; d <= A.degree(); ++d) r.add_term(A.coeff(d), d, 1, 0);
    for (int d = 0; d <= B.degree(); ++d) r.add_term(B.coeff(d), d, 0, 1);
    return r;
}

}  // namespace

Poly omega_H_derived(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("omega_H_derived: i must be 1 or 2");
    const Surface surf = (i == 1) ? Surface::H1 : Surface::H2;
    // The coefficient polynomials do not depend on t's value; any valid t
    // recovers the symbolic a/nu and b/nu forms.
    const SurfaceCoeffs sc = derive_surface_coeffs(surf, 7);

    // L_j = k*K - (k/2 + j)*H|_H.  In reduced coordinates (implicit nu on
    // S and P) the (S+P)-coefficient is
    //   xt = (b/nu - a/(2 nu)) * k + (-a/nu) * j
    // and the R-coefficient is  z = (k d2 - (k/2+j) c2)  (t-free).
    const Poly A = sc.b_over_nu - Rat(1, 2) * sc.a_over_nu;
    const Poly B = Rat(-1) * sc.a_over_nu;
    const TPoly xt = linear_form(A, B);

    TPoly half_L2;  // (1/2) L^2 in units of nu^2
    if (surf == Surface::H1) {
        // reduced L^2 = 2 xt^2
        half_L2 = xt * xt;
    } else {
        // reduced L^2 = 12 xt^2 - 2 z^2 with z = -(k + 2j) (c2 = 2, d2 = 0)
        TPoly z;
        z.add_term(sc.d2 - sc.c2 / 2, 0, 1, 0);
        z.add_term(-sc.c2, 0, 0, 1);
        half_L2 = Rat(6) * (xt * xt) + Rat(-1) * (z * z);
    }

    // Sum over j = 0 .. k/2 - 1 and keep the k^3 coefficient, per t-degree.
    const Poly upper = Poly::monomial(Rat(1, 2), 1, Var::k);
    Poly result(Var::t);
    for (size_t d = 0; d < half_L2.c.size(); ++d) {
        Poly in_k = half_L2.c[d].sum_over_second(upper);
        result = result + Poly::monomial(in_k.coeff(3), static_cast<unsigned>(d), Var::t);
    }
    return result;
}

NakaiRecord nakai_record(long t, long k, long j) {
    if (t < 3 || t % 2 == 0) throw std::invalid_argument("nakai_record: t must be odd and >= 3");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("nakai_record: k must be even and >= 2");
    if (j < 0 || 2 * j >= k) throw std::invalid_argument("nakai_record: j out of range [0, k/2)");
    const SurfaceCoeffs sc = derive_surface_coeffs(Surface::H2, t);
    const Rat nu = sc.nu;

    // L_j = (k-1) K - (k/2 + j) H|_H, reduced coordinates as above.
    const Rat xt = Rat(k - 1) * sc.b_over_nu.eval(Rat(t)) -
                   (Rat(k, 2) + j) * sc.a_over_nu.eval(Rat(t));
    const Rat z = Rat(k - 1) * sc.d2 - (Rat(k, 2) + j) * sc.c2;

    NakaiRecord nr;
    nr.L2 = nu * nu * (Rat(12) * xt * xt - Rat(2) * z * z);
    nr.L_sigma2 = Rat(6) * nu * xt;
    nr.L_r_curve = Rat(-2) * z;
    nr.L_sigma_a = nr.L_sigma2 - nu * nr.L_r_curve;
    nr.L_psi_b = nr.L_sigma_a;
    return nr;
}

bool nakai_check(long t, long k, long j) { return nakai_record(t, k, j).ample(); }

}  // namespace bilevel
