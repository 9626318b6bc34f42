// Picard lattices of the two branch surfaces, derivation of the restriction
// and canonical-class coefficients from the intersection tables, the
// obstruction cubics Omega_1 / Omega_2 in printed and derived modes, and the
// Nakai ampleness checks backing the H_2 vanishing argument.
#pragma once

#include "bilevel/poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace bilevel {

enum class Surface { H1, H2 };

// A divisor class written in the lattice basis.  H1 basis: (S, P) for
// (Sigma_1, Psi_1); H2 basis: (S, P, R) with R the aggregate of the nu^2
// exceptional (-2)-classes.
//
// Two pairings are provided.  pairing() takes the coefficients at face
// value against the gram tables
//   H1: S^2 = P^2 = 0, S.P = 1
//   H2: S^2 = P^2 = 0, S.P = 6, S.R = P.R = 0, R^2 = -2 nu^2
// (it needs t to substitute nu).  pairing_reduced() instead reads s and p
// as carrying an implicit factor nu -- the shape every restriction and
// canonical class actually has -- so that each product is exactly
// nu^2 * (reduced value); the obstruction cubics use that grading to stay
// polynomial in t.
struct SurfaceClass {
    Surface surface = Surface::H1;
    Rat s, p, r;
};

// Reduced pairing (implicit nu on s and p, result in units of nu^2):
//   H1: s1*p2 + p1*s2
//   H2: 6*(s1*p2 + p1*s2) - 2*r1*r2
Rat pairing_reduced(const SurfaceClass& x, const SurfaceClass& y);

// Face-value pairing at a concrete odd level t (nu = phi_2(t)/2 in R^2).
Rat pairing(const SurfaceClass& x, const SurfaceClass& y, long t);

// Coefficients of the restriction class H|_H = a(S+P) [+ c2 R] and the
// canonical class K_H = b(S+P) [+ d2 R], each solved from the printed
// intersection tables rather than transcribed:
//   a  from S.H|_H = ambient value, b from K.S = 2g(S)-2, c2 from R.H|_H,
//   d2 from R.K = 0.
struct SurfaceCoeffs {
    Surface surface;
    Rat mu, nu;     // mu = t*nu, nu = phi_2(t)/2
    Rat a, b;       // numeric at the given t
    Rat c2, d2;     // zero for H1
    // reduced symbolic forms (coefficients of nu, as polynomials in t)
    Poly a_over_nu, b_over_nu;
};
SurfaceCoeffs derive_surface_coeffs(Surface s, long t);

// The printed obstruction quadratics (coefficient of nu^2 k^3, polynomial
// in t): 37t^2/864 - 7t/24 + 1/2 and 37t^2/72 - 7t/24 - 55/24.
Poly omega_H_printed(int i);

// The same coefficient recomputed from scratch: build the class
// k*K - (k/2+j)*H|_H symbolically, square it with the reduced pairing, sum
// over j = 0..k/2-1 by exact Faulhaber summation, and read off the k^3
// coefficient as a polynomial in t.
Poly omega_H_derived(int i);

// Nakai-criterion ampleness data for L_j = (k-1)K_{H2} - (k/2+j)H2|_{H2}:
// the four positivity checks, with per-curve granularity for the
// exceptional curves (rows/columns of nu curves each).
struct NakaiRecord {
    Rat L2;          // L_j^2
    Rat L_sigma2;    // L_j . Sigma_2
    Rat L_r_curve;   // L_j . R_alpha_beta  (single exceptional curve)
    Rat L_sigma_a;   // L_j . Sigma_alpha = L.Sigma_2 - nu * L.R_curve
    Rat L_psi_b;     // L_j . Psi_beta     (symmetric)
    bool ample() const {
        return L2 > 0 && L_sigma2 > 0 && L_r_curve > 0 && L_sigma_a > 0 && L_psi_b > 0;
    }
};
NakaiRecord nakai_record(long t, long k, long j);

// true iff every Nakai quantity is strictly positive.
bool nakai_check(long t, long k, long j);

}  // namespace bilevel
