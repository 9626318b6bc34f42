// The 4x4 symplectic layer: congruence-group membership predicates, the
// named generators and torsion elements, characteristic polynomials mod t,
// the action on the Siegel upper half-space, the projection from the level
// group to SL(2, Z_t), and the boundary-stabilizer conjugation checks.
#pragma once

#include "bilevel/mat4.hpp"
#include "bilevel/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bilevel {

// ---------------------------------------------------------------------------
// Groups

enum class GroupTag { GammaBil, GammaNat, GammaLev, Paramodular, Principal };

struct GroupId {
    GroupTag tag = GroupTag::GammaBil;
    long principal_level = 0;  // used by Principal only
    bool tilde = false;        // conjugate by R_t: M is a member iff R_t^{-1} M R_t is

    static GroupId bil() { return {GroupTag::GammaBil, 0, false}; }
    static GroupId nat() { return {GroupTag::GammaNat, 0, false}; }
    static GroupId lev() { return {GroupTag::GammaLev, 0, false}; }
    static GroupId paramodular() { return {GroupTag::Paramodular, 0, false}; }
    static GroupId principal(long ell) { return {GroupTag::Principal, ell, false}; }
    GroupId as_tilde() const {
        GroupId g = *this;
        g.tilde = true;
        return g;
    }
};

// Entrywise congruence-pattern membership.  Throws std::invalid_argument on
// non-symplectic input.
bool member(const Mat4& m, const GroupId& g, long t);

// ---------------------------------------------------------------------------
// Generators and distinguished elements

namespace gen {

// Embedded SL2 acting on coordinates 1 and 3; requires det = 1.
Mat4 g1(long a, long b, long c, long d);

// Heisenberg-type translation; the displayed matrix corrected to be
// symplectic (row 3 is (0 0 1 -m)).
Mat4 g3(long m, long n);

// Central translation I + s*E_{24}.
Mat4 g4(long s);

// Cusp-moving conjugator for the t-divisor r | t (h = t/r):
// block-diagonal, symplectic, and (0,0,1,h) * Q_r = (0,0,0,1).
Mat4 Qr(long t, long r);

Mat4 Rt(long t);    // diag(1,1,1,t)
Mat4 zeta();        // diag(1,-1,1,-1)
Mat4 xi();          // the order-2 bielliptic involution
Mat4 minus_identity();

}  // namespace gen

// ---------------------------------------------------------------------------
// Characteristic polynomial mod t

// Coefficients of det(x*I - M), ascending degree (5 entries), reduced to
// [0, t).  Requires integral entries (paramodular denominators rejected).
std::vector<Int> charpoly_mod(const Mat4& m, long t);

// ---------------------------------------------------------------------------
// Siegel upper half-space with exact complex-rational points

struct CRat {
    Rat re, im;

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::invalid_argument("CRat: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    std::string str() const { return rat_str(re) + (im >= 0 ? "+" : "") + rat_str(im) + "i"; }
};

// Period matrix (tau1 tau2 / tau2 tau3) with positive-definite imaginary
// part, checked exactly at construction.
struct SiegelPoint {
    CRat tau1, tau2, tau3;

    SiegelPoint(CRat t1, CRat t2, CRat t3);
};

// (A Z + B)(C Z + D)^{-1}, exact; validates symmetry and positivity of the
// image.  Throws std::invalid_argument on non-symplectic M.
SiegelPoint siegel_act(const Mat4& m, const SiegelPoint& z);

// ---------------------------------------------------------------------------
// Level-group projection to SL(2, Z_t)

// The reduction (a11 a13 / a31 a33) mod t of a member of the level group;
// throws std::invalid_argument for non-members.
std::array<std::array<Int, 2>, 2> project_lev(const Mat4& m, long t);

// ---------------------------------------------------------------------------
// Boundary-stabilizer conjugation report

// The exact stabilizer congruences: gamma belongs iff Q_r g1(gamma) Q_r^{-1}
// lands in the bilevel group.  Derived entrywise; strictly contains
// Gamma(t,r) for some (t,r) (e.g. when t | h^2 the c-congruence vanishes).
bool gamma_tr_star_member_sl2(long a, long b, long c, long d, long t, long r);

struct ConjugationReport {
    long t = 0, r = 0, h = 0;
    // (a) central translations g4(rt*s) conjugate into the bilevel group
    bool a_center = false;
    // (b) Heisenberg translations g3(r*m, r*t*n) conjugate in (corrected
    //     lattice); b_tn_lattice records whether the narrower g3(r*m, t*n)
    //     family also lands inside (true exactly when r | h-1)
    bool b_heisenberg = false;
    bool b_tn_lattice = false;
    // (c) g1 of Gamma(t,r) samples conjugate in; samples outside the exact
    //     stabilizer congruences conjugate out
    bool c_in = false;
    bool c_out = false;
    // (d) for 1 < r < t: the four order-2 elements ±zeta, ±g1(-1) conjugate
    //     outside (trivially true when not applicable)
    bool d_torsion_excluded = true;
    // (e) for r = t: conj(zeta) inside; for r = 1: conj(-zeta) inside
    //     (trivially true when 1 < r < t)
    bool e_extra_invariance = true;
    // whether the exact stabilizer congruences strictly contain Gamma(t,r),
    // with a witness if so
    bool stabilizer_strict = false;
    std::string strict_witness;

    bool overall() const {
        return a_center && b_heisenberg && c_in && c_out && d_torsion_excluded &&
               e_extra_invariance;
    }
};

// Runs the full report at (t, r) with conjugation M -> Q_r M Q_r^{-1}.
ConjugationReport conjugation_checks(long t, long r);

}  // namespace bilevel
