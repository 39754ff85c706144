#pragma once

#include <complex>
#include <span>
#include <vector>

#include "resummap/polynomial.hpp"

namespace resummap {

using Complex = std::complex<double>;

// --- coefficient functions of the exponential sectors ------------------------

// Parity rule for the leading power of the m-th sector coefficient:
// (m+1)/2 for odd m, (m+2)/2 for even m.
int rbar_beta(int m);

// Exact rational-function form of the m-th sector coefficient, defined by
// R1 = eps and the bracket recursion
//   [(-1)^m (1+eps)^m + (1+eps)] Rm = -(3+eps) sum_j Rj R(m-j).
// Exact mode is kept for small m (64-bit coefficient arithmetic).
RationalFunction rbar_exact(int m);

struct RbarTable {
    double eps = 0.0;
    std::vector<double> values; // values[m-1] = Rbar_m(eps), m = 1..m_max
};
RbarTable rbar_recursion(double eps, int m_max);

// Leading Taylor coefficients of the two sector families:
// odd: (-9)^m (2m)! / (4^m (m!)^2), even: (-9)^m / 6.
Rational leading_coeff_odd(int m);
Rational leading_coeff_even(int m);

// --- resummed sector functions ----------------------------------------------

// Closed forms of the order-0 and order-1 resummed functions of tau
// (principal branches of sqrt and log).
Complex omega_o0(Complex tau);
Complex omega_e0(Complex tau);
Complex omega_o1(Complex tau);
Complex omega_e1(Complex tau);
Complex omega_o0_deriv(Complex tau);
Complex omega_o1_deriv(Complex tau);

// False when 1 + 9 tau^2 lies within 1e-8 of the branch cut.
bool omega_branch_ok(Complex tau);

// Lattice evaluation for real tau of any magnitude, tau = sign * exp(log_mag).
// Overflow-free: switches to the exact large-argument forms when needed.
struct OmegaSet {
    double o0, e0, o1, e1;
};
OmegaSet omega_suite_real(double log_mag, int sign);

// --- transseries parameters ---------------------------------------------------

// sigma0 power series from matching the initial value 2/3 at x = 0,
// solved exactly in rational arithmetic.
struct Sigma0Series {
    std::vector<Rational> coeffs; // coeffs[j] multiplies eps^j
    double eval(double eps) const;
};
Sigma0Series solve_sigma0(int order);

// tau0(x,eps) = sigma0 sqrt(eps) exp(-A(x)/eps + x log(1+eps)/eps), A = i pi x.
// Satisfies tau0(x+eps) = -(1+eps) tau0(x).
struct Tau0 {
    Complex sigma0;
    Complex value(double x, double eps) const;
};

// --- 2-periodic approximation -------------------------------------------------

// Resummed approximation through order eps^2 with the order-2 sigma0 series.
double r2_app(double x, double eps);

// max_n |R(x+eps) - (3+eps) R(x)(1-R(x))| over the lattice, R = r2_app.
double residual_2per(double eps, long n_max);

// --- 4-periodic sector ----------------------------------------------------------

// sqrt(6) - 2, the 2- to 4-periodic stability boundary.
double eps0_static();

struct EtaParam {
    double eps0;
    double eta;
    static EtaParam from_eps(double eps);
    double eps() const;
};

// Exponential weight of the 4-periodic sector, B(x,eps) = f(eps) x - eps g(x,eps).
// The log branch is tracked along increasing eps from 0 (log(-r) = log r + i pi),
// which pins Im f = -3 pi/2 past eps = sqrt(5) - 2.
Complex f4(double eps);
Complex g4(double x, double eps);
Complex b_weight(double x, double eps);

// Parity sign sign(cos(pi x / eps)); equals (-1)^n on the lattice x = eps n.
int alpha_sign(double x, double eps);

struct ThetaConstants {
    int alpha = 1;
    double a = 0.0;
    double b = 0.0;
};
ThetaConstants theta_constants(int alpha);

// Leading resummed functions of the 4-periodic sector.
struct ThetaSet {
    Complex t1, t2, t3, t4;
};
ThetaSet theta_leading(Complex tau1, const ThetaConstants& c);
Complex theta1_deriv(Complex tau1, const ThetaConstants& c);
Complex theta3_deriv(Complex tau1, const ThetaConstants& c);

// False when b^2 tau^4 is within 1e-8 of the branch point value 1.
bool theta_branch_ok(Complex tau1, const ThetaConstants& c);

// tau1(x,eps) = sigma1 sqrt(eps) exp(-B(x,eps)/eps).
struct Tau1 {
    Complex sigma1;
    Complex value(double x, double eps) const;
};

// sigma1 = s0 + eta s1 from the 4-periodic initial-condition matching,
// exact in Q(sqrt2, sqrt3).
struct Sigma1Series {
    QuadValue s0, s1;
    double eval(double eta) const;
};
Sigma1Series solve_sigma1(int order);

// Independent numeric route: root-solve the matching condition at finite eta.
double sigma1_matching_oracle(double eta);

// 4-periodic approximation on the lattice x = eps n; requires eps > sqrt(6)-2.
double r4_app(double x, double eps);

// Double-sum form of the transseries truncated at sector m_max, for
// resummation-equivalence checks.
double partial_transseries(double x, double eps, int m_max);

} // namespace resummap
