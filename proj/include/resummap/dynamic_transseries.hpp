#pragma once

#include <complex>
#include <vector>

#include "resummap/jet.hpp"
#include "resummap/rational.hpp"

namespace resummap {

// Action of the first exponential sector of the slowly-varying map:
// A(x) = i pi x + x - (x+1) log(x+1), so exp(-A'(x)) = -(1+x).
std::complex<double> action_A(double x);
double action_A_re(double x);

// Perturbative coefficients R_{0,k} of the non-periodic manifold as jets at x,
// k = 0..K. Jet orders shrink with k; the seed order K + extra keeps two
// derivatives of R_{0,K} available.
std::vector<Jet> r0_series(double x, int K, int extra = 2);

// First sector coefficient R_{1,0}(x) = 3(x+2)^2 / (4 (x+1)^{3/2} (x+3)).
double r10(double x);

// Higher sector coefficients R_{m,0}(x) from the bracket recursion; index m,
// 1-based. Throws ResonanceError where the bracket vanishes (x = 0, odd m).
std::vector<double> rm0_table(double x, int m_max);

// sigma0_bar(x) = R_{1,0}(x) / x.
double overline_sigma0(double x);

// Leading transseries parameter of the dynamic map: 1/18 exactly at order 0;
// higher orders are not available from the implemented coefficient data.
Rational sigma0_dynamic(int order);

// tau0_bar in log-magnitude/phase form; exp(-A(x)/eps) overflows doubles well
// inside the parameter range of interest.
struct LogComplex {
    double log_mag;
    double phase; // radians
    std::complex<double> to_complex() const;
};
LogComplex overline_tau0_log(double x, double eps);

// Convenience complex form; throws ConsistencyError when the magnitude is not
// representable (use the log form instead).
std::complex<double> overline_tau0(double x, double eps);

// Resummed leading-order map solution as a function of the translated
// variable y (the building block the approximation evaluates on-orbit).
std::complex<double> omega0_resummed(std::complex<double> tau_bar, double x);

// Transasymptotic approximation of the slowly-varying map on the lattice
// x = eps n (x = 0 returns 2/3).
double r_app_dynamic(double x, double eps);

// Exponential weight of the 4-periodic sector in the scaled variable z = 2 n eps.
// B(0) = 0; Im B'(z) = -pi below z = sqrt(5)-2 and -3 pi/2 above; Re B changes
// sign at z0.
std::complex<double> b_dynamic(double z);
std::complex<double> b_dynamic_deriv(double z);

// Root of Re B on (sqrt(5)-2, 2), bisected to 1e-10.
double find_z0();

// Predicted 4-periodic onset index n = z0 / (2 eps).
long onset_index(double eps);

} // namespace resummap
