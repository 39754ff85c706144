#include "resummap/dynamic_transseries.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "resummap/static_transseries.hpp"

namespace resummap {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);
const double kSqrt5 = std::sqrt(5.0);

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

Jet nth_derivative(const Jet& j, int n) {
    Jet d = j;
    for (int i = 0; i < n; ++i) d = d.derivative_jet();
    return d;
}

} // namespace

std::complex<double> action_A(double x) {
    return {action_A_re(x), kPi * x};
}

double action_A_re(double x) {
    if (!(x > -1.0)) throw ConfigError("action_A: x must exceed -1");
    return x - (x + 1.0) * std::log1p(x);
}

std::vector<Jet> r0_series(double x, int K, int extra) {
    if (K < 0) throw ConfigError("r0_series: K must be >= 0");
    if (!(x > -2.0)) throw ConfigError("r0_series: x must exceed -2");
    int budget = K + extra;
    Jet X = Jet::variable(x, budget);
    std::vector<Jet> r;
    r.reserve(static_cast<std::size_t>(K) + 1);
    r.push_back((X + 2.0) / (X + 3.0));
    for (int k = 1; k <= K; ++k) {
        // Every term below lands at jet order budget - k; the derivative of
        // R_{0,k-n} costs n orders, which the seed order prepaid.
        Jet acc = Jet::constant(0.0, x, budget - k);
        for (int n = 1; n <= k; ++n)
            acc = acc + (1.0 / factorial(n)) * nth_derivative(r[static_cast<std::size_t>(k - n)], n);
        for (int n = 1; n <= k - 1; ++n)
            acc = acc + (X + 3.0) * (r[static_cast<std::size_t>(n)] *
                                     r[static_cast<std::size_t>(k - n)]);
        r.push_back((-1.0 * acc) / (X + 2.0));
    }
    return r;
}

double r10(double x) {
    if (!(x > -1.0)) throw ConfigError("r10: x must exceed -1");
    double xp1 = x + 1.0;
    return 3.0 * (x + 2.0) * (x + 2.0) / (4.0 * xp1 * std::sqrt(xp1) * (x + 3.0));
}

std::vector<double> rm0_table(double x, int m_max) {
    if (m_max < 1) throw ConfigError("rm0_table: m_max must be >= 1");
    std::vector<double> r(static_cast<std::size_t>(m_max));
    r[0] = r10(x);
    double xp1 = 1.0 + x;
    for (int m = 2; m <= m_max; ++m) {
        double bracket = std::pow(xp1, m) * (m % 2 == 1 ? -1.0 : 1.0) + xp1;
        if (std::abs(bracket) < 1e-12)
            throw ResonanceError("rm0_table: vanishing bracket at m = " + std::to_string(m) +
                                     ", x = " + std::to_string(x),
                                 m, x);
        double sum = 0.0;
        for (int n = 1; n < m; ++n)
            sum += r[static_cast<std::size_t>(n - 1)] * r[static_cast<std::size_t>(m - n - 1)];
        r[static_cast<std::size_t>(m - 1)] = -(3.0 + x) * sum / bracket;
    }
    return r;
}

double overline_sigma0(double x) {
    if (x == 0.0) throw PoleError("overline_sigma0: 1/x singularity at x = 0");
    if (!(x > 0.0)) throw ConfigError("overline_sigma0: x must be positive");
    return r10(x) / x;
}

Rational sigma0_dynamic(int order) {
    if (order < 0) throw ConfigError("sigma0_dynamic: order must be >= 0");
    if (order > 0)
        throw InsufficientOrderError(
            "sigma0_dynamic: only the leading term 1/18 is available from the "
            "implemented coefficient data");
    return Rational(1, 18);
}

std::complex<double> LogComplex::to_complex() const {
    double mag = std::exp(log_mag);
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

LogComplex overline_tau0_log(double x, double eps) {
    if (!(x > 0.0)) throw ConfigError("overline_tau0: x must be positive");
    if (!(eps > 0.0)) throw ConfigError("overline_tau0: eps must be positive");
    double sigma0 = sigma0_dynamic(0).value();
    double log_mag = std::log(overline_sigma0(x)) + 0.5 * std::log(x) + std::log(sigma0 * eps) -
                     action_A_re(x) / eps;
    return {log_mag, -kPi * x / eps};
}

std::complex<double> overline_tau0(double x, double eps) {
    LogComplex lc = overline_tau0_log(x, eps);
    if (lc.log_mag > 700.0)
        throw ConsistencyError(
            "overline_tau0: magnitude exceeds double range; use overline_tau0_log");
    return lc.to_complex();
}

std::complex<double> omega0_resummed(std::complex<double> tau_bar, double x) {
    double sx = std::sqrt(x);
    return (2.0 + x) / (3.0 + x) + sx * omega_o0(tau_bar) + x * omega_e0(tau_bar) +
           x * sx * omega_o1(tau_bar) + x * x * omega_e1(tau_bar);
}

double r_app_dynamic(double x, double eps) {
    if (!(eps > 0.0)) throw ConfigError("r_app_dynamic: eps must be positive");
    if (x == 0.0) return 2.0 / 3.0;
    double nd = x / eps;
    long n = std::lround(nd);
    if (std::abs(nd - static_cast<double>(n)) > 1e-8 * std::max(1.0, std::abs(nd)) || n < 0)
        throw ConsistencyError("r_app_dynamic: x must be a lattice point eps*n");
    if (n == 0) return 2.0 / 3.0;

    LogComplex tau_log = overline_tau0_log(x, eps);
    if (tau_log.log_mag < 70.0) {
        // Complex route with the imaginary-residue check; the lattice phase is
        // taken from the integer index to keep the residue at rounding level.
        double mag = std::exp(tau_log.log_mag);
        std::complex<double> tau =
            mag * std::exp(-kI * kPi * static_cast<double>(n));
        std::complex<double> r = omega0_resummed(tau, x);
        if (std::abs(r.imag()) > 1e-10)
            throw ConsistencyError("r_app_dynamic: imaginary residue " +
                                   std::to_string(r.imag()) + " exceeds tolerance at n = " +
                                   std::to_string(n));
        return r.real();
    }
    int sign = n % 2 == 0 ? 1 : -1;
    OmegaSet o = omega_suite_real(tau_log.log_mag, sign);
    double sx = std::sqrt(x);
    return (2.0 + x) / (3.0 + x) + sx * o.o0 + x * o.e0 + x * sx * o.o1 + x * x * o.e1;
}

std::complex<double> b_dynamic(double z) {
    const double ra = kSqrt5 - 2.0;
    const double rb = kSqrt5 + 2.0;
    if (!(z >= 0.0)) throw ConfigError("b_dynamic: z must be >= 0");
    if (std::abs(z - ra) < 5e-15)
        throw PoleError("b_dynamic: z = sqrt(5) - 2 is a logarithmic branch point");
    if (!(z < rb)) throw ConfigError("b_dynamic: z must stay below sqrt(5) + 2");
    double w = ra - z;
    std::complex<double> log_w =
        w > 0.0 ? std::complex<double>(std::log(w), 0.0) : std::complex<double>(std::log(-w), kPi);
    return -kI * kPi * z + z + 0.5 * (ra - z) * log_w - 0.5 * ra * std::log(ra) -
           0.5 * (rb + z) * std::log(rb + z) + 0.5 * rb * std::log(rb);
}

std::complex<double> b_dynamic_deriv(double z) {
    double u = 1.0 - z * (4.0 + z);
    if (std::abs(u) < 5e-15) throw PoleError("b_dynamic_deriv: logarithmic branch point");
    std::complex<double> log_u =
        u > 0.0 ? std::complex<double>(std::log(u), 0.0) : std::complex<double>(std::log(-u), kPi);
    return -kI * kPi - 0.5 * log_u;
}

double find_z0() {
    const double ra = kSqrt5 - 2.0;
    double lo = ra + 1e-9;
    double hi = 2.0;
    double flo = b_dynamic(lo).real();
    double fhi = b_dynamic(hi).real();
    if (flo * fhi >= 0.0) throw Error("find_z0: Re B failed to bracket a sign change");
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        double fmid = b_dynamic(mid).real();
        if (flo * fmid <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

long onset_index(double eps) {
    if (!(eps > 0.0)) throw ConfigError("onset_index: eps must be positive");
    static const double z0 = find_z0();
    return std::lround(z0 / (2.0 * eps));
}

} // namespace resummap
