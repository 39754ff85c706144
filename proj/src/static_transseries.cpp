#include "resummap/static_transseries.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "resummap/map_core.hpp"

namespace resummap {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Lattice index of x on the grid x = eps*n; throws when x is not a lattice point,
// since the resummed value is genuinely complex off the lattice.
long lattice_index(double x, double eps, const char* who) {
    double nd = x / eps;
    double rounded = std::round(nd);
    if (std::abs(nd - rounded) > 1e-8 * std::max(1.0, std::abs(nd)) || rounded < 0.0)
        throw ConsistencyError(std::string(who) +
                               ": x must be a lattice point eps*n with integer n >= 0");
    return static_cast<long>(rounded);
}

double imag_tolerance() { return 1e-10; }

} // namespace

// --- sector coefficient functions -------------------------------------------

int rbar_beta(int m) {
    if (m < 1) throw ConfigError("rbar_beta: m must be >= 1");
    return m % 2 == 1 ? (m + 1) / 2 : (m + 2) / 2;
}

namespace {

// Bracket polynomial (-1)^m (1+eps)^m + (1+eps).
Poly bracket_poly(int m) {
    Poly one_eps{Rational(1), Rational(1)};
    Poly p{Rational(1)};
    for (int i = 0; i < m; ++i) p = p * one_eps;
    if (m % 2 == 1) p = Rational(-1) * p;
    return p + one_eps;
}

} // namespace

RationalFunction rbar_exact(int m) {
    if (m < 1) throw ConfigError("rbar_exact: m must be >= 1");
    if (m > 4) throw ConfigError("rbar_exact: exact mode is kept for m <= 4; use rbar_recursion");
    static const Poly kOne{Rational(1)};
    std::vector<RationalFunction> table;
    table.push_back({Poly{Rational(0), Rational(1)}, kOne}); // R1 = eps
    Poly minus_3_eps{Rational(-3), Rational(-1)};
    for (int k = 2; k <= m; ++k) {
        RationalFunction sum{Poly{}, kOne};
        for (int j = 1; j < k; ++j)
            sum = sum + table[static_cast<std::size_t>(j - 1)] *
                            table[static_cast<std::size_t>(k - j - 1)];
        RationalFunction rhs{minus_3_eps * sum.num, sum.den};
        table.push_back({rhs.num, rhs.den * bracket_poly(k)});
    }
    return table[static_cast<std::size_t>(m - 1)];
}

RbarTable rbar_recursion(double eps, int m_max) {
    if (m_max < 1) throw ConfigError("rbar_recursion: m_max must be >= 1");
    RbarTable t;
    t.eps = eps;
    t.values.resize(static_cast<std::size_t>(m_max));
    t.values[0] = eps;
    double one_eps = 1.0 + eps;
    for (int m = 2; m <= m_max; ++m) {
        double bracket = std::pow(one_eps, m) * (m % 2 == 1 ? -1.0 : 1.0) + one_eps;
        if (std::abs(bracket) < 1e-14)
            throw ResonanceError("rbar_recursion: vanishing bracket at m = " + std::to_string(m) +
                                     ", eps = " + std::to_string(eps),
                                 m, eps);
        double sum = 0.0;
        for (int j = 1; j < m; ++j)
            sum += t.values[static_cast<std::size_t>(j - 1)] *
                   t.values[static_cast<std::size_t>(m - j - 1)];
        t.values[static_cast<std::size_t>(m - 1)] = -(3.0 + eps) * sum / bracket;
    }
    return t;
}

Rational leading_coeff_odd(int m) {
    if (m < 0) throw ConfigError("leading_coeff_odd: m must be >= 0");
    Rational r(1);
    for (int k = 1; k <= m; ++k) r *= Rational(-9) * Rational(2 * k - 1, 2 * k);
    return r;
}

Rational leading_coeff_even(int m) {
    if (m < 0) throw ConfigError("leading_coeff_even: m must be >= 0");
    if (m == 0) return Rational(0);
    Rational r(1, 6);
    for (int k = 0; k < m; ++k) r *= Rational(-9);
    return r;
}

// --- resummed sector functions -----------------------------------------------

Complex omega_o0(Complex tau) {
    Complex q = 1.0 + 9.0 * tau * tau;
    return tau / std::sqrt(q);
}

Complex omega_e0(Complex tau) {
    Complex q = 1.0 + 9.0 * tau * tau;
    return -1.5 * tau * tau / q;
}

Complex omega_o1(Complex tau) {
    Complex q = 1.0 + 9.0 * tau * tau;
    Complex l = std::log(q);
    return -tau * (45.0 * tau * tau - 33.0 * l) / (24.0 * q * std::sqrt(q));
}

Complex omega_e1(Complex tau) {
    Complex q = 1.0 + 9.0 * tau * tau;
    Complex l = std::log(q);
    return tau * tau * (14.0 + 36.0 * tau * tau - 33.0 * l) / (8.0 * q * q);
}

Complex omega_o0_deriv(Complex tau) {
    Complex q = 1.0 + 9.0 * tau * tau;
    return 1.0 / (q * std::sqrt(q));
}

Complex omega_o1_deriv(Complex tau) {
    Complex q = 1.0 + 9.0 * tau * tau;
    Complex l = std::log(q);
    Complex n = -tau * (45.0 * tau * tau - 33.0 * l);
    Complex np = -135.0 * tau * tau + 33.0 * l + 594.0 * tau * tau / q;
    return (np * q - 27.0 * tau * n) / (24.0 * q * q * std::sqrt(q));
}

bool omega_branch_ok(Complex tau) {
    Complex q = 1.0 + 9.0 * tau * tau;
    return std::abs(std::arg(q)) <= kPi - 1e-8;
}

OmegaSet omega_suite_real(double log_mag, int sign) {
    double s = sign >= 0 ? 1.0 : -1.0;
    OmegaSet r{};
    if (log_mag <= 0.0) {
        double tau = s * std::exp(log_mag); // exp(-inf) = 0 handles tau = 0
        double q = 1.0 + 9.0 * tau * tau;
        double l = std::log1p(9.0 * tau * tau);
        r.o0 = tau / std::sqrt(q);
        r.e0 = -1.5 * tau * tau / q;
        r.o1 = -tau * (45.0 * tau * tau - 33.0 * l) / (24.0 * q * std::sqrt(q));
        r.e1 = tau * tau * (14.0 + 36.0 * tau * tau - 33.0 * l) / (8.0 * q * q);
        return r;
    }
    // Forms divided through by powers of tau stay O(1) for arbitrarily large
    // magnitude; w underflows to zero harmlessly.
    double w = std::exp(-2.0 * log_mag); // 1/tau^2
    double q = w + 9.0;                  // (1 + 9 tau^2)/tau^2
    double l = std::log(9.0) + 2.0 * log_mag + std::log1p(w / 9.0);
    r.o0 = s / std::sqrt(q);
    r.e0 = -1.5 / q;
    r.o1 = -s * (45.0 - 33.0 * l * w) / (24.0 * q * std::sqrt(q));
    r.e1 = (14.0 * w + 36.0 - 33.0 * l * w) / (8.0 * q * q);
    return r;
}

// --- sigma0 series -------------------------------------------------------------

namespace {

// Taylor coefficient of tau^(2m+1) in the order-1 odd sector function,
// generated from the closed form as an exact series in v = 9 tau^2.
std::vector<Rational> omega_o1_taylor(int m_max) {
    std::size_t n = static_cast<std::size_t>(m_max) + 1;
    RatSeries bracket(n);
    RatSeries logs = series_log1p(n);
    for (std::size_t i = 0; i < n; ++i) bracket[i] = Rational(-33) * logs[i];
    if (n > 1) bracket[1] += Rational(5);
    RatSeries g = series_mul(bracket, series_binomial(Rational(-3, 2), n), n);
    std::vector<Rational> c(n);
    Rational pow9(1);
    for (std::size_t m = 0; m < n; ++m) {
        c[m] = -pow9 * g[m] / Rational(24);
        pow9 *= Rational(9);
    }
    return c;
}

// Taylor coefficient of tau^(2m) in the order-1 even sector function.
std::vector<Rational> omega_e1_taylor(int m_max) {
    std::size_t n = static_cast<std::size_t>(m_max) + 1;
    RatSeries bracket(n);
    RatSeries logs = series_log1p(n);
    for (std::size_t i = 0; i < n; ++i) bracket[i] = Rational(-33) * logs[i];
    bracket[0] += Rational(14);
    if (n > 1) bracket[1] += Rational(4);
    RatSeries h = series_mul(bracket, series_binomial(Rational(-2), n), n);
    std::vector<Rational> c(n, Rational(0));
    Rational pow9(1);
    for (std::size_t m = 1; m < n; ++m) {
        c[m] = pow9 * h[m - 1] / Rational(8);
        pow9 *= Rational(9);
    }
    return c;
}

// Residual series of the initial-value matching at x = 0: all terms of
//   R0(eps) + sqrt(eps)[O_{o,0} + eps O_{o,1}](u sqrt(eps))
//           + eps      [O_{e,0} + eps O_{e,1}](u sqrt(eps)) - 2/3
// collapse onto integer powers of eps.
RatSeries sigma0_matching_residual(const std::vector<Rational>& u, int order) {
    std::size_t n = static_cast<std::size_t>(order) + 2;
    RatSeries r0_num{Rational(2), Rational(1)};
    RatSeries r0_den{Rational(3), Rational(1)};
    RatSeries f = series_mul(r0_num, series_inv(r0_den, n), n);
    f[0] -= Rational(2, 3);

    RatSeries useries(n);
    for (std::size_t j = 0; j < u.size() && j < n; ++j) useries[j] = u[j];

    auto add_family = [&](const std::vector<Rational>& table, int k, bool odd) {
        for (int m = 0; m < static_cast<int>(table.size()); ++m) {
            if (table[static_cast<std::size_t>(m)].is_zero()) continue;
            int base = m + 1 + k;
            if (base > order + 1) break;
            int p = odd ? 2 * m + 1 : 2 * m;
            RatSeries up = series_pow(useries, p, n - static_cast<std::size_t>(base));
            for (std::size_t t = 0; t < up.size(); ++t)
                f[static_cast<std::size_t>(base) + t] += table[static_cast<std::size_t>(m)] * up[t];
        }
    };

    std::vector<Rational> o0(static_cast<std::size_t>(order) + 1);
    std::vector<Rational> e0(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        o0[static_cast<std::size_t>(m)] = leading_coeff_odd(m);
        e0[static_cast<std::size_t>(m)] = leading_coeff_even(m);
    }
    add_family(o0, 0, true);
    add_family(e0, 0, false);
    if (order >= 1) {
        add_family(omega_o1_taylor(order - 1), 1, true);
        add_family(omega_e1_taylor(order - 1), 1, false);
    }
    return f;
}

} // namespace

double Sigma0Series::eval(double eps) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * eps + it->value();
    return acc;
}

Sigma0Series solve_sigma0(int order) {
    if (order < 0) throw ConfigError("solve_sigma0: order must be >= 0");
    if (order > 2)
        throw InsufficientOrderError(
            "solve_sigma0: matching is implemented through order 2 (sector data k <= 1)");
    std::vector<Rational> u(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) {
        RatSeries f = sigma0_matching_residual(u, order);
        u[static_cast<std::size_t>(j)] = -f[static_cast<std::size_t>(j) + 1];
    }
    RatSeries check = sigma0_matching_residual(u, order);
    for (int t = 0; t <= order + 1; ++t)
        if (!check[static_cast<std::size_t>(t)].is_zero())
            throw Error("solve_sigma0: matching residual did not vanish");
    return Sigma0Series{std::move(u)};
}

namespace {

const Sigma0Series& sigma0_order2() {
    static const Sigma0Series s = solve_sigma0(2);
    return s;
}

} // namespace

// --- tau0 and the 2-periodic approximation ------------------------------------

Complex Tau0::value(double x, double eps) const {
    Complex exponent = (Complex(std::log1p(eps), -kPi)) * (x / eps);
    return sigma0 * std::sqrt(eps) * std::exp(exponent);
}

namespace {

struct R2Terms {
    double r0;
    double se;   // sqrt(eps)
    double eps;
};

double r2_from_omegas(double eps, const OmegaSet& o) {
    double se = std::sqrt(eps);
    return (2.0 + eps) / (3.0 + eps) + se * o.o0 + eps * o.e0 + eps * se * o.o1 +
           eps * eps * o.e1;
}

// Complex lattice evaluation with the imaginary-residue assertion; valid while
// |tau0| stays well inside double range.
double r2_complex_lattice(long n, double eps, double sigma0) {
    Complex tau = sigma0 * std::sqrt(eps) *
                  std::exp(Complex(std::log1p(eps), -kPi) * static_cast<double>(n));
    double se = std::sqrt(eps);
    Complex r = (2.0 + eps) / (3.0 + eps) + se * omega_o0(tau) + eps * omega_e0(tau) +
                eps * se * omega_o1(tau) + eps * eps * omega_e1(tau);
    if (std::abs(r.imag()) > imag_tolerance())
        throw ConsistencyError("r2_app: imaginary residue " + std::to_string(r.imag()) +
                               " exceeds tolerance at n = " + std::to_string(n));
    return r.real();
}

double r2_lattice(long n, double eps) {
    double sigma0 = sigma0_order2().eval(eps);
    double log_mag = std::log(std::abs(sigma0)) + 0.5 * std::log(eps) +
                     static_cast<double>(n) * std::log1p(eps);
    if (log_mag < 70.0 && n <= 10000) return r2_complex_lattice(n, eps, sigma0);
    int sign = (n % 2 == 0 ? 1 : -1) * (sigma0 >= 0.0 ? 1 : -1);
    return r2_from_omegas(eps, omega_suite_real(log_mag, sign));
}

} // namespace

double r2_app(double x, double eps) {
    if (!(eps > 0.0)) throw ConfigError("r2_app: eps must be positive");
    return r2_lattice(lattice_index(x, eps, "r2_app"), eps);
}

double residual_2per(double eps, long n_max) {
    if (n_max < 1) throw ConfigError("residual_2per: n_max must be >= 1");
    double worst = 0.0;
    double prev = r2_lattice(0, eps);
    for (long n = 1; n <= n_max; ++n) {
        double cur = r2_lattice(n, eps);
        double mapped = (3.0 + eps) * prev * (1.0 - prev);
        worst = std::max(worst, std::abs(cur - mapped));
        prev = cur;
    }
    return worst;
}

double partial_transseries(double x, double eps, int m_max) {
    if (!(eps > 0.0)) throw ConfigError("partial_transseries: eps must be positive");
    long n = lattice_index(x, eps, "partial_transseries");
    double sigma0 = sigma0_order2().eval(eps);
    Complex s = sigma0 * std::exp(Complex(std::log1p(eps), -kPi) * static_cast<double>(n));
    RbarTable table = rbar_recursion(eps, m_max);
    Complex acc = (2.0 + eps) / (3.0 + eps);
    Complex power = 1.0;
    for (int m = 1; m <= m_max; ++m) {
        power *= s;
        acc += power * table.values[static_cast<std::size_t>(m - 1)];
    }
    if (std::abs(acc.imag()) > imag_tolerance())
        throw ConsistencyError("partial_transseries: imaginary residue exceeds tolerance");
    return acc.real();
}

// --- 4-periodic sector -----------------------------------------------------------

double eps0_static() { return std::sqrt(6.0) - 2.0; }

EtaParam EtaParam::from_eps(double eps) { return {eps0_static(), (eps - eps0_static()) / std::sqrt(6.0)}; }

double EtaParam::eps() const { return eps0 + std::sqrt(6.0) * eta; }

Complex f4(double eps) {
    double u = 1.0 - eps * (4.0 + eps);
    // within a few ulps of the branch point eps = sqrt(5) - 2
    if (std::abs(u) < 5e-15)
        throw PoleError("f4: eps = sqrt(5) - 2 is a logarithmic branch point");
    Complex log_u = u > 0.0 ? Complex(std::log(u), 0.0) : Complex(std::log(-u), kPi);
    return -0.5 * log_u - kI * kPi;
}

int alpha_sign(double x, double eps) { return std::cos(kPi * x / eps) >= 0.0 ? 1 : -1; }

Complex g4(double x, double eps) {
    double st = std::sqrt(eps * (4.0 + eps));
    Complex log_ratio = st < 1.0 ? Complex(std::log((1.0 - st) / (1.0 + st)), 0.0)
                                 : Complex(std::log((st - 1.0) / (1.0 + st)), kPi);
    double saw = x / (2.0 * eps) - 0.5 * std::floor(x / eps + 0.5);
    return static_cast<double>(alpha_sign(x, eps)) * saw * log_ratio;
}

Complex b_weight(double x, double eps) { return f4(eps) * x - eps * g4(x, eps); }

ThetaConstants theta_constants(int alpha) {
    if (alpha != 1 && alpha != -1) throw ConfigError("theta_constants: alpha must be +-1");
    double al = static_cast<double>(alpha);
    double s2 = std::numbers::sqrt2;
    double s3 = std::numbers::sqrt3;
    double s6 = s2 * s3;
    ThetaConstants c;
    c.alpha = alpha;
    c.a = 0.5 * (2.0 + 2.0 * s6 - 3.0 * al * (s2 + 2.0 * s3));
    c.b = (5.0 / 6.0) * (14.0 + 4.0 * s6 - al * (7.0 * s2 + 4.0 * s3));
    return c;
}

namespace {

// Branch convention for the sector closed forms: a real argument sits on the
// cut approached from above. Lattice phases produce signed zeros that would
// otherwise flip sqrt onto the lower sheet.
Complex cut_from_above(Complex z) {
    if (z.imag() == 0.0) return {z.real(), 0.0};
    return z;
}

} // namespace

ThetaSet theta_leading(Complex tau1, const ThetaConstants& c) {
    Complex t2 = tau1 * tau1;
    Complex t4 = t2 * t2;
    Complex d = cut_from_above(1.0 - c.b * c.b * t4);
    Complex p = std::sqrt(d);
    Complex w = cut_from_above(1.0 + p);
    Complex sw = std::sqrt(w);
    double al = static_cast<double>(c.alpha);
    double rt2 = std::numbers::sqrt2;
    ThetaSet t;
    t.t1 = al * tau1 * sw / (rt2 * p);
    t.t2 = -c.a * t2 / d;
    t.t3 = -al * c.b * tau1 * t2 / (rt2 * p * sw);
    t.t4 = c.a * c.b * t4 / d;
    return t;
}

Complex theta1_deriv(Complex tau1, const ThetaConstants& c) {
    Complex t4 = tau1 * tau1 * tau1 * tau1;
    Complex d = cut_from_above(1.0 - c.b * c.b * t4);
    Complex p = std::sqrt(d);
    Complex w = cut_from_above(1.0 + p);
    Complex sw = std::sqrt(w);
    double al = static_cast<double>(c.alpha);
    double rt2 = std::numbers::sqrt2;
    return (al / rt2) * (sw / p + c.b * c.b * t4 * (p + 2.0) / (sw * p * p * p));
}

Complex theta3_deriv(Complex tau1, const ThetaConstants& c) {
    Complex t2 = tau1 * tau1;
    Complex t4 = t2 * t2;
    Complex t6 = t4 * t2;
    Complex d = cut_from_above(1.0 - c.b * c.b * t4);
    Complex p = std::sqrt(d);
    Complex w = cut_from_above(1.0 + p);
    Complex sw = std::sqrt(w);
    double al = static_cast<double>(c.alpha);
    double rt2 = std::numbers::sqrt2;
    return -(al * c.b / rt2) *
           (3.0 * t2 / (p * sw) + c.b * c.b * t6 * (2.0 * w + p) / (sw * p * p * p * w));
}

bool theta_branch_ok(Complex tau1, const ThetaConstants& c) {
    Complex t4 = tau1 * tau1 * tau1 * tau1;
    return std::abs(1.0 - c.b * c.b * t4) > 1e-8;
}

Complex Tau1::value(double x, double eps) const {
    return sigma1 * std::sqrt(eps) * std::exp(-b_weight(x, eps) / eps);
}

// --- sigma1 ---------------------------------------------------------------------

double Sigma1Series::eval(double eta) const { return s0.value() + eta * s1.value(); }

Sigma1Series solve_sigma1(int order) {
    if (order < 0) throw ConfigError("solve_sigma1: order must be >= 0");
    if (order > 1)
        throw InsufficientOrderError("solve_sigma1: matching is implemented through order 1");

    // eta-expansion coefficients of the settled branch value at x = 0,
    // exact in Q(sqrt2, sqrt3).
    const QuadValue c1{Rational(12, 50), Rational(3, 50), Rational(-16, 50), Rational(-7, 50)};
    const QuadValue c2{Rational(-114, 250), Rational(-141, 250), Rational(252, 250),
                       Rational(54, 250)};

    Sigma1Series s;
    s.s0 = -c1;
    if (order >= 1) {
        const QuadValue a{Rational(1), Rational(-3, 2), Rational(-3), Rational(1)};
        const QuadValue b{Rational(35, 3), Rational(-35, 6), Rational(-10, 3), Rational(10, 3)};
        QuadValue s0sq = s.s0 * s.s0;
        s.s1 = -c2 + Rational(1, 2) * b * s0sq * s.s0 + a * s0sq;
    }
    return s;
}

double sigma1_matching_oracle(double eta) {
    if (!(eta > 0.0)) throw ConfigError("sigma1_matching_oracle: eta must be positive");
    // Extended precision: extracting the eta-linear coefficient from the root
    // divides rounding noise by eta^2, which double precision cannot absorb.
    using LD = long double;
    const LD eta_l = static_cast<LD>(eta);
    const LD sqrt6 = std::sqrt(static_cast<LD>(6.0L));
    const LD eps0 = sqrt6 - 2.0L;
    const LD eps = eps0 + sqrt6 * eta_l;
    auto branch_value = [](LD e) {
        return (4.0L + e - std::sqrt(e * (4.0L + e))) / (2.0L * (3.0L + e));
    };
    const LD target = branch_value(eps0);
    const LD s2c = std::sqrt(static_cast<LD>(2.0L));
    const LD s3c = std::sqrt(static_cast<LD>(3.0L));
    const LD a = 0.5L * (2.0L + 2.0L * sqrt6 - 3.0L * (s2c + 2.0L * s3c));
    const LD b = (5.0L / 6.0L) * (14.0L + 4.0L * sqrt6 - (7.0L * s2c + 4.0L * s3c));
    auto residual = [&](LD sigma) {
        LD tau = sigma * std::sqrt(eta_l);
        LD u = b * tau * tau;
        LD s1 = tau / std::sqrt(1.0L + u);
        LD s2 = -a * tau * tau / (1.0L + u);
        return branch_value(eps) + std::sqrt(eta_l) * s1 + eta_l * s2 - target;
    };
    // The residual is monotone in sigma on the bracketing interval.
    LD lo = 0.0L, hi = 4.0L;
    LD flo = residual(lo);
    if (flo * residual(hi) > 0.0L)
        throw SolverError("sigma1_matching_oracle: root not bracketed");
    for (int it = 0; it < 200; ++it) {
        LD mid = 0.5L * (lo + hi);
        LD fmid = residual(mid);
        if (flo * fmid <= 0.0L) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return static_cast<double>(0.5L * (lo + hi));
}

// --- 4-periodic approximation -----------------------------------------------------

double r4_app(double x, double eps) {
    if (!(eps > eps0_static()))
        throw RegimeError("r4_app: eps <= sqrt(6) - 2 has no 4-periodic sector; use r2_app");
    long n = lattice_index(x, eps, "r4_app");

    double eta = EtaParam::from_eps(eps).eta;
    static const Sigma1Series sigma1 = solve_sigma1(1);
    double s1v = sigma1.eval(eta);

    double m = eps * (4.0 + eps) - 1.0; // > 1 in this regime
    double log_tau = std::log(s1v * std::sqrt(eps)) + 0.5 * static_cast<double>(n) * std::log(m);

    // Reduced sector sums: the full 4-sector combination collapses to
    //   S1 = alpha tau / sqrt(1 + b tau^2),  S2 = -a tau^2 / (1 + b tau^2)
    // with tau^2 carrying the lattice phase (-1)^n, so everything is real.
    int r = static_cast<int>(n % 4);
    ThetaConstants c = theta_constants(r % 2 == 0 ? 1 : -1);
    double branch_sign = (r == 0 || r == 1) ? 1.0 : -1.0;

    double s1, s2;
    if (2.0 * log_tau > 300.0) {
        s1 = branch_sign / std::sqrt(c.b);
        s2 = -c.a / c.b;
    } else {
        double tau = std::exp(log_tau);
        double u = c.b * tau * tau;
        if (r % 2 == 0) {
            s1 = branch_sign * tau / std::sqrt(1.0 + u);
            s2 = -c.a * tau * tau / (1.0 + u);
        } else {
            // Odd residues carry tau1^2 = -tau^2; u > 1 throughout the regime.
            s1 = branch_sign * tau / std::sqrt(u - 1.0);
            s2 = -c.a * tau * tau / (u - 1.0);
        }
    }
    return r2_lattice(n, eps) + std::sqrt(eta) * s1 + eta * s2;
}

} // namespace resummap
