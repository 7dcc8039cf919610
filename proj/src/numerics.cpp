#include "cogmimo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cogmimo/errors.hpp"

namespace cogmimo {

namespace {

// Power series sum_m (-1)^m (x^2/4)^m / (m!)^2, accumulated in extended
// precision; usable up to |x| ~ 12 before cancellation costs bite.
double j0_series(double x) {
    const long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int m = 1; m <= 200; ++m) {
        term *= -q / (static_cast<long double>(m) * m);
        sum += term;
        if (std::abs(term) < 1e-20L * (1.0L + std::abs(sum))) break;
    }
    return static_cast<double>(sum);
}

// Hankel expansion J0(x) ~ sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)],
// truncated at the smallest term of the asymptotic series.
double j0_asymptotic(double x) {
    const long double z = static_cast<long double>(x);
    long double p = 1.0L;
    long double q = 0.0L;
    long double u = 1.0L;  // a_m(0) / x^m with signed recurrence
    long double prev = std::numeric_limits<long double>::max();
    for (int m = 1; m <= 60; ++m) {
        const long double odd = 2.0L * m - 1.0L;
        u *= -(odd * odd) / (8.0L * m * z);
        if (std::abs(u) >= prev) break;  // asymptotic series started diverging
        prev = std::abs(u);
        if (m % 2 == 1) {
            q += ((m - 1) / 2 % 2 == 0 ? u : -u);
        } else {
            p += (m / 2 % 2 == 0 ? u : -u);
        }
        if (std::abs(u) < 1e-19L) break;
    }
    const long double chi = z - std::numbers::pi_v<long double> / 4.0L;
    const long double amp = std::sqrt(2.0L / (std::numbers::pi_v<long double> * z));
    return static_cast<double>(amp * (p * std::cos(chi) - q * std::sin(chi)));
}

// E1 by series for small arguments: -gamma - ln x + sum (-1)^{k+1} x^k/(k k!).
double e1_series(double x) {
    constexpr double euler = 0.57721566490153286060651209008240243104;
    long double sum = 0.0L;
    long double term = 1.0L;
    for (int k = 1; k <= 60; ++k) {
        term *= -static_cast<long double>(x) / k;
        sum += -term / k;
        if (std::abs(term / k) < 1e-20L * (1.0L + std::abs(sum))) break;
    }
    return static_cast<double>(-euler - std::log(static_cast<long double>(x)) + sum);
}

// E1 by the standard continued fraction (modified Lentz), good for x >= 1.
double e1_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = a * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

}  // namespace

double bessel_j0(double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_j0: non-finite argument");
    const double ax = std::abs(x);
    return ax < 12.0 ? j0_series(ax) : j0_asymptotic(ax);
}

double exponential_integral_e1(double x) {
    if (!std::isfinite(x) || x < 0.0) throw DomainError("exponential_integral_e1: argument must be finite and >= 0");
    if (x == 0.0) throw DomainError("exponential_integral_e1: diverges at 0");
    return x < 1.0 ? e1_series(x) : e1_continued_fraction(x);
}

double regularized_gamma_q(int a, double x) {
    if (a < 1) throw DomainError("regularized_gamma_q: order must be >= 1");
    if (!std::isfinite(x) || x < 0.0) throw DomainError("regularized_gamma_q: argument must be finite and >= 0");
    if (x == 0.0) return 1.0;
    // e^{-x} sum_{m<a} x^m/m!, terms scaled through logs so large orders stay finite
    double sum = 0.0;
    for (int m = 0; m < a; ++m) {
        sum += std::exp(m * std::log(x) - x - std::lgamma(m + 1.0));
    }
    return std::min(sum, 1.0);
}

double regularized_gamma_p(int a, double x) {
    if (a < 1) throw DomainError("regularized_gamma_p: order must be >= 1");
    if (!std::isfinite(x) || x < 0.0) throw DomainError("regularized_gamma_p: argument must be finite and >= 0");
    if (x == 0.0) return 0.0;
    if (x >= a + 1.0) return 1.0 - regularized_gamma_q(a, x);
    // series P(a,x) = x^a e^{-x}/Gamma(a+1) sum_m x^m / ((a+1)...(a+m))
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int m = 1; m <= 500; ++m) {
        term *= static_cast<long double>(x) / (a + m);
        sum += term;
        if (term < 1e-19L * sum) break;
    }
    const double lead = a * std::log(x) - x - std::lgamma(a + 1.0);
    return static_cast<double>(sum * std::exp(static_cast<long double>(lead)));
}

double regularized_gamma_q_difference(int a, double lo, double hi) {
    if (lo > hi) throw DomainError("regularized_gamma_q_difference: lo > hi");
    if (lo >= std::max(1.0, static_cast<double>(a))) {
        return regularized_gamma_q(a, lo) - regularized_gamma_q(a, hi);
    }
    return regularized_gamma_p(a, hi) - regularized_gamma_p(a, lo);
}

double upper_incomplete_gamma(int a, double x) {
    if (a < 0) throw DomainError("upper_incomplete_gamma: order must be a nonnegative integer");
    if (!std::isfinite(x) || x < 0.0) throw DomainError("upper_incomplete_gamma: argument must be finite and >= 0");
    if (a == 0) {
        if (x == 0.0) throw DomainError("upper_incomplete_gamma: Gamma(0, 0) diverges");
        return exponential_integral_e1(x);
    }
    return std::tgamma(static_cast<double>(a)) * regularized_gamma_q(a, x);
}

double log_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw DomainError("log_binomial: need 0 <= k <= n");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double stable_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    double sum = 0.0;
    double comp = 0.0;
    for (double t : terms) {
        const double s = sum + t;
        if (std::abs(sum) >= std::abs(t)) {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    return sum + comp;
}

}  // namespace cogmimo
