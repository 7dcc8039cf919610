#pragma once

#include <span>
#include <vector>

namespace cogmimo {

/// Zeroth-order Bessel function of the first kind.
/// Power series below |x| = 12, Hankel asymptotic expansion beyond;
/// absolute error <= 1e-10 on |x| <= 50.
double bessel_j0(double x);

/// Upper incomplete gamma function Gamma(a, x) for integer order a >= 0.
/// a >= 1 uses the finite sum (a-1)! e^{-x} sum_{m<a} x^m/m!;
/// a == 0 is the exponential integral E1(x). Gamma(0, 0) diverges.
double upper_incomplete_gamma(int a, double x);

/// Exponential integral E1(x) = int_x^inf e^{-t}/t dt, x > 0.
double exponential_integral_e1(double x);

/// Regularized upper gamma Q(a, x) = Gamma(a, x)/(a-1)! for integer a >= 1.
double regularized_gamma_q(int a, double x);

/// Regularized lower gamma P(a, x) = 1 - Q(a, x).
double regularized_gamma_p(int a, double x);

/// Q(a, lo) - Q(a, hi) for 0 <= lo <= hi, evaluated without the cancellation
/// the plain difference suffers when both arguments sit in the same tail.
double regularized_gamma_q_difference(int a, double lo, double hi);

/// log of the binomial coefficient C(n, k).
double log_binomial(int n, int k);

/// Compensated (Neumaier) sum after ordering by descending magnitude.
/// Consumes the buffer.
double stable_sum(std::vector<double>& terms);

}  // namespace cogmimo
