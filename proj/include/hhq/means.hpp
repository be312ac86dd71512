#pragma once

#include <utility>

#include "hhq/hh_core.hpp"

namespace hhq {

/// (a+b)/2.
double arithmetic_mean(double a, double b);

/// (b-a)/(ln|b| - ln|a|). Requires |a| != |b| and ab != 0.
double logarithmic_mean(double a, double b);

/// L_n^n(a,b) = (b^{n+1} - a^{n+1}) / ((b-a)(n+1)), i.e. the generalized
/// logarithmic mean before its 1/n root. Only the n-th power is exposed:
/// the inequalities below consume L_n^n, and real 1/n roots of a possibly
/// negative bracket have no canonical branch. Requires n not in {-1, 0}
/// and a != b; for n < 0 additionally a, b != 0.
double gen_log_mean_pow(double a, double b, long n);

/// Bounds on |A(a^n, b^n) - L_n^n(a, b)| for f(x) = x^n. The first report
/// carries the Hoelder-route rhs |n|(b-a)(1/(p+1))^{1/p}(1/2)^{1/q}
/// A(|a|^{n-1},|b|^{n-1}), the second the power-mean-route rhs
/// |n|(b-a)(3^{1-1/q_b}/4) A(|a|^{n-1},|b|^{n-1}). Requires a < b,
/// 0 outside [a,b], |n| >= 2, p > 1, q_b >= 1.
std::pair<BoundReport, BoundReport> prop31_check(double a, double b, long n,
                                                 double p, double q_b);

/// Same two routes for f(x) = 1/x: bounds on |A(1/a, 1/b) - 1/L(a, b)|
/// with A(|a|^{-2}, |b|^{-2}) on the right.
std::pair<BoundReport, BoundReport> prop32_check(double a, double b, double p,
                                                 double q_b);

} // namespace hhq
