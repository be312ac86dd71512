#include "hhq/means.hpp"

#include <cmath>
#include <string>

namespace hhq {

double arithmetic_mean(double a, double b) { return 0.5 * (a + b); }

double logarithmic_mean(double a, double b) {
    if (a == 0.0 || b == 0.0)
        throw InvalidMeanInput("logarithmic_mean: requires ab != 0");
    if (std::abs(a) == std::abs(b))
        throw InvalidMeanInput("logarithmic_mean: requires |a| != |b|");
    return (b - a) / (std::log(std::abs(b)) - std::log(std::abs(a)));
}

double gen_log_mean_pow(double a, double b, long n) {
    if (n == -1 || n == 0)
        throw InvalidMeanInput("gen_log_mean_pow: n must not be -1 or 0");
    if (a == b)
        throw InvalidMeanInput("gen_log_mean_pow: requires a != b");
    if (n < 0 && (a == 0.0 || b == 0.0))
        throw InvalidMeanInput("gen_log_mean_pow: a, b != 0 when n < 0");
    return (ipow(b, n + 1) - ipow(a, n + 1)) /
           ((b - a) * static_cast<double>(n + 1));
}

namespace {

void check_signed_interval(double a, double b, const char* who) {
    if (!(a < b))
        throw InvalidMeanInput(std::string(who) + ": requires a < b");
    if (a <= 0.0 && b >= 0.0)
        throw InvalidMeanInput(std::string(who) +
                               ": requires 0 outside [a, b]");
}

ShapeReport classify_pow_hypothesis(double a, double b, long n, double q) {
    // |f'|^q for f = x^n, i.e. |n x^{n-1}|^q sampled on [a, b].
    return classify_shape(
        [n, q](double x) {
            return std::pow(std::abs(static_cast<double>(n) * ipow(x, n - 1)),
                            q);
        },
        Interval(a, b));
}

ShapeReport classify_recip_hypothesis(double a, double b, double q) {
    return classify_shape(
        [q](double x) { return std::pow(1.0 / (x * x), q); }, Interval(a, b));
}

BoundReport means_report(TheoremId id, double lhs, double rhs,
                         const ShapeReport& hyp, bool admissible, double x) {
    BoundReport r;
    r.theorem_id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.hypothesis = hyp;
    r.admissible = admissible;
    r.x = x;
    return r;
}

} // namespace

std::pair<BoundReport, BoundReport> prop31_check(double a, double b, long n,
                                                 double p, double q_b) {
    check_signed_interval(a, b, "prop31_check");
    if (std::labs(n) < 2)
        throw InvalidMeanInput("prop31_check: requires |n| >= 2");
    const HolderPair hp(p);
    if (!(q_b >= 1.0))
        throw InvalidExponent("prop31_check: q_b must be >= 1, got " +
                              std::to_string(q_b));

    const double lhs = std::abs(arithmetic_mean(ipow(a, n), ipow(b, n)) -
                                gen_log_mean_pow(a, b, n));
    const double abs_n = std::abs(static_cast<double>(n));
    const double deriv_mean =
        arithmetic_mean(ipow(std::abs(a), n - 1), ipow(std::abs(b), n - 1));

    const double rhs_holder =
        abs_n * (b - a) * holder_prefactor(p) * deriv_mean;
    const double rhs_power =
        abs_n * (b - a) * (std::pow(3.0, 1.0 - 1.0 / q_b) / 4.0) * deriv_mean;

    const double x_mid = 0.5 * (a + b);
    const ShapeReport hyp_holder = classify_pow_hypothesis(a, b, n, hp.q);
    BoundReport first = means_report(TheoremId::C22, lhs, rhs_holder,
                                     hyp_holder, admits_convex(hyp_holder),
                                     x_mid);
    first.p = hp.p;
    first.q = hp.q;
    const ShapeReport hyp_power = classify_pow_hypothesis(a, b, n, q_b);
    BoundReport second = means_report(TheoremId::C23, lhs, rhs_power,
                                      hyp_power, admits_convex(hyp_power),
                                      x_mid);
    second.q = q_b;
    return {first, second};
}

std::pair<BoundReport, BoundReport> prop32_check(double a, double b, double p,
                                                 double q_b) {
    check_signed_interval(a, b, "prop32_check");
    const HolderPair hp(p);
    if (!(q_b >= 1.0))
        throw InvalidExponent("prop32_check: q_b must be >= 1, got " +
                              std::to_string(q_b));

    const double lhs = std::abs(arithmetic_mean(1.0 / a, 1.0 / b) -
                                1.0 / logarithmic_mean(a, b));
    const double deriv_mean =
        arithmetic_mean(1.0 / (a * a), 1.0 / (b * b));

    const double rhs_holder = (b - a) * holder_prefactor(p) * deriv_mean;
    const double rhs_power =
        (b - a) * (std::pow(3.0, 1.0 - 1.0 / q_b) / 4.0) * deriv_mean;

    const double x_mid = 0.5 * (a + b);
    const ShapeReport hyp_holder = classify_recip_hypothesis(a, b, hp.q);
    BoundReport first = means_report(TheoremId::C22, lhs, rhs_holder,
                                     hyp_holder, admits_convex(hyp_holder),
                                     x_mid);
    first.p = hp.p;
    first.q = hp.q;
    const ShapeReport hyp_power = classify_recip_hypothesis(a, b, q_b);
    BoundReport second = means_report(TheoremId::C23, lhs, rhs_power,
                                      hyp_power, admits_convex(hyp_power),
                                      x_mid);
    second.q = q_b;
    return {first, second};
}

} // namespace hhq
