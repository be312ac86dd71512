#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "hhq/analysis.hpp"
#include "hhq/funcs.hpp"

namespace hhq {

/// Slack tolerance for all LHS <= RHS verifications.
inline constexpr double kTolVerify = 1e-9;

/// Conjugate exponents with 1/p + 1/q = 1, p > 1.
struct HolderPair {
    double p;
    double q;

    /// q derived as p/(p-1). Throws InvalidExponent when p <= 1.
    explicit HolderPair(double p_);
    /// Both given; validated to be conjugate within 1e-12.
    HolderPair(double p_, double q_);
};

enum class TheoremId {
    T21,
    T22,
    T23,
    T24,
    T25,
    C21,
    C22,
    C23,
    C24,
    R21,
    R22,
};

std::string_view to_string(TheoremId id);

/// Parses "t21", "c22", "r21", ... Throws std::invalid_argument.
TheoremId theorem_from_string(std::string_view name);

/// One bound application: the weighted trapezoid deviation on the left, the
/// theorem's derivative expression on the right, and the shape verdict that
/// gates it. Reports are produced for inadmissible hypotheses too so sweeps
/// can attribute failures; `admissible` says whether the verdict admits the
/// theorem.
struct BoundReport {
    TheoremId theorem_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
    ShapeReport hypothesis;
    bool admissible = false;
    std::optional<double> p;
    std::optional<double> q;
    std::optional<double> x;
    /// Second displayed (relaxed) line of C22/C23.
    std::optional<double> rhs_relaxed;
};

/// Throws HypothesisFailed unless the report's hypothesis admits its
/// theorem; returns the report unchanged otherwise.
const BoundReport& require_admissible(const BoundReport& r);

// Shared prefactors of the bound families.
double holder_prefactor(double p);           // (1/(p+1))^{1/p} (1/2)^{1/q}
double jensen_prefactor(double q);           // ((q-1)/(2q-1))^{(q-1)/q}, q > 1
double power_mean_prefactor(double q);       // (1/2)(1/3)^{1/q}, q >= 1
double relaxed_power_mean_prefactor(double q); // 3^{1-1/q}/8, q >= 1

/// The two-sided Hermite-Hadamard check for convex f:
/// f((a+b)/2) <= mean integral <= (f(a)+f(b))/2.
struct ClassicCheck {
    double midpoint_value;
    double mean_integral;
    double endpoint_avg;
};

/// Throws HypothesisFailed when f itself is not classified convex on iv.
ClassicCheck hh_classic_check(const Fn1D& fn, const Interval& iv);

/// |((b-x)f(b) + (x-a)f(a))/(b-a) - mean integral|, the quantity every
/// bound in this module controls.
double lhs_weighted(const Fn1D& fn, const Interval& iv, double x);

/// Residual of the integration-by-parts identity behind the bounds: the
/// signed weighted deviation minus the two t-integrals of f', each
/// evaluated with the Simpson oracle at tolerance `tol`.
double identity_residual(const Fn1D& fn, const Interval& iv, double x,
                         double tol);

/// |f'| convex: rhs built from f' at x and the endpoints (weights 1:2)/6.
BoundReport bound_t21(const Fn1D& fn, const Interval& iv, double x);

/// |f'|^q convex, Hoelder route with conjugate pair hp.
BoundReport bound_t22(const Fn1D& fn, const Interval& iv, double x,
                      const HolderPair& hp);

/// |f'|^q concave (q > 1), Jensen route: f' at the half-way points.
BoundReport bound_t23(const Fn1D& fn, const Interval& iv, double x, double q);

/// |f'|^q convex (q >= 1), power-mean route.
BoundReport bound_t24(const Fn1D& fn, const Interval& iv, double x, double q);

/// |f'|^gate_q concave (gate_q >= 1): rhs from f' at the third-way points.
/// The rhs does not depend on gate_q; only the hypothesis gate does.
BoundReport bound_t25(const Fn1D& fn, const Interval& iv, double x,
                      double gate_q = 1.0);

/// The x = (a+b)/2 specializations. C22 requires p; C23, R22 and C24 take
/// q (C23/C24 default q = 1). C22 and C23 record their relaxed second line
/// in rhs_relaxed.
BoundReport midpoint_bound(const Fn1D& fn, const Interval& iv,
                           TheoremId variant,
                           std::optional<double> p = std::nullopt,
                           std::optional<double> q = std::nullopt);

/// sum (a_k + b_k)^s <= sum a_k^s + sum b_k^s + 1e-12 for 0 <= s < 1.
bool power_subadditivity(std::span<const double> as,
                         std::span<const double> bs, double s);

} // namespace hhq
