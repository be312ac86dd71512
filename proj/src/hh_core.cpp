#include "hhq/hh_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hhq {

HolderPair::HolderPair(double p_) : p(p_), q(0.0) {
    if (!(p > 1.0))
        throw InvalidExponent("HolderPair: p must be > 1, got " +
                              std::to_string(p));
    q = p / (p - 1.0);
}

HolderPair::HolderPair(double p_, double q_) : p(p_), q(q_) {
    if (!(p > 1.0))
        throw InvalidExponent("HolderPair: p must be > 1, got " +
                              std::to_string(p));
    if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
        throw InvalidExponent("HolderPair: 1/p + 1/q must equal 1");
}

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T21: return "t21";
        case TheoremId::T22: return "t22";
        case TheoremId::T23: return "t23";
        case TheoremId::T24: return "t24";
        case TheoremId::T25: return "t25";
        case TheoremId::C21: return "c21";
        case TheoremId::C22: return "c22";
        case TheoremId::C23: return "c23";
        case TheoremId::C24: return "c24";
        case TheoremId::R21: return "r21";
        case TheoremId::R22: return "r22";
    }
    return "?";
}

TheoremId theorem_from_string(std::string_view name) {
    for (TheoremId id :
         {TheoremId::T21, TheoremId::T22, TheoremId::T23, TheoremId::T24,
          TheoremId::T25, TheoremId::C21, TheoremId::C22, TheoremId::C23,
          TheoremId::C24, TheoremId::R21, TheoremId::R22})
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown theorem id '" + std::string(name) +
                                "'");
}

const BoundReport& require_admissible(const BoundReport& r) {
    if (!r.admissible)
        throw HypothesisFailed(
            std::string("hypothesis not admitted for ") +
            std::string(to_string(r.theorem_id)) + " (shape verdict: " +
            to_string(r.hypothesis.shape) + ")");
    return r;
}

double holder_prefactor(double p) {
    const HolderPair hp(p);
    return std::pow(1.0 / (p + 1.0), 1.0 / p) * std::pow(0.5, 1.0 / hp.q);
}

double jensen_prefactor(double q) {
    if (!(q > 1.0))
        throw InvalidExponent("jensen_prefactor: q must be > 1, got " +
                              std::to_string(q));
    return std::pow((q - 1.0) / (2.0 * q - 1.0), (q - 1.0) / q);
}

double power_mean_prefactor(double q) {
    if (!(q >= 1.0))
        throw InvalidExponent("power_mean_prefactor: q must be >= 1, got " +
                              std::to_string(q));
    return 0.5 * std::pow(1.0 / 3.0, 1.0 / q);
}

double relaxed_power_mean_prefactor(double q) {
    if (!(q >= 1.0))
        throw InvalidExponent(
            "relaxed_power_mean_prefactor: q must be >= 1, got " +
            std::to_string(q));
    return std::pow(3.0, 1.0 - 1.0 / q) / 8.0;
}

namespace {

void check_x(const Interval& iv, double x) {
    if (!(x >= iv.a && x <= iv.b))
        throw std::invalid_argument("x=" + std::to_string(x) +
                                    " outside [" + std::to_string(iv.a) +
                                    ", " + std::to_string(iv.b) + "]");
}

double abs_deriv(const Fn1D& fn, double x) { return std::abs(fn.deriv(x)); }

ShapeReport classify_abs_deriv_pow(const Fn1D& fn, const Interval& iv,
                                   double expo) {
    if (expo == 1.0)
        return classify_shape(
            [&fn](double x) { return std::abs(fn.deriv(x)); }, iv);
    return classify_shape(
        [&fn, expo](double x) {
            return std::pow(std::abs(fn.deriv(x)), expo);
        },
        iv);
}

BoundReport make_report(TheoremId id, double lhs, double rhs,
                        const ShapeReport& hyp, bool admissible) {
    BoundReport r;
    r.theorem_id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.hypothesis = hyp;
    r.admissible = admissible;
    return r;
}

} // namespace

ClassicCheck hh_classic_check(const Fn1D& fn, const Interval& iv) {
    fn.require_inside(iv);
    const ShapeReport hyp =
        classify_shape([&fn](double x) { return fn.eval(x); }, iv);
    if (!admits_convex(hyp))
        throw HypothesisFailed("hh_classic_check: '" + fn.id() +
                               "' not classified convex (verdict: " +
                               to_string(hyp.shape) + ")");
    ClassicCheck c;
    c.midpoint_value = fn.eval(iv.midpoint());
    c.mean_integral = integral_value(fn, iv) / iv.length();
    c.endpoint_avg = 0.5 * (fn.eval(iv.a) + fn.eval(iv.b));
    return c;
}

double lhs_weighted(const Fn1D& fn, const Interval& iv, double x) {
    check_x(iv, x);
    fn.require_inside(iv);
    const double weighted =
        ((iv.b - x) * fn.eval(iv.b) + (x - iv.a) * fn.eval(iv.a)) /
        iv.length();
    return std::abs(weighted - integral_value(fn, iv) / iv.length());
}

double identity_residual(const Fn1D& fn, const Interval& iv, double x,
                         double tol) {
    check_x(iv, x);
    if (!(tol > 0.0))
        throw std::invalid_argument("identity_residual: tol must be > 0");
    fn.require_inside(iv);

    const double a = iv.a;
    const double b = iv.b;
    const double width = iv.length();
    const double weighted_side =
        ((b - x) * fn.eval(b) + (x - a) * fn.eval(a)) / width -
        integral_value(fn, iv, tol) / width;

    const Interval unit(0.0, 1.0);
    const double left_integral = reference_integral(
        [&fn, x, a](double t) {
            return (t - 1.0) * fn.deriv(t * x + (1.0 - t) * a);
        },
        unit, tol);
    const double right_integral = reference_integral(
        [&fn, x, b](double t) {
            return (1.0 - t) * fn.deriv(t * x + (1.0 - t) * b);
        },
        unit, tol);
    const double parts_side = (x - a) * (x - a) / width * left_integral +
                              (b - x) * (b - x) / width * right_integral;
    return std::abs(weighted_side - parts_side);
}

BoundReport bound_t21(const Fn1D& fn, const Interval& iv, double x) {
    check_x(iv, x);
    const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, 1.0);
    const double da = abs_deriv(fn, iv.a);
    const double db = abs_deriv(fn, iv.b);
    const double dx = abs_deriv(fn, x);
    const double rhs = ((x - iv.a) * (x - iv.a) * (dx + 2.0 * da) / 6.0 +
                        (iv.b - x) * (iv.b - x) * (dx + 2.0 * db) / 6.0) /
                       iv.length();
    BoundReport r = make_report(TheoremId::T21, lhs_weighted(fn, iv, x), rhs,
                                hyp, admits_convex(hyp));
    r.x = x;
    return r;
}

BoundReport bound_t22(const Fn1D& fn, const Interval& iv, double x,
                      const HolderPair& hp) {
    check_x(iv, x);
    const double q = hp.q;
    const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, q);
    const double daq = std::pow(abs_deriv(fn, iv.a), q);
    const double dbq = std::pow(abs_deriv(fn, iv.b), q);
    const double dxq = std::pow(abs_deriv(fn, x), q);
    const double rhs =
        holder_prefactor(hp.p) *
        ((x - iv.a) * (x - iv.a) * std::pow(daq + dxq, 1.0 / q) +
         (iv.b - x) * (iv.b - x) * std::pow(dxq + dbq, 1.0 / q)) /
        iv.length();
    BoundReport r = make_report(TheoremId::T22, lhs_weighted(fn, iv, x), rhs,
                                hyp, admits_convex(hyp));
    r.p = hp.p;
    r.q = q;
    r.x = x;
    return r;
}

BoundReport bound_t23(const Fn1D& fn, const Interval& iv, double x,
                      double q) {
    check_x(iv, x);
    if (!(q > 1.0))
        throw InvalidExponent("bound_t23: q must be > 1, got " +
                              std::to_string(q));
    const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, q);
    const double rhs =
        jensen_prefactor(q) *
        ((x - iv.a) * (x - iv.a) * abs_deriv(fn, 0.5 * (iv.a + x)) +
         (iv.b - x) * (iv.b - x) * abs_deriv(fn, 0.5 * (iv.b + x))) /
        iv.length();
    BoundReport r = make_report(TheoremId::T23, lhs_weighted(fn, iv, x), rhs,
                                hyp, admits_concave(hyp));
    r.q = q;
    r.x = x;
    return r;
}

BoundReport bound_t24(const Fn1D& fn, const Interval& iv, double x,
                      double q) {
    check_x(iv, x);
    if (!(q >= 1.0))
        throw InvalidExponent("bound_t24: q must be >= 1, got " +
                              std::to_string(q));
    const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, q);
    const double daq = std::pow(abs_deriv(fn, iv.a), q);
    const double dbq = std::pow(abs_deriv(fn, iv.b), q);
    const double dxq = std::pow(abs_deriv(fn, x), q);
    const double rhs =
        power_mean_prefactor(q) *
        ((x - iv.a) * (x - iv.a) * std::pow(dxq + 2.0 * daq, 1.0 / q) +
         (iv.b - x) * (iv.b - x) * std::pow(dxq + 2.0 * dbq, 1.0 / q)) /
        iv.length();
    BoundReport r = make_report(TheoremId::T24, lhs_weighted(fn, iv, x), rhs,
                                hyp, admits_convex(hyp));
    r.q = q;
    r.x = x;
    return r;
}

BoundReport bound_t25(const Fn1D& fn, const Interval& iv, double x,
                      double gate_q) {
    check_x(iv, x);
    if (!(gate_q >= 1.0))
        throw InvalidExponent("bound_t25: gating q must be >= 1, got " +
                              std::to_string(gate_q));
    const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, gate_q);
    const double rhs =
        0.5 *
        ((x - iv.a) * (x - iv.a) * abs_deriv(fn, (x + 2.0 * iv.a) / 3.0) +
         (iv.b - x) * (iv.b - x) * abs_deriv(fn, (x + 2.0 * iv.b) / 3.0)) /
        iv.length();
    BoundReport r = make_report(TheoremId::T25, lhs_weighted(fn, iv, x), rhs,
                                hyp, admits_concave(hyp));
    r.q = gate_q;
    r.x = x;
    return r;
}

BoundReport midpoint_bound(const Fn1D& fn, const Interval& iv,
                           TheoremId variant, std::optional<double> p,
                           std::optional<double> q) {
    fn.require_inside(iv);
    const double a = iv.a;
    const double b = iv.b;
    const double width = iv.length();
    const double m = iv.midpoint();
    const double lhs = std::abs(0.5 * (fn.eval(a) + fn.eval(b)) -
                                integral_value(fn, iv) / width);
    const double da = abs_deriv(fn, a);
    const double db = abs_deriv(fn, b);

    BoundReport r;
    switch (variant) {
        case TheoremId::C21: {
            const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, 1.0);
            const double rhs =
                width / 12.0 * (da + abs_deriv(fn, m) + db);
            r = make_report(variant, lhs, rhs, hyp, admits_convex(hyp));
            break;
        }
        case TheoremId::R21: {
            const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, 1.0);
            const double rhs = width * (da + db) / 8.0;
            r = make_report(variant, lhs, rhs, hyp, admits_convex(hyp));
            break;
        }
        case TheoremId::C22: {
            if (!p)
                throw InvalidExponent("midpoint_bound(C22) requires p");
            const HolderPair hp(*p);
            const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, hp.q);
            const double daq = std::pow(da, hp.q);
            const double dbq = std::pow(db, hp.q);
            const double dmq = std::pow(abs_deriv(fn, m), hp.q);
            const double pre = holder_prefactor(hp.p);
            const double rhs =
                width / 4.0 * pre *
                (std::pow(daq + dmq, 1.0 / hp.q) +
                 std::pow(dbq + dmq, 1.0 / hp.q));
            r = make_report(variant, lhs, rhs, hyp, admits_convex(hyp));
            r.rhs_relaxed = width / 2.0 * pre * (da + db);
            r.p = hp.p;
            r.q = hp.q;
            break;
        }
        case TheoremId::C23: {
            const double qq = q.value_or(1.0);
            if (!(qq >= 1.0))
                throw InvalidExponent("midpoint_bound(C23): q must be >= 1");
            const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, qq);
            const double daq = std::pow(da, qq);
            const double dbq = std::pow(db, qq);
            const double dmq = std::pow(abs_deriv(fn, m), qq);
            const double rhs =
                width / 8.0 * std::pow(1.0 / 3.0, 1.0 / qq) *
                (std::pow(2.0 * daq + dmq, 1.0 / qq) +
                 std::pow(2.0 * dbq + dmq, 1.0 / qq));
            r = make_report(variant, lhs, rhs, hyp, admits_convex(hyp));
            r.rhs_relaxed =
                relaxed_power_mean_prefactor(qq) * width * (da + db);
            r.q = qq;
            break;
        }
        case TheoremId::R22: {
            if (!q)
                throw InvalidExponent("midpoint_bound(R22) requires q");
            if (!(*q > 1.0))
                throw InvalidExponent("midpoint_bound(R22): q must be > 1");
            const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, *q);
            const double rhs =
                jensen_prefactor(*q) * (width / 4.0) *
                (abs_deriv(fn, (3.0 * a + b) / 4.0) +
                 abs_deriv(fn, (a + 3.0 * b) / 4.0));
            r = make_report(variant, lhs, rhs, hyp, admits_concave(hyp));
            r.q = *q;
            break;
        }
        case TheoremId::C24: {
            const double gate_q = q.value_or(1.0);
            if (!(gate_q >= 1.0))
                throw InvalidExponent("midpoint_bound(C24): q must be >= 1");
            const ShapeReport hyp = classify_abs_deriv_pow(fn, iv, gate_q);
            const double rhs = width / 8.0 *
                               (abs_deriv(fn, (5.0 * a + b) / 6.0) +
                                abs_deriv(fn, (a + 5.0 * b) / 6.0));
            r = make_report(variant, lhs, rhs, hyp, admits_concave(hyp));
            r.q = gate_q;
            break;
        }
        default:
            throw std::invalid_argument(
                "midpoint_bound: variant must be one of c21, c22, c23, c24, "
                "r21, r22");
    }
    r.x = m;
    return r;
}

bool power_subadditivity(std::span<const double> as,
                         std::span<const double> bs, double s) {
    if (!(s >= 0.0 && s < 1.0))
        throw InvalidExponent("power_subadditivity: s must be in [0,1), got " +
                              std::to_string(s));
    if (as.size() != bs.size())
        throw std::invalid_argument(
            "power_subadditivity: lists must have equal length");
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i] < 0.0 || bs[i] < 0.0)
            throw std::invalid_argument(
                "power_subadditivity: entries must be nonnegative");
        lhs += std::pow(as[i] + bs[i], s);
        rhs += std::pow(as[i], s) + std::pow(bs[i], s);
    }
    return lhs <= rhs + 1e-12;
}

} // namespace hhq
