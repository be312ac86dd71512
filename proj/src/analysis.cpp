#include "hhq/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hhq {

const char* to_string(Shape s) {
    switch (s) {
        case Shape::Convex: return "convex";
        case Shape::Concave: return "concave";
        case Shape::Both: return "both";
        case Shape::Neither: return "neither";
    }
    return "?";
}

ShapeReport classify_shape(const std::function<double(double)>& g,
                           const Interval& iv, int grid, double tol) {
    if (grid < 3) throw std::invalid_argument("classify_shape: grid < 3");
    if (!(tol >= 0.0)) throw std::invalid_argument("classify_shape: tol < 0");

    const int half_points = 2 * (grid - 1) + 1;
    std::vector<double> v(static_cast<std::size_t>(half_points));
    for (int i = 0; i < half_points; ++i) {
        const double t = static_cast<double>(i) / (half_points - 1);
        v[static_cast<std::size_t>(i)] = g(iv.a + (iv.b - iv.a) * t);
    }

    // Violation of convexity: midpoint above the chord average; of
    // concavity: below. Track the worst of each over all pairs.
    double worst_convex = -std::numeric_limits<double>::infinity();
    double worst_concave = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        for (int j = i + 1; j < grid; ++j) {
            const double mid = v[static_cast<std::size_t>(i + j)];
            const double avg = 0.5 * (v[static_cast<std::size_t>(2 * i)] +
                                      v[static_cast<std::size_t>(2 * j)]);
            worst_convex = std::max(worst_convex, mid - avg);
            worst_concave = std::max(worst_concave, avg - mid);
        }
    }

    const bool convex = worst_convex <= tol;
    const bool concave = worst_concave <= tol;

    ShapeReport r;
    r.samples = grid;
    if (convex && concave) {
        r.shape = Shape::Both;
        r.worst_violation = std::max(worst_convex, worst_concave);
    } else if (convex) {
        r.shape = Shape::Convex;
        r.worst_violation = worst_convex;
    } else if (concave) {
        r.shape = Shape::Concave;
        r.worst_violation = worst_concave;
    } else {
        r.shape = Shape::Neither;
        r.worst_violation = std::min(worst_convex, worst_concave);
    }
    return r;
}

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    std::size_t evals = 0;
    std::size_t budget = 0;

    double eval(double x) {
        if (++evals > budget)
            throw NoConvergence(
                "reference_integral: evaluation budget exhausted");
        return f(x);
    }
};

// Standard adaptive Simpson with the |S2-S1|/15 error estimate and
// Richardson correction on acceptance.
double simpson_adapt(SimpsonState& st, double a, double b, double fa,
                     double fm, double fb, double whole, double tol,
                     int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.eval(lm);
    const double frm = st.eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol)
            throw NoConvergence("reference_integral: max depth reached");
        return left + right + delta / 15.0;
    }
    return simpson_adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double reference_integral(const std::function<double(double)>& f,
                          const Interval& iv, double tol,
                          std::size_t max_evals) {
    if (!(tol > 0.0))
        throw std::invalid_argument("reference_integral: tol must be > 0");
    SimpsonState st{f, 0, max_evals};
    const double a = iv.a;
    const double b = iv.b;
    const double m = 0.5 * (a + b);
    const double fa = st.eval(a);
    const double fm = st.eval(m);
    const double fb = st.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_adapt(st, a, b, fa, fm, fb, whole, tol, 64);
}

double reference_integral(const Fn1D& fn, const Interval& iv, double tol,
                          std::size_t max_evals) {
    fn.require_inside(iv);
    return reference_integral([&fn](double x) { return fn.eval(x); }, iv, tol,
                              max_evals);
}

double integral_value(const Fn1D& fn, const Interval& iv, double tol) {
    if (fn.has_antideriv()) return exact_integral(fn, iv);
    return reference_integral(fn, iv, tol);
}

} // namespace hhq
