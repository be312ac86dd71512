#pragma once

#include <cstddef>
#include <functional>

#include "hhq/funcs.hpp"

namespace hhq {

enum class Shape { Convex, Concave, Both, Neither };

const char* to_string(Shape s);

/// Result of the sampled midpoint test. `worst_violation` is the largest
/// signed violation of the reported shape's inequality over all sampled
/// pairs (negative values mean the test passed with margin). For Neither it
/// is the smaller of the two tests' violations, i.e. how far the closer
/// hypothesis missed.
struct ShapeReport {
    Shape shape = Shape::Neither;
    double worst_violation = 0.0;
    int samples = 0;
};

inline bool admits_convex(const ShapeReport& r) {
    return r.shape == Shape::Convex || r.shape == Shape::Both;
}
inline bool admits_concave(const ShapeReport& r) {
    return r.shape == Shape::Concave || r.shape == Shape::Both;
}

inline constexpr int kDefaultShapeGrid = 65;
inline constexpr double kDefaultShapeTol = 1e-10;
inline constexpr std::size_t kDefaultEvalBudget = std::size_t{1} << 20;

/// Samples g on a uniform grid and checks g((u+v)/2) against
/// (g(u)+g(v))/2 for every grid pair. A Convex/Concave verdict means "no
/// counterexample found on this grid", not a proof; Neither blocks a
/// theorem's application. Both is the affine case.
///
/// The grid midpoints of a uniform grid land on the half-step grid, so g is
/// evaluated 2*grid-1 times regardless of the pair count.
ShapeReport classify_shape(const std::function<double(double)>& g,
                           const Interval& iv, int grid = kDefaultShapeGrid,
                           double tol = kDefaultShapeTol);

/// Adaptive composite Simpson with absolute tolerance `tol`. Throws
/// NoConvergence when `max_evals` function evaluations are exhausted.
/// Deliberately a different quadrature family from the trapezoid rules this
/// library certifies.
double reference_integral(const std::function<double(double)>& f,
                          const Interval& iv, double tol,
                          std::size_t max_evals = kDefaultEvalBudget);

double reference_integral(const Fn1D& fn, const Interval& iv, double tol,
                          std::size_t max_evals = kDefaultEvalBudget);

/// Integral of fn over iv: exact antiderivative when available, otherwise
/// the Simpson oracle at tolerance `tol`.
double integral_value(const Fn1D& fn, const Interval& iv, double tol = 1e-12);

} // namespace hhq
