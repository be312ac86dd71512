#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hhq/analysis.hpp"
#include "hhq/funcs.hpp"

namespace hhq {

/// Strictly increasing node list x0 < x1 < ... < xn, at least two nodes.
class Partition {
  public:
    explicit Partition(std::vector<double> nodes);

    static Partition single(const Interval& iv);
    static Partition uniform(const Interval& iv, int intervals);

    std::span<const double> nodes() const { return nodes_; }
    std::size_t interval_count() const { return nodes_.size() - 1; }
    Interval cover() const { return Interval(nodes_.front(), nodes_.back()); }

  private:
    std::vector<double> nodes_;
};

enum class PropId { P41, P42, P43 };

const char* to_string(PropId id);

/// A priori error bound for one subinterval and the rule that produced it.
struct IntervalBound {
    double bound = 0.0;
    PropId theorem_used = PropId::P41;
    std::optional<double> p;
    std::optional<double> q;
};

/// Per-subinterval a priori bounds on |integral - trapezoid_sum| plus their
/// sum. Valid whenever the producing rule's shape hypothesis genuinely
/// holds on the covering interval.
struct Certificate {
    std::vector<IntervalBound> per_interval;
    double total = 0.0;
};

/// Composite trapezoid sum over the partition.
double trapezoid_sum(const Fn1D& fn, const Partition& d);

/// Hoelder-route certificate: requires |f'|^{p/(p-1)} convex on the cover
/// (p > 1). Per-interval bound uses f' at the subinterval endpoints.
Certificate error_bound_p41(const Fn1D& fn, const Partition& d, double p);

/// Jensen-route certificate: requires |f'|^q concave (q > 1). Uses f' at
/// the quarter points of each subinterval.
Certificate error_bound_p42(const Fn1D& fn, const Partition& d, double q);

/// Concave-route certificate: requires |f'|^gate_q concave (gate_q >= 1).
/// Uses f' at the sixth points; the bound itself is parameter-free.
Certificate error_bound_p43(const Fn1D& fn, const Partition& d,
                            double gate_q = 1.0);

/// Per subinterval, the smallest admissible bound over P41 with p scanned
/// on {1.1, 1.5, 2, 3, 5, 10, 50}, P42 with q in {1.5, 2, 3}, and P43.
/// Ties keep the earlier candidate (P41 < P42 < P43, then grid order).
/// Throws HypothesisFailed when no rule admits.
Certificate best_certificate(const Fn1D& fn, const Partition& d);

struct AdaptiveResult {
    double value;
    Certificate certificate;
    Partition partition;
};

/// Greedy certified refinement: repeatedly bisects the subinterval carrying
/// the largest per-interval bound until the certificate total drops to eps
/// or the node budget is reached. Shape hypotheses are classified once on
/// the whole interval (they restrict to subintervals). Deterministic for
/// fixed inputs. Throws BudgetExceeded (carrying the best partial result)
/// when max_nodes is reached with the certificate still above eps.
AdaptiveResult integrate_adaptive(const Fn1D& fn, const Interval& iv,
                                  double eps, int max_nodes);

/// Node budget exhausted; carries the partial result for diagnosis.
class BudgetExceeded : public Error {
  public:
    BudgetExceeded(const std::string& msg, AdaptiveResult partial)
        : Error(msg), partial_(std::move(partial)) {}

    const AdaptiveResult& partial() const { return partial_; }

  private:
    AdaptiveResult partial_;
};

} // namespace hhq
