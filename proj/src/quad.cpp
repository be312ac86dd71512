#include "hhq/quad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "hhq/hh_core.hpp"

namespace hhq {

Partition::Partition(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
        throw std::invalid_argument("Partition needs at least two nodes");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw std::invalid_argument(
                "Partition nodes must be strictly increasing");
}

Partition Partition::single(const Interval& iv) {
    return Partition({iv.a, iv.b});
}

Partition Partition::uniform(const Interval& iv, int intervals) {
    if (intervals < 1)
        throw std::invalid_argument("Partition::uniform: intervals < 1");
    std::vector<double> nodes(static_cast<std::size_t>(intervals) + 1);
    for (int i = 0; i <= intervals; ++i)
        nodes[static_cast<std::size_t>(i)] =
            iv.a + (iv.b - iv.a) * static_cast<double>(i) / intervals;
    nodes.front() = iv.a;
    nodes.back() = iv.b;
    return Partition(std::move(nodes));
}

const char* to_string(PropId id) {
    switch (id) {
        case PropId::P41: return "p41";
        case PropId::P42: return "p42";
        case PropId::P43: return "p43";
    }
    return "?";
}

double trapezoid_sum(const Fn1D& fn, const Partition& d) {
    fn.require_inside(d.cover());
    const auto nodes = d.nodes();
    double sum = 0.0;
    double prev = fn.eval(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double cur = fn.eval(nodes[i]);
        sum += 0.5 * (prev + cur) * (nodes[i] - nodes[i - 1]);
        prev = cur;
    }
    return sum;
}

namespace {

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

// One admissible (rule, parameter) pair with its constant prefactor.
struct Candidate {
    PropId prop;
    double param = 0.0; // p for P41, q for P42, unused for P43
    double prefactor = 0.0;
};

double candidate_bound(const Fn1D& fn, const Candidate& c, double lo,
                       double hi) {
    const double width = hi - lo;
    switch (c.prop) {
        case PropId::P41:
            return c.prefactor * 0.5 * width * width *
                   (abs_deriv(fn, lo) + abs_deriv(fn, hi));
        case PropId::P42:
            return c.prefactor * 0.25 * width * width *
                   (abs_deriv(fn, (3.0 * lo + hi) / 4.0) +
                    abs_deriv(fn, (lo + 3.0 * hi) / 4.0));
        case PropId::P43:
            return c.prefactor * width * width *
                   (abs_deriv(fn, (5.0 * lo + hi) / 6.0) +
                    abs_deriv(fn, (lo + 5.0 * hi) / 6.0));
    }
    return 0.0;
}

IntervalBound to_interval_bound(const Candidate& c, double bound) {
    IntervalBound ib;
    ib.bound = bound;
    ib.theorem_used = c.prop;
    if (c.prop == PropId::P41) {
        ib.p = c.param;
        ib.q = c.param / (c.param - 1.0);
    } else if (c.prop == PropId::P42) {
        ib.q = c.param;
    }
    return ib;
}

IntervalBound best_interval_bound(const Fn1D& fn,
                                  std::span<const Candidate> cands, double lo,
                                  double hi) {
    IntervalBound best;
    bool have = false;
    for (const Candidate& c : cands) {
        const double b = candidate_bound(fn, c, lo, hi);
        if (!have || b < best.bound) {
            best = to_interval_bound(c, b);
            have = true;
        }
    }
    return best;
}

constexpr double kPGrid[] = {1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0};
constexpr double kQGrid[] = {1.5, 2.0, 3.0};

std::vector<Candidate> admissible_candidates(const Fn1D& fn,
                                             const Interval& iv) {
    std::vector<Candidate> cands;
    for (double p : kPGrid) {
        const double q = p / (p - 1.0);
        if (admits_convex(classify_abs_deriv_pow(fn, iv, q)))
            cands.push_back({PropId::P41, p, holder_prefactor(p)});
    }
    for (double q : kQGrid) {
        if (admits_concave(classify_abs_deriv_pow(fn, iv, q)))
            cands.push_back({PropId::P42, q, jensen_prefactor(q)});
    }
    if (admits_concave(classify_abs_deriv_pow(fn, iv, 1.0)))
        cands.push_back({PropId::P43, 0.0, 0.125});
    return cands;
}

Certificate map_certificate(const Fn1D& fn, const Partition& d,
                            const Candidate& c) {
    const auto nodes = d.nodes();
    Certificate cert;
    cert.per_interval.reserve(d.interval_count());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double b = candidate_bound(fn, c, nodes[i], nodes[i + 1]);
        cert.per_interval.push_back(to_interval_bound(c, b));
        cert.total += b;
    }
    return cert;
}

} // namespace

Certificate error_bound_p41(const Fn1D& fn, const Partition& d, double p) {
    if (!(p > 1.0))
        throw InvalidExponent("error_bound_p41: p must be > 1, got " +
                              std::to_string(p));
    fn.require_inside(d.cover());
    const double q = p / (p - 1.0);
    if (!admits_convex(classify_abs_deriv_pow(fn, d.cover(), q)))
        throw HypothesisFailed(
            "error_bound_p41: |f'|^" + std::to_string(q) +
            " not classified convex on the covering interval");
    return map_certificate(fn, d, {PropId::P41, p, holder_prefactor(p)});
}

Certificate error_bound_p42(const Fn1D& fn, const Partition& d, double q) {
    if (!(q > 1.0))
        throw InvalidExponent("error_bound_p42: q must be > 1, got " +
                              std::to_string(q));
    fn.require_inside(d.cover());
    if (!admits_concave(classify_abs_deriv_pow(fn, d.cover(), q)))
        throw HypothesisFailed(
            "error_bound_p42: |f'|^" + std::to_string(q) +
            " not classified concave on the covering interval");
    return map_certificate(fn, d, {PropId::P42, q, jensen_prefactor(q)});
}

Certificate error_bound_p43(const Fn1D& fn, const Partition& d,
                            double gate_q) {
    if (!(gate_q >= 1.0))
        throw InvalidExponent("error_bound_p43: gating q must be >= 1, got " +
                              std::to_string(gate_q));
    fn.require_inside(d.cover());
    if (!admits_concave(classify_abs_deriv_pow(fn, d.cover(), gate_q)))
        throw HypothesisFailed(
            "error_bound_p43: |f'|^" + std::to_string(gate_q) +
            " not classified concave on the covering interval");
    return map_certificate(fn, d, {PropId::P43, 0.0, 0.125});
}

Certificate best_certificate(const Fn1D& fn, const Partition& d) {
    fn.require_inside(d.cover());
    const std::vector<Candidate> cands = admissible_candidates(fn, d.cover());
    if (cands.empty())
        throw HypothesisFailed(
            "best_certificate: no trapezoid error rule admits for '" +
            fn.id() + "' on the covering interval");
    const auto nodes = d.nodes();
    Certificate cert;
    cert.per_interval.reserve(d.interval_count());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        cert.per_interval.push_back(
            best_interval_bound(fn, cands, nodes[i], nodes[i + 1]));
        cert.total += cert.per_interval.back().bound;
    }
    return cert;
}

AdaptiveResult integrate_adaptive(const Fn1D& fn, const Interval& iv,
                                  double eps, int max_nodes) {
    if (!(eps > 0.0))
        throw std::invalid_argument("integrate_adaptive: eps must be > 0");
    if (max_nodes < 2)
        throw std::invalid_argument("integrate_adaptive: max_nodes < 2");
    fn.require_inside(iv);

    const std::vector<Candidate> cands = admissible_candidates(fn, iv);
    if (cands.empty())
        throw HypothesisFailed(
            "integrate_adaptive: no trapezoid error rule admits for '" +
            fn.id() + "' on [" + std::to_string(iv.a) + ", " +
            std::to_string(iv.b) + "]");

    struct Seg {
        double lo, hi;
        IntervalBound ib;
        std::uint64_t stamp;
    };
    // Max-heap on (bound, then leftmost lo); stamps invalidate entries of
    // segments that have since been split.
    struct Entry {
        double bound;
        double lo;
        std::size_t index;
        std::uint64_t stamp;
    };
    struct EntryLess {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.bound != b.bound) return a.bound < b.bound;
            return a.lo > b.lo;
        }
    };

    std::vector<Seg> segs;
    std::priority_queue<Entry, std::vector<Entry>, EntryLess> heap;
    std::uint64_t next_stamp = 0;

    auto push_seg = [&](std::size_t index) {
        heap.push({segs[index].ib.bound, segs[index].lo, index,
                   segs[index].stamp});
    };

    segs.push_back(
        {iv.a, iv.b, best_interval_bound(fn, cands, iv.a, iv.b), next_stamp++});
    push_seg(0);

    int nodes = 2;
    double running_total = segs[0].ib.bound;
    for (;;) {
        while (running_total > eps && nodes < max_nodes) {
            Entry top = heap.top();
            heap.pop();
            if (top.stamp != segs[top.index].stamp) continue; // stale
            const Seg seg = segs[top.index];
            const double mid = 0.5 * (seg.lo + seg.hi);
            Seg left{seg.lo, mid, best_interval_bound(fn, cands, seg.lo, mid),
                     next_stamp++};
            Seg right{mid, seg.hi,
                      best_interval_bound(fn, cands, mid, seg.hi),
                      next_stamp++};
            running_total += left.ib.bound + right.ib.bound - seg.ib.bound;
            segs[top.index] = left;
            segs.push_back(right);
            push_seg(top.index);
            push_seg(segs.size() - 1);
            ++nodes;
        }
        // Incremental totals drift; re-check against an exact re-sum before
        // declaring success or giving up.
        double exact = 0.0;
        for (const Seg& s : segs) exact += s.ib.bound;
        running_total = exact;
        if (running_total <= eps || nodes >= max_nodes) break;
    }

    std::sort(segs.begin(), segs.end(),
              [](const Seg& a, const Seg& b) { return a.lo < b.lo; });
    std::vector<double> node_list;
    node_list.reserve(segs.size() + 1);
    Certificate cert;
    cert.per_interval.reserve(segs.size());
    node_list.push_back(segs.front().lo);
    for (const Seg& s : segs) {
        node_list.push_back(s.hi);
        cert.per_interval.push_back(s.ib);
        cert.total += s.ib.bound;
    }
    Partition partition(std::move(node_list));
    const double value = trapezoid_sum(fn, partition);

    if (cert.total > eps)
        throw BudgetExceeded(
            "integrate_adaptive: certificate " + std::to_string(cert.total) +
                " still above eps " + std::to_string(eps) + " at " +
                std::to_string(nodes) + " nodes",
            AdaptiveResult{value, std::move(cert), std::move(partition)});
    return AdaptiveResult{value, std::move(cert), std::move(partition)};
}

} // namespace hhq
