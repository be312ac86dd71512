#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "hhq/hh_core.hpp"
#include "hhq/means.hpp"
#include "hhq/quad.hpp"
#include "record.hpp"

namespace {

using hhq::BoundReport;
using hhq::Fn1D;
using hhq::Interval;
using hhq::TheoremId;
using hhq::cli::Record;
using hhq::cli::Value;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitBudgetExceeded = 3;

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct OutputOptions {
    std::string format = "json";
    bool no_timestamp = false;
    long long seed = 0;
};

Record make_meta(const std::string& command, const OutputOptions& out) {
    Record meta;
    meta.emplace_back("command", Value::of(command));
    meta.emplace_back("seed", Value::of_int(out.seed));
    if (!out.no_timestamp)
        meta.emplace_back("timestamp", Value::of(iso_timestamp()));
    return meta;
}

Value opt_num(const std::optional<double>& v) {
    return v ? Value::of(*v) : Value::null();
}

Record bound_record(const std::string& fn_id, double a, double b,
                    const BoundReport& r) {
    Record rec;
    rec.emplace_back("theorem", Value::of(std::string(to_string(r.theorem_id))));
    rec.emplace_back("fn", Value::of(fn_id));
    rec.emplace_back("a", Value::of(a));
    rec.emplace_back("b", Value::of(b));
    rec.emplace_back("x", opt_num(r.x));
    rec.emplace_back("p", opt_num(r.p));
    rec.emplace_back("q", opt_num(r.q));
    rec.emplace_back("lhs", Value::of(r.lhs));
    rec.emplace_back("rhs", Value::of(r.rhs));
    rec.emplace_back("rhs_relaxed", opt_num(r.rhs_relaxed));
    rec.emplace_back("slack", Value::of(r.slack));
    rec.emplace_back("hypothesis", Value::of(to_string(r.hypothesis.shape)));
    rec.emplace_back("admissible", Value::of_bool(r.admissible));
    return rec;
}

void emit(std::ostream& os, const OutputOptions& out, const Record& meta,
          const std::vector<Record>& records) {
    if (out.format == "csv")
        hhq::cli::write_csv(os, records);
    else
        hhq::cli::write_json(os, meta, records);
}

// ---------------------------------------------------------------- verify --

struct SweepRow {
    std::string fn;
    double a, b, x;
    int theorem_rank;
    double p_key, q_key;
    BoundReport report;
};

const std::vector<double> kSweepP = {1.5, 2.0, 3.0};
const std::vector<double> kSweepQ = {1.0, 1.5, 2.0, 3.0};
const std::vector<double> kSweepQStrict = {1.5, 2.0, 3.0};

int run_verify(const OutputOptions& out) {
    std::vector<const Fn1D*> fns;
    for (const Fn1D& fn : hhq::corpus()) fns.push_back(&fn);
    std::sort(fns.begin(), fns.end(),
              [](const Fn1D* a, const Fn1D* b) { return a->id() < b->id(); });

    std::vector<SweepRow> rows;
    auto add = [&rows](const Fn1D& fn, const Interval& iv,
                       const BoundReport& r) {
        rows.push_back({fn.id(), iv.a, iv.b, r.x.value_or(iv.midpoint()),
                        static_cast<int>(r.theorem_id), r.p.value_or(-1.0),
                        r.q.value_or(-1.0), r});
    };

    for (const Fn1D* fn : fns) {
        const Interval iv = hhq::default_interval(*fn);
        for (int k = 0; k <= 10; ++k) {
            const double x = iv.a + (iv.b - iv.a) * k / 10.0;
            add(*fn, iv, hhq::bound_t21(*fn, iv, x));
            for (double p : kSweepP)
                add(*fn, iv, hhq::bound_t22(*fn, iv, x, hhq::HolderPair(p)));
            for (double q : kSweepQStrict)
                add(*fn, iv, hhq::bound_t23(*fn, iv, x, q));
            for (double q : kSweepQ)
                add(*fn, iv, hhq::bound_t24(*fn, iv, x, q));
            for (double q : kSweepQ)
                add(*fn, iv, hhq::bound_t25(*fn, iv, x, q));
        }
        add(*fn, iv, hhq::midpoint_bound(*fn, iv, TheoremId::C21));
        add(*fn, iv, hhq::midpoint_bound(*fn, iv, TheoremId::R21));
        for (double p : kSweepP)
            add(*fn, iv, hhq::midpoint_bound(*fn, iv, TheoremId::C22, p));
        for (double q : kSweepQ)
            add(*fn, iv,
                hhq::midpoint_bound(*fn, iv, TheoremId::C23, std::nullopt, q));
        for (double q : kSweepQ)
            add(*fn, iv,
                hhq::midpoint_bound(*fn, iv, TheoremId::C24, std::nullopt, q));
        for (double q : kSweepQStrict)
            add(*fn, iv,
                hhq::midpoint_bound(*fn, iv, TheoremId::R22, std::nullopt, q));
    }

    // Canonical record order so any internal parallelism stays unobservable.
    std::sort(rows.begin(), rows.end(), [](const SweepRow& l,
                                           const SweepRow& r) {
        return std::tie(l.fn, l.a, l.b, l.x, l.theorem_rank, l.p_key, l.q_key) <
               std::tie(r.fn, r.a, r.b, r.x, r.theorem_rank, r.p_key, r.q_key);
    });

    long long failures = 0;
    std::vector<Record> records;
    records.reserve(rows.size());
    for (const SweepRow& row : rows) {
        if (row.report.admissible && row.report.slack < -hhq::kTolVerify)
            ++failures;
        records.push_back(bound_record(row.fn, row.a, row.b, row.report));
    }

    Record meta = make_meta("verify", out);
    meta.emplace_back("failures", Value::of_int(failures));
    meta.emplace_back("record_count",
                      Value::of_int(static_cast<long long>(records.size())));
    emit(std::cout, out, meta, records);
    return failures == 0 ? 0 : kExitVerifyFailure;
}

// ---------------------------------------------------------------- bounds --

struct BoundsConfig {
    std::string fn_id;
    std::string theorem;
    std::optional<double> a, b, x, p, q;
};

int run_bounds(const BoundsConfig& cfg, const OutputOptions& out) {
    const Fn1D fn = hhq::find_fn(cfg.fn_id);
    const Interval iv = (cfg.a && cfg.b) ? Interval(*cfg.a, *cfg.b)
                                         : hhq::default_interval(fn);
    const double x = cfg.x.value_or(iv.midpoint());
    const TheoremId id = hhq::theorem_from_string(cfg.theorem);

    BoundReport report;
    switch (id) {
        case TheoremId::T21:
            report = hhq::bound_t21(fn, iv, x);
            break;
        case TheoremId::T22:
            if (!cfg.p) throw std::invalid_argument("t22 requires --p");
            report = hhq::bound_t22(fn, iv, x, hhq::HolderPair(*cfg.p));
            break;
        case TheoremId::T23:
            if (!cfg.q) throw std::invalid_argument("t23 requires --q");
            report = hhq::bound_t23(fn, iv, x, *cfg.q);
            break;
        case TheoremId::T24:
            report = hhq::bound_t24(fn, iv, x, cfg.q.value_or(1.0));
            break;
        case TheoremId::T25:
            report = hhq::bound_t25(fn, iv, x, cfg.q.value_or(1.0));
            break;
        case TheoremId::R22:
            if (!cfg.q) throw std::invalid_argument("r22 requires --q");
            [[fallthrough]];
        default:
            report = hhq::midpoint_bound(fn, iv, id, cfg.p, cfg.q);
            break;
    }

    emit(std::cout, out, make_meta("bounds", out),
         {bound_record(fn.id(), iv.a, iv.b, report)});
    return 0;
}

// -------------------------------------------------------------- identity --

struct IdentityConfig {
    std::string fn_id;
    std::optional<double> a, b, x;
    double tol = 1e-10;
};

int run_identity(const IdentityConfig& cfg, const OutputOptions& out) {
    const Fn1D fn = hhq::find_fn(cfg.fn_id);
    const Interval iv = (cfg.a && cfg.b) ? Interval(*cfg.a, *cfg.b)
                                         : hhq::default_interval(fn);
    std::vector<double> xs;
    if (cfg.x) {
        xs.push_back(*cfg.x);
    } else {
        for (int k = 0; k <= 10; ++k)
            xs.push_back(iv.a + (iv.b - iv.a) * k / 10.0);
    }

    std::vector<Record> records;
    for (double x : xs) {
        const double residual = hhq::identity_residual(fn, iv, x, cfg.tol);
        Record rec;
        rec.emplace_back("fn", Value::of(fn.id()));
        rec.emplace_back("a", Value::of(iv.a));
        rec.emplace_back("b", Value::of(iv.b));
        rec.emplace_back("x", Value::of(x));
        rec.emplace_back("residual", Value::of(residual));
        records.push_back(std::move(rec));
    }
    emit(std::cout, out, make_meta("identity", out), records);
    return 0;
}

// ----------------------------------------------------------------- means --

struct MeansConfig {
    double a = 0.0, b = 0.0;
    std::optional<long long> n;
    double p = 2.0;
    double q = 1.0;
};

int run_means(const MeansConfig& cfg, const OutputOptions& out) {
    std::pair<BoundReport, BoundReport> pair =
        cfg.n ? hhq::prop31_check(cfg.a, cfg.b, static_cast<long>(*cfg.n),
                                  cfg.p, cfg.q)
              : hhq::prop32_check(cfg.a, cfg.b, cfg.p, cfg.q);
    const std::string fn_id =
        cfg.n ? "pow:" + std::to_string(*cfg.n) : std::string("recip");
    std::vector<Record> records;
    records.push_back(bound_record(fn_id, cfg.a, cfg.b, pair.first));
    records.push_back(bound_record(fn_id, cfg.a, cfg.b, pair.second));
    emit(std::cout, out, make_meta("means", out), records);
    return 0;
}

// ------------------------------------------------------------------ quad --

struct QuadConfig {
    std::string fn_id;
    std::optional<double> a, b;
    double eps = 1e-3;
    int max_nodes = 4096;
    std::string dump_partition;
};

int run_quad(const QuadConfig& cfg, const OutputOptions& out) {
    const Fn1D fn = hhq::find_fn(cfg.fn_id);
    const Interval iv = (cfg.a && cfg.b) ? Interval(*cfg.a, *cfg.b)
                                         : hhq::default_interval(fn);
    hhq::AdaptiveResult result{0.0, {}, hhq::Partition::single(iv)};
    bool budget_exceeded = false;
    try {
        result = hhq::integrate_adaptive(fn, iv, cfg.eps, cfg.max_nodes);
    } catch (const hhq::BudgetExceeded& e) {
        std::cerr << "warning: " << e.what() << "\n";
        result = e.partial();
        budget_exceeded = true;
    }

    const auto nodes = result.partition.nodes();
    if (!cfg.dump_partition.empty()) {
        std::ofstream dump(cfg.dump_partition);
        if (!dump)
            throw std::invalid_argument("cannot open partition dump file '" +
                                        cfg.dump_partition + "'");
        for (double node : nodes)
            dump << hhq::cli::format_double(node) << "\n";
    }

    Record meta = make_meta("quad", out);
    meta.emplace_back("fn", Value::of(fn.id()));
    meta.emplace_back("value", Value::of(result.value));
    meta.emplace_back("cert_total", Value::of(result.certificate.total));
    meta.emplace_back("nodes",
                      Value::of_int(static_cast<long long>(nodes.size())));
    meta.emplace_back("budget_exceeded", Value::of_bool(budget_exceeded));

    std::vector<Record> records;
    records.reserve(result.certificate.per_interval.size());
    for (std::size_t i = 0; i < result.certificate.per_interval.size(); ++i) {
        const hhq::IntervalBound& ib = result.certificate.per_interval[i];
        Record rec;
        rec.emplace_back("index", Value::of_int(static_cast<long long>(i)));
        rec.emplace_back("lo", Value::of(nodes[i]));
        rec.emplace_back("hi", Value::of(nodes[i + 1]));
        rec.emplace_back("bound", Value::of(ib.bound));
        rec.emplace_back("theorem",
                         Value::of(std::string(to_string(ib.theorem_used))));
        rec.emplace_back("p", opt_num(ib.p));
        rec.emplace_back("q", opt_num(ib.q));
        rec.emplace_back("value", Value::of(result.value));
        rec.emplace_back("cert_total", Value::of(result.certificate.total));
        rec.emplace_back("nodes",
                         Value::of_int(static_cast<long long>(nodes.size())));
        records.push_back(std::move(rec));
    }
    emit(std::cout, out, meta, records);
    return budget_exceeded ? kExitBudgetExceeded : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hhq: trapezoid-rule error certificates from derivative shape "
        "hypotheses, special-mean inequality checks, and a certified "
        "adaptive integrator"};
    app.require_subcommand(1);

    OutputOptions out;
    app.add_option("--output", out.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--no-timestamp", out.no_timestamp,
                 "Omit the timestamp field for reproducible output");
    app.add_option("--seed", out.seed, "Seed recorded in report metadata")
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify", "Sweep every corpus function, theorem and exponent set");

    BoundsConfig bounds_cfg;
    CLI::App* bounds =
        app.add_subcommand("bounds", "Evaluate a single bound report");
    bounds->add_option("--fn", bounds_cfg.fn_id, "Function id")->required();
    bounds->add_option("--theorem", bounds_cfg.theorem, "Bound id (t21..r22)")
        ->required();
    bounds->add_option("--a", bounds_cfg.a, "Interval left endpoint");
    bounds->add_option("--b", bounds_cfg.b, "Interval right endpoint");
    bounds->add_option("--x", bounds_cfg.x, "Evaluation point");
    bounds->add_option("--p", bounds_cfg.p, "Hoelder exponent p > 1");
    bounds->add_option("--q", bounds_cfg.q, "Exponent q");

    IdentityConfig identity_cfg;
    CLI::App* identity = app.add_subcommand(
        "identity", "Residuals of the integration-by-parts identity");
    identity->add_option("--fn", identity_cfg.fn_id, "Function id")
        ->required();
    identity->add_option("--a", identity_cfg.a, "Interval left endpoint");
    identity->add_option("--b", identity_cfg.b, "Interval right endpoint");
    identity->add_option("--x", identity_cfg.x,
                         "Evaluation point (default: 11-point grid)");
    identity->add_option("--tol", identity_cfg.tol,
                         "Oracle tolerance for the t-integrals")
        ->capture_default_str();

    MeansConfig means_cfg;
    CLI::App* means =
        app.add_subcommand("means", "Special-mean inequality reports");
    means->add_option("--a", means_cfg.a, "Left endpoint")->required();
    means->add_option("--b", means_cfg.b, "Right endpoint")->required();
    means->add_option("--n", means_cfg.n,
                      "Power |n| >= 2 (selects the x^n checks; omit for the "
                      "reciprocal checks)");
    means->add_option("--p", means_cfg.p, "Hoelder exponent p > 1")
        ->capture_default_str();
    means->add_option("--q", means_cfg.q, "Power-mean exponent q >= 1")
        ->capture_default_str();

    QuadConfig quad_cfg;
    CLI::App* quad = app.add_subcommand(
        "quad", "Adaptive trapezoid integration under a certificate budget");
    quad->add_option("--fn", quad_cfg.fn_id, "Function id")->required();
    quad->add_option("--a", quad_cfg.a, "Interval left endpoint");
    quad->add_option("--b", quad_cfg.b, "Interval right endpoint");
    quad->add_option("--eps", quad_cfg.eps, "Certificate budget")->required();
    quad->add_option("--max-nodes", quad_cfg.max_nodes, "Node budget")
        ->capture_default_str();
    quad->add_option("--dump-partition", quad_cfg.dump_partition,
                     "Write partition nodes to this file, one per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (verify->parsed()) return run_verify(out);
        if (bounds->parsed()) return run_bounds(bounds_cfg, out);
        if (identity->parsed()) return run_identity(identity_cfg, out);
        if (means->parsed()) return run_means(means_cfg, out);
        if (quad->parsed()) return run_quad(quad_cfg, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
