#include "hhq/funcs.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hhq {

Interval::Interval(double lo, double hi) : a(lo), b(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("Interval endpoints must be finite");
    if (!(lo < hi))
        throw std::invalid_argument("Interval requires a < b");
}

Fn1D::Fn1D(std::string id, Fn eval, Fn deriv, Fn antideriv,
           double domain_lo, double domain_hi, bool lo_open, bool hi_open)
    : id_(std::move(id)),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)),
      antideriv_(std::move(antideriv)),
      domain_lo_(domain_lo),
      domain_hi_(domain_hi),
      lo_open_(lo_open),
      hi_open_(hi_open) {
    if (!eval_ || !deriv_)
        throw std::invalid_argument("Fn1D requires eval and deriv");
}

bool Fn1D::in_domain(double x) const {
    if (lo_open_ ? !(x > domain_lo_) : !(x >= domain_lo_)) return false;
    if (hi_open_ ? !(x < domain_hi_) : !(x <= domain_hi_)) return false;
    return true;
}

namespace {

[[noreturn]] void domain_error(const std::string& id, double x) {
    throw DomainViolation("function '" + id + "' evaluated at x=" +
                          std::to_string(x) + " outside its domain");
}

} // namespace

double Fn1D::eval(double x) const {
    if (!in_domain(x)) domain_error(id_, x);
    return eval_(x);
}

double Fn1D::deriv(double x) const {
    if (!in_domain(x)) domain_error(id_, x);
    return deriv_(x);
}

double Fn1D::antideriv(double x) const {
    if (!antideriv_)
        throw MissingAntiderivative("function '" + id_ +
                                    "' has no antiderivative");
    if (!in_domain(x)) domain_error(id_, x);
    return antideriv_(x);
}

void Fn1D::require_inside(const Interval& iv) const {
    if (!in_domain(iv.a) || !in_domain(iv.b))
        throw DomainViolation("interval [" + std::to_string(iv.a) + ", " +
                              std::to_string(iv.b) +
                              "] leaves the domain of '" + id_ + "'");
}

double ipow(double x, long n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    double result = 1.0;
    double base = x;
    for (long e = n; e > 0; e >>= 1) {
        if (e & 1) result *= base;
        base *= base;
    }
    return result;
}

Fn1D make_pow(long n) {
    const std::string id = "pow:" + std::to_string(n);
    auto f = [n](double x) { return ipow(x, n); };
    auto df = [n](double x) {
        return n == 0 ? 0.0 : static_cast<double>(n) * ipow(x, n - 1);
    };
    Fn1D::Fn F;
    if (n == -1) {
        F = [](double x) { return std::log(x); };
    } else {
        F = [n](double x) {
            return ipow(x, n + 1) / static_cast<double>(n + 1);
        };
    }
    if (n < 0)
        return Fn1D(id, f, df, F, 0.0, Fn1D::kInf, /*lo_open=*/true);
    return Fn1D(id, f, df, F);
}

const std::vector<Fn1D>& corpus() {
    static const std::vector<Fn1D> fns = [] {
        std::vector<Fn1D> v;
        v.push_back(make_pow(2));
        v.push_back(make_pow(3));
        v.push_back(make_pow(4));
        v.push_back(Fn1D(
            "recip", [](double x) { return 1.0 / x; },
            [](double x) { return -1.0 / (x * x); },
            [](double x) { return std::log(std::abs(x)); }, 0.0, Fn1D::kInf,
            /*lo_open=*/true));
        v.push_back(Fn1D(
            "exp", [](double x) { return std::exp(x); },
            [](double x) { return std::exp(x); },
            [](double x) { return std::exp(x); }));
        v.push_back(Fn1D(
            "neg_log", [](double x) { return -std::log(x); },
            [](double x) { return -1.0 / x; },
            [](double x) { return x - x * std::log(x); }, 0.0, Fn1D::kInf,
            /*lo_open=*/true));
        v.push_back(Fn1D(
            "x_log_x", [](double x) { return x * std::log(x); },
            [](double x) { return std::log(x) + 1.0; },
            [](double x) {
                return 0.5 * x * x * std::log(x) - 0.25 * x * x;
            },
            0.0, Fn1D::kInf, /*lo_open=*/true));
        v.push_back(Fn1D(
            "sqrt_cube",
            [](double x) { return (2.0 / 3.0) * x * std::sqrt(x); },
            [](double x) { return std::sqrt(x); },
            [](double x) { return (4.0 / 15.0) * x * x * std::sqrt(x); },
            0.0, Fn1D::kInf));
        return v;
    }();
    return fns;
}

Fn1D find_fn(std::string_view id) {
    if (id.rfind("pow:", 0) == 0) {
        const std::string tail(id.substr(4));
        std::size_t pos = 0;
        long n = 0;
        try {
            n = std::stol(tail, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad power in function id '" +
                                        std::string(id) + "'");
        }
        if (pos != tail.size())
            throw std::invalid_argument("bad power in function id '" +
                                        std::string(id) + "'");
        return make_pow(n);
    }
    for (const Fn1D& fn : corpus())
        if (fn.id() == id) return fn;
    throw std::invalid_argument("unknown function id '" + std::string(id) +
                                "'");
}

Interval default_interval(const Fn1D& fn) {
    if (fn.in_domain(0.0) && fn.in_domain(1.0)) return Interval(0.0, 1.0);
    if (fn.in_domain(1.0) && fn.in_domain(2.0)) return Interval(1.0, 2.0);
    throw DomainViolation("no default interval inside the domain of '" +
                          fn.id() + "'");
}

double exact_integral(const Fn1D& fn, const Interval& iv) {
    if (!fn.has_antideriv())
        throw MissingAntiderivative("exact_integral: '" + fn.id() +
                                    "' has no antiderivative");
    fn.require_inside(iv);
    return fn.antideriv(iv.b) - fn.antideriv(iv.a);
}

} // namespace hhq
