#pragma once

#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "hhq/errors.hpp"

namespace hhq {

/// Closed interval [a, b] with a < b.
struct Interval {
    double a;
    double b;

    Interval(double lo, double hi);

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double x) const { return x >= a && x <= b; }
};

/// A once-differentiable scalar function with closed-form derivative and,
/// optionally, a closed-form antiderivative. All evaluators are stored at
/// construction and never change, so instances can be shared freely across
/// threads.
class Fn1D {
  public:
    using Fn = std::function<double(double)>;

    static constexpr double kInf = std::numeric_limits<double>::infinity();

    Fn1D(std::string id, Fn eval, Fn deriv, Fn antideriv = nullptr,
         double domain_lo = -kInf, double domain_hi = kInf,
         bool lo_open = false, bool hi_open = false);

    const std::string& id() const { return id_; }

    /// f(x). Throws DomainViolation outside the domain.
    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

    /// f'(x). Throws DomainViolation outside the domain.
    double deriv(double x) const;

    bool has_antideriv() const { return static_cast<bool>(antideriv_); }

    /// F(x) with F' = f. Throws MissingAntiderivative when absent.
    double antideriv(double x) const;

    double domain_lo() const { return domain_lo_; }
    double domain_hi() const { return domain_hi_; }

    bool in_domain(double x) const;

    /// Throws DomainViolation unless [iv.a, iv.b] lies inside the domain.
    void require_inside(const Interval& iv) const;

  private:
    std::string id_;
    Fn eval_;
    Fn deriv_;
    Fn antideriv_;
    double domain_lo_;
    double domain_hi_;
    bool lo_open_;
    bool hi_open_;
};

/// x^n for integer n (binary exponentiation; n < 0 via reciprocal).
double ipow(double x, long n);

/// f(x) = x^n with exact derivative and antiderivative. For n < 0 the domain
/// is restricted to x > 0. n = 0 and n = 1 give the constant and identity
/// functions, which the tests lean on.
Fn1D make_pow(long n);

/// The built-in integrand corpus: pow:2, pow:3, pow:4, recip, exp, neg_log,
/// x_log_x, sqrt_cube. Each member carries exact deriv and antideriv.
const std::vector<Fn1D>& corpus();

/// Resolves a CLI-style id ("pow:3", "recip", ...). Throws
/// std::invalid_argument for unknown ids.
Fn1D find_fn(std::string_view id);

/// [0,1] when the domain admits it, else [1,2].
Interval default_interval(const Fn1D& fn);

/// F(b) - F(a). Throws MissingAntiderivative or DomainViolation.
double exact_integral(const Fn1D& fn, const Interval& iv);

} // namespace hhq
