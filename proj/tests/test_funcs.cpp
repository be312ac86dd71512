#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hhq/funcs.hpp"

using namespace hhq;

namespace {

// Independent finite-difference oracle, central stencil.
double central_diff(const Fn1D& fn, double x, double h) {
    return (fn.eval(x + h) - fn.eval(x - h)) / (2.0 * h);
}

double central_diff_antideriv(const Fn1D& fn, double x, double h) {
    return (fn.antideriv(x + h) - fn.antideriv(x - h)) / (2.0 * h);
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace

TEST_CASE("interval invariants") {
    CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
    const Interval iv(1.0, 2.0);
    CHECK(iv.length() == 1.0);
    CHECK(iv.midpoint() == 1.5);
}

TEST_CASE("corpus membership and spot values") {
    const auto& fns = corpus();
    CHECK(fns.size() == 8);

    const Fn1D pow2 = find_fn("pow:2");
    CHECK(pow2.eval(0.5) == doctest::Approx(0.25).epsilon(1e-15));

    const Fn1D recip = find_fn("recip");
    CHECK(recip.deriv(2.0) == doctest::Approx(-0.25).epsilon(1e-15));

    const Fn1D sqrt_cube = find_fn("sqrt_cube");
    CHECK(sqrt_cube.deriv(0.25) == doctest::Approx(0.5).epsilon(1e-15));

    for (const char* id : {"pow:2", "pow:3", "pow:4", "recip", "exp",
                           "neg_log", "x_log_x", "sqrt_cube"})
        CHECK_NOTHROW(find_fn(id));
    CHECK_THROWS_AS(find_fn("nope"), std::invalid_argument);
    CHECK_THROWS_AS(find_fn("pow:x"), std::invalid_argument);
}

TEST_CASE("make_pow degenerate powers") {
    const Fn1D constant = make_pow(0);
    CHECK(constant.eval(3.7) == 1.0);
    CHECK(constant.deriv(3.7) == 0.0);
    const Fn1D linear = make_pow(1);
    CHECK(linear.eval(0.3) == 0.3);
    CHECK(linear.deriv(-5.0) == 1.0);
    const Fn1D inv_sq = make_pow(-2);
    CHECK(inv_sq.eval(2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(inv_sq.eval(-1.0), DomainViolation);
}

TEST_CASE("exact_integral spot values") {
    CHECK(exact_integral(find_fn("pow:2"), Interval(0, 1)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // ln 2 via the standard library as oracle
    CHECK(exact_integral(find_fn("recip"), Interval(1, 2)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(exact_integral(find_fn("sqrt_cube"), Interval(0, 1)) ==
          doctest::Approx(4.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("exact_integral error paths") {
    const Fn1D no_f(
        "no_f", [](double x) { return x; }, [](double) { return 1.0; });
    CHECK_THROWS_AS(exact_integral(no_f, Interval(0, 1)),
                    MissingAntiderivative);
    CHECK_THROWS_AS(exact_integral(find_fn("recip"), Interval(-1, 1)),
                    DomainViolation);
    CHECK_THROWS_AS(find_fn("recip").eval(0.0), DomainViolation);
    CHECK_THROWS_AS(find_fn("neg_log").eval(-0.5), DomainViolation);
}

TEST_CASE("default intervals sit inside the domain") {
    for (const Fn1D& fn : corpus()) {
        const Interval iv = default_interval(fn);
        CHECK(fn.in_domain(iv.a));
        CHECK(fn.in_domain(iv.b));
        const bool unit_from_zero = iv.a == 0.0 && iv.b == 1.0;
        const bool unit_from_one = iv.a == 1.0 && iv.b == 2.0;
        CHECK((unit_from_zero || unit_from_one));
    }
}

TEST_CASE("derivative and antiderivative consistency on 21 interior points") {
    const double h = 1e-6;
    for (const Fn1D& fn : corpus()) {
        const Interval iv = default_interval(fn);
        for (int k = 1; k <= 21; ++k) {
            const double x = iv.a + (iv.b - iv.a) * k / 22.0;
            CHECK(rel_err(central_diff(fn, x, h), fn.deriv(x)) < 1e-5);
            CHECK(rel_err(central_diff_antideriv(fn, x, h), fn.eval(x)) <
                  1e-5);
        }
    }
}
