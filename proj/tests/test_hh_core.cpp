#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hhq/hh_core.hpp"

using namespace hhq;

namespace {

std::vector<double> x_grid(const Interval& iv, int points = 11) {
    std::vector<double> xs;
    for (int k = 0; k < points; ++k)
        xs.push_back(iv.a + (iv.b - iv.a) * k / (points - 1.0));
    return xs;
}

} // namespace

TEST_CASE("HolderPair validates its exponents") {
    const HolderPair hp(2.0);
    CHECK(hp.q == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(HolderPair(3.0).q == doctest::Approx(1.5).epsilon(1e-15));
    CHECK_THROWS_AS(HolderPair(1.0), InvalidExponent);
    CHECK_THROWS_AS(HolderPair(0.5), InvalidExponent);
    CHECK_THROWS_AS(HolderPair(2.0, 3.0), InvalidExponent);
    CHECK_NOTHROW(HolderPair(2.0, 2.0));
}

TEST_CASE("classic two-sided inequality") {
    const Fn1D pow2 = find_fn("pow:2");
    const ClassicCheck c = hh_classic_check(pow2, Interval(0, 1));
    CHECK(c.midpoint_value == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(c.mean_integral == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(c.endpoint_avg == doctest::Approx(0.5).epsilon(1e-14));

    const ClassicCheck e = hh_classic_check(find_fn("exp"), Interval(0, 1));
    CHECK(e.midpoint_value ==
          doctest::Approx(std::exp(0.5)).epsilon(1e-14));
    CHECK(e.mean_integral == doctest::Approx(std::expm1(1.0)).epsilon(1e-14));
    CHECK(e.endpoint_avg ==
          doctest::Approx(0.5 * (1.0 + std::exp(1.0))).epsilon(1e-14));

    // affine equality case
    const ClassicCheck lin = hh_classic_check(make_pow(1), Interval(0, 1));
    CHECK(lin.midpoint_value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(lin.mean_integral == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(lin.endpoint_avg == doctest::Approx(0.5).epsilon(1e-15));

    const Fn1D neg_sq(
        "neg_sq", [](double x) { return -x * x; },
        [](double x) { return -2.0 * x; });
    CHECK_THROWS_AS(hh_classic_check(neg_sq, Interval(0, 1)),
                    HypothesisFailed);

    for (const Fn1D& fn : corpus()) {
        const ClassicCheck chk = hh_classic_check(fn, default_interval(fn));
        CHECK(chk.midpoint_value <= chk.mean_integral + 1e-9);
        CHECK(chk.mean_integral <= chk.endpoint_avg + 1e-9);
    }
}

TEST_CASE("weighted trapezoid deviation spot values") {
    const Fn1D pow2 = find_fn("pow:2");
    CHECK(lhs_weighted(pow2, Interval(0, 1), 0.5) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(lhs_weighted(pow2, Interval(0, 1), 0.25) ==
          doctest::Approx(5.0 / 12.0).epsilon(1e-13));
    CHECK(lhs_weighted(make_pow(1), Interval(0, 1), 0.5) ==
          doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(lhs_weighted(pow2, Interval(0, 1), 1.5),
                    std::invalid_argument);
}

TEST_CASE("identity residual vanishes across the corpus") {
    const Fn1D pow2 = find_fn("pow:2");
    CHECK(identity_residual(pow2, Interval(0, 1), 0.5, 1e-10) < 1e-8);
    CHECK(identity_residual(find_fn("exp"), Interval(0, 1), 0.3, 1e-10) <
          1e-8);
    // x = a kills the first t-integral term
    CHECK(identity_residual(find_fn("sqrt_cube"), Interval(0, 1), 0.0,
                            1e-10) < 1e-8);

    for (const Fn1D& fn : corpus()) {
        const Interval iv = default_interval(fn);
        for (double x : x_grid(iv))
            CHECK(identity_residual(fn, iv, x, 1e-10) < 1e-8);
    }
}

TEST_CASE("t21 spot values") {
    const Fn1D pow2 = find_fn("pow:2");
    BoundReport r = bound_t21(pow2, Interval(0, 1), 0.5);
    CHECK(r.admissible);
    CHECK(r.lhs == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.slack == r.rhs - r.lhs);

    r = bound_t21(pow2, Interval(0, 1), 0.25);
    CHECK(r.lhs == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(41.0 / 96.0).epsilon(1e-12));

    const BoundReport flat = bound_t21(make_pow(0), Interval(0, 1), 0.5);
    CHECK(flat.lhs == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(flat.rhs == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("t22 spot values") {
    const Fn1D pow2 = find_fn("pow:2");
    const BoundReport r = bound_t22(pow2, Interval(0, 1), 0.5, HolderPair(2));
    CHECK(r.admissible);
    CHECK(r.lhs == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    const double expected =
        std::sqrt(1.0 / 6.0) * 0.25 * (1.0 + std::sqrt(5.0));
    CHECK(r.rhs == doctest::Approx(expected).epsilon(1e-12));

    const BoundReport flat =
        bound_t22(make_pow(0), Interval(0, 1), 0.5, HolderPair(2));
    CHECK(flat.lhs == 0.0);
    CHECK(flat.rhs == 0.0);

    const BoundReport p3 = bound_t22(pow2, Interval(0, 1), 0.5, HolderPair(3));
    CHECK(p3.q == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(p3.admissible);
    CHECK(p3.slack >= -kTolVerify);
}

TEST_CASE("t23 spot values") {
    const Fn1D sqrt_cube = find_fn("sqrt_cube");
    const BoundReport r = bound_t23(sqrt_cube, Interval(0, 1), 0.5, 2.0);
    CHECK(r.admissible);
    CHECK(r.lhs == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
    const double expected =
        std::sqrt(1.0 / 3.0) * 0.25 * (0.5 + std::sqrt(0.75));
    CHECK(r.rhs == doctest::Approx(expected).epsilon(1e-12));

    // |f'| = 1 is concave (weakly), rhs stays positive while lhs vanishes
    const BoundReport lin = bound_t23(make_pow(1), Interval(0, 1), 0.5, 2.0);
    CHECK(lin.admissible);
    CHECK(lin.lhs == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(lin.rhs > 0.0);

    const BoundReport off_center =
        bound_t23(sqrt_cube, Interval(0, 1), 0.25, 2.0);
    CHECK(off_center.admissible);
    CHECK(off_center.slack >= -kTolVerify);

    CHECK_THROWS_AS(bound_t23(sqrt_cube, Interval(0, 1), 0.5, 1.0),
                    InvalidExponent);
}

TEST_CASE("t24 spot values and q=1 reduction to t21") {
    const Fn1D pow2 = find_fn("pow:2");
    const BoundReport r = bound_t24(pow2, Interval(0, 1), 0.5, 2.0);
    CHECK(r.admissible);
    CHECK(r.rhs == doctest::Approx(0.5 / std::sqrt(3.0)).epsilon(1e-12));

    CHECK_THROWS_AS(bound_t24(pow2, Interval(0, 1), 0.5, 0.5),
                    InvalidExponent);

    const BoundReport flat = bound_t24(make_pow(0), Interval(0, 1), 0.3, 2.0);
    CHECK(flat.lhs == 0.0);
    CHECK(flat.rhs == 0.0);

    for (const Fn1D& fn : corpus()) {
        const Interval iv = default_interval(fn);
        for (double x : x_grid(iv)) {
            const BoundReport t24 = bound_t24(fn, iv, x, 1.0);
            const BoundReport t21 = bound_t21(fn, iv, x);
            CHECK(std::abs(t24.rhs - t21.rhs) < 1e-12);
        }
    }
}

TEST_CASE("t25 spot values") {
    const Fn1D sqrt_cube = find_fn("sqrt_cube");
    const BoundReport r = bound_t25(sqrt_cube, Interval(0, 1), 0.5);
    CHECK(r.admissible);
    CHECK(r.lhs == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
    const double expected =
        0.125 * (std::sqrt(1.0 / 6.0) + std::sqrt(5.0 / 6.0));
    CHECK(r.rhs == doctest::Approx(expected).epsilon(1e-12));

    const BoundReport lin = bound_t25(make_pow(1), Interval(0, 1), 0.5);
    CHECK(lin.lhs == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(lin.rhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(lin.slack == doctest::Approx(0.25).epsilon(1e-12));

    // degenerate x = a: only the right term survives
    const BoundReport at_a = bound_t25(sqrt_cube, Interval(0, 1), 0.0);
    CHECK(at_a.rhs ==
          doctest::Approx(0.5 * std::sqrt(2.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("degenerate x at the endpoints zeroes the matching term") {
    for (const Fn1D& fn : corpus()) {
        const Interval iv = default_interval(fn);
        // at x=a the (x-a)^2 weight vanishes, so rhs equals the b-term alone
        const BoundReport at_a = bound_t21(fn, iv, iv.a);
        const double da = std::abs(fn.deriv(iv.a));
        const double db = std::abs(fn.deriv(iv.b));
        const double b_term = iv.length() * (da + 2.0 * db) / 6.0;
        CHECK(at_a.rhs == doctest::Approx(b_term).epsilon(1e-13));
        const BoundReport at_b = bound_t21(fn, iv, iv.b);
        const double a_term = iv.length() * (db + 2.0 * da) / 6.0;
        CHECK(at_b.rhs == doctest::Approx(a_term).epsilon(1e-13));
    }
}

TEST_CASE("midpoint variants spot values") {
    const Fn1D pow2 = find_fn("pow:2");
    const BoundReport c21 = midpoint_bound(pow2, Interval(0, 1), TheoremId::C21);
    CHECK(c21.lhs == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(c21.rhs == doctest::Approx(0.25).epsilon(1e-12));

    const BoundReport r21 = midpoint_bound(pow2, Interval(0, 1), TheoremId::R21);
    CHECK(r21.rhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r21.rhs >= c21.rhs - 1e-12);

    const Fn1D sqrt_cube = find_fn("sqrt_cube");
    const BoundReport c24 = midpoint_bound(sqrt_cube, Interval(0, 1),
                                           TheoremId::C24);
    const double expected =
        0.125 * (std::sqrt(1.0 / 6.0) + std::sqrt(5.0 / 6.0));
    CHECK(c24.rhs == doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(
        midpoint_bound(pow2, Interval(0, 1), TheoremId::C22),
        InvalidExponent);
    CHECK_THROWS_AS(
        midpoint_bound(pow2, Interval(0, 1), TheoremId::R22),
        InvalidExponent);
    CHECK_THROWS_AS(
        midpoint_bound(pow2, Interval(0, 1), TheoremId::T21),
        std::invalid_argument);
}

TEST_CASE("midpoint specializations match the general-x bounds") {
    for (const Fn1D& fn : corpus()) {
        const Interval iv = default_interval(fn);
        const double m = iv.midpoint();

        CHECK(std::abs(bound_t21(fn, iv, m).rhs -
                       midpoint_bound(fn, iv, TheoremId::C21).rhs) < 1e-12);
        for (double p : {1.5, 2.0, 3.0}) {
            const BoundReport c22 =
                midpoint_bound(fn, iv, TheoremId::C22, p);
            CHECK(std::abs(bound_t22(fn, iv, m, HolderPair(p)).rhs -
                           c22.rhs) < 1e-12);
            REQUIRE(c22.rhs_relaxed.has_value());
        }
        for (double q : {1.5, 2.0, 3.0})
            CHECK(std::abs(
                      bound_t23(fn, iv, m, q).rhs -
                      midpoint_bound(fn, iv, TheoremId::R22, std::nullopt, q)
                          .rhs) < 1e-12);
        for (double q : {1.0, 1.5, 2.0, 3.0})
            CHECK(std::abs(
                      bound_t24(fn, iv, m, q).rhs -
                      midpoint_bound(fn, iv, TheoremId::C23, std::nullopt, q)
                          .rhs) < 1e-12);
        CHECK(std::abs(bound_t25(fn, iv, m).rhs -
                       midpoint_bound(fn, iv, TheoremId::C24).rhs) < 1e-12);
    }
}

TEST_CASE("relaxed second lines dominate the tight first lines") {
    for (const Fn1D& fn : corpus()) {
        const Interval iv = default_interval(fn);
        for (double p : {1.5, 2.0, 3.0}) {
            const BoundReport c22 = midpoint_bound(fn, iv, TheoremId::C22, p);
            if (c22.admissible)
                CHECK(*c22.rhs_relaxed >= c22.rhs - 1e-12);
        }
        for (double q : {1.0, 1.5, 2.0, 3.0}) {
            const BoundReport c23 =
                midpoint_bound(fn, iv, TheoremId::C23, std::nullopt, q);
            if (c23.admissible)
                CHECK(*c23.rhs_relaxed >= c23.rhs - 1e-12);
        }
    }
}

TEST_CASE("soundness: admissible reports keep nonnegative slack") {
    for (const Fn1D& fn : corpus()) {
        const Interval iv = default_interval(fn);
        for (double x : x_grid(iv)) {
            if (const auto r = bound_t21(fn, iv, x); r.admissible)
                CHECK(r.slack >= -kTolVerify);
            for (double p : {1.5, 2.0, 3.0})
                if (const auto r = bound_t22(fn, iv, x, HolderPair(p));
                    r.admissible)
                    CHECK(r.slack >= -kTolVerify);
            for (double q : {1.5, 2.0, 3.0})
                if (const auto r = bound_t23(fn, iv, x, q); r.admissible)
                    CHECK(r.slack >= -kTolVerify);
            for (double q : {1.0, 1.5, 2.0, 3.0}) {
                if (const auto r = bound_t24(fn, iv, x, q); r.admissible)
                    CHECK(r.slack >= -kTolVerify);
                if (const auto r = bound_t25(fn, iv, x, q); r.admissible)
                    CHECK(r.slack >= -kTolVerify);
            }
        }
    }
}

TEST_CASE("require_admissible gates on the verdict") {
    const Fn1D sqrt_cube = find_fn("sqrt_cube");
    // |f'| = sqrt(x) is concave, so the convexity-gated bound must refuse
    const BoundReport r = bound_t21(sqrt_cube, Interval(0, 1), 0.5);
    CHECK_FALSE(r.admissible);
    CHECK_THROWS_AS(require_admissible(r), HypothesisFailed);
    CHECK_NOTHROW(
        require_admissible(bound_t21(find_fn("pow:2"), Interval(0, 1), 0.5)));
}

TEST_CASE("power subadditivity spot values and property") {
    CHECK(power_subadditivity(std::vector<double>{1.0},
                              std::vector<double>{1.0}, 0.5));
    CHECK(power_subadditivity(std::vector<double>{0.0, 0.0},
                              std::vector<double>{3.0, 4.0}, 0.9));
    CHECK(power_subadditivity(std::vector<double>{1.0, 2.0},
                              std::vector<double>{2.0, 1.0}, 0.5));
    CHECK_THROWS_AS(power_subadditivity(std::vector<double>{1.0},
                                        std::vector<double>{1.0}, 1.0),
                    InvalidExponent);
    CHECK_THROWS_AS(power_subadditivity(std::vector<double>{1.0},
                                        std::vector<double>{1.0}, -0.1),
                    InvalidExponent);
    CHECK_THROWS_AS(power_subadditivity(std::vector<double>{1.0, 2.0},
                                        std::vector<double>{1.0}, 0.5),
                    std::invalid_argument);

    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> entry(0.0, 10.0);
    std::uniform_real_distribution<double> expo(0.0, std::nextafter(1.0, 0.0));
    std::uniform_int_distribution<int> len(1, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = len(rng);
        std::vector<double> as(k), bs(k);
        for (int i = 0; i < k; ++i) {
            as[static_cast<std::size_t>(i)] = entry(rng);
            bs[static_cast<std::size_t>(i)] = entry(rng);
        }
        CHECK(power_subadditivity(as, bs, expo(rng)));
    }
}
