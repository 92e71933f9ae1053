#include "doctest.h"

#include "orlicz_tf/weights.hpp"

#include <cmath>
#include <vector>

using namespace otf;

TEST_CASE("weights: evaluation")
{
    std::vector<double> x = {1, 1};
    CHECK(Weight::polynomial(2, 2)(x) == doctest::Approx(3.0));
    std::vector<double> y = {3, 4};
    CHECK(Weight::exponential(1, 2)(y) == doctest::Approx(std::exp(5.0)));
    CHECK(Weight::constant_one(2)(y) == 1.0);
    auto prod = Weight::product({Weight::polynomial(2, 2), Weight::exponential(1, 2)});
    CHECK(prod(y) == doctest::Approx(26.0 * std::exp(5.0)));
    std::vector<double> z = {3, 0, 4};
    auto sl = Weight::slots(Weight::polynomial(2, 2), {0, 2}, 3);
    CHECK(sl(z) == doctest::Approx(26.0));
}

TEST_CASE("weights: moderateness")
{
    VerifyGrid g{8.0, 33};
    auto p = check_moderate(Weight::polynomial(2, 2), Weight::polynomial(2, 2), g);
    CHECK(p.holds);
    CHECK(p.C <= 2.0 + 1e-12);
    // Peetre oracle on a few points
    for (double a : {-3.0, 0.5, 2.0})
        for (double b : {-1.0, 4.0}) {
            double lhs = 1 + (a + b) * (a + b), rhs = 2 * (1 + a * a) * (1 + b * b);
            CHECK(lhs <= rhs);
        }
    auto e = check_moderate(Weight::exponential(1, 2), Weight::exponential(1, 2), g);
    CHECK(e.holds);
    CHECK(e.C == doctest::Approx(1.0));
    auto bad = check_moderate(Weight::exponential(2, 2), Weight::exponential(1, 2), g);
    CHECK_FALSE(bad.holds);
}

TEST_CASE("weights: pseudo-differential weight condition")
{
    VerifyGrid g{8.0, 9};
    std::vector<double> A0 = {0.0};
    auto one = check_pseudo_weight_condition(Weight::constant_one(4), Weight::constant_one(2), Weight::constant_one(2),
                                             A0, g);
    CHECK(one.holds);
    CHECK(one.C == doctest::Approx(1.0));

    const double s = 1.0;
    auto w0 = Weight::slots(Weight::polynomial(2 * s, 2), {2, 3}, 4);
    auto ok = check_pseudo_weight_condition(w0, Weight::polynomial(s, 2), Weight::polynomial(s, 2), A0, g);
    CHECK(ok.holds);

    auto fail = check_pseudo_weight_condition(Weight::constant_one(4), Weight::constant_one(2),
                                              Weight::polynomial(4, 2), A0, g);
    CHECK_FALSE(fail.holds);
}

TEST_CASE("weights: exponential bound")
{
    auto w = Weight::polynomial(3, 2);
    double c = weight_bound_constant(w);
    CHECK(std::isfinite(c));
    CHECK(c >= 1.0);
}
