#include "doctest.h"

#include "orlicz_tf/young.hpp"

#include <cmath>
#include <numbers>

using namespace otf;
using std::numbers::pi;

TEST_CASE("young: evaluate basics")
{
    CHECK(YoungFunction::power(2)(3.0) == doctest::Approx(9.0));
    CHECK(YoungFunction::cap(1)(0.5) == 0.0);
    CHECK(std::isinf(YoungFunction::cap(1)(2.0)));
    // the literal splice, evaluated where both pieces meet
    double t = std::exp(-2.0 / 3.0);
    CHECK(YoungFunction::entropy_printed()(t) == doctest::Approx(2.0 / 3.0 * std::exp(-4.0 / 3.0)).epsilon(1e-12));

    for (auto phi : {YoungFunction::power(1.5), YoungFunction::entropy(), YoungFunction::tan_example(),
                     YoungFunction::log_example(), YoungFunction::power_scaled(3)}) {
        CHECK(phi(0.0) == 0.0);
        CHECK(std::isinf(phi(kInf)));
        double prev = 0;
        for (int i = 0; i < 200; ++i) {
            double v = phi(i * 0.05);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("young: entropy is -t^2 log t near zero and convex")
{
    auto E = YoungFunction::entropy();
    for (double t : {1e-6, 1e-3, 0.05, 0.2})
        CHECK(E(t) == doctest::Approx(-t * t * std::log(t)).epsilon(1e-13));
    CHECK(is_midpoint_convex(E));
    // printed splice is not convex between e^{-3/2} and e^{-2/3}
    CHECK_FALSE(is_midpoint_convex(YoungFunction::entropy_printed(), 0.2, 0.6, 200));
}

TEST_CASE("young: closed-form conjugates")
{
    auto s = conjugate(YoungFunction::power_scaled(2));
    for (double t : {0.1, 1.0, 3.0}) CHECK(s(t) == doctest::Approx(t * t / 2));
    auto c = conjugate(YoungFunction::power(1));
    CHECK(c(0.7) == 0.0);
    CHECK(std::isinf(c(1.3)));
    // p = 3: maximizer s = sqrt(t/3), so Phi*(t) = 2 (t/3)^{3/2}
    auto p3 = conjugate(YoungFunction::power(3));
    for (double t : {0.01, 0.5, 4.0}) {
        double ref = 2.0 * std::pow(t / 3.0, 1.5);
        CHECK(p3(t) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("young: log_example conjugate")
{
    auto L = YoungFunction::log_example();
    for (double t : {1e-3, 5e-3, 2e-2, 1e-1}) {
        double r = std::sqrt(0.25 + t);
        double ref = (t + 0.5 - r) * std::exp(-(0.5 + r) / t);
        CHECK(std::abs(legendre(L, t) - ref) <= 1e-6 * ref);
    }
}

TEST_CASE("young: Fenchel inequality for numeric conjugates")
{
    for (auto phi : {YoungFunction::entropy(), YoungFunction::tan_example(), YoungFunction::log_example()}) {
        auto cj = conjugate(phi);
        for (double a : {0.01, 0.1, 0.5, 1.2})
            for (double b : {0.01, 0.3, 1.0, 3.0}) {
                double lhs = a * b, rhs = phi(a) + cj(b);
                if (std::isfinite(rhs)) CHECK(lhs <= rhs * (1 + 1e-9) + 1e-14);
            }
    }
}

TEST_CASE("young: essential inverse")
{
    auto cap = YoungFunction::cap(1);
    CHECK(essential_inverse(cap, 0.0) == 0.0);
    CHECK(essential_inverse(cap, 0.3) == doctest::Approx(1.0));
    auto tn = YoungFunction::tan_example();
    CHECK(essential_inverse(tn, 1.0) == doctest::Approx(pi / 4).epsilon(1e-10));
    CHECK(essential_inverse(tn, kInf) == doctest::Approx(pi / 2).epsilon(1e-10));
    CHECK(essential_inverse(YoungFunction::power(3), 8.0) == doctest::Approx(2.0).epsilon(1e-12));

    for (auto phi : {YoungFunction::entropy(), YoungFunction::log_example(), YoungFunction::power(2.5)}) {
        auto lm = landmarks(phi);
        for (double t : {0.05, 0.3, 0.8}) {
            if (!(t > lm.t1 && t < lm.t2)) continue;
            CHECK(essential_inverse(phi, phi(t)) == doctest::Approx(t).epsilon(1e-10));
        }
    }
}

TEST_CASE("young: delta2")
{
    auto r = check_delta2(YoungFunction::power(2));
    CHECK(r.holds);
    CHECK(r.C == doctest::Approx(4.0));
    CHECK_FALSE(check_delta2(YoungFunction::log_example()).holds);

    double r0 = std::exp(-2.0 / 3.0) / 2;
    auto loc = check_delta2(YoungFunction::entropy(), r0);
    CHECK(loc.holds);
    // dense-grid oracle: sup of 4 log(2t) / log t on (0, r0]
    double sup = 0;
    for (int i = 0; i <= 4000; ++i) {
        double t = r0 * std::pow(10.0, -12.0 * i / 4000);
        sup = std::max(sup, 4 * std::log(2 * t) / std::log(t));
    }
    CHECK(loc.C <= sup * 1.05 + 1e-9);
}

TEST_CASE("young: p-steered")
{
    auto a = check_p_steered(YoungFunction::power(2), 2);
    CHECK(a.steered);
    CHECK(a.branch == SteeredBranch::young_after_power);
    auto b = check_p_steered(YoungFunction::entropy(), 2);
    CHECK(b.steered);
    CHECK(b.branch == SteeredBranch::limsup_infinite);
    // oracle: Phi(t)/t^2 grows along t = 10^-k
    double prev = 0;
    for (int k = 1; k <= 12; ++k) {
        double t = std::pow(10.0, -k), q = YoungFunction::entropy()(t) / (t * t);
        CHECK(q > prev);
        prev = q;
    }
    auto c = check_p_steered(YoungFunction::power(1), 2);
    CHECK(c.steered);
    CHECK(c.branch == SteeredBranch::limsup_infinite);
}

TEST_CASE("young: quasi-Young functions")
{
    auto q = YoungFunction::power(2).with_quasi_order(0.5);
    CHECK(q(3.0) == doctest::Approx(3.0));  // Phi0(t^{1/2}) with Phi0 = t^2
    CHECK_THROWS_AS(conjugate(q), std::invalid_argument);
    CHECK_THROWS(YoungFunction::power(0.0));
    CHECK_THROWS(YoungFunction::cap(-1));
}
