#include "doctest.h"

#include "orlicz_tf/field.hpp"

#include <cmath>
#include <numbers>

using namespace otf;
using std::numbers::pi;

TEST_CASE("field: grid geometry")
{
    Grid g = Grid::uniform(1, 12, 256);
    CHECK(g.axis(0).spacing() == doctest::Approx(24.0 / 256));
    CHECK(g.axis(0).point(0) == -12.0);
    CHECK(g.axis(0).point(128) == doctest::Approx(0.0));
    Axis d = g.axis(0).dual();
    CHECK(d.spacing() == doctest::Approx(pi / 12));
    CHECK(d.L == doctest::Approx(pi * 256 / 24));
    Grid s = Grid::symmetric(1, 64);
    CHECK(s.axis(0).dual().L == doctest::Approx(s.axis(0).L));
    CHECK(phase_grid(g).rank() == 2);
}

TEST_CASE("field: gaussians")
{
    Grid g = Grid::uniform(1, 12, 256);
    CHECK(l2_norm(make_gaussian(g, 1.0)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(l2_norm(make_gaussian(g, 4.0)) == doctest::Approx(1.0).epsilon(1e-10));
    Field a = make_gaussian(g, 1.0), b = make_gaussian(g, 1.0, {0.0}, {2.0});
    for (size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i]) == doctest::Approx(std::abs(b[i])).epsilon(1e-14));
    CHECK(std::abs(inner_product(a, a) - 1.0) < 1e-10);
}

TEST_CASE("field: Fourier transform")
{
    Grid g = Grid::uniform(1, 12, 256);
    Field f = make_gaussian(g, 1.0);
    Field F = fourier_transform(f);
    double err = 0;
    for (size_t i = 0; i < F.size(); ++i) {
        double xi = F.grid().coords(i)[0];
        err = std::max(err, std::abs(F[i] - std::pow(pi, -0.25) * std::exp(-xi * xi / 2)));
    }
    CHECK(err <= 1e-10);

    Field r = make_random_packets(g, 3);
    CHECK(max_abs_diff(inverse_fourier_transform(fourier_transform(r)), r) <= 1e-12);

    // shift goes to modulation: F[f(. - 1.5)](xi) = e^{-1.5 i xi} F f(xi)
    Field s = make_gaussian(g, 2.0, {1.5});
    Field S = fourier_transform(s);
    Field S0 = fourier_transform(make_gaussian(g, 2.0));
    err = 0;
    for (size_t i = 0; i < S.size(); ++i) {
        double xi = S.grid().coords(i)[0];
        err = std::max(err, std::abs(S[i] - std::polar(1.0, -1.5 * xi) * S0[i]));
    }
    CHECK(err <= 1e-9);
}

TEST_CASE("field: hermite functions")
{
    Grid g = Grid::uniform(1, 12, 256);
    Field h0 = make_hermite(g, 0);
    CHECK(max_abs_diff(h0, make_gaussian(g, 1.0)) <= 1e-15);
    CHECK(std::abs(inner_product(h0, make_hermite(g, 1))) <= 1e-12);
    for (int n = 0; n <= 10; ++n) CHECK(l2_norm(make_hermite(g, n)) == doctest::Approx(1.0).epsilon(1e-10));
    // eigenfunctions of the transform: F h_n = (-i)^n h_n
    Grid sg = Grid::symmetric(1, 256);
    Field h3 = make_hermite(sg, 3);
    Field H3 = fourier_transform(h3);
    double err = 0;
    for (size_t i = 0; i < h3.size(); ++i) err = std::max(err, std::abs(H3[i] - cplx(0, 1) * h3[i]));
    CHECK(err <= 1e-10);
}

TEST_CASE("field: norms and quadrature")
{
    Grid g = Grid::uniform(1, 12, 256);
    Field f = make_random_bandlimited(g, 7, 4.0);
    CHECK(lp_norm(f, 2) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
    double s = 0;
    for (size_t i = 0; i < f.size(); ++i) s += std::abs(f[i]) * g.cell();
    CHECK(lp_norm(f, 1) == doctest::Approx(s).epsilon(1e-12));
    // generators are reproducible
    CHECK(max_abs_diff(make_random_bandlimited(g, 7, 4.0), f) == 0.0);
}

TEST_CASE("field: half grid and trigonometric interpolation")
{
    Grid g = Grid::uniform(1, 10, 128);
    Field f = make_gaussian(g, 1.3, {0.4}, {1.0});
    const Axis& ax = g.axis(0);
    auto h = half_grid(f.values().data(), ax);
    TrigInterpolant ti(f.values().data(), ax);
    for (int k = 10; k < 120; k += 7) {
        double x = ax.point(k) + ax.spacing() / 2;
        // closed form of the same Gaussian at the half point
        cplx ref = std::pow(1.3 / pi, 0.25) * std::exp(-1.3 * (x - 0.4) * (x - 0.4) / 2) * std::polar(1.0, x * 1.0);
        CHECK(std::abs(h[2 * k + 1] - ref) <= 1e-10);
        CHECK(std::abs(ti(x) - ref) <= 1e-10);
        CHECK(std::abs(h[2 * k] - f[k]) <= 1e-12);
    }
}
