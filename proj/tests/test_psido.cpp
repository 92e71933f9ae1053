#include "doctest.h"

#include "orlicz_tf/psido.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace otf;
using std::numbers::pi;

namespace {

Field constant_symbol(const Grid& g, cplx v)
{
    Field a(phase_grid(g));
    for (auto& z : a.values()) z = v;
    return a;
}

double wrap(double v, double L) { return v - 2 * L * std::floor((v + L) / (2 * L)); }

}  // namespace

TEST_CASE("psido: identity symbol")
{
    Grid g = Grid::uniform(1, 8, 64);
    const double dx = g.axis(0).spacing();
    Field one = constant_symbol(g, 1.0);
    for (double t : {0.0, 0.5, 1.0, 0.25}) {
        KernelMatrix K = kernel(one, Quantization{t});
        double err = 0;
        for (int j = 0; j < 64; ++j)
            for (int m = 0; m < 64; ++m) err = std::max(err, std::abs(K(j, m) - (j == m ? 1.0 / dx : 0.0)));
        CHECK(err * dx <= 1e-10);
        Field f = make_random_packets(g, 4, 3, 2.0);
        CHECK(max_abs_diff(apply(one, Quantization{t}, f), f) <= 1e-10 * max_abs(f));
    }
}

TEST_CASE("psido: translation symbol")
{
    Grid g = Grid::uniform(1, 8, 64);
    const double dx = g.axis(0).spacing();
    const int shift = 5;
    const double c = shift * dx;
    Field a(phase_grid(g));
    for (size_t i = 0; i < a.size(); ++i) a[i] = std::polar(1.0, a.grid().coords(i)[1] * c);
    KernelMatrix K = kernel(a, Quantization::kohn_nirenberg());
    // Op(a) f = f(. + c): the mass sits at y_m = x_j + c
    double err = 0;
    for (int j = 0; j < 64; ++j)
        for (int m = 0; m < 64; ++m) {
            double ref = (m == (j + shift) % 64) ? 1.0 / dx : 0.0;
            err = std::max(err, std::abs(K(j, m) - ref));
        }
    CHECK(err * dx <= 1e-10);
}

TEST_CASE("psido: Weyl kernel of a real even symbol is symmetric")
{
    Grid g = Grid::uniform(1, 8, 64);
    Field a(phase_grid(g));
    for (size_t i = 0; i < a.size(); ++i) {
        auto p = a.grid().coords(i);
        a[i] = std::exp(-p[0] * p[0] / 3 - p[1] * p[1] / 2) * (1 + 0.3 * p[0] * p[0]) + std::exp(-p[1] * p[1]);
    }
    KernelMatrix K = kernel(a, Quantization::weyl());
    double err = 0, mx = 0;
    for (int j = 0; j < 64; ++j)
        for (int m = 0; m < 64; ++m) {
            err = std::max(err, std::abs(K(j, m) - K(m, j)));
            mx = std::max(mx, std::abs(K(j, m)));
        }
    CHECK(err <= 1e-9 * mx);
}

TEST_CASE("psido: rank-one operators and duality")
{
    Grid g = Grid::uniform(1, 10, 128);
    Field f1 = make_gaussian(g, 1.0, {1.0}, {0.5}), f2 = make_gaussian(g, 1.5, {-0.5});
    Field f = make_gaussian(g, 0.7, {0.2}, {-0.6});
    for (double t : {0.0, 0.5, 1.0}) {
        Field a = wigner(f1, f2, Quantization{t});
        Field u = apply(a, Quantization{t}, f);
        Field v = (inner_product(f, f2) / std::sqrt(2 * pi)) * f1;
        CHECK(l2_norm(u - v) <= 1e-6 * l2_norm(v));
    }
    Field a = sample_symbol(random_symbol(3), g);
    Field p = make_random_packets(g, 5, 3, 2.0), q = make_random_packets(g, 6, 3, 2.0);
    for (double t : {0.0, 0.5, 1.0}) {
        cplx lhs = inner_product(apply(a, Quantization{t}, p), q);
        cplx rhs = inner_product(a, wigner(q, p, Quantization{t})) / std::sqrt(2 * pi);
        CHECK(std::abs(lhs - rhs) <= 1e-7 * std::abs(rhs));
    }
    // adjoint of the kernel matrix under the quadrature inner product
    KernelMatrix K = kernel(a, Quantization::weyl());
    cplx l = inner_product(K.apply(p), q), r = inner_product(p, K.apply_adjoint(q));
    CHECK(std::abs(l - r) <= 1e-12 * std::abs(l));
}

TEST_CASE("psido: calculi consistency")
{
    Grid g = Grid::uniform(1, 10, 128);
    Field f = make_gaussian(g, 1.0, {0.3});
    Field a(phase_grid(g));
    for (size_t i = 0; i < a.size(); ++i) {
        auto p = a.grid().coords(i);
        a[i] = std::exp(-(p[0] - 0.5) * (p[0] - 0.5) / 2 - p[1] * p[1] / 3);
    }
    CHECK(calculi_consistency(a, Quantization{0.0}, Quantization{0.0}, f) <= 1e-12);
    CHECK(calculi_consistency(a, Quantization{0.0}, Quantization{0.5}, f) <= 1e-7);

    // band-limited random symbol: smooth phase-space bump times a random band-limited profile
    Field b = make_random_bandlimited(g, 12, 2.0);
    Field c = make_random_bandlimited(g, 13, 2.0);
    Field s(phase_grid(g));
    for (int j = 0; j < 128; ++j)
        for (int k = 0; k < 128; ++k) {
            double xi = s.grid().axis(1).point(k);
            s[size_t(j) * 128 + k] = b[j] * c[k] * std::exp(-xi * xi / 8);
        }
    Field h = make_random_packets(g, 14, 3, 2.0);
    CHECK(calculi_consistency(s, Quantization{0.0}, Quantization{1.0}, h) <= 1e-6);
}

TEST_CASE("psido: operator norm estimates")
{
    Grid g = Grid::uniform(1, 10, 128);
    auto M2 = ModulationSpaceSpec::M(YoungFunction::power(2), YoungFunction::power(2));
    auto id = estimate_operator_norm(constant_symbol(g, 1.0), Quantization{0.0}, M2, M2, 4, 1);
    CHECK(id.lower_bound == doctest::Approx(1.0).epsilon(1e-6));

    Field f1 = make_gaussian(g, 1.0, {1.0}), f2 = make_gaussian(g, 2.0, {-1.0}, {1.0});
    auto r1 = estimate_operator_norm(wigner(f1, f2, Quantization{0.0}), Quantization{0.0}, M2, M2, 4, 2);
    CHECK(r1.lower_bound == doctest::Approx(l2_norm(f1) * l2_norm(f2) / std::sqrt(2 * pi)).epsilon(1e-5));

    auto sn = symbol_norm(random_symbol(7), ModulationSpaceSpec::M(YoungFunction::power(3), YoungFunction::power(1.5)));
    CHECK(sn > 0);
    CHECK_THROWS(symbol_norm(random_symbol(7), M2, 64));
}

TEST_CASE("psido: kernel and symbol short-time transforms")
{
    // A = 0, d = 1: |V_phi K(x, y, xi, -eta)| = (2 pi)^{-1/2} |V_psi a(x, eta, xi - eta, y - x)|
    // with phi(x, y) = (F_2 psi)(x, x - y); both sides by direct periodic sums
    const int N = 32;
    Grid g = Grid::symmetric(1, N);
    const double L = g.axis(0).L, dx = g.axis(0).spacing();
    const Axis dual = g.axis(0).dual();
    const double dxi = dual.spacing();
    Field a = sample_symbol(random_symbol(17), g);
    KernelMatrix K = kernel(a, Quantization::kohn_nirenberg());
    auto psi = [](double x, double xi) { return std::exp(-(x * x + xi * xi) / 2); };
    auto Fpsi = [](double x, double z) { return std::exp(-(x * x + z * z) / 2); };

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, N - 1);
    double err = 0, scale = 0;
    for (int trial = 0; trial < 24; ++trial) {
        int j0 = pick(rng), m0 = pick(rng), k1 = pick(rng), k2 = pick(rng);
        double x0 = g.axis(0).point(j0), y0 = g.axis(0).point(m0);
        double xi = dual.point(k1), eta = dual.point(k2);
        cplx lhs = 0;
        for (int j = 0; j < N; ++j)
            for (int m = 0; m < N; ++m) {
                double x = g.axis(0).point(j), y = g.axis(0).point(m);
                double u = wrap(x - x0, L), v = wrap(u - wrap(y - y0, L), L);
                lhs += K(j, m) * Fpsi(u, v) * std::polar(1.0, -(x * xi - y * eta));
            }
        lhs *= dx * dx / (2 * pi);
        cplx rhs = 0;
        const double w1 = xi - eta, w2 = y0 - x0;
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                double x = g.axis(0).point(j), z = dual.point(k);
                double u = wrap(x - x0, L), v = wrap(z - eta, dual.L);
                rhs += a[size_t(j) * N + k] * psi(u, v) * std::polar(1.0, -(x * w1 + z * w2));
            }
        rhs *= dx * dxi / (2 * pi);
        err = std::max(err, std::abs(std::abs(lhs) - std::abs(rhs) / std::sqrt(2 * pi)));
        scale = std::max(scale, std::abs(rhs) / std::sqrt(2 * pi));
    }
    CHECK(scale > 0);
    CHECK(err <= 1e-6 * scale);
}
