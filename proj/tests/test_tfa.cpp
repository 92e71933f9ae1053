#include "doctest.h"

#include "orlicz_tf/modspace.hpp"
#include "orlicz_tf/tfa.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace otf;
using std::numbers::pi;

namespace {

Field random_phase(const Grid& pg, unsigned seed, double radius = 1e9)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Field F(pg);
    for (size_t i = 0; i < F.size(); ++i) {
        auto c = pg.coords(i);
        double re = nd(rng), im = nd(rng);
        if (std::hypot(c[0], c[1]) < radius) F[i] = cplx(re, im);
    }
    return F;
}

double rel(const Field& a, const Field& b) { return l2_norm(a - b) / l2_norm(b); }

}  // namespace

TEST_CASE("tfa: STFT of the standard gaussian")
{
    Grid g = Grid::uniform(1, 12, 256);
    Field phi = make_gaussian(g, 1.0);
    Field V = stft(phi, phi);
    double err = 0;
    for (size_t i = 0; i < V.size(); ++i) {
        auto p = V.grid().coords(i);
        cplx ref = std::polar(std::exp(-(p[0] * p[0] + p[1] * p[1]) / 4) / std::sqrt(2 * pi), -p[0] * p[1] / 2);
        err = std::max(err, std::abs(V[i] - ref));
    }
    CHECK(err <= 1e-8);
    CHECK(max_abs(stft(Field(g), phi)) == 0.0);
}

TEST_CASE("tfa: Moyal, inversion, adjoint")
{
    Grid g = Grid::uniform(1, 12, 256);
    Field phi = make_gaussian(g, 1.0);
    for (unsigned s = 0; s < 5; ++s) {
        Field f = make_random_packets(g, s);
        Field V = stft(f, phi);
        CHECK(l2_norm(V) == doctest::Approx(l2_norm(f) * l2_norm(phi)).epsilon(1e-8));
        Field back = stft_adjoint(V, phi);
        back *= 1.0 / std::pow(l2_norm(phi), 2);
        CHECK(rel(back, f) <= 1e-8);
        Field F = random_phase(V.grid(), 100 + s);
        cplx a = inner_product(V, F), b = inner_product(f, stft_adjoint(F, phi));
        CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
    }
    CHECK(max_abs(stft_adjoint(Field(phase_grid(g)), phi)) == 0.0);
}

TEST_CASE("tfa: projection")
{
    Grid g = Grid::uniform(1, 8, 64);
    Field phi = make_gaussian(g, 1.0);
    Field V = stft(make_random_packets(g, 3, 3, 2.0), phi);
    CHECK(rel(stft_projection(V, phi), V) <= 1e-8);
    Field F = random_phase(V.grid(), 1), G = random_phase(V.grid(), 2);
    Field P = stft_projection(F, phi);
    CHECK(rel(stft_projection(P, phi), P) <= 1e-8);
    cplx a = inner_product(P, G), b = inner_product(F, stft_projection(G, phi));
    CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
}

TEST_CASE("tfa: twisted convolution")
{
    Grid g = Grid::uniform(1, 8, 32);
    Field phi = make_gaussian(g, 1.0);
    Field f = make_random_packets(g, 11, 2, 1.5);
    Field Vf = stft(f, phi);
    Field lhs = twisted_convolution(stft(phi, phi), Vf);
    Field rhs = inner_product(phi, phi) * Vf;
    CHECK(rel(lhs, rhs) <= 1e-6);

    // associativity on fields supported away from the edges
    Field A = random_phase(Vf.grid(), 5, 3.0), B = random_phase(Vf.grid(), 6, 3.0), C = random_phase(Vf.grid(), 7, 3.0);
    Field l = twisted_convolution(twisted_convolution(A, B), C);
    Field r = twisted_convolution(A, twisted_convolution(B, C));
    CHECK(rel(l, r) <= 1e-8);
    CHECK(max_abs(twisted_convolution(A, Field(Vf.grid()))) == 0.0);
}

TEST_CASE("tfa: Wigner closed forms")
{
    Grid g = Grid::uniform(1, 12, 256);
    Field h = make_gaussian(g, 1.0);
    Field W = wigner(h, h, Quantization::weyl());
    double err = 0;
    for (size_t i = 0; i < W.size(); ++i) {
        auto p = W.grid().coords(i);
        err = std::max(err, std::abs(W[i] - std::sqrt(2 / pi) * std::exp(-(p[0] * p[0] + p[1] * p[1]))));
    }
    CHECK(err <= 1e-7);

    // Rihaczek form at A = 0
    Field f1 = make_gaussian(g, 1.2, {0.7}, {0.3}), f2 = make_gaussian(g, 0.8, {-0.4}, {-1.0});
    Field R = wigner(f1, f2, Quantization::kohn_nirenberg());
    Field F2 = fourier_transform(f2);
    const int N = 256;
    err = 0;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            double x = g.axis(0).point(j), xi = F2.grid().axis(0).point(k);
            cplx ref = f1[j] * std::conj(F2[k]) * std::polar(1.0, -x * xi);
            err = std::max(err, std::abs(R[size_t(j) * N + k] - ref));
        }
    CHECK(err <= 1e-8);

    for (double t : {0.0, 0.5, 1.0, 0.3})
        CHECK(l2_norm(wigner(f1, f2, Quantization{t})) == doctest::Approx(l2_norm(f1) * l2_norm(f2)).epsilon(1e-7));
}

TEST_CASE("tfa: quantization change")
{
    Grid g = Grid::uniform(1, 16, 256);
    Field f1 = make_random_packets(g, 2, 3, 2.0), f2 = make_random_packets(g, 3, 3, 2.0);
    Field w0 = wigner(f1, f2, Quantization{0.0});
    CHECK(max_abs_diff(quantization_change(w0, Quantization{0.0}, Quantization{0.0}), w0) <= 1e-12);
    for (double t : {0.5, 1.0}) {
        Field wt = wigner(f1, f2, Quantization{t});
        CHECK(rel(quantization_change(w0, Quantization{0.0}, Quantization{t}), wt) <= 1e-7);
    }
    Field a = random_phase(w0.grid(), 4);
    Field rt = quantization_change(quantization_change(a, Quantization{0.0}, Quantization{0.5}), Quantization{0.5},
                                   Quantization{0.0});
    CHECK(rel(rt, a) <= 1e-10);
}
