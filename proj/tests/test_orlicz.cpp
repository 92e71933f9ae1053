#include "doctest.h"

#include "orlicz_tf/orlicz.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace otf;

namespace {

Field random_field(const Grid& g, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Field f(g);
    for (size_t i = 0; i < f.size(); ++i) {
        double re = nd(rng), im = nd(rng);
        f[i] = cplx(re, im);
    }
    return f;
}

}  // namespace

TEST_CASE("orlicz: Luxemburg norm basics")
{
    std::vector<double> one = {2.0};
    CHECK(luxemburg(one, 1.0, YoungFunction::power(2)) == doctest::Approx(2.0).epsilon(1e-12));

    Grid g = Grid::uniform(1, 8, 64);
    Field f = random_field(g, 1);
    CHECK(luxemburg_norm(f, YoungFunction::cap(1)) == doctest::Approx(max_abs(f)).epsilon(1e-12));

    Grid big = Grid::uniform(1, 12, 256);
    CHECK(luxemburg_norm(make_gaussian(big, 1.0), YoungFunction::power(2)) == doctest::Approx(1.0).epsilon(1e-8));

    for (double p : {1.0, 1.5, 2.0, 4.0})
        CHECK(luxemburg_norm(f, YoungFunction::power(p)) == doctest::Approx(lp_norm(f, p)).epsilon(1e-10));
}

TEST_CASE("orlicz: homogeneity and monotonicity")
{
    Grid g = Grid::uniform(1, 8, 64);
    Field f = random_field(g, 2);
    for (auto phi : {YoungFunction::entropy(), YoungFunction::log_example(), YoungFunction::tan_example()}) {
        double n = luxemburg_norm(f, phi);
        cplx c(-1.7, 0.6);
        CHECK(luxemburg_norm(c * f, phi) == doctest::Approx(std::abs(c) * n).epsilon(1e-10));
        Field h = f;
        for (size_t i = 0; i < h.size(); ++i) h[i] *= 0.5 + 0.5 * std::sin(double(i));
        CHECK(luxemburg_norm(h, phi) <= n + 1e-12);
    }
}

TEST_CASE("orlicz: weighted norm and translation")
{
    Grid g = Grid::uniform(1, 8, 64);
    Field f = make_gaussian(g, 2.0);
    auto w = Weight::polynomial(1, 1);
    auto phi = YoungFunction::entropy();
    double n0 = luxemburg_norm(f, phi, w);
    CHECK(n0 >= luxemburg_norm(f, phi) - 1e-12);
    // shift by 8 cells; w is moderate with C = 1 against itself
    Field s(g);
    for (int k = 0; k < 64; ++k) s[(k + 8) % 64] = f[k];
    double tau = 8 * g.axis(0).spacing();
    CHECK(luxemburg_norm(s, phi, w) <= n0 * std::sqrt(1 + tau * tau) * (1 + 1e-10));
}

TEST_CASE("orlicz: mixed norms")
{
    Grid g = Grid::uniform(2, 6, 32);
    Grid g1 = Grid::uniform(1, 6, 32);
    Field a = make_gaussian(g1, 1.5, {0.5}), b = make_random_bandlimited(g1, 4, 2.0);
    Field F(g);
    for (int i = 0; i < 32; ++i)
        for (int k = 0; k < 32; ++k) F[size_t(i) * 32 + k] = a[i] * b[k];
    auto phi = YoungFunction::power(3), psi = YoungFunction::entropy();
    // axis 1 first with psi, then axis 0 with phi
    MixedNormSpec sp{{{{1}, psi}, {{0}, phi}}, std::nullopt};
    double ref = luxemburg_norm(a, phi) * luxemburg_norm(b, psi);
    CHECK(mixed_norm(F, sp) == doctest::Approx(ref).epsilon(1e-10));

    MixedNormSpec l2{{{{1}, YoungFunction::power(2)}, {{0}, YoungFunction::power(2)}}, std::nullopt};
    Field R = random_field(g, 9);
    CHECK(mixed_norm(R, l2) == doctest::Approx(luxemburg_norm(R, YoungFunction::power(2))).epsilon(1e-10));

    MixedNormSpec one{{{{0, 1}, psi}}, std::nullopt};
    CHECK(mixed_norm(R, one) == luxemburg_norm(R, psi));

    // swapped order equals the norm of the transposed field
    MixedNormSpec fwd{{{{1}, YoungFunction::power(1)}, {{0}, YoungFunction::power(4)}}, std::nullopt};
    MixedNormSpec rev{{{{0}, YoungFunction::power(1)}, {{1}, YoungFunction::power(4)}}, std::nullopt};
    Field T(g);
    for (int i = 0; i < 32; ++i)
        for (int k = 0; k < 32; ++k) T[size_t(k) * 32 + i] = R[size_t(i) * 32 + k];
    CHECK(mixed_norm(R, rev) != doctest::Approx(mixed_norm(R, fwd)));
    CHECK(mixed_norm(R, rev) == doctest::Approx(mixed_norm(T, fwd)).epsilon(1e-14));
}

TEST_CASE("orlicz: convolution")
{
    Grid g = Grid::uniform(1, 8, 64);
    Field a = make_gaussian(g, 1.0), b = make_gaussian(g, 1.0);
    Field c = convolve(a, b);
    // two unit gaussians give sqrt(pi) pi^{-1/2} e^{-x^2/4} = e^{-x^2/4}
    for (int k = 16; k < 48; ++k) {
        double x = g.axis(0).point(k);
        CHECK(std::abs(c[k] - std::exp(-x * x / 4)) <= 1e-10);
    }
}

TEST_CASE("orlicz: Hoelder and Young inequalities")
{
    auto P = [](double p) { return YoungFunction::power(p); };
    auto cs = verify_holder(P(1), P(2), P(2), 1000, 5);
    CHECK(cs.holds);
    CHECK(cs.max_ratio <= 1 + 1e-12);
    CHECK(verify_holder(P(1), P(3), P(1.5), 1000, 6).holds);
    auto E = YoungFunction::entropy();
    auto eh = verify_holder(P(1), E, conjugate(E), 1000, 7);
    CHECK(eh.holds);
    CHECK(eh.max_ratio <= 2.0);

    auto y1 = verify_young_convolution(P(1), P(1), P(1), 200, 8);
    CHECK(y1.holds);
    CHECK(y1.max_ratio <= 1 + 1e-10);
    CHECK(verify_young_convolution(YoungFunction::cap(1), P(2), P(2), 200, 9).holds);
    CHECK(verify_young_convolution(P(2), P(1), P(2), 200, 10).holds);
    CHECK_FALSE(young_precheck(P(1), P(2), P(2)));
}
