#include "doctest.h"

#include "orlicz_tf/modspace.hpp"
#include "orlicz_tf/tfa.hpp"

#include <cmath>
#include <numbers>

using namespace otf;
using std::numbers::pi;

TEST_CASE("modspace: M^2 is Moyal")
{
    Grid g = Grid::uniform(1, 12, 256);
    Field f = make_random_packets(g, 21);
    auto M2 = ModulationSpaceSpec::M(YoungFunction::power(2), YoungFunction::power(2));
    CHECK(modulation_norm(f, M2) == doctest::Approx(l2_norm(f) * l2_norm(default_window(g))).epsilon(1e-8));
}

TEST_CASE("modspace: M^1 of the gaussian")
{
    Grid g = Grid::uniform(1, 12, 256);
    Field h = make_gaussian(g, 1.0);
    auto M1 = ModulationSpaceSpec::M(YoungFunction::power(1), YoungFunction::power(1));
    CHECK(modulation_norm(h, M1) == doctest::Approx(std::sqrt(8 * pi)).epsilon(1e-6));
}

TEST_CASE("modspace: flavors agree when Phi = Psi")
{
    Grid g = Grid::uniform(1, 10, 128);
    Field f = make_random_packets(g, 5, 3, 2.0);
    for (auto phi : {YoungFunction::power(3), YoungFunction::power(1.5)}) {
        double m = modulation_norm(f, ModulationSpaceSpec::M(phi, phi));
        CHECK(modulation_norm(f, ModulationSpaceSpec::W(phi, phi)) == doctest::Approx(m).epsilon(1e-10));
        CHECK(modulation_norm(f, ModulationSpaceSpec::flat(phi)) == doctest::Approx(m).epsilon(1e-10));
    }
    // mixed flavors differ in general
    auto a = YoungFunction::power(1), b = YoungFunction::power(4);
    CHECK(modulation_norm(f, ModulationSpaceSpec::M(a, b)) != doctest::Approx(modulation_norm(f, ModulationSpaceSpec::W(a, b))));
}

TEST_CASE("modspace: embeddings")
{
    auto E = YoungFunction::entropy();
    auto P = [](double p) { return YoungFunction::power(p); };
    CHECK(check_embedding(E, E, P(2), P(2), 0.1).embeds);
    CHECK_FALSE(check_embedding(P(2), P(2), E, E, 0.1).embeds);
    CHECK(check_embedding(P(1), P(1), P(3), P(3), 0.1).embeds);
    CHECK(check_embedding(P(1.5), P(2), P(1.5), P(4), 0.1).embeds);
    CHECK_FALSE(check_embedding(P(3), P(3), P(1), P(1), 0.1).embeds);
}

TEST_CASE("modspace: hypotheses")
{
    auto E = YoungFunction::entropy();
    auto rep = check_pseudo_hypotheses(3.0, 1.5, E, E, E, E);
    CHECK(rep.pass);
    for (const auto& c : rep.conditions) CHECK_MESSAGE(c.pass, c.name);
    CHECK(check_power_pseudo_hypotheses(2, 2, 2, 2, 2, 2).pass);
    CHECK_FALSE(check_power_pseudo_hypotheses(1, 2, 2, 2, 2, 2).pass);
    CHECK(conjugate_exponent(2) == doctest::Approx(2.0));
    CHECK(std::isinf(conjugate_exponent(1)));
    CHECK(conjugate_exponent(kInf) == 1.0);
    auto w = check_wigner_hypotheses(3.0, 1.5, E, E, E, E);
    CHECK_FALSE(w.conditions.empty());
}

TEST_CASE("modspace: STFT norm factorization")
{
    Grid g = Grid::uniform(1, 5, 24);
    Field h = make_gaussian(g, 1.0);
    auto r = stft_norm_factorization_check(h, h, YoungFunction::power(2), YoungFunction::power(2));
    CHECK(r.ratio == doctest::Approx(1.0).epsilon(5e-2));

    double ratios[2];
    int k = 0;
    for (int N : {24, 32}) {
        Grid gg = Grid::uniform(1, std::sqrt(pi * N / 2), N);
        auto q = stft_norm_factorization_check(make_gaussian(gg, 1.0), make_hermite(gg, 1), YoungFunction::power(1),
                                               YoungFunction::power(1));
        ratios[k++] = q.ratio;
    }
    CHECK(std::max(ratios[0] / ratios[1], ratios[1] / ratios[0]) <= 4.0);

    auto z = stft_norm_factorization_check(h, Field(g), YoungFunction::power(2), YoungFunction::power(2));
    CHECK(z.lhs == 0.0);
    CHECK(z.rhs == 0.0);
}
