#include "doctest.h"

#include "orlicz_tf/serialize.hpp"

#include <cmath>
#include <sstream>

using namespace otf;

TEST_CASE("serialize: young functions round trip")
{
    for (auto phi : {YoungFunction::power(2.5, 3.0), YoungFunction::power_scaled(1.5), YoungFunction::cap(2),
                     YoungFunction::entropy(), YoungFunction::tan_example(), YoungFunction::log_example(),
                     YoungFunction::power(2).with_quasi_order(0.5), conjugate(YoungFunction::entropy())}) {
        auto back = young_from_json(to_json(phi));
        CHECK(back.name() == phi.name());
        for (double t : {0.01, 0.3, 0.9}) {
            double a = phi(t), b = back(t);
            if (std::isinf(a))
                CHECK(std::isinf(b));
            else
                CHECK(b == doctest::Approx(a).epsilon(1e-14));
        }
    }
    CHECK(young_from_json(json("entropy")).kind() == YoungFunction::Kind::entropy);
    CHECK_THROWS(young_from_json(json{{"kind", "nope"}}));
}

TEST_CASE("serialize: weights and specs")
{
    auto w = Weight::product({Weight::polynomial(1.5, 2), Weight::exponential(0.5, 2)});
    auto wb = weight_from_json(to_json(w));
    std::vector<double> x = {1.2, -0.7};
    CHECK(wb(x) == doctest::Approx(w(x)).epsilon(1e-15));

    MixedNormSpec ms{{{{1}, YoungFunction::entropy()}, {{0}, YoungFunction::power(3)}}, Weight::polynomial(1, 2)};
    CHECK(to_json(mixed_spec_from_json(to_json(ms))) == to_json(ms));

    auto mod = ModulationSpaceSpec::W(YoungFunction::power(3), YoungFunction::entropy());
    mod.weight = Weight::polynomial(2, 2);
    auto mb = modspace_from_json(to_json(mod));
    CHECK(mb.flavor == Flavor::W);
    CHECK(to_json(mb) == to_json(mod));

    auto s = random_symbol(4);
    CHECK(to_json(symbol_from_json(to_json(s))) == to_json(s));
    auto rs = symbol_from_json(json{{"random_seed", 4}, {"count", 3}});
    CHECK(to_json(rs) == to_json(s));
}

TEST_CASE("serialize: fields")
{
    Grid g = Grid::uniform(1, 6, 32);
    Field f = make_random_packets(g, 2, 3, 2.0);
    Field j = field_from_json(to_json(f));
    CHECK(j.grid().same_as(g));
    CHECK(max_abs_diff(j, f) == 0.0);

    std::string csv = field_csv(f);
    std::istringstream in(csv);
    Field c = read_field_csv(in);
    CHECK(c.grid().same_as(g));
    CHECK(max_abs_diff(c, f) == 0.0);

    Field p(phase_grid(g));
    for (size_t i = 0; i < p.size(); ++i) p[i] = cplx(double(i), -0.5 * i);
    std::istringstream in2(field_csv(p));
    Field q = read_field_csv(in2);
    CHECK(q.grid().same_as(p.grid()));
    CHECK(max_abs_diff(q, p) == 0.0);

    std::istringstream bad("# field rank=1\nnonsense\n");
    CHECK_THROWS(read_field_csv(bad));
    CHECK(format_double(0.1) == "0.10000000000000001");
}
