// exercises the shared library through its C interface only
#include "doctest.h"

#include "orlicz_tf/orlicz_tf.h"

#include "json.hpp"

#include <cmath>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Reply {
    otf_status st;
    json report;
    std::string table;
};

Reply run(const json& req)
{
    char* rep = nullptr;
    char* tab = nullptr;
    Reply r;
    r.st = otf_run_command(req.dump().c_str(), &rep, &tab);
    if (rep) r.report = json::parse(rep);
    if (tab) r.table = tab;
    otf_string_free(rep);
    otf_string_free(tab);
    return r;
}

}  // namespace

TEST_CASE("capi: young handles")
{
    otf_young* phi = nullptr;
    REQUIRE(otf_young_create(R"({"kind":"power","params":{"p":3}})", &phi) == OTF_OK);
    double v = 0;
    CHECK(otf_young_evaluate(phi, 2.0, &v) == OTF_OK);
    CHECK(v == doctest::Approx(8.0));
    CHECK(otf_young_essential_inverse(phi, 27.0, &v) == OTF_OK);
    CHECK(v == doctest::Approx(3.0));
    otf_young* cj = nullptr;
    REQUIRE(otf_young_conjugate(phi, &cj) == OTF_OK);
    double a = 0, b = 0;
    CHECK(otf_young_evaluate(cj, 1.5, &a) == OTF_OK);
    CHECK(otf_young_legendre(phi, 1.5, &b) == OTF_OK);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
    otf_young_destroy(cj);
    otf_young_destroy(phi);

    otf_young* bad = nullptr;
    CHECK(otf_young_create(R"({"kind":"power","params":{"p":-1}})", &bad) == OTF_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(otf_last_error()) > 0);
    CHECK(otf_young_create("{not json", &bad) == OTF_ERR_INVALID_ARGUMENT);
    CHECK(otf_young_evaluate(nullptr, 1.0, &v) == OTF_ERR_NULL_POINTER);
}

TEST_CASE("capi: fields")
{
    otf_field* f = nullptr;
    REQUIRE(otf_field_generate("gaussian:1", 1, 12.0, 256, &f) == OTF_OK);
    double n = 0;
    CHECK(otf_field_l2_norm(f, &n) == OTF_OK);
    CHECK(n == doctest::Approx(1.0).epsilon(1e-10));
    size_t sz = 0;
    CHECK(otf_field_size(f, &sz) == OTF_OK);
    CHECK(sz == 256);

    otf_field* V = nullptr;
    REQUIRE(otf_field_stft(f, nullptr, &V) == OTF_OK);
    int rank = 0;
    CHECK(otf_field_rank(V, &rank) == OTF_OK);
    CHECK(rank == 2);
    double e = 0;
    CHECK(otf_field_entropy(f, nullptr, &e) == OTF_OK);
    CHECK(e == doctest::Approx(1 + std::log(2 * M_PI)).epsilon(1e-8));
    double m = 0;
    CHECK(otf_field_modulation_norm(f, R"({"phi":"power","psi":{"kind":"power","params":{"p":2}},"flavor":"M"})", &m) ==
          OTF_ERR_INVALID_ARGUMENT);
    CHECK(otf_field_modulation_norm(
              f, R"({"phi":{"kind":"power","params":{"p":2}},"psi":{"kind":"power","params":{"p":2}},"flavor":"M"})",
              &m) == OTF_OK);
    CHECK(m == doctest::Approx(1.0).epsilon(1e-8));

    std::vector<double> re(64, 0.0);
    re[10] = 2.0;
    otf_field* s = nullptr;
    REQUIRE(otf_field_create(1, 4.0, 64, re.data(), nullptr, &s) == OTF_OK);
    otf_young* cap = nullptr;
    REQUIRE(otf_young_create(R"({"kind":"cap","params":{"a":1}})", &cap) == OTF_OK);
    CHECK(otf_field_luxemburg_norm(s, cap, &n) == OTF_OK);
    CHECK(n == doctest::Approx(2.0));
    CHECK(otf_field_create(1, 4.0, 63, re.data(), nullptr, &s) == OTF_ERR_INVALID_ARGUMENT);

    otf_young_destroy(cap);
    otf_field_destroy(s);
    otf_field_destroy(V);
    otf_field_destroy(f);
}

TEST_CASE("capi: commands")
{
    auto r = run({{"command", "entropy"},
                  {"action", "scan"},
                  {"args", {{"lambdas", "0.25,1,4"}}},
                  {"config", json::object()}});
    REQUIRE(r.st == OTF_OK);
    CHECK(r.report["schema"] == 1);
    CHECK(r.report["config"]["seed"] == 42);
    // lambda,E,M2_norm,MPhi_norm
    std::istringstream in(r.table);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("lambda,E", 0) == 0);
    std::vector<double> E;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c = line.find(',');
        E.push_back(std::stod(line.substr(c + 1)));
    }
    REQUIRE(E.size() == 3);
    CHECK(E[2] - E[1] == doctest::Approx(std::log(1.25)).epsilon(1e-5));

    auto y = run({{"command", "young"},
                  {"action", "conjugate"},
                  {"args", {{"young", {{"kind", "log_example"}}}, {"at", "0.01"}}},
                  {"config", json::object()}});
    CHECK(y.st == OTF_OK);
    CHECK(y.report["pass"] == true);

    auto bad = run({{"command", "nope"}, {"action", "x"}, {"args", json::object()}, {"config", json::object()}});
    CHECK(bad.st == OTF_ERR_INVALID_ARGUMENT);

    // a deliberately impossible tolerance produces a failing record and a report
    auto f = run({{"command", "verify"}, {"action", "moyal"}, {"args", json::object()},
                  {"config", {{"trials", 3}, {"tol", 0.0}}}});
    CHECK(f.st == OTF_ERR_NUMERICAL);
    CHECK(f.report["pass"] == false);
}

TEST_CASE("capi: reports are reproducible")
{
    json req = {{"command", "psido"},
                {"action", "opnorm"},
                {"args", {{"symbol", "random:3"}}},
                {"config", {{"N", 64}, {"L", 8.0}, {"trials", 3}}}};
    auto a = run(req), b = run(req);
    a.report.erase("timing_ms");
    b.report.erase("timing_ms");
    CHECK(a.report.dump() == b.report.dump());
}
