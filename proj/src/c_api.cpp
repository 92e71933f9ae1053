#include "orlicz_tf/orlicz_tf.h"

#include "orlicz_tf/commands.hpp"
#include "orlicz_tf/entropy.hpp"
#include "orlicz_tf/parallel.hpp"
#include "orlicz_tf/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct otf_young {
    otf::YoungFunction phi;
};

struct otf_field {
    otf::Field f;
};

namespace {

thread_local std::string last_error;

otf_status fail(otf_status s, const std::string& msg)
{
    last_error = msg;
    return s;
}

template <class F>
otf_status guarded(F&& body)
{
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        return fail(OTF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(OTF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(OTF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(OTF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(OTF_ERR_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

#define OTF_REQUIRE(p)                                              \
    do {                                                            \
        if (!(p)) return fail(OTF_ERR_NULL_POINTER, #p " is NULL"); \
    } while (0)

}  // namespace

extern "C" {

const char* otf_last_error(void) { return last_error.c_str(); }

const char* otf_version(void) { return "0.1.0"; }

otf_status otf_young_create(const char* spec_json, otf_young** out)
{
    OTF_REQUIRE(spec_json);
    OTF_REQUIRE(out);
    return guarded([&] {
        *out = new otf_young{otf::young_from_json(nlohmann::json::parse(spec_json))};
        return OTF_OK;
    });
}

void otf_young_destroy(otf_young* phi) { delete phi; }

otf_status otf_young_evaluate(const otf_young* phi, double t, double* out)
{
    OTF_REQUIRE(phi);
    OTF_REQUIRE(out);
    return guarded([&] {
        *out = phi->phi(t);
        return OTF_OK;
    });
}

otf_status otf_young_conjugate(const otf_young* phi, otf_young** out)
{
    OTF_REQUIRE(phi);
    OTF_REQUIRE(out);
    return guarded([&] {
        *out = new otf_young{otf::conjugate(phi->phi)};
        return OTF_OK;
    });
}

otf_status otf_young_essential_inverse(const otf_young* phi, double s, double* out)
{
    OTF_REQUIRE(phi);
    OTF_REQUIRE(out);
    return guarded([&] {
        *out = otf::essential_inverse(phi->phi, s);
        return OTF_OK;
    });
}

otf_status otf_young_legendre(const otf_young* phi, double t, double* out)
{
    OTF_REQUIRE(phi);
    OTF_REQUIRE(out);
    return guarded([&] {
        *out = otf::legendre(phi->phi, t);
        return OTF_OK;
    });
}

otf_status otf_field_create(int d, double L, int N, const double* re, const double* im, otf_field** out)
{
    OTF_REQUIRE(re);
    OTF_REQUIRE(out);
    return guarded([&] {
        if (d < 1 || N < 2 || N % 2 || !(L > 0)) return fail(OTF_ERR_INVALID_ARGUMENT, "bad grid");
        otf::Field f(otf::Grid::uniform(d, L, N));
        for (size_t i = 0; i < f.size(); ++i) f[i] = otf::cplx(re[i], im ? im[i] : 0.0);
        *out = new otf_field{std::move(f)};
        return OTF_OK;
    });
}

otf_status otf_field_generate(const char* signal_spec, int d, double L, int N, otf_field** out)
{
    OTF_REQUIRE(signal_spec);
    OTF_REQUIRE(out);
    return guarded([&] {
        if (d < 1 || N < 2 || N % 2 || !(L > 0)) return fail(OTF_ERR_INVALID_ARGUMENT, "bad grid");
        otf::Field f = otf::make_signal(signal_spec, otf::Grid::uniform(d, L, N));
        *out = new otf_field{std::move(f)};
        return OTF_OK;
    });
}

void otf_field_destroy(otf_field* f) { delete f; }

otf_status otf_field_size(const otf_field* f, size_t* out)
{
    OTF_REQUIRE(f);
    OTF_REQUIRE(out);
    *out = f->f.size();
    return OTF_OK;
}

otf_status otf_field_rank(const otf_field* f, int* out)
{
    OTF_REQUIRE(f);
    OTF_REQUIRE(out);
    *out = f->f.grid().rank();
    return OTF_OK;
}

otf_status otf_field_values(const otf_field* f, double* re, double* im)
{
    OTF_REQUIRE(f);
    for (size_t i = 0; i < f->f.size(); ++i) {
        if (re) re[i] = f->f[i].real();
        if (im) im[i] = f->f[i].imag();
    }
    return OTF_OK;
}

otf_status otf_field_l2_norm(const otf_field* f, double* out)
{
    OTF_REQUIRE(f);
    OTF_REQUIRE(out);
    *out = otf::l2_norm(f->f);
    return OTF_OK;
}

otf_status otf_field_luxemburg_norm(const otf_field* f, const otf_young* phi, double* out)
{
    OTF_REQUIRE(f);
    OTF_REQUIRE(phi);
    OTF_REQUIRE(out);
    return guarded([&] {
        *out = otf::luxemburg_norm(f->f, phi->phi);
        return OTF_OK;
    });
}

otf_status otf_field_stft(const otf_field* f, const otf_field* window, otf_field** out)
{
    OTF_REQUIRE(f);
    OTF_REQUIRE(out);
    return guarded([&] {
        otf::Field w = window ? window->f : otf::default_window(f->f.grid());
        *out = new otf_field{otf::stft(f->f, w)};
        return OTF_OK;
    });
}

otf_status otf_field_modulation_norm(const otf_field* f, const char* spec_json, double* out)
{
    OTF_REQUIRE(f);
    OTF_REQUIRE(spec_json);
    OTF_REQUIRE(out);
    return guarded([&] {
        *out = otf::modulation_norm(f->f, otf::modspace_from_json(nlohmann::json::parse(spec_json)));
        return OTF_OK;
    });
}

otf_status otf_field_entropy(const otf_field* f, const otf_field* window, double* out)
{
    OTF_REQUIRE(f);
    OTF_REQUIRE(out);
    return guarded([&] {
        *out = window ? otf::entropy(f->f, window->f).value : otf::entropy(f->f).value;
        return OTF_OK;
    });
}

otf_status otf_run_command(const char* request_json, char** report_json, char** table_csv)
{
    OTF_REQUIRE(request_json);
    OTF_REQUIRE(report_json);
    *report_json = nullptr;
    if (table_csv) *table_csv = nullptr;
    return guarded([&] {
        auto res = otf::run_command(nlohmann::json::parse(request_json));
        *report_json = dup(res.report.dump(2));
        if (table_csv && !res.table_csv.empty()) *table_csv = dup(res.table_csv);
        if (res.failed) return fail(OTF_ERR_NUMERICAL, "one or more result records failed");
        return OTF_OK;
    });
}

void otf_string_free(char* s) { std::free(s); }

void otf_set_threads(int n) { otf::set_worker_count(n); }

}  // extern "C"
