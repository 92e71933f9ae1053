#include "orlicz_tf/modspace.hpp"

#include "orlicz_tf/tfa.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace otf {

ModulationSpaceSpec ModulationSpaceSpec::M(YoungFunction phi, YoungFunction psi)
{
    ModulationSpaceSpec s;
    s.phi = std::move(phi);
    s.psi = std::move(psi);
    s.flavor = Flavor::M;
    return s;
}

ModulationSpaceSpec ModulationSpaceSpec::W(YoungFunction phi, YoungFunction psi)
{
    ModulationSpaceSpec s = M(std::move(phi), std::move(psi));
    s.flavor = Flavor::W;
    return s;
}

ModulationSpaceSpec ModulationSpaceSpec::flat(YoungFunction phi)
{
    ModulationSpaceSpec s = M(phi, phi);
    s.flavor = Flavor::flat;
    return s;
}

const char* to_string(Flavor f)
{
    switch (f) {
    case Flavor::M: return "M";
    case Flavor::W: return "W";
    case Flavor::flat: return "flat";
    }
    return "M";
}

Field default_window(const Grid& g) { return make_gaussian(g, 1.0); }

MixedNormSpec mixed_spec(const ModulationSpaceSpec& spec, int d)
{
    std::vector<int> xs, xis, all;
    for (int i = 0; i < d; ++i) xs.push_back(i);
    for (int i = 0; i < d; ++i) xis.push_back(d + i);
    all = xs;
    all.insert(all.end(), xis.begin(), xis.end());
    MixedNormSpec m;
    m.weight = spec.weight;
    switch (spec.flavor) {
    case Flavor::M:
        m.stages = {{xs, spec.phi}, {xis, spec.psi}};
        break;
    case Flavor::W:
        m.stages = {{xis, spec.psi}, {xs, spec.phi}};
        break;
    case Flavor::flat:
        m.stages = {{all, spec.phi}};
        break;
    }
    return m;
}

double phase_space_norm(const Field& V, const ModulationSpaceSpec& spec)
{
    const int r = V.grid().rank();
    if (r % 2) throw std::invalid_argument("phase_space_norm: odd-rank field");
    return mixed_norm(V, mixed_spec(spec, r / 2));
}

double modulation_norm(const Field& f, const ModulationSpaceSpec& spec)
{
    if (spec.window) {
        require_same_grid(f.grid(), spec.window->grid(), "modulation_norm");
        if (!(l2_norm(*spec.window) > 0)) throw std::invalid_argument("modulation_norm: zero window");
        return phase_space_norm(stft(f, *spec.window), spec);
    }
    return phase_space_norm(stft(f, default_window(f.grid())), spec);
}

// ---------------------------------------------------------------- embeddings

namespace {

double safe_ratio(double a, double b)
{
    if (a == 0) return 0.0;
    if (b == 0) return kInf;
    return a / b;
}

}  // namespace

EmbeddingResult check_embedding(const YoungFunction& phi1, const YoungFunction& psi1, const YoungFunction& phi2,
                                const YoungFunction& psi2, double t0)
{
    if (!(t0 > 0)) throw std::invalid_argument("check_embedding: t0 must be positive");
    EmbeddingResult r;
    r.phi = probe_near_zero([&](double t) { return safe_ratio(phi2(t), phi1(t)); }, t0);
    r.psi = probe_near_zero([&](double t) { return safe_ratio(psi2(t), psi1(t)); }, t0);
    r.embeds = r.phi.bounded && r.psi.bounded;
    return r;
}

// ---------------------------------------------------------------- hypotheses

double conjugate_exponent(double p)
{
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Named {
    const char* name;
    const YoungFunction* f;
};

// steering exponent `se`, lower power `lp`, inverse-product exponent `ie`
void growth_conditions(HypothesisReport& rep, const Named (&fs)[4], double se, double lp, double ie, double r)
{
    for (const auto& nf : fs) {
        const YoungFunction& f = *nf.f;
        const std::string tag = std::string(nf.name) + "=" + f.name();

        ConditionResult young{"young:" + tag, false, 0.0, ""};
        if (f.quasi_order() != 1.0) {
            young.detail = "quasi-Young";
        } else if (f.is_power()) {
            young.pass = f.p() >= 1;
        } else {
            young.pass = is_midpoint_convex(f, 1e-8, 1e2, 160);
        }
        rep.conditions.push_back(young);

        auto st = check_p_steered(f, se);
        rep.conditions.push_back({"steered(" + num(se) + "):" + tag, st.steered, 0.0, to_string(st.branch)});

        auto d2 = check_delta2(f, r);
        rep.conditions.push_back({"delta2_local:" + tag, d2.holds, d2.C, d2.analytic ? "analytic" : "sampled"});

        ConditionResult lower{"lower_power(" + num(lp) + "):" + tag, false, 0.0, ""};
        if (std::isinf(lp)) {
            lower.pass = r < 1;
            lower.detail = "t^inf vanishes on [0, r] for r < 1";
        } else {
            auto g = probe_near_zero([&](double t) { return safe_ratio(std::pow(t, lp), f(t)); }, r);
            lower.pass = g.bounded;
            lower.constant = g.sup;
            lower.detail = "sup of t^" + num(lp) + "/Phi on (1e-8, r]";
        }
        rep.conditions.push_back(lower);
    }
    const char* pair_names[2] = {"inverse_product:Phi", "inverse_product:Psi"};
    const YoungFunction* pairs[2][2] = {{fs[0].f, fs[2].f}, {fs[1].f, fs[3].f}};
    for (int k = 0; k < 2; ++k) {
        auto g = probe_near_zero(
            [&](double s) {
                return essential_inverse(*pairs[k][0], s) * essential_inverse(*pairs[k][1], s) / std::pow(s, ie);
            },
            r);
        rep.conditions.push_back({std::string(pair_names[k]) + "(s^" + num(ie) + ")", g.bounded, g.sup, ""});
    }
}

void finish(HypothesisReport& rep)
{
    rep.pass = true;
    for (const auto& c : rep.conditions) rep.pass = rep.pass && c.pass;
}

}  // namespace

HypothesisReport check_pseudo_hypotheses(double p, double q, const YoungFunction& phi1, const YoungFunction& psi1,
                                         const YoungFunction& phi2, const YoungFunction& psi2, double r)
{
    if (!(p >= 1) || !(q >= 1)) throw std::invalid_argument("check_pseudo_hypotheses: p, q must lie in [1, inf]");
    HypothesisReport rep;
    rep.conditions.push_back({"q<=p", q <= p, 0.0, "q=" + num(q) + " p=" + num(p)});
    const Named fs[4] = {{"Phi1", &phi1}, {"Psi1", &psi1}, {"Phi2", &phi2}, {"Psi2", &psi2}};
    if (p == 1.0) {
        for (const auto& nf : fs) {
            bool ok = nf.f->quasi_order() == 1.0 &&
                      (nf.f->is_power() ? nf.f->p() >= 1 : is_midpoint_convex(*nf.f, 1e-8, 1e2, 160));
            rep.conditions.push_back({std::string("young:") + nf.name + "=" + nf.f->name(), ok, 0.0, ""});
        }
    } else {
        const double pp = conjugate_exponent(p), qp = conjugate_exponent(q);
        growth_conditions(rep, fs, pp, qp, 1.0 / pp + 1.0 / qp, r);
    }
    finish(rep);
    return rep;
}

HypothesisReport check_wigner_hypotheses(double p, double q, const YoungFunction& phi1, const YoungFunction& psi1,
                                         const YoungFunction& phi2, const YoungFunction& psi2, double r)
{
    if (!(p >= 1) || !(q >= 1)) throw std::invalid_argument("check_wigner_hypotheses: p, q must lie in [1, inf]");
    HypothesisReport rep;
    rep.conditions.push_back({"p<=q", p <= q, 0.0, "p=" + num(p) + " q=" + num(q)});
    const Named fs[4] = {{"Phi1", &phi1}, {"Psi1", &psi1}, {"Phi2", &phi2}, {"Psi2", &psi2}};
    if (std::isinf(p)) {
        for (const auto& nf : fs) {
            bool ok = nf.f->quasi_order() == 1.0 &&
                      (nf.f->is_power() ? nf.f->p() >= 1 : is_midpoint_convex(*nf.f, 1e-8, 1e2, 160));
            rep.conditions.push_back({std::string("young:") + nf.name + "=" + nf.f->name(), ok, 0.0, ""});
        }
    } else {
        double ie = 1.0 / p + (std::isinf(q) ? 0.0 : 1.0 / q);
        growth_conditions(rep, fs, p, q, ie, r);
    }
    finish(rep);
    return rep;
}

HypothesisReport check_power_pseudo_hypotheses(double p, double q, double p1, double q1, double p2, double q2)
{
    return check_pseudo_hypotheses(p, q, YoungFunction::power(p1), YoungFunction::power(q1),
                                   YoungFunction::power(p2), YoungFunction::power(q2));
}

// ---------------------------------------------------------------- factorization

FactorizationResult stft_norm_factorization_check(const Field& f1, const Field& f2, const YoungFunction& phi,
                                                  const YoungFunction& psi)
{
    require_same_grid(f1.grid(), f2.grid(), "stft_norm_factorization_check");
    const Grid& g = f1.grid();
    if (g.rank() != 1) throw std::invalid_argument("stft_norm_factorization_check: d = 1 only");
    if (g.axis(0).N > 48) throw std::invalid_argument("stft_norm_factorization_check: N > 48 is too large for the 4d object");
    FactorizationResult r;
    Field V = stft(f2, f1);
    r.lhs = modulation_norm(V, ModulationSpaceSpec::M(phi, psi));
    r.rhs = modulation_norm(f1, ModulationSpaceSpec::M(phi, psi)) * modulation_norm(f2, ModulationSpaceSpec::W(psi, phi));
    r.ratio = r.rhs > 0 ? r.lhs / r.rhs : (r.lhs == 0 ? std::nan("") : kInf);
    return r;
}

}  // namespace otf
