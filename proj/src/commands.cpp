#include "orlicz_tf/commands.hpp"

#include "orlicz_tf/entropy.hpp"
#include "orlicz_tf/modspace.hpp"
#include "orlicz_tf/orlicz.hpp"
#include "orlicz_tf/psido.hpp"
#include "orlicz_tf/serialize.hpp"
#include "orlicz_tf/suites.hpp"
#include "orlicz_tf/tfa.hpp"
#include "orlicz_tf/young.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace otf {

using std::numbers::pi;

namespace {

// every default lives here and is echoed into the report
struct RunConfig {
    int N = 256;
    double L = 12.0;
    int d = 1;
    std::uint64_t seed = 42;
    int trials = 0;  // 0: command default
    double tol = 0;  // 0: command default
    json given;      // keys the caller set explicitly

    bool has(const char* k) const { return given.contains(k); }
    double tol_or(double dflt) const { return has("tol") ? tol : dflt; }
    Grid grid() const { return Grid::uniform(d, L, N); }
    json echo() const { return {{"N", N}, {"L", L}, {"d", d}, {"seed", seed}, {"trials", trials}, {"tol", tol}}; }
};

RunConfig parse_config(const json& j)
{
    RunConfig c;
    c.given = j.is_object() ? j : json::object();
    c.N = c.given.value("N", c.N);
    c.L = c.given.value("L", c.L);
    c.d = c.given.value("d", c.d);
    c.seed = c.given.value("seed", c.seed);
    c.trials = c.given.value("trials", c.trials);
    c.tol = c.given.value("tol", c.tol);
    if (c.N < 2 || c.N % 2) throw std::invalid_argument("N must be even and >= 2");
    if (!(c.L > 0)) throw std::invalid_argument("L must be positive");
    if (c.d < 1 || c.d > 3) throw std::invalid_argument("d must be 1, 2 or 3");
    if (c.trials < 0) throw std::invalid_argument("trials must be nonnegative");
    if (c.tol < 0) throw std::invalid_argument("tol must be nonnegative");
    return c;
}

struct Ctx {
    RunConfig cfg;
    json args;
    std::vector<Record> results;
    json summary = json::object();
    std::string table;
};

void require_d1(const Ctx& c, const char* what)
{
    if (c.cfg.d != 1) throw std::invalid_argument(std::string(what) + " supports d = 1 only");
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

double to_num(const std::string& s)
{
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
    return v;
}

std::vector<double> num_list(const json& a, const char* key, std::vector<double> dflt)
{
    if (!a.contains(key)) return dflt;
    const json& v = a.at(key);
    if (v.is_array()) return v.get<std::vector<double>>();
    if (v.is_number()) return {v.get<double>()};
    std::vector<double> out;
    for (const auto& s : split(v.get<std::string>(), ',')) {
        auto f = split(s, '/');
        out.push_back(f.size() == 2 ? to_num(f[0]) / to_num(f[1]) : to_num(s));
    }
    return out;
}

bool is_path(const std::string& s)
{
    auto ends = [&](const char* e) {
        std::string x(e);
        return s.size() > x.size() && s.compare(s.size() - x.size(), x.size(), x) == 0;
    };
    return ends(".csv") || ends(".json");
}

}  // namespace

Field make_signal(const std::string& spec, const Grid& g)
{
    if (is_path(spec)) {
        Field f = load_field(spec);
        return f;
    }
    auto parts = split(spec, ':');
    if (parts.empty()) throw std::invalid_argument("empty signal spec");
    const std::string& k = parts[0];
    auto arg = [&](size_t i, double d) { return parts.size() > i ? to_num(parts[i]) : d; };
    const int d = g.rank();
    if (k == "gaussian") {
        double lam = arg(1, 1.0);
        std::vector<double> x0, xi0;
        if (parts.size() > 2) x0.assign(d, arg(2, 0));
        if (parts.size() > 3) xi0.assign(d, arg(3, 0));
        return make_gaussian(g, lam, x0, xi0);
    }
    if (k == "hermite") return make_hermite(g, int(arg(1, 0)));
    if (k == "packets") return make_random_packets(g, std::uint64_t(arg(1, 0)), int(arg(2, 4)), arg(3, 3.0));
    if (k == "bandlimited") return make_random_bandlimited(g, std::uint64_t(arg(1, 0)), arg(2, 4.0));
    if (k == "steps") return make_random_steps(g, std::uint64_t(arg(1, 0)), int(arg(2, 8)));
    throw std::invalid_argument("unknown signal kind: " + k);
}

namespace {

Field signal_arg(const Ctx& c, const char* key, const std::string& dflt)
{
    return make_signal(c.args.value(key, dflt), c.cfg.grid());
}

Quantization quant_arg(const json& a, const char* key, double dflt)
{
    if (!a.contains(key)) return Quantization{dflt};
    const json& v = a.at(key);
    if (v.is_number()) return Quantization{v.get<double>()};
    std::string s = v.get<std::string>();
    if (s == "kn" || s == "kohn-nirenberg") return Quantization::kohn_nirenberg();
    if (s == "weyl") return Quantization::weyl();
    if (s == "anti") return Quantization{1.0};
    return Quantization{to_num(s)};
}

YoungFunction young_arg(const json& a, const char* key = "young")
{
    if (!a.contains(key)) throw std::invalid_argument(std::string("missing ") + key);
    return young_from_json(a.at(key));
}

ModulationSpaceSpec modspec_arg(const json& a, const char* key, const ModulationSpaceSpec& dflt)
{
    return a.contains(key) ? modspace_from_json(a.at(key)) : dflt;
}

Record info(std::string name, json v) { return {std::move(name), std::move(v), 0.0, "info", true, json::object()}; }

Record check_le(std::string name, double v, double tol)
{
    return {std::move(name), v, tol, "<=", v <= tol, json::object()};
}

// ---------------------------------------------------------------- young

void young_evaluate(Ctx& c)
{
    auto phi = young_arg(c.args);
    for (double t : num_list(c.args, "at", {1.0})) c.results.push_back(info("Phi(" + format_double(t) + ")", phi(t)));
}

void young_conjugate(Ctx& c)
{
    auto phi = young_arg(c.args);
    auto cj = conjugate(phi);
    c.summary["conjugate"] = to_json(cj);
    for (double t : num_list(c.args, "at", {1.0})) {
        double v = cj(t);
        c.results.push_back(info("Phi*(" + format_double(t) + ")", v));
        if (phi.kind() == YoungFunction::Kind::log_example && phi.quasi_order() == 1.0 && t > 0 && t <= 0.1) {
            double r = std::sqrt(0.25 + t);
            double ref = (t + 0.5 - r) * std::exp(-(0.5 + r) / t);
            c.results.push_back(check_le("closed_form_rel_error(" + format_double(t) + ")", std::abs(v - ref) / ref,
                                         c.cfg.tol_or(1e-6)));
        }
    }
}

void young_inverse(Ctx& c)
{
    auto phi = young_arg(c.args);
    auto lm = landmarks(phi);
    c.summary["landmarks"] = {{"t1", lm.t1}, {"t2", lm.t2}, {"s0", lm.s0}};
    for (double s : num_list(c.args, "at", {1.0}))
        c.results.push_back(info("Phi^-&(" + format_double(s) + ")", essential_inverse(phi, s)));
}

void young_classify(Ctx& c)
{
    auto phi = young_arg(c.args);
    auto lm = landmarks(phi);
    c.results.push_back(info("t1", lm.t1));
    c.results.push_back(info("t2", lm.t2));
    c.results.push_back(info("s0", lm.s0));
    c.results.push_back(info("convex", phi.is_power() ? phi.p() >= 1 : is_midpoint_convex(phi)));
    c.results.push_back(info("slope_at_zero", slope_at_zero(phi)));
    c.results.push_back(info("asymptotic_slope", asymptotic_slope(phi)));
    auto g = check_delta2(phi);
    c.results.push_back(info("delta2_global", json{{"holds", g.holds}, {"C", g.C}, {"analytic", g.analytic}}));
    double r = c.args.value("radius", 0.1);
    auto l = check_delta2(phi, r);
    c.results.push_back(info("delta2_local(" + format_double(r) + ")", json{{"holds", l.holds}, {"C", l.C}, {"analytic", l.analytic}}));
    for (double p : num_list(c.args, "steered", {1.0, 2.0})) {
        auto s = check_p_steered(phi, p);
        c.results.push_back(info("steered(" + format_double(p) + ")", json{{"steered", s.steered}, {"branch", to_string(s.branch)}}));
    }
}

// ---------------------------------------------------------------- norms

void norm_luxemburg(Ctx& c)
{
    Field f = signal_arg(c, "signal", "gaussian");
    auto phi = young_arg(c.args);
    double v = c.args.contains("weight") ? luxemburg_norm(f, phi, weight_from_json(c.args.at("weight")))
                                         : luxemburg_norm(f, phi);
    c.results.push_back(info("luxemburg_norm", v));
}

void norm_mixed(Ctx& c)
{
    Field F = c.args.contains("input") ? load_field(c.args.at("input").get<std::string>())
                                       : stft(signal_arg(c, "signal", "gaussian"), default_window(c.cfg.grid()));
    if (!c.args.contains("spec")) throw std::invalid_argument("norm mixed needs a spec");
    c.results.push_back(info("mixed_norm", mixed_norm(F, mixed_spec_from_json(c.args.at("spec")))));
}

void norm_modulation(Ctx& c)
{
    Field f = signal_arg(c, "signal", "gaussian");
    auto spec = modspec_arg(c.args, "spec", ModulationSpaceSpec::M(YoungFunction::power(2), YoungFunction::power(2)));
    if (c.args.contains("window")) spec.window = make_signal(c.args.at("window").get<std::string>(), f.grid());
    c.summary["spec"] = to_json(spec);
    c.results.push_back(info("modulation_norm", modulation_norm(f, spec)));
}

// ---------------------------------------------------------------- transforms

void transform_stft(Ctx& c)
{
    Field f = signal_arg(c, "signal", "gaussian");
    Field w = c.args.contains("window") ? make_signal(c.args.at("window").get<std::string>(), f.grid())
                                        : default_window(f.grid());
    Field V = stft(f, w);
    double ref = l2_norm(f) * l2_norm(w);
    c.results.push_back(check_le("moyal_rel_error", ref > 0 ? std::abs(l2_norm(V) - ref) / ref : 0.0,
                                 c.cfg.tol_or(1e-8)));
    c.table = field_csv(V);
}

void transform_wigner(Ctx& c)
{
    require_d1(c, "wigner");
    Field f1 = signal_arg(c, "signal", "gaussian");
    Field f2 = c.args.contains("signal2") ? signal_arg(c, "signal2", "gaussian") : f1;
    Quantization A = quant_arg(c.args, "A", 0.5);
    Field W = wigner(f1, f2, A);
    c.results.push_back(info("A", A.t));
    c.results.push_back(check_le("l2_identity_rel_error",
                                 std::abs(l2_norm(W) - l2_norm(f1) * l2_norm(f2)) / (l2_norm(f1) * l2_norm(f2)),
                                 c.cfg.tol_or(1e-7)));
    c.table = field_csv(W);
}

void transform_twisted(Ctx& c)
{
    require_d1(c, "twisted convolution");
    if (!c.cfg.has("N")) c.cfg.N = 64;
    if (!c.cfg.has("L")) c.cfg.L = 8.0;
    Grid g = c.cfg.grid();
    Field phi = default_window(g);
    Field F = stft(make_signal(c.args.value("signal", std::string("gaussian")), g), phi);
    Field G = stft(make_signal(c.args.value("signal2", std::string("gaussian")), g), phi);
    Field H = twisted_convolution(F, G);
    c.results.push_back(info("l2_norm", l2_norm(H)));
    c.table = field_csv(H);
}

void transform_project(Ctx& c)
{
    Grid g = c.cfg.grid();
    Field F;
    if (c.args.contains("input")) {
        F = load_field(c.args.at("input").get<std::string>());
        g = F.grid().sub([&] {
            std::vector<int> a;
            for (int i = 0; i < F.grid().rank() / 2; ++i) a.push_back(i);
            return a;
        }());
    } else {
        std::mt19937_64 rng(c.cfg.seed);
        std::normal_distribution<double> nd;
        F = Field(phase_grid(g));
        for (size_t i = 0; i < F.size(); ++i) {
            double re = nd(rng), im = nd(rng);
            F[i] = cplx(re, im);
        }
    }
    Field phi = default_window(g);
    Field P = stft_projection(F, phi);
    Field PP = stft_projection(P, phi);
    double n = l2_norm(P);
    c.results.push_back(check_le("idempotence_rel_error", n > 0 ? l2_norm(PP - P) / n : 0.0,
                                 c.cfg.tol_or(1e-8)));
    c.table = field_csv(P);
}

// ---------------------------------------------------------------- psido

struct SymbolInput {
    Field a;
    std::optional<SymbolSpec> spec;
    json echo;
};

SymbolInput symbol_arg(const Ctx& c)
{
    SymbolInput s;
    const Grid g = c.cfg.grid();
    if (!c.args.contains("symbol")) {
        s.spec = random_symbol(c.cfg.seed);
    } else if (c.args.at("symbol").is_string() && is_path(c.args.at("symbol").get<std::string>())) {
        s.a = load_field(c.args.at("symbol").get<std::string>());
        s.echo = c.args.at("symbol");
        return s;
    } else if (c.args.at("symbol").is_string()) {
        std::string v = c.args.at("symbol").get<std::string>();
        if (v == "one") {
            s.spec = SymbolSpec{true, {}};
        } else {
            auto parts = split(v, ':');
            if (parts.size() < 2 || parts[0] != "random") throw std::invalid_argument("symbol: one, random:SEED, a file or a JSON spec");
            s.spec = random_symbol(std::uint64_t(to_num(parts[1])), parts.size() > 2 ? int(to_num(parts[2])) : 3);
        }
    } else {
        s.spec = symbol_from_json(c.args.at("symbol"));
    }
    s.echo = to_json(*s.spec);
    s.a = sample_symbol(*s.spec, g);
    return s;
}

void psido_kernel(Ctx& c)
{
    require_d1(c, "psido");
    auto s = symbol_arg(c);
    Quantization A = quant_arg(c.args, "A", 0.0);
    KernelMatrix K = kernel(s.a, A);
    const Axis ax = K.grid().axis(0);
    Field kf(Grid({ax, ax}), K.values());
    c.summary["symbol_spec"] = s.echo;
    c.results.push_back(info("A", A.t));
    c.results.push_back(info("frobenius", l2_norm(kf)));
    c.table = field_csv(kf);
}

void psido_apply(Ctx& c)
{
    require_d1(c, "psido");
    auto s = symbol_arg(c);
    Quantization A = quant_arg(c.args, "A", 0.0);
    Field f = make_signal(c.args.value("signal", std::string("gaussian")), s.a.grid().sub({0}));
    Field u = apply(s.a, A, f);
    c.summary["symbol_spec"] = s.echo;
    c.results.push_back(info("output_l2_norm", l2_norm(u)));
    c.table = field_csv(u);
}

void psido_opnorm(Ctx& c)
{
    require_d1(c, "psido");
    auto s = symbol_arg(c);
    Quantization A = quant_arg(c.args, "A", 0.0);
    const auto M2 = ModulationSpaceSpec::M(YoungFunction::power(2), YoungFunction::power(2));
    auto dom = modspec_arg(c.args, "domain", M2);
    auto cod = modspec_arg(c.args, "codomain", M2);
    auto sym = modspec_arg(c.args, "symbol_norm", ModulationSpaceSpec::M(YoungFunction::power(3), YoungFunction::power(1.5)));
    double sn = 0.0;
    if (s.spec && !s.spec->constant_one) {
        sn = symbol_norm(*s.spec, sym);
    } else if (!s.spec && s.a.grid().axis(0).N <= 48) {
        sym.window.reset();
        sn = modulation_norm(s.a, sym);
    }
    int trials = c.cfg.trials > 0 ? c.cfg.trials : 8;
    auto est = estimate_operator_norm(s.a, A, dom, cod, trials, c.cfg.seed, sn > 0 ? sn : 1.0);
    c.summary = {{"symbol_spec", s.echo},
                 {"A", A.t},
                 {"domain", to_json(dom)},
                 {"codomain", to_json(cod)},
                 {"trials", trials},
                 {"seed", c.cfg.seed},
                 {"lower_bound", est.lower_bound},
                 {"symbol_norm", sn > 0 ? json(sn) : json(nullptr)},
                 {"ratio", sn > 0 ? json(est.ratio) : json(nullptr)}};
    c.results.push_back(info("lower_bound", est.lower_bound));
    if (sn > 0) c.results.push_back(info("ratio", est.ratio));
}

void psido_calculi(Ctx& c)
{
    require_d1(c, "psido");
    auto s = symbol_arg(c);
    Quantization A1 = quant_arg(c.args, "A1", 0.0), A2 = quant_arg(c.args, "A2", 0.5);
    Field f = make_signal(c.args.value("signal", std::string("packets:1")), s.a.grid().sub({0}));
    c.summary["symbol_spec"] = s.echo;
    c.results.push_back(check_le("calculi_rel_error", calculi_consistency(s.a, A1, A2, f), c.cfg.tol_or(1e-6)));
}

// ---------------------------------------------------------------- entropy

void entropy_eval(Ctx& c)
{
    Field f = signal_arg(c, "signal", "gaussian");
    Field w = c.args.contains("window") ? make_signal(c.args.at("window").get<std::string>(), f.grid())
                                        : default_window(f.grid());
    auto r = entropy(f, w);
    c.results.push_back(info("entropy", r.value));
    c.results.push_back(info("l2_norm_f", r.l2_norm_f));
    c.results.push_back(info("l2_norm_window", r.l2_norm_window));
    c.summary["integrand_min_location"] = r.integrand_min_location;
}

void entropy_scan(Ctx& c)
{
    auto ls = num_list(c.args, "lambdas", {0.125, 0.25, 0.5, 1, 2, 4, 8});
    Grid g = c.cfg.has("N") ? Grid::uniform(c.cfg.d, c.cfg.has("L") ? c.cfg.L : std::sqrt(pi * c.cfg.N / 2), c.cfg.N)
                            : scan_grid(ls, c.cfg.d);
    c.cfg.N = g.axis(0).N;
    c.cfg.L = g.axis(0).L;
    auto r = gaussian_family_scan(ls, g, c.args.value("mphi", true));
    std::ostringstream os;
    os << "lambda,E,M2_norm,MPhi_norm\n";
    for (const auto& row : r.rows) {
        os << format_double(row.lambda) << "," << format_double(row.E) << "," << format_double(row.m2_norm) << ","
           << format_double(row.mphi_norm) << "\n";
        Record rec = info("E(" + format_double(row.lambda) + ")", row.E);
        if (!row.warning.empty()) rec.inputs["warning"] = row.warning;
        c.results.push_back(rec);
    }
    c.table = os.str();
    c.summary = {{"grid", r.grid}, {"offset_constant", r.constant}, {"offset_spread", r.spread}};
    c.results.push_back(info("offset_constant", r.constant));
    c.results.push_back(info("offset_spread", r.spread));
}

void entropy_lieb(Ctx& c)
{
    Field f = signal_arg(c, "signal", "gaussian");
    Field w = c.args.contains("window") ? make_signal(c.args.at("window").get<std::string>(), f.grid())
                                        : default_window(f.grid());
    auto r = lieb_bound_check(f, w);
    c.results.push_back({"entropy", r.entropy, r.bound, ">=", r.satisfied, json::object()});
}

void entropy_probe(Ctx& c)
{
    std::string space = c.args.value("space", std::string("MPhi"));
    ProbeSpace ps = space == "M2" ? ProbeSpace::M2 : space == "MPhi" ? ProbeSpace::MPhi : ProbeSpace::Mp;
    if (space != "M2" && space != "MPhi" && space != "Mp") throw std::invalid_argument("space: M2, Mp or MPhi");
    Field f = signal_arg(c, "signal", "gaussian");
    Field g = signal_arg(c, "direction", "hermite:2");
    auto amps = num_list(c.args, "amplitudes", {0.1, 0.05, 0.02, 0.01, 0.005});
    auto r = continuity_probe(f, g, amps, ps, c.args.value("p", 2.0));
    std::ostringstream os;
    os << "amplitude,norm,delta_E\n";
    for (const auto& row : r.rows)
        os << format_double(row.amplitude) << "," << format_double(row.norm) << "," << format_double(row.delta_E) << "\n";
    c.table = os.str();
    c.results.push_back({"delta_E_monotone", r.monotone, 1.0, "==", r.monotone, json::object()});
    c.results.push_back(info("fitted_C", r.fitted_C));
}

// ---------------------------------------------------------------- verify

void verify(Ctx& c, const std::string& which)
{
    SuiteConfig sc;
    if (c.cfg.has("N")) sc.N = c.cfg.N;
    if (c.cfg.has("L")) sc.L = c.cfg.L;
    sc.seed = c.cfg.seed;
    if (c.cfg.trials > 0) sc.trials = c.cfg.trials;
    if (c.cfg.has("tol")) sc.tol = c.cfg.tol;
    std::vector<std::string> names = which == "all" ? suite_names() : std::vector<std::string>{which};
    for (const auto& n : names) {
        if (!has_suite(n)) throw std::invalid_argument("unknown verify suite: " + n);
        for (auto r : run_suite(n, sc)) {
            r.name = n + "/" + r.name;
            c.results.push_back(std::move(r));
        }
    }
}

using Handler = std::function<void(Ctx&)>;

const std::map<std::string, std::map<std::string, Handler>>& handlers()
{
    static const std::map<std::string, std::map<std::string, Handler>> h = {
        {"young",
         {{"evaluate", young_evaluate}, {"conjugate", young_conjugate}, {"inverse", young_inverse}, {"classify", young_classify}}},
        {"norm", {{"luxemburg", norm_luxemburg}, {"mixed", norm_mixed}, {"modulation", norm_modulation}}},
        {"transform",
         {{"stft", transform_stft}, {"wigner", transform_wigner}, {"twisted", transform_twisted}, {"project", transform_project}}},
        {"psido", {{"kernel", psido_kernel}, {"apply", psido_apply}, {"opnorm", psido_opnorm}, {"calculi", psido_calculi}}},
        {"entropy", {{"eval", entropy_eval}, {"scan", entropy_scan}, {"lieb", entropy_lieb}, {"probe", entropy_probe}}},
    };
    return h;
}

}  // namespace

CommandOutcome run_command(const json& request)
{
    const auto t0 = std::chrono::steady_clock::now();
    if (!request.is_object()) throw std::invalid_argument("request must be a JSON object");
    const std::string cmd = request.value("command", std::string());
    const std::string act = request.value("action", std::string());
    Ctx c;
    c.cfg = parse_config(request.value("config", json::object()));
    c.args = request.value("args", json::object());
    if (cmd == "verify") {
        verify(c, act.empty() ? "all" : act);
    } else {
        auto it = handlers().find(cmd);
        if (it == handlers().end()) throw std::invalid_argument("unknown command: " + cmd);
        auto jt = it->second.find(act);
        if (jt == it->second.end()) throw std::invalid_argument("unknown action for " + cmd + ": " + act);
        jt->second(c);
    }
    CommandOutcome out;
    json results = json::array();
    for (const auto& r : c.results) {
        results.push_back(to_json(r));
        out.failed = out.failed || !r.pass;
    }
    json config = c.cfg.echo();
    config["args"] = c.args;
    out.report = {{"schema", 1},
                  {"command", act.empty() ? cmd : cmd + " " + act},
                  {"config", config},
                  {"results", results},
                  {"summary", c.summary},
                  {"pass", !out.failed}};
    out.table_csv = std::move(c.table);
    out.report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::string results_csv(const json& report)
{
    std::ostringstream os;
    os << "name,value,tolerance,relation,pass\n";
    for (const auto& r : report.at("results")) {
        const json& v = r.at("value");
        std::string vs = v.is_number() ? format_double(v.get<double>()) : v.dump();
        if (vs.find(',') != std::string::npos || vs.find('"') != std::string::npos) {
            std::string q;
            for (char ch : vs) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            vs = "\"" + q + "\"";
        }
        os << r.at("name").get<std::string>() << "," << vs << "," << format_double(r.at("tolerance").get<double>())
           << "," << r.at("relation").get<std::string>() << "," << (r.at("pass").get<bool>() ? "true" : "false")
           << "\n";
    }
    return os.str();
}

}  // namespace otf
