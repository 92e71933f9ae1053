// otf: command-line front end over the orlicz_tf C API.
#include "orlicz_tf/orlicz_tf.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct Globals {
    std::optional<int> N, d, trials;
    std::optional<double> L, tol;
    std::optional<long long> seed;
    std::string out, format, table;
};

struct YoungFlags {
    std::string kind, json_spec;
    std::optional<double> p, scale, a, quasi;
};

// action flags shared across commands; unused ones are simply not forwarded
struct ActionFlags {
    std::string action;
    YoungFlags young;
    std::string at, radius, steered;
    std::string signal, signal2, window, direction, input, weight, spec;
    std::string A, A1, A2, symbol, domain, codomain, symbol_norm;
    std::string lambdas, amplitudes, space;
    std::optional<double> p_probe;
    bool no_mphi = false;
};

std::string read_maybe_file(const std::string& s)
{
    if (!s.empty() && s[0] == '@') {
        std::ifstream in(s.substr(1));
        if (!in) throw std::runtime_error("cannot open " + s.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return s;
}

json young_json(const YoungFlags& y)
{
    if (!y.json_spec.empty()) return json::parse(read_maybe_file(y.json_spec));
    if (y.kind.empty()) throw std::runtime_error("--kind or --young is required");
    json params = json::object();
    if (y.p) params["p"] = *y.p;
    if (y.scale) params["scale"] = *y.scale;
    if (y.a) params["a"] = *y.a;
    json j = {{"kind", y.kind}, {"params", params}};
    if (y.quasi) j["quasi_order"] = *y.quasi;
    return j;
}

json parse_json_arg(const std::string& s) { return json::parse(read_maybe_file(s)); }

void add_young_flags(CLI::App* c, YoungFlags& y)
{
    c->add_option("--kind", y.kind, "Young function kind (power, power_scaled, cap, entropy, tan_example, log_example)");
    c->add_option("--p", y.p, "exponent for power kinds");
    c->add_option("--scale", y.scale, "scale for power");
    c->add_option("--a", y.a, "cap level");
    c->add_option("--quasi-order", y.quasi, "quasi-Young order p0 in (0, 1]");
    c->add_option("--young", y.json_spec, "Young function as JSON (or @file)");
}

bool ends_with(const std::string& s, const std::string& e)
{
    return s.size() >= e.size() && s.compare(s.size() - e.size(), e.size(), e) == 0;
}

int emit(const Globals& g, const std::string& report, const char* table)
{
    std::string fmt = g.format;
    if (fmt.empty()) fmt = ends_with(g.out, ".csv") ? "csv" : "json";
    std::string body;
    if (fmt == "csv") {
        if (table) {
            body = table;
        } else {
            // results as rows
            json r = json::parse(report);
            std::ostringstream os;
            os << "name,value,tolerance,relation,pass\n";
            for (const auto& rec : r.at("results")) {
                std::string v = rec.at("value").dump();
                if (!rec.at("value").is_number()) {
                    std::string q;
                    for (char ch : rec.at("value").dump()) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                    v = "\"" + q + "\"";
                }
                os << rec.at("name").get<std::string>() << "," << v << "," << rec.at("tolerance").dump() << ","
                   << rec.at("relation").get<std::string>() << "," << (rec.at("pass").get<bool>() ? "true" : "false")
                   << "\n";
            }
            body = os.str();
        }
    } else {
        body = report;
        body += "\n";
    }
    if (!g.table.empty() && table) {
        std::ofstream t(g.table);
        if (!t) {
            std::cerr << "otf: cannot write " << g.table << "\n";
            return 1;
        }
        t << table;
    }
    if (g.out.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream o(g.out);
    if (!o) {
        std::cerr << "otf: cannot write " << g.out << "\n";
        return 1;
    }
    o << body;
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Orlicz modulation spaces, time-frequency transforms and STFT entropy"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--N", g.N, "grid points per axis (even)");
    app.add_option("--L", g.L, "grid half-extent");
    app.add_option("--d", g.d, "dimension");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--trials", g.trials, "trial count");
    app.add_option("--tol", g.tol, "tolerance override");
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--table", g.table, "also write the tabular output to this CSV file");

    ActionFlags f;
    const std::map<std::string, std::vector<std::string>> actions = {
        {"young", {"evaluate", "conjugate", "inverse", "classify"}},
        {"norm", {"luxemburg", "mixed", "modulation"}},
        {"transform", {"stft", "wigner", "twisted", "project"}},
        {"psido", {"kernel", "apply", "opnorm", "calculi"}},
        {"entropy", {"eval", "scan", "lieb", "probe"}},
        {"verify",
         {"holder", "young-conv", "moyal", "reproducing", "projection", "rank-one", "hypotheses", "all",
          "stft-closed-form", "conjugate", "calculi", "entropy-scan", "lieb", "discontinuity", "opnorm", "embedding"}},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, acts] : actions) {
        CLI::App* c = app.add_subcommand(name, name + " (" + [&] {
                                                   std::string s;
                                                   for (const auto& a : acts) s += (s.empty() ? "" : "|") + a;
                                                   return s;
                                               }() + ")");
        c->add_option("action", f.action, "action")->required()->check(CLI::IsMember(acts));
        subs[name] = c;
    }
    add_young_flags(subs["young"], f.young);
    subs["young"]->add_option("--at", f.at, "comma-separated arguments");
    subs["young"]->add_option("--radius", f.radius, "local radius for the Delta2 check");
    subs["young"]->add_option("--steered", f.steered, "comma-separated p values for the steering check");

    add_young_flags(subs["norm"], f.young);
    for (auto* c : {subs["norm"], subs["transform"], subs["psido"], subs["entropy"]}) {
        c->add_option("--signal", f.signal, "signal spec (gaussian:LAMBDA, hermite:N, packets:SEED, ...) or field file");
        c->add_option("--window", f.window, "window spec or field file");
    }
    subs["norm"]->add_option("--input", f.input, "phase field file for the mixed norm");
    subs["norm"]->add_option("--weight", f.weight, "weight JSON (or @file)");
    subs["norm"]->add_option("--spec", f.spec, "MixedNormSpec / ModulationSpaceSpec JSON (or @file)");

    subs["transform"]->add_option("--signal2", f.signal2, "second signal");
    subs["transform"]->add_option("--A", f.A, "quantization: kn, weyl, anti or t");
    subs["transform"]->add_option("--input", f.input, "phase field file for project");

    auto* ps = subs["psido"];
    ps->add_option("--symbol", f.symbol, "one, random:SEED, symbol JSON or phase field file");
    ps->add_option("--A", f.A, "quantization: kn, weyl, anti or t");
    ps->add_option("--A1", f.A1, "source quantization for calculi");
    ps->add_option("--A2", f.A2, "target quantization for calculi");
    ps->add_option("--domain", f.domain, "domain ModulationSpaceSpec JSON");
    ps->add_option("--codomain", f.codomain, "codomain ModulationSpaceSpec JSON");
    ps->add_option("--symbol-norm", f.symbol_norm, "symbol norm ModulationSpaceSpec JSON");

    auto* en = subs["entropy"];
    en->add_option("--lambdas", f.lambdas, "comma-separated lambda values (fractions allowed)");
    en->add_option("--direction", f.direction, "perturbation direction for probe");
    en->add_option("--amplitudes", f.amplitudes, "decreasing amplitudes for probe");
    en->add_option("--space", f.space, "M2, Mp or MPhi")->check(CLI::IsMember({"M2", "Mp", "MPhi"}));
    en->add_option("--p", f.p_probe, "exponent for the Mp probe");
    en->add_flag("--no-mphi", f.no_mphi, "skip M^Phi norms in scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    std::string cmd;
    for (const auto& [name, c] : subs)
        if (c->parsed()) cmd = name;

    json req;
    try {
        json args = json::object();
        auto put = [&](const char* k, const std::string& v) {
            if (!v.empty()) args[k] = v;
        };
        if (cmd == "young" || (cmd == "norm" && (!f.young.kind.empty() || !f.young.json_spec.empty())))
            args["young"] = young_json(f.young);
        put("at", f.at);
        if (!f.radius.empty()) args["radius"] = std::stod(f.radius);
        put("steered", f.steered);
        put("signal", f.signal);
        put("signal2", f.signal2);
        put("window", f.window);
        put("direction", f.direction);
        put("input", f.input);
        if (!f.weight.empty()) args["weight"] = parse_json_arg(f.weight);
        if (!f.spec.empty()) args["spec"] = parse_json_arg(f.spec);
        put("A", f.A);
        put("A1", f.A1);
        put("A2", f.A2);
        if (!f.symbol.empty()) {
            if (f.symbol[0] == '{' || f.symbol[0] == '@')
                args["symbol"] = parse_json_arg(f.symbol);
            else
                args["symbol"] = f.symbol;
        }
        if (!f.domain.empty()) args["domain"] = parse_json_arg(f.domain);
        if (!f.codomain.empty()) args["codomain"] = parse_json_arg(f.codomain);
        if (!f.symbol_norm.empty()) args["symbol_norm"] = parse_json_arg(f.symbol_norm);
        put("lambdas", f.lambdas);
        put("amplitudes", f.amplitudes);
        put("space", f.space);
        if (f.p_probe) args["p"] = *f.p_probe;
        if (f.no_mphi) args["mphi"] = false;

        json config = json::object();
        if (g.N) config["N"] = *g.N;
        if (g.L) config["L"] = *g.L;
        if (g.d) config["d"] = *g.d;
        if (g.seed) config["seed"] = *g.seed;
        if (g.trials) config["trials"] = *g.trials;
        if (g.tol) config["tol"] = *g.tol;
        req = {{"command", cmd}, {"action", f.action}, {"args", args}, {"config", config}};
    } catch (const std::exception& e) {
        std::cerr << "otf: " << e.what() << "\n" << app.help();
        return 2;
    }

    char* report = nullptr;
    char* table = nullptr;
    otf_status st = otf_run_command(req.dump().c_str(), &report, &table);
    int rc = 0;
    if (st == OTF_ERR_INVALID_ARGUMENT || st == OTF_ERR_NULL_POINTER) {
        std::cerr << "otf: " << otf_last_error() << "\n";
        std::cerr << subs[cmd]->help();
        rc = 2;
    } else if (st == OTF_ERR_INTERNAL) {
        std::cerr << "otf: " << otf_last_error() << "\n";
        rc = 1;
    } else {
        int wrc = emit(g, report ? report : "{}", table);
        rc = (st == OTF_ERR_NUMERICAL || wrc) ? 1 : 0;
        if (st == OTF_ERR_NUMERICAL) std::cerr << "otf: " << otf_last_error() << "\n";
    }
    otf_string_free(report);
    otf_string_free(table);
    return rc;
}
