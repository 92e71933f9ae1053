#include "orlicz_tf/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace otf {

namespace {

using Kind = YoungFunction::Kind;

Kind kind_from_string(const std::string& s)
{
    static const std::pair<const char*, Kind> table[] = {
        {"power", Kind::power},         {"power_scaled", Kind::power_scaled}, {"cap", Kind::cap},
        {"entropy", Kind::entropy},     {"entropy_printed", Kind::entropy_printed},
        {"tan_example", Kind::tan_example}, {"log_example", Kind::log_example}, {"table", Kind::table},
        {"conjugate", Kind::conjugate},
    };
    for (const auto& [name, k] : table)
        if (s == name) return k;
    throw std::invalid_argument("unknown Young function kind: " + s);
}

double num(const json& j, const char* key)
{
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing parameter: ") + key);
    if (j.at(key).is_string()) return std::stod(j.at(key).get<std::string>());
    return j.at(key).get<double>();
}

double num_or(const json& j, const char* key, double dflt) { return j.contains(key) ? num(j, key) : dflt; }

const char* role_name(AxisRole r) { return r == AxisRole::space ? "x" : "xi"; }

AxisRole role_from(const std::string& s)
{
    if (s == "x") return AxisRole::space;
    if (s == "xi") return AxisRole::frequency;
    throw std::invalid_argument("unknown axis role: " + s);
}

}  // namespace

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- Young functions

json to_json(const YoungFunction& phi)
{
    json j;
    j["kind"] = to_string(phi.kind());
    json p = json::object();
    switch (phi.kind()) {
    case Kind::power:
        p["p"] = phi.p();
        if (phi.scale() != 1.0) p["scale"] = phi.scale();
        break;
    case Kind::power_scaled: p["p"] = phi.p(); break;
    case Kind::cap: p["a"] = phi.scale(); break;
    case Kind::table: {
        json ks = json::array();
        for (const auto& k : phi.knots()) ks.push_back({k.t, k.value});
        p["knots"] = ks;
        p["tail_slope"] = phi.tail_slope();
        break;
    }
    case Kind::conjugate: p["of"] = to_json(*phi.base()); break;
    default: break;
    }
    j["params"] = p;
    j["quasi_order"] = phi.quasi_order();
    return j;
}

YoungFunction young_from_json(const json& j)
{
    if (j.is_string()) return young_from_json(json{{"kind", j.get<std::string>()}});
    const Kind k = kind_from_string(j.at("kind").get<std::string>());
    const json p = j.contains("params") ? j.at("params") : json::object();
    auto make = [&]() -> YoungFunction {
        switch (k) {
        case Kind::power: return YoungFunction::power(num(p, "p"), num_or(p, "scale", 1.0));
        case Kind::power_scaled: return YoungFunction::power_scaled(num(p, "p"));
        case Kind::cap: return YoungFunction::cap(num(p, "a"));
        case Kind::entropy: return YoungFunction::entropy();
        case Kind::entropy_printed: return YoungFunction::entropy_printed();
        case Kind::tan_example: return YoungFunction::tan_example();
        case Kind::log_example: return YoungFunction::log_example();
        case Kind::table: {
            std::vector<YoungFunction::Knot> ks;
            for (const auto& e : p.at("knots")) ks.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
            return YoungFunction::table(std::move(ks), num(p, "tail_slope"));
        }
        case Kind::conjugate: return conjugate(young_from_json(p.at("of")));
        }
        throw std::invalid_argument("unreachable Young kind");
    };
    YoungFunction f = make();
    double q = num_or(j, "quasi_order", 1.0);
    return q == 1.0 ? f : f.with_quasi_order(q);
}

// ---------------------------------------------------------------- weights

json to_json(const Weight& w)
{
    json j;
    switch (w.kind()) {
    case Weight::Kind::constant_one: j = {{"kind", "constant_one"}, {"dim", w.dim()}}; break;
    case Weight::Kind::polynomial: j = {{"kind", "polynomial"}, {"s", w.s()}, {"dim", w.dim()}}; break;
    case Weight::Kind::exponential: j = {{"kind", "exponential"}, {"r", w.r()}, {"dim", w.dim()}}; break;
    case Weight::Kind::product: {
        json fs = json::array();
        for (const auto& f : w.factors()) fs.push_back(to_json(f));
        j = {{"kind", "product"}, {"factors", fs}};
        break;
    }
    case Weight::Kind::slots:
        j = {{"kind", "slots"}, {"inner", to_json(w.factors().at(0))}, {"axes", w.axes()}, {"dim", w.dim()}};
        break;
    case Weight::Kind::custom: throw std::invalid_argument("custom weight '" + w.label() + "' is not serializable");
    }
    return j;
}

Weight weight_from_json(const json& j)
{
    const std::string k = j.at("kind").get<std::string>();
    const int dim = j.value("dim", 1);
    if (k == "constant_one") return Weight::constant_one(dim);
    if (k == "polynomial") return Weight::polynomial(num(j, "s"), dim);
    if (k == "exponential") return Weight::exponential(num(j, "r"), dim);
    if (k == "product") {
        std::vector<Weight> fs;
        for (const auto& e : j.at("factors")) fs.push_back(weight_from_json(e));
        return Weight::product(std::move(fs));
    }
    if (k == "slots") return Weight::slots(weight_from_json(j.at("inner")), j.at("axes").get<std::vector<int>>(), dim);
    throw std::invalid_argument("unknown weight kind: " + k);
}

// ---------------------------------------------------------------- norm specs

json to_json(const MixedNormSpec& s)
{
    json st = json::array();
    for (const auto& stage : s.stages) st.push_back({{"axes", stage.axes}, {"young", to_json(stage.phi)}});
    json j = {{"stages", st}};
    if (s.weight) j["weight"] = to_json(*s.weight);
    return j;
}

MixedNormSpec mixed_spec_from_json(const json& j)
{
    MixedNormSpec s;
    for (const auto& e : j.at("stages"))
        s.stages.push_back({e.at("axes").get<std::vector<int>>(), young_from_json(e.at("young"))});
    if (j.contains("weight") && !j.at("weight").is_null()) s.weight = weight_from_json(j.at("weight"));
    return s;
}

json to_json(const ModulationSpaceSpec& s)
{
    json j = {{"phi", to_json(s.phi)}, {"psi", to_json(s.psi)}, {"flavor", to_string(s.flavor)}};
    if (s.weight) j["weight"] = to_json(*s.weight);
    j["window"] = s.window ? json("custom") : json("gaussian(1)");
    return j;
}

ModulationSpaceSpec modspace_from_json(const json& j)
{
    ModulationSpaceSpec s;
    if (j.contains("phi")) s.phi = young_from_json(j.at("phi"));
    s.psi = j.contains("psi") ? young_from_json(j.at("psi")) : s.phi;
    const std::string fl = j.value("flavor", std::string("M"));
    if (fl == "M")
        s.flavor = Flavor::M;
    else if (fl == "W")
        s.flavor = Flavor::W;
    else if (fl == "flat")
        s.flavor = Flavor::flat;
    else
        throw std::invalid_argument("unknown flavor: " + fl);
    if (j.contains("weight") && !j.at("weight").is_null()) s.weight = weight_from_json(j.at("weight"));
    if (j.contains("window") && j.at("window").is_object()) s.window = field_from_json(j.at("window"));
    return s;
}

json to_json(const SymbolSpec& s)
{
    json ps = json::array();
    for (const auto& p : s.packets)
        ps.push_back({{"x0", p.x0},
                      {"xi0", p.xi0},
                      {"sx", p.sx},
                      {"sxi", p.sxi},
                      {"bx", p.bx},
                      {"bxi", p.bxi},
                      {"amp", {p.amp.real(), p.amp.imag()}}});
    return {{"constant_one", s.constant_one}, {"packets", ps}};
}

SymbolSpec symbol_from_json(const json& j)
{
    if (j.contains("random_seed")) return random_symbol(j.at("random_seed").get<std::uint64_t>(), j.value("count", 3));
    SymbolSpec s;
    s.constant_one = j.value("constant_one", false);
    if (j.contains("packets"))
        for (const auto& e : j.at("packets")) {
            SymbolPacket p;
            p.x0 = num_or(e, "x0", 0);
            p.xi0 = num_or(e, "xi0", 0);
            p.sx = num_or(e, "sx", 1);
            p.sxi = num_or(e, "sxi", 1);
            p.bx = num_or(e, "bx", 0);
            p.bxi = num_or(e, "bxi", 0);
            if (e.contains("amp")) p.amp = cplx(e.at("amp").at(0).get<double>(), e.at("amp").at(1).get<double>());
            s.packets.push_back(p);
        }
    return s;
}

// ---------------------------------------------------------------- grids and fields

json to_json(const Grid& g)
{
    json ax = json::array();
    for (const auto& a : g.axes()) ax.push_back({{"L", a.L}, {"N", a.N}, {"role", role_name(a.role)}});
    return ax;
}

Grid grid_from_json(const json& j)
{
    std::vector<Axis> axes;
    for (const auto& e : j) {
        Axis a;
        a.L = e.at("L").get<double>();
        a.N = e.at("N").get<int>();
        a.role = role_from(e.value("role", std::string("x")));
        axes.push_back(a);
    }
    return Grid(std::move(axes));
}

json to_json(const Field& f)
{
    std::vector<double> re(f.size()), im(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        re[i] = f[i].real();
        im[i] = f[i].imag();
    }
    return {{"axes", to_json(f.grid())}, {"re", re}, {"im", im}};
}

Field field_from_json(const json& j)
{
    Grid g = grid_from_json(j.at("axes"));
    auto re = j.at("re").get<std::vector<double>>();
    auto im = j.contains("im") ? j.at("im").get<std::vector<double>>() : std::vector<double>(re.size(), 0.0);
    if (re.size() != g.size() || im.size() != g.size()) throw std::invalid_argument("field json: sample count mismatch");
    std::vector<cplx> v(g.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = cplx(re[i], im[i]);
    return Field(std::move(g), std::move(v));
}

void write_field_csv(std::ostream& os, const Field& f)
{
    const Grid& g = f.grid();
    os << "# field rank=" << g.rank() << "\n";
    for (const auto& a : g.axes()) os << "# axis " << format_double(a.L) << " " << a.N << " " << role_name(a.role) << "\n";
    for (int i = 0; i < g.rank(); ++i) os << (i ? "," : "") << role_name(g.axis(i).role) << i;
    os << ",re,im\n";
    for (size_t i = 0; i < f.size(); ++i) {
        auto c = g.coords(i);
        for (double x : c) os << format_double(x) << ",";
        os << format_double(f[i].real()) << "," << format_double(f[i].imag()) << "\n";
    }
}

std::string field_csv(const Field& f)
{
    std::ostringstream os;
    write_field_csv(os, f);
    return os.str();
}

Field read_field_csv(std::istream& is)
{
    std::string line;
    int rank = -1;
    std::vector<Axis> axes;
    bool header_seen = false;
    std::vector<cplx> v;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string tag;
            ls >> tag;
            if (tag == "field") {
                std::string r;
                ls >> r;
                if (r.rfind("rank=", 0) != 0) throw std::invalid_argument("field csv: bad rank line");
                rank = std::stoi(r.substr(5));
            } else if (tag == "axis") {
                Axis a;
                std::string role;
                ls >> a.L >> a.N >> role;
                if (!ls) throw std::invalid_argument("field csv: bad axis line");
                a.role = role_from(role);
                axes.push_back(a);
            }
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            if (line.find("re") != std::string::npos) continue;
        }
        std::vector<double> cols;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cols.push_back(std::stod(cell));
        if (cols.size() < 2) throw std::invalid_argument("field csv: short row");
        v.emplace_back(cols[cols.size() - 2], cols.back());
    }
    if (rank < 0 || int(axes.size()) != rank) throw std::invalid_argument("field csv: missing grid header");
    Grid g(std::move(axes));
    if (v.size() != g.size()) throw std::invalid_argument("field csv: sample count mismatch");
    return Field(std::move(g), std::move(v));
}

Field load_field(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return field_from_json(json::parse(in));
    return read_field_csv(in);
}

}  // namespace otf
