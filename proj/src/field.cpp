#include "orlicz_tf/field.hpp"

#include "orlicz_tf/parallel.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace otf {

using std::numbers::pi;

// ---------------------------------------------------------------- grid

Axis Axis::dual() const
{
    Axis a;
    a.L = pi * N / (2.0 * L);
    a.N = N;
    a.role = role == AxisRole::space ? AxisRole::frequency : AxisRole::space;
    return a;
}

bool Axis::same_as(const Axis& o) const
{
    return N == o.N && std::abs(L - o.L) <= 1e-12 * std::max(L, o.L);
}

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes))
{
    for (const auto& a : axes_) {
        if (a.N < 2 || a.N % 2) throw std::invalid_argument("grid: point count must be even and >= 2");
        if (!(a.L > 0) || !std::isfinite(a.L)) throw std::invalid_argument("grid: half-extent must be positive");
    }
}

Grid Grid::uniform(int d, double L, int N)
{
    if (d < 1) throw std::invalid_argument("grid: dimension must be positive");
    return Grid(std::vector<Axis>(d, Axis{L, N, AxisRole::space}));
}

Grid Grid::symmetric(int d, int N) { return uniform(d, std::sqrt(pi * N / 2.0), N); }

std::size_t Grid::size() const
{
    std::size_t n = axes_.empty() ? 0 : 1;
    for (const auto& a : axes_) n *= a.N;
    return n;
}

double Grid::cell() const
{
    double c = 1.0;
    for (const auto& a : axes_) c *= a.spacing();
    return c;
}

std::vector<std::size_t> Grid::strides() const
{
    std::vector<std::size_t> s(axes_.size(), 1);
    for (int i = int(axes_.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * axes_[i + 1].N;
    return s;
}

std::vector<double> Grid::coords(std::size_t flat) const
{
    std::vector<double> x(axes_.size());
    for (int i = int(axes_.size()) - 1; i >= 0; --i) {
        int k = int(flat % axes_[i].N);
        flat /= axes_[i].N;
        x[i] = axes_[i].point(k);
    }
    return x;
}

Grid Grid::dual() const
{
    std::vector<Axis> a;
    for (const auto& ax : axes_) a.push_back(ax.dual());
    return Grid(a);
}

Grid Grid::with_dual_axes(const std::vector<int>& which) const
{
    std::vector<Axis> a = axes_;
    for (int i : which) a.at(i) = axes_.at(i).dual();
    return Grid(a);
}

Grid Grid::concat(const Grid& other) const
{
    std::vector<Axis> a = axes_;
    a.insert(a.end(), other.axes_.begin(), other.axes_.end());
    return Grid(a);
}

Grid Grid::sub(const std::vector<int>& which) const
{
    std::vector<Axis> a;
    for (int i : which) a.push_back(axes_.at(i));
    return Grid(a);
}

bool Grid::same_as(const Grid& o) const
{
    if (axes_.size() != o.axes_.size()) return false;
    for (size_t i = 0; i < axes_.size(); ++i)
        if (!axes_[i].same_as(o.axes_[i])) return false;
    return true;
}

std::string Grid::describe() const
{
    std::string s;
    char buf[96];
    for (size_t i = 0; i < axes_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s[L=%.17g N=%d %s]", i ? " " : "", axes_[i].L, axes_[i].N,
                      axes_[i].role == AxisRole::space ? "x" : "xi");
        s += buf;
    }
    return s;
}

Grid phase_grid(const Grid& g) { return g.concat(g.dual()); }

void require_same_grid(const Grid& a, const Grid& b, const char* what)
{
    if (!a.same_as(b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

// ---------------------------------------------------------------- field

Field::Field(Grid g) : grid_(std::move(g)), v_(grid_.size()) {}

Field::Field(Grid g, std::vector<cplx> values) : grid_(std::move(g)), v_(std::move(values))
{
    if (v_.size() != grid_.size()) throw std::invalid_argument("field: value count does not match grid");
}

Field& Field::operator*=(cplx c)
{
    for (auto& v : v_) v *= c;
    return *this;
}

Field& Field::operator+=(const Field& o)
{
    require_same_grid(grid_, o.grid_, "field +");
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Field& Field::operator-=(const Field& o)
{
    require_same_grid(grid_, o.grid_, "field -");
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

Field operator*(cplx c, Field f) { return f *= c; }
Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }

// ---------------------------------------------------------------- generators

Field make_gaussian(const Grid& g, double lambda, const std::vector<double>& x0, const std::vector<double>& xi0,
                    std::string* warning)
{
    if (!(lambda > 0)) throw std::invalid_argument("make_gaussian: lambda must be positive");
    const int d = g.rank();
    if ((!x0.empty() && int(x0.size()) != d) || (!xi0.empty() && int(xi0.size()) != d))
        throw std::invalid_argument("make_gaussian: center dimension mismatch");
    const double norm = std::pow(pi, -0.25 * d) * std::pow(lambda, 0.25 * d);
    Field f(g);
    for (size_t i = 0; i < f.size(); ++i) {
        auto x = g.coords(i);
        double r2 = 0, ph = 0;
        for (int a = 0; a < d; ++a) {
            double u = x[a] - (x0.empty() ? 0.0 : x0[a]);
            r2 += u * u;
            if (!xi0.empty()) ph += x[a] * xi0[a];
        }
        double amp = norm * std::exp(-0.5 * lambda * r2);
        f[i] = xi0.empty() ? cplx(amp, 0.0) : std::polar(amp, ph);
    }
    if (warning) {
        warning->clear();
        for (int a = 0; a < d; ++a) {
            double reach = g.axis(a).L - (x0.empty() ? 0.0 : std::abs(x0[a]));
            if (std::exp(-0.5 * lambda * reach * reach) > 1e-12) {
                *warning = "gaussian tails exceed 1e-12 at the grid boundary";
                break;
            }
        }
    }
    return f;
}

namespace {

std::vector<double> hermite_line(const Axis& ax, int n)
{
    std::vector<double> out(ax.N);
    for (int k = 0; k < ax.N; ++k) {
        double x = ax.point(k);
        double h0 = std::pow(pi, -0.25) * std::exp(-0.5 * 1.0 * (x * x));
        double hm = 0.0, h = h0;
        for (int j = 0; j < n; ++j) {
            double hn = std::sqrt(2.0 / (j + 1)) * x * h - std::sqrt(double(j) / (j + 1)) * hm;
            hm = h;
            h = hn;
        }
        out[k] = h;
    }
    return out;
}

}  // namespace

Field make_hermite(const Grid& g, int n)
{
    if (n < 0) throw std::invalid_argument("make_hermite: order must be nonnegative");
    std::vector<std::vector<double>> lines;
    for (const auto& ax : g.axes()) lines.push_back(hermite_line(ax, n));
    Field f(g);
    auto st = g.strides();
    for (size_t i = 0; i < f.size(); ++i) {
        double v = 1.0;
        size_t r = i;
        for (int a = 0; a < g.rank(); ++a) {
            v *= lines[a][r / st[a]];
            r %= st[a];
        }
        f[i] = v;
    }
    return f;
}

Field make_random_bandlimited(const Grid& g, std::uint64_t seed, double band)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Grid dg = g.dual();
    Field spec(dg);
    for (size_t i = 0; i < spec.size(); ++i) {
        auto xi = dg.coords(i);
        double n2 = 0;
        for (double v : xi) n2 += v * v;
        double re = nd(rng), im = nd(rng);
        if (n2 <= band * band) spec[i] = cplx(re, im);
    }
    return inverse_fourier_transform(spec);
}

Field make_random_packets(const Grid& g, std::uint64_t seed, int count, double spread)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::normal_distribution<double> nd;
    const int d = g.rank();
    struct Packet {
        std::vector<double> c, w, beta;
        cplx amp;
    };
    std::vector<Packet> ps(count);
    for (auto& p : ps) {
        for (int a = 0; a < d; ++a) {
            p.c.push_back(spread * u(rng));
            p.w.push_back(1.0 + 0.5 * u(rng));
            p.beta.push_back(2.0 * u(rng));
        }
        double re = nd(rng), im = nd(rng);
        p.amp = cplx(re, im);
    }
    Field f(g);
    for (size_t i = 0; i < f.size(); ++i) {
        auto x = g.coords(i);
        cplx v = 0;
        for (const auto& p : ps) {
            double e = 0, ph = 0;
            for (int a = 0; a < d; ++a) {
                double z = (x[a] - p.c[a]) / p.w[a];
                e += 0.5 * z * z;
                ph += p.beta[a] * x[a];
            }
            v += p.amp * std::polar(std::exp(-e), ph);
        }
        f[i] = v;
    }
    return f;
}

Field make_random_steps(const Grid& g, std::uint64_t seed, int pieces)
{
    if (g.rank() != 1) throw std::invalid_argument("make_random_steps: d = 1 only");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<cplx> vals(pieces);
    for (auto& v : vals) {
        double re = nd(rng), im = nd(rng);
        v = cplx(re, im);
    }
    const Axis& ax = g.axis(0);
    Field f(g);
    const double half = ax.L / 2, width = ax.L / pieces;
    for (int k = 0; k < ax.N; ++k) {
        double x = ax.point(k);
        if (x < -half || x >= half) continue;
        int c = std::min(pieces - 1, int((x + half) / width));
        f[k] = vals[c];
    }
    return f;
}

// ---------------------------------------------------------------- fft

namespace {

std::mutex g_plan_mu;
std::map<std::pair<int, int>, fftw_plan> g_plans;

fftw_plan plan_for(int N, int sign)
{
    std::lock_guard<std::mutex> lk(g_plan_mu);
    auto key = std::make_pair(N, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    fftw_complex* tmp = fftw_alloc_complex(N);
    fftw_plan p = fftw_plan_dft_1d(N, tmp, tmp, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(tmp);
    g_plans.emplace(key, p);
    return p;
}

}  // namespace

void fourier_line(cplx* data, const Axis& ax, int sign)
{
    const int N = ax.N;
    for (int k = 1; k < N; k += 2) data[k] = -data[k];
    fftw_plan p = plan_for(N, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
    const double c = ax.spacing() / std::sqrt(2.0 * pi);
    const int off = (N / 2) % 2;
    for (int m = 0; m < N; ++m) data[m] *= ((m + off) % 2) ? -c : c;
}

Field fourier_axes(const Field& f, const std::vector<int>& axes, int sign)
{
    Field out(f.grid().with_dual_axes(axes), f.values());
    const auto st = f.grid().strides();
    const size_t total = f.size();
    for (int a : axes) {
        const Axis& ax = f.grid().axis(a);
        const size_t N = ax.N, s = st[a];
        const size_t lines = total / N;
        auto& v = out.values();
        const size_t chunk = std::max<size_t>(1, lines / 64);
        const size_t nchunks = (lines + chunk - 1) / chunk;
        parallel_for(nchunks, [&](size_t c) {
            std::vector<cplx> buf(N);
            for (size_t l = c * chunk; l < std::min(lines, (c + 1) * chunk); ++l) {
                // line l: outer index l / s, inner index l % s
                size_t base = (l / s) * s * N + (l % s);
                for (size_t k = 0; k < N; ++k) buf[k] = v[base + k * s];
                fourier_line(buf.data(), ax, sign);
                for (size_t k = 0; k < N; ++k) v[base + k * s] = buf[k];
            }
        });
    }
    return out;
}

Field fourier_transform(const Field& f)
{
    std::vector<int> all(f.grid().rank());
    for (int i = 0; i < f.grid().rank(); ++i) all[i] = i;
    return fourier_axes(f, all, -1);
}

Field inverse_fourier_transform(const Field& f)
{
    std::vector<int> all(f.grid().rank());
    for (int i = 0; i < f.grid().rank(); ++i) all[i] = i;
    return fourier_axes(f, all, +1);
}

// ---------------------------------------------------------------- quadrature

cplx inner_product(const Field& f, const Field& g)
{
    require_same_grid(f.grid(), g.grid(), "inner_product");
    cplx s = 0;
    for (size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
    return s * f.cell();
}

double l2_norm(const Field& f)
{
    double s = 0;
    for (const auto& v : f.values()) s += std::norm(v);
    return std::sqrt(s * f.cell());
}

double lp_norm(const Field& f, double p)
{
    if (std::isinf(p)) return max_abs(f);
    if (!(p > 0)) throw std::invalid_argument("lp_norm: p must be positive");
    double s = 0;
    for (const auto& v : f.values()) s += std::pow(std::abs(v), p);
    return std::pow(s * f.cell(), 1.0 / p);
}

double max_abs(const Field& f)
{
    double m = 0;
    for (const auto& v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const Field& a, const Field& b)
{
    require_same_grid(a.grid(), b.grid(), "max_abs_diff");
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// ---------------------------------------------------------------- interpolation

std::vector<cplx> half_grid(const cplx* line, const Axis& ax)
{
    const int N = ax.N;
    std::vector<cplx> spec(line, line + N);
    fourier_line(spec.data(), ax, -1);
    const Axis du = ax.dual();
    const double h = ax.spacing() / 2;
    for (int m = 0; m < N; ++m) {
        double xi = du.point(m);
        spec[m] *= m == 0 ? cplx(std::cos(xi * h), 0.0) : std::polar(1.0, xi * h);
    }
    fourier_line(spec.data(), du, +1);
    std::vector<cplx> out(2 * N);
    for (int k = 0; k < N; ++k) {
        out[2 * k] = line[k];
        out[2 * k + 1] = spec[k];
    }
    return out;
}

TrigInterpolant::TrigInterpolant(const cplx* line, const Axis& ax)
    : spec_(line, line + ax.N), dual_(ax.dual()), scale_(0.0)
{
    fourier_line(spec_.data(), ax, -1);
    scale_ = dual_.spacing() / std::sqrt(2.0 * pi);
}

cplx TrigInterpolant::operator()(double z) const
{
    const int N = dual_.N;
    const double xi0 = dual_.point(0);
    cplx w = std::polar(1.0, z * (xi0 + dual_.spacing()));
    const cplx step = std::polar(1.0, z * dual_.spacing());
    cplx s = spec_[0] * std::cos(z * xi0);
    for (int m = 1; m < N; ++m) {
        s += spec_[m] * w;
        w *= step;
    }
    return s * scale_;
}

}  // namespace otf
