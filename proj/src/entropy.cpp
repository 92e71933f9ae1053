#include "orlicz_tf/entropy.hpp"

#include "orlicz_tf/parallel.hpp"
#include "orlicz_tf/tfa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace otf {

using std::numbers::pi;

namespace {

constexpr double kTiny = 1e-300;

double xlogx_term(double a2) { return a2 < kTiny ? 0.0 : -a2 * std::log(a2); }

}  // namespace

EntropyResult entropy_of_stft(const Field& V, double norm_f, double norm_window)
{
    const Grid& pg = V.grid();
    const size_t n = V.size();
    const size_t rows = pg.axis(0).N;
    const size_t per = n / rows;
    std::vector<double> part(rows, 0.0), row_min(rows, 0.0);
    std::vector<size_t> row_arg(rows, 0);
    parallel_for(rows, [&](size_t r) {
        double s = 0.0, mn = kInf;
        size_t arg = r * per;
        for (size_t i = r * per; i < (r + 1) * per; ++i) {
            double v = xlogx_term(std::norm(V[i]));
            s += v;
            if (v < mn) {
                mn = v;
                arg = i;
            }
        }
        part[r] = s;
        row_min[r] = mn;
        row_arg[r] = arg;
    });
    EntropyResult res;
    double s = 0.0;
    size_t best = 0;
    for (size_t r = 0; r < rows; ++r) {
        s += part[r];
        if (row_min[r] < row_min[best]) best = r;
    }
    double m = norm_f * norm_f * norm_window * norm_window;
    res.value = s * pg.cell() + (m > 0 ? m * std::log(m) : 0.0);
    res.l2_norm_f = norm_f;
    res.l2_norm_window = norm_window;
    if (n) res.integrand_min_location = pg.coords(row_arg[best]);
    return res;
}

EntropyResult entropy(const Field& f, const Field& window)
{
    require_same_grid(f.grid(), window.grid(), "entropy");
    double nw = l2_norm(window);
    if (!(nw > 0)) throw std::invalid_argument("entropy: zero window");
    return entropy_of_stft(stft(f, window), l2_norm(f), nw);
}

EntropyResult entropy(const Field& f) { return entropy(f, default_window(f.grid())); }

ModulationSpaceSpec entropy_space() { return ModulationSpaceSpec::flat(YoungFunction::entropy()); }

// ---------------------------------------------------------------- gaussian family

Grid scan_grid(const std::vector<double>& lambdas, int d)
{
    if (lambdas.empty()) throw std::invalid_argument("scan_grid: empty lambda list");
    double mn = *std::min_element(lambdas.begin(), lambdas.end());
    double mx = *std::max_element(lambdas.begin(), lambdas.end());
    if (!(mn > 0)) throw std::invalid_argument("scan_grid: lambda must be positive");
    double need = std::max(288.0 / (pi * mn), 128.0 * mx / pi);
    int N = 256;
    while (N < need && N < 1024) N *= 2;
    return Grid::symmetric(d, N);
}

ScanResult gaussian_family_scan(const std::vector<double>& lambdas, const Grid& g, bool with_mphi)
{
    for (double l : lambdas)
        if (!(l > 0)) throw std::invalid_argument("gaussian_family_scan: lambda must be positive");
    const int d = g.rank();
    const Field phi = make_gaussian(g, 1.0);
    const double nphi = l2_norm(phi);
    ScanResult out;
    out.grid = g.describe();
    for (double l : lambdas) {
        ScanRow row;
        row.lambda = l;
        Field f = make_gaussian(g, l, {}, {}, &row.warning);
        double need = 12.0 / std::sqrt(l);
        for (int a = 0; a < d; ++a)
            if (g.axis(a).L < need && row.warning.empty()) row.warning = "grid extent below 12/sqrt(lambda)";
        Field V = stft(f, phi);
        row.E = entropy_of_stft(V, l2_norm(f), nphi).value;
        row.m2_norm = l2_norm(V);
        if (with_mphi) row.mphi_norm = phase_space_norm(V, entropy_space());
        row.offset = row.E - d * std::log(pi * (std::sqrt(l) + 1.0 / std::sqrt(l)));
        out.rows.push_back(row);
    }
    if (!out.rows.empty()) {
        double lo = kInf, hi = -kInf, s = 0;
        for (const auto& r : out.rows) {
            lo = std::min(lo, r.offset);
            hi = std::max(hi, r.offset);
            s += r.offset;
        }
        out.constant = s / out.rows.size();
        out.spread = hi - lo;
    }
    return out;
}

// ---------------------------------------------------------------- Lieb bound

double lieb_bound(int d) { return d * (1.0 + std::log(pi / 2)); }

LiebCheck lieb_bound_check(const Field& f, const Field& window)
{
    double nf = l2_norm(f), nw = l2_norm(window);
    if (!(nf > 0) || !(nw > 0)) throw std::invalid_argument("lieb_bound_check: zero input");
    Field fn = (1.0 / nf) * f;
    Field wn = (1.0 / nw) * window;
    LiebCheck c;
    c.entropy = entropy(fn, wn).value;
    c.bound = lieb_bound(f.grid().rank());
    c.satisfied = c.entropy >= c.bound;
    return c;
}

// ---------------------------------------------------------------- continuity probes

ProbeResult continuity_probe(const Field& f, const Field& direction, const std::vector<double>& amplitudes,
                             ProbeSpace space, double p)
{
    require_same_grid(f.grid(), direction.grid(), "continuity_probe");
    for (size_t i = 1; i < amplitudes.size(); ++i)
        if (!(amplitudes[i] < amplitudes[i - 1])) throw std::invalid_argument("continuity_probe: amplitudes must decrease");
    const Field phi = default_window(f.grid());
    const double E0 = entropy(f, phi).value;
    ProbeResult out;
    for (double eps : amplitudes) {
        Field h = cplx(eps) * direction;
        ProbeRow row;
        row.amplitude = eps;
        switch (space) {
        case ProbeSpace::M2: row.norm = l2_norm(stft(h, phi)); break;
        case ProbeSpace::Mp:
            row.norm = modulation_norm(h, ModulationSpaceSpec::M(YoungFunction::power(p), YoungFunction::power(p)));
            break;
        case ProbeSpace::MPhi: row.norm = modulation_norm(h, entropy_space()); break;
        }
        row.delta_E = std::abs(entropy(f + h, phi).value - E0);
        out.rows.push_back(row);
    }
    out.monotone = true;
    for (size_t i = 1; i < out.rows.size(); ++i)
        if (!(out.rows[i].delta_E < out.rows[i - 1].delta_E)) out.monotone = false;
    for (const auto& r : out.rows) {
        if (!(r.norm > 0)) continue;
        double scale = r.norm * r.norm * (1.0 + std::abs(std::log(r.norm)));
        out.fitted_C = std::max(out.fitted_C, r.delta_E / scale);
    }
    return out;
}

OmegaSplit omega_decomposition(const Field& f, const Field& window)
{
    require_same_grid(f.grid(), window.grid(), "omega_decomposition");
    Field V = stft(f, window);
    OmegaSplit s;
    s.lambda_f = 1.01 * phase_space_norm(V, entropy_space());
    const double lo = s.lambda_f * std::exp(-2.0 / 3.0);
    const double cell = V.cell();
    for (size_t i = 0; i < V.size(); ++i) {
        double a = std::abs(V[i]);
        double v = xlogx_term(a * a) * cell;
        if (a <= lo)
            s.omega1 += v;
        else if (a < s.lambda_f)
            s.omega2 += v;
        else
            s.omega3 += v;
        s.total += v;
    }
    return s;
}

WindowComparison window_comparison_constant(const Field& phi, const Field& psi, int samples, std::uint64_t seed,
                                            double band)
{
    require_same_grid(phi.grid(), psi.grid(), "window_comparison_constant");
    WindowComparison w;
    w.samples = samples;
    w.seed = seed;
    for (int i = 0; i < samples; ++i) {
        Field f = make_random_bandlimited(phi.grid(), seed + std::uint64_t(i), band);
        double n = l2_norm(f);
        if (!(n > 0)) continue;
        f *= 1.0 / n;
        double a = entropy(f, phi).value;
        double b = entropy(f, psi).value + 1.0;
        w.C = std::max(w.C, a / b);
    }
    return w;
}

}  // namespace otf
