#include "orlicz_tf/psido.hpp"

#include "orlicz_tf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace otf {

using std::numbers::pi;

KernelMatrix::KernelMatrix(Grid g, std::vector<cplx> entries) : grid_(std::move(g)), k_(std::move(entries))
{
    if (grid_.rank() != 1) throw std::invalid_argument("kernel: d = 1 only");
    if (k_.size() != size_t(n()) * n()) throw std::invalid_argument("kernel: entry count mismatch");
}

Field KernelMatrix::apply(const Field& f) const
{
    require_same_grid(f.grid(), grid_, "kernel apply");
    const int N = n();
    const double dx = grid_.cell();
    Field out(grid_);
    parallel_for(size_t(N), [&](size_t j) {
        cplx s = 0;
        const cplx* row = k_.data() + j * N;
        for (int m = 0; m < N; ++m) s += row[m] * f[m];
        out[j] = s * dx;
    });
    return out;
}

Field KernelMatrix::apply_adjoint(const Field& g) const
{
    require_same_grid(g.grid(), grid_, "kernel apply_adjoint");
    const int N = n();
    const double dx = grid_.cell();
    Field out(grid_);
    parallel_for(size_t(N), [&](size_t m) {
        cplx s = 0;
        for (int j = 0; j < N; ++j) s += std::conj(k_[size_t(j) * N + m]) * g[j];
        out[m] = s * dx;
    });
    return out;
}

KernelMatrix kernel(const Field& a, const Quantization& A)
{
    const Grid& pg = a.grid();
    if (pg.rank() != 2) throw std::invalid_argument("kernel: symbol must live on a d = 1 phase grid");
    const Axis ax = pg.axis(0);
    if (!pg.axis(1).same_as(ax.dual())) throw std::invalid_argument("kernel: symbol grid is not a phase grid");
    const int N = ax.N;
    const double t = A.t;
    // b(x, z) = F^{-1}_{xi -> z} a(x, xi)
    Field b = fourier_axes(a, {1}, +1);
    const double c = 1.0 / std::sqrt(2 * pi);

    // columns of b along x, one per z_k
    std::vector<std::vector<cplx>> cols(N, std::vector<cplx>(N));
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j) cols[k][j] = b[size_t(j) * N + k];

    std::vector<std::vector<cplx>> half;
    std::vector<TrigInterpolant> interp;
    const auto tag = A.tag();
    if (tag == Quantization::Tag::half_identity) {
        half.resize(N);
        parallel_for(size_t(N), [&](size_t k) { half[k] = half_grid(cols[k].data(), ax); });
    } else if (tag == Quantization::Tag::t_identity && t != 1.0) {
        for (int k = 0; k < N; ++k) interp.emplace_back(cols[k].data(), ax);
    }

    std::vector<cplx> K(size_t(N) * N);
    parallel_for(size_t(N), [&](size_t jj) {
        const int j = int(jj);
        for (int m = 0; m < N; ++m) {
            const int k = ((j - m + N / 2) % N + N) % N;
            const int s = k - N / 2;  // z_k = s * spacing
            cplx v;
            if (t == 0.0)
                v = cols[k][j];
            else if (t == 1.0)
                v = cols[k][m];
            else if (t == 0.5)
                v = half[k][((2 * j - s) % (2 * N) + 2 * N) % (2 * N)];
            else
                v = interp[k](ax.point(j) - t * s * ax.spacing());
            K[jj * N + m] = c * v;
        }
    });
    return KernelMatrix(Grid({ax}), std::move(K));
}

Field apply(const Field& a, const Quantization& A, const Field& f) { return kernel(a, A).apply(f); }

double calculi_consistency(const Field& a, const Quantization& A1, const Quantization& A2, const Field& f)
{
    Field u = apply(a, A1, f);
    Field v = apply(quantization_change(a, A1, A2), A2, f);
    double nf = l2_norm(f);
    return nf > 0 ? l2_norm(u - v) / nf : 0.0;
}

// ---------------------------------------------------------------- symbols

SymbolSpec random_symbol(std::uint64_t seed, int packets)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::normal_distribution<double> nd;
    SymbolSpec s;
    for (int i = 0; i < packets; ++i) {
        SymbolPacket p;
        p.x0 = 2.5 * u(rng);
        p.xi0 = 2.5 * u(rng);
        p.sx = 0.9 + 0.3 * u(rng);
        p.sxi = 0.9 + 0.3 * u(rng);
        p.bx = 0.5 * u(rng);
        p.bxi = 0.5 * u(rng);
        double re = nd(rng), im = nd(rng);
        p.amp = cplx(re, im);
        s.packets.push_back(p);
    }
    return s;
}

Field sample_symbol(const SymbolSpec& s, const Grid& signal_grid)
{
    if (signal_grid.rank() != 1) throw std::invalid_argument("sample_symbol: d = 1 only");
    Grid pg = phase_grid(signal_grid);
    Field a(pg);
    const Axis& X = pg.axis(0);
    const Axis& Xi = pg.axis(1);
    for (int j = 0; j < X.N; ++j) {
        const double x = X.point(j);
        for (int m = 0; m < Xi.N; ++m) {
            const double xi = Xi.point(m);
            cplx v = s.constant_one ? cplx(1.0) : cplx(0.0);
            for (const auto& p : s.packets) {
                double zx = (x - p.x0) / p.sx, zxi = (xi - p.xi0) / p.sxi;
                v += p.amp * std::polar(std::exp(-0.5 * (zx * zx + zxi * zxi)), p.bx * x + p.bxi * xi);
            }
            a[size_t(j) * Xi.N + m] = v;
        }
    }
    return a;
}

double symbol_norm(const SymbolSpec& s, const ModulationSpaceSpec& spec, int N)
{
    if (N > 48) throw std::invalid_argument("symbol_norm: N > 48 is too large for the 4d object");
    if (s.constant_one) throw std::invalid_argument("symbol_norm: a == 1 has no finite symbol norm");
    // a symmetric grid makes the phase grid of the symbol square
    Grid g = Grid::symmetric(1, N);
    Field a = sample_symbol(s, g);
    ModulationSpaceSpec sp = spec;
    sp.window.reset();
    return modulation_norm(a, sp);
}

OpNormEstimate estimate_operator_norm(const Field& a, const Quantization& A, const ModulationSpaceSpec& domain,
                                      const ModulationSpaceSpec& codomain, int trials, std::uint64_t seed,
                                      double symbol_norm_value, int power_iterations)
{
    KernelMatrix K = kernel(a, A);
    const Grid g = K.grid();
    std::vector<Field> cands;
    for (int i = 0; i < trials; ++i) cands.push_back(make_random_packets(g, seed + std::uint64_t(i), 3, 3.0));
    if (power_iterations > 0) {
        Field v = trials > 0 ? cands.front() : make_gaussian(g, 1.0);
        for (int it = 0; it < power_iterations; ++it) {
            Field w = K.apply_adjoint(K.apply(v));
            double n = l2_norm(w);
            if (!(n > 0)) break;
            w *= 1.0 / n;
            v = std::move(w);
        }
        cands.push_back(std::move(v));
    }
    OpNormEstimate est;
    est.trials = trials;
    est.seed = seed;
    est.candidates = int(cands.size());
    est.symbol_norm = symbol_norm_value;
    for (const auto& f : cands) {
        double dn = modulation_norm(f, domain);
        if (!(dn > 0)) continue;
        double cn = modulation_norm(K.apply(f), codomain);
        est.lower_bound = std::max(est.lower_bound, cn / dn);
    }
    est.ratio = symbol_norm_value > 0 ? est.lower_bound / symbol_norm_value : kInf;
    return est;
}

}  // namespace otf
