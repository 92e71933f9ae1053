#include "orlicz_tf/tfa.hpp"

#include "orlicz_tf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace otf {

using std::numbers::pi;

Quantization::Tag Quantization::tag() const
{
    if (t == 0.0) return Tag::zero;
    if (t == 0.5) return Tag::half_identity;
    return Tag::t_identity;
}

std::string Quantization::name() const
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g*I", t);
    return buf;
}

namespace {

// all-axes centered transform of a contiguous buffer laid out on g
void fourier_buffer(cplx* data, const Grid& g, int sign)
{
    const auto st = g.strides();
    const size_t total = g.size();
    std::vector<cplx> line;
    for (int a = 0; a < g.rank(); ++a) {
        const Axis& ax = g.axis(a);
        const size_t N = ax.N, s = st[a];
        if (s == 1) {
            for (size_t base = 0; base < total; base += N) fourier_line(data + base, ax, sign);
            continue;
        }
        line.resize(N);
        for (size_t l = 0; l < total / N; ++l) {
            size_t base = (l / s) * s * N + (l % s);
            for (size_t k = 0; k < N; ++k) line[k] = data[base + k * s];
            fourier_line(line.data(), ax, sign);
            for (size_t k = 0; k < N; ++k) data[base + k * s] = line[k];
        }
    }
}

// flat index of the window sample at y_k - x_j for every k (periodic per axis)
void window_offsets(const Grid& g, size_t j, std::vector<size_t>& out)
{
    const int d = g.rank();
    const auto st = g.strides();
    std::vector<int> jj(d);
    size_t r = j;
    for (int a = d - 1; a >= 0; --a) {
        jj[a] = int(r % g.axis(a).N);
        r /= g.axis(a).N;
    }
    out.assign(1, 0);
    for (int a = 0; a < d; ++a) {
        const int N = g.axis(a).N;
        std::vector<size_t> next;
        next.reserve(out.size() * N);
        for (size_t o : out)
            for (int k = 0; k < N; ++k) next.push_back(o + size_t(((k - jj[a] + N / 2) % N + N) % N) * st[a]);
        out = std::move(next);
    }
}

constexpr size_t kChunks = 64;

}  // namespace

Field stft(const Field& f, const Field& window)
{
    require_same_grid(f.grid(), window.grid(), "stft");
    const Grid& g = f.grid();
    const size_t n = g.size();
    Field out(phase_grid(g));
    auto& ov = out.values();
    parallel_for(n, [&](size_t j) {
        std::vector<size_t> off;
        window_offsets(g, j, off);
        cplx* row = ov.data() + j * n;
        for (size_t k = 0; k < n; ++k) row[k] = f[k] * std::conj(window[off[k]]);
        fourier_buffer(row, g, -1);
    });
    return out;
}

Field stft_adjoint(const Field& F, const Field& window)
{
    const Grid& g = window.grid();
    require_same_grid(F.grid(), phase_grid(g), "stft_adjoint");
    const size_t n = g.size();
    const Grid dg = g.dual();
    const double cell = g.cell();
    const size_t chunks = std::min(kChunks, n);
    std::vector<std::vector<cplx>> partial(chunks, std::vector<cplx>(n));
    parallel_for(chunks, [&](size_t c) {
        std::vector<size_t> off;
        std::vector<cplx> row(n);
        auto& acc = partial[c];
        for (size_t j = c * n / chunks; j < (c + 1) * n / chunks; ++j) {
            std::copy(F.values().begin() + j * n, F.values().begin() + (j + 1) * n, row.begin());
            fourier_buffer(row.data(), dg, +1);
            window_offsets(g, j, off);
            for (size_t k = 0; k < n; ++k) acc[k] += window[off[k]] * row[k] * cell;
        }
    });
    Field f(g);
    for (const auto& p : partial)
        for (size_t k = 0; k < n; ++k) f[k] += p[k];
    return f;
}

Field stft_projection(const Field& F, const Field& window)
{
    double nw = l2_norm(window);
    if (!(nw > 0)) throw std::invalid_argument("stft_projection: zero window");
    Field P = stft(stft_adjoint(F, window), window);
    P *= 1.0 / (nw * nw);
    return P;
}

Field twisted_convolution(const Field& F, const Field& G)
{
    require_same_grid(F.grid(), G.grid(), "twisted_convolution");
    const Grid& pg = F.grid();
    if (pg.rank() != 2) throw std::invalid_argument("twisted_convolution: d = 1 phase fields only");
    const Axis& ax = pg.axis(0);
    const Axis& fx = pg.axis(1);
    if (!fx.same_as(ax.dual())) throw std::invalid_argument("twisted_convolution: not a phase grid");
    const int N = ax.N;
    if (fx.N != N) throw std::invalid_argument("twisted_convolution: axis sizes differ");
    const double dxi = fx.spacing();
    // phase[k][r + N - 1] = e^{-i y_k r dxi}
    std::vector<cplx> phase(size_t(N) * (2 * N - 1));
    for (int k = 0; k < N; ++k)
        for (int r = -(N - 1); r <= N - 1; ++r)
            phase[size_t(k) * (2 * N - 1) + (r + N - 1)] = std::polar(1.0, -ax.point(k) * r * dxi);
    const double scale = ax.spacing() * dxi / std::sqrt(2 * pi);
    Field out(pg);
    parallel_for(size_t(N), [&](size_t j) {
        for (int m = 0; m < N; ++m) {
            cplx s = 0;
            for (int k = 0; k < N; ++k) {
                const int fj = ((int(j) - k + N / 2) % N + N) % N;
                const cplx* Frow = F.values().data() + size_t(fj) * N;
                const cplx* Grow = G.values().data() + size_t(k) * N;
                const cplx* ph = phase.data() + size_t(k) * (2 * N - 1) + (N - 1);
                for (int n = 0; n < N; ++n) {
                    const int fm = ((m - n + N / 2) % N + N) % N;
                    s += Frow[fm] * Grow[n] * ph[m - n];
                }
            }
            out[j * N + m] = s * scale;
        }
    });
    return out;
}

Field wigner(const Field& f1, const Field& f2, const Quantization& A)
{
    require_same_grid(f1.grid(), f2.grid(), "wigner");
    const Grid& g = f1.grid();
    if (g.rank() != 1) throw std::invalid_argument("wigner: d = 1 only");
    const Axis& ax = g.axis(0);
    const int N = ax.N;
    const double t = A.t;
    Field out(phase_grid(g));
    auto& ov = out.values();

    std::vector<cplx> h1, h2;
    std::unique_ptr<TrigInterpolant> i1, i2;
    const auto tag = A.tag();
    if (tag == Quantization::Tag::half_identity) {
        h1 = half_grid(f1.values().data(), ax);
        h2 = half_grid(f2.values().data(), ax);
    } else if (tag == Quantization::Tag::t_identity && t != 1.0) {
        i1 = std::make_unique<TrigInterpolant>(f1.values().data(), ax);
        i2 = std::make_unique<TrigInterpolant>(f2.values().data(), ax);
    }
    auto wrap = [](int i, int M) { return ((i % M) + M) % M; };

    parallel_for(size_t(N), [&](size_t jj) {
        const int j = int(jj);
        cplx* row = ov.data() + jj * N;
        for (int k = 0; k < N; ++k) {
            const int s = k - N / 2;  // y_k = s * spacing
            cplx a, b;
            if (t == 0.0) {
                a = f1[j];
                b = f2[wrap(j - s, N)];
            } else if (t == 1.0) {
                a = f1[wrap(j + s, N)];
                b = f2[j];
            } else if (t == 0.5) {
                a = h1[wrap(2 * j + s, 2 * N)];
                b = h2[wrap(2 * j - s, 2 * N)];
            } else {
                const double x = ax.point(j), y = s * ax.spacing();
                a = (*i1)(x + t * y);
                b = (*i2)(x + (t - 1) * y);
            }
            row[k] = a * std::conj(b);
        }
        fourier_line(row, ax, -1);
    });
    return out;
}

Field quantization_change(const Field& a, const Quantization& A1, const Quantization& A2)
{
    const Grid& pg = a.grid();
    if (pg.rank() != 2) throw std::invalid_argument("quantization_change: d = 1 phase fields only");
    if (A1.t == A2.t) return a;
    Field h = fourier_axes(a, {0, 1}, -1);
    const Grid& hg = h.grid();
    const Axis& zeta = hg.axis(0);
    const Axis& w = hg.axis(1);
    const double dt = A1.t - A2.t;
    for (int i = 0; i < zeta.N; ++i)
        for (int k = 0; k < w.N; ++k) h[size_t(i) * w.N + k] *= std::polar(1.0, dt * w.point(k) * zeta.point(i));
    return fourier_axes(h, {0, 1}, +1);
}

}  // namespace otf
