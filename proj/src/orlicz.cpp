#include "orlicz_tf/orlicz.hpp"

#include "orlicz_tf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace otf {

double luxemburg(std::span<const double> mags, double cell, const YoungFunction& phi)
{
    using K = YoungFunction::Kind;
    double M = 0;
    for (double m : mags) M = std::max(M, m);
    if (M == 0) return 0.0;
    if (!std::isfinite(M)) return kInf;

    const double p0 = phi.quasi_order();
    if (phi.is_power()) {
        double e = phi.p() * p0;
        double c = phi.kind() == K::power ? phi.scale() : 1.0 / phi.p();
        double s = 0;
        for (double m : mags)
            if (m > 0) s += std::pow(m / M, e);
        return M * std::pow(cell * c * s, 1.0 / e);
    }
    if (phi.kind() == K::cap) return M / std::pow(phi.scale(), 1.0 / p0);

    auto G = [&](double lam) {
        double s = 0;
        for (double m : mags) {
            if (m == 0) continue;
            s += phi(m / lam);
            if (std::isinf(s)) return s;
        }
        return s * cell;
    };

    const Landmarks lm = landmarks(phi);
    double lo = std::isfinite(lm.t2) && lm.t2 > 0 ? M / lm.t2 : 1e-300;
    double l1 = 0;
    for (double m : mags) l1 += m;
    double hi = std::max(l1 * cell + M, 2 * lo);
    int guard = 0;
    while (G(hi) > 1 && guard++ < 2000) hi *= 2;
    if (G(hi) > 1) throw std::runtime_error("luxemburg: no finite lambda satisfies the modular bound");
    if (lo > 0 && G(lo) <= 1) return lo;
    for (int it = 0; it < 200 && hi > lo * (1 + 1e-13); ++it) {
        double mid = std::sqrt(lo * hi);
        if (G(mid) <= 1)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double luxemburg_norm(const Field& f, const YoungFunction& phi)
{
    std::vector<double> m(f.size());
    for (size_t i = 0; i < f.size(); ++i) m[i] = std::abs(f[i]);
    return luxemburg(m, f.cell(), phi);
}

double luxemburg_norm(const Field& f, const YoungFunction& phi, const Weight& w)
{
    if (w.dim() != f.grid().rank()) throw std::invalid_argument("luxemburg_norm: weight dimension mismatch");
    if (w.is_constant()) return luxemburg_norm(f, phi);
    std::vector<double> m(f.size());
    for (size_t i = 0; i < f.size(); ++i) m[i] = std::abs(f[i]) * w(f.grid().coords(i));
    return luxemburg(m, f.cell(), phi);
}

double mixed_norm(const Field& F, const MixedNormSpec& spec)
{
    const Grid& g = F.grid();
    const int rank = g.rank();
    if (spec.stages.empty()) throw std::invalid_argument("mixed_norm: no stages");
    std::vector<int> seen(rank, 0);
    for (const auto& st : spec.stages) {
        if (st.axes.empty()) throw std::invalid_argument("mixed_norm: empty stage");
        for (int a : st.axes) {
            if (a < 0 || a >= rank) throw std::invalid_argument("mixed_norm: axis out of range");
            seen[a]++;
        }
    }
    for (int c : seen)
        if (c != 1) throw std::invalid_argument("mixed_norm: stages must partition the axes");
    if (spec.weight && spec.weight->dim() != rank) throw std::invalid_argument("mixed_norm: weight dimension mismatch");

    std::vector<double> vals(F.size());
    const bool weighted = spec.weight && !spec.weight->is_constant();
    for (size_t i = 0; i < F.size(); ++i) {
        vals[i] = std::abs(F[i]);
        if (weighted) vals[i] *= (*spec.weight)(g.coords(i));
    }

    std::vector<int> remaining(rank);
    for (int i = 0; i < rank; ++i) remaining[i] = i;

    for (const auto& st : spec.stages) {
        // strides of the current array over `remaining`
        std::vector<size_t> stride(remaining.size(), 1);
        for (int i = int(remaining.size()) - 2; i >= 0; --i)
            stride[i] = stride[i + 1] * g.axis(remaining[i + 1]).N;
        std::vector<int> inner_pos, outer_pos;
        for (size_t i = 0; i < remaining.size(); ++i) {
            bool in = std::find(st.axes.begin(), st.axes.end(), remaining[i]) != st.axes.end();
            (in ? inner_pos : outer_pos).push_back(int(i));
        }
        // offsets of all inner multi-indices
        std::vector<size_t> inner_off{0};
        double cell = 1.0;
        for (int p : inner_pos) {
            const int N = g.axis(remaining[p]).N;
            cell *= g.axis(remaining[p]).spacing();
            std::vector<size_t> next;
            next.reserve(inner_off.size() * N);
            for (size_t o : inner_off)
                for (int k = 0; k < N; ++k) next.push_back(o + k * stride[p]);
            inner_off = std::move(next);
        }
        size_t outer_count = 1;
        for (int p : outer_pos) outer_count *= g.axis(remaining[p]).N;

        std::vector<double> out(outer_count);
        parallel_for(outer_count, [&](size_t o) {
            size_t base = 0, r = o;
            for (int i = int(outer_pos.size()) - 1; i >= 0; --i) {
                const int N = g.axis(remaining[outer_pos[i]]).N;
                base += (r % N) * stride[outer_pos[i]];
                r /= N;
            }
            std::vector<double> line(inner_off.size());
            for (size_t k = 0; k < inner_off.size(); ++k) line[k] = vals[base + inner_off[k]];
            out[o] = luxemburg(line, cell, st.phi);
        });
        vals = std::move(out);
        std::vector<int> rem;
        for (int p : outer_pos) rem.push_back(remaining[p]);
        remaining = std::move(rem);
    }
    return vals.at(0);
}

Field convolve(const Field& f1, const Field& f2)
{
    require_same_grid(f1.grid(), f2.grid(), "convolve");
    if (f1.grid().rank() != 1) throw std::invalid_argument("convolve: d = 1 only");
    Field a = fourier_transform(f1);
    Field b = fourier_transform(f2);
    for (size_t i = 0; i < a.size(); ++i) a[i] *= b[i] * std::sqrt(2 * std::numbers::pi);
    return inverse_fourier_transform(a);
}

// ---------------------------------------------------------------- inequality verifiers

namespace {

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
    return v;
}

bool leq(double a, double b) { return a <= b * (1 + 1e-10) + 1e-300; }

// random step function with a wide dynamic range of piece amplitudes
Field random_trial_field(const Grid& g, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pieces(1, 16);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    Field f = make_random_steps(g, rng(), pieces(rng));
    double s = std::pow(10.0, u(rng));
    f *= s;
    return f;
}

template <class Ratio>
InequalityReport run_trials(int trials, std::uint64_t seed, const Grid& g, Ratio&& ratio)
{
    InequalityReport rep;
    rep.trials = trials;
    rep.seed = seed;
    std::vector<double> r(trials, 0.0);
    parallel_for(size_t(trials), [&](size_t i) {
        std::mt19937_64 rng(seed * 1000003ULL + i);
        Field f1 = random_trial_field(g, rng);
        Field f2 = random_trial_field(g, rng);
        r[i] = ratio(f1, f2);
    });
    for (double v : r) rep.max_ratio = std::max(rep.max_ratio, v);
    return rep;
}

}  // namespace

bool holder_precheck(const YoungFunction& phi0, const YoungFunction& phi1, const YoungFunction& phi2)
{
    auto ts = log_grid(1e-4, 1e4, 41);
    bool modular = true;
    for (double a : ts) {
        for (double b : ts) {
            double lhs = phi0(a * b);
            double rhs = phi1(a) + phi2(b);
            if (std::isinf(rhs)) continue;
            if (!leq(lhs, rhs)) {
                modular = false;
                break;
            }
        }
        if (!modular) break;
    }
    if (modular) return true;
    for (double s : log_grid(1e-8, 1e8, 161)) {
        double lhs = essential_inverse(phi1, s) * essential_inverse(phi2, s);
        if (!leq(lhs, essential_inverse(phi0, s))) return false;
    }
    return true;
}

bool young_precheck(const YoungFunction& phi0, const YoungFunction& phi1, const YoungFunction& phi2)
{
    for (double s : log_grid(1e-8, 1e8, 161)) {
        double lhs = essential_inverse(phi1, s) * essential_inverse(phi2, s);
        if (!leq(lhs, s * essential_inverse(phi0, s))) return false;
    }
    return true;
}

InequalityReport verify_holder(const YoungFunction& phi0, const YoungFunction& phi1, const YoungFunction& phi2,
                               int trials, std::uint64_t seed, const Grid& grid)
{
    auto rep = run_trials(trials, seed, grid, [&](const Field& f1, const Field& f2) {
        Field prod = f1;
        for (size_t i = 0; i < prod.size(); ++i) prod[i] *= f2[i];
        double den = luxemburg_norm(f1, phi1) * luxemburg_norm(f2, phi2);
        return den > 0 ? luxemburg_norm(prod, phi0) / den : 0.0;
    });
    rep.precheck = holder_precheck(phi0, phi1, phi2);
    rep.holds = rep.precheck && rep.max_ratio <= rep.bound;
    return rep;
}

InequalityReport verify_young_convolution(const YoungFunction& phi0, const YoungFunction& phi1,
                                          const YoungFunction& phi2, int trials, std::uint64_t seed,
                                          const Grid& grid)
{
    auto rep = run_trials(trials, seed, grid, [&](const Field& f1, const Field& f2) {
        Field c = convolve(f1, f2);
        double den = luxemburg_norm(f1, phi1) * luxemburg_norm(f2, phi2);
        return den > 0 ? luxemburg_norm(c, phi0) / den : 0.0;
    });
    rep.precheck = young_precheck(phi0, phi1, phi2);
    rep.holds = rep.precheck && rep.max_ratio <= rep.bound;
    return rep;
}

}  // namespace otf
