#include "orlicz_tf/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace otf {

Weight Weight::constant_one(int dim)
{
    if (dim < 1) throw std::invalid_argument("weight dimension must be positive");
    Weight w;
    w.dim_ = dim;
    return w;
}

Weight Weight::polynomial(double s, int dim)
{
    Weight w = constant_one(dim);
    w.kind_ = Kind::polynomial;
    w.param_ = s;
    return w;
}

Weight Weight::exponential(double r, int dim)
{
    Weight w = constant_one(dim);
    w.kind_ = Kind::exponential;
    w.param_ = r;
    return w;
}

Weight Weight::product(std::vector<Weight> factors)
{
    if (factors.empty()) throw std::invalid_argument("product weight needs at least one factor");
    for (const auto& f : factors)
        if (f.dim() != factors.front().dim()) throw std::invalid_argument("product weight factors differ in dimension");
    Weight w = constant_one(factors.front().dim());
    w.kind_ = Kind::product;
    w.factors_ = std::move(factors);
    return w;
}

Weight Weight::slots(Weight inner, std::vector<int> axes, int dim)
{
    if (int(axes.size()) != inner.dim()) throw std::invalid_argument("slots: axis count must match inner dimension");
    for (int a : axes)
        if (a < 0 || a >= dim) throw std::invalid_argument("slots: axis out of range");
    Weight w = constant_one(dim);
    w.kind_ = Kind::slots;
    w.factors_.push_back(std::move(inner));
    w.axes_ = std::move(axes);
    return w;
}

Weight Weight::custom(std::string name, int dim, Callable fn, double growth_r)
{
    Weight w = constant_one(dim);
    w.kind_ = Kind::custom;
    w.label_ = std::move(name);
    w.fn_ = std::make_shared<const Callable>(std::move(fn));
    w.growth_r_ = growth_r;
    return w;
}

double Weight::operator()(std::span<const double> x) const
{
    switch (kind_) {
    case Kind::constant_one:
        return 1.0;
    case Kind::polynomial: {
        double n2 = 0;
        for (double v : x) n2 += v * v;
        return std::pow(1.0 + n2, 0.5 * param_);
    }
    case Kind::exponential: {
        double n2 = 0;
        for (double v : x) n2 += v * v;
        return std::exp(param_ * std::sqrt(n2));
    }
    case Kind::product: {
        double p = 1.0;
        for (const auto& f : factors_) p *= f(x);
        return p;
    }
    case Kind::slots: {
        double buf[16];
        std::vector<double> big;
        double* y = buf;
        if (axes_.size() > 16) {
            big.resize(axes_.size());
            y = big.data();
        }
        for (size_t i = 0; i < axes_.size(); ++i) y[i] = x[axes_[i]];
        return factors_.front()(std::span<const double>(y, axes_.size()));
    }
    case Kind::custom:
        return (*fn_)(x);
    }
    return 1.0;
}

bool Weight::is_constant() const
{
    switch (kind_) {
    case Kind::constant_one: return true;
    case Kind::polynomial:
    case Kind::exponential: return param_ == 0.0;
    case Kind::product:
        return std::all_of(factors_.begin(), factors_.end(), [](const Weight& w) { return w.is_constant(); });
    case Kind::slots: return factors_.front().is_constant();
    case Kind::custom: return false;
    }
    return false;
}

double Weight::growth_r() const
{
    switch (kind_) {
    case Kind::constant_one: return 0.0;
    case Kind::polynomial: return param_ == 0.0 ? 0.0 : 1.0;
    case Kind::exponential: return std::abs(param_);
    case Kind::product: {
        double r = 0;
        for (const auto& f : factors_) r += f.growth_r();
        return r;
    }
    case Kind::slots: return factors_.front().growth_r();
    case Kind::custom: return growth_r_;
    }
    return 0.0;
}

std::string Weight::name() const
{
    char buf[64];
    switch (kind_) {
    case Kind::constant_one: return "constant_one";
    case Kind::polynomial: std::snprintf(buf, sizeof buf, "polynomial(%g)", param_); return buf;
    case Kind::exponential: std::snprintf(buf, sizeof buf, "exponential(%g)", param_); return buf;
    case Kind::product: {
        std::string s = "product(";
        for (size_t i = 0; i < factors_.size(); ++i) s += (i ? "," : "") + factors_[i].name();
        return s + ")";
    }
    case Kind::slots: return "slots(" + factors_.front().name() + ")";
    case Kind::custom: return "custom(" + label_ + ")";
    }
    return "weight";
}

// ---------------------------------------------------------------- checks

namespace {

// visit every point of a centered grid in R^n with `points` nodes per axis
template <class F>
void for_each_point(int n, const VerifyGrid& g, F&& fn)
{
    std::vector<int> idx(n, 0);
    std::vector<double> x(n);
    auto coord = [&](int k) {
        return g.points == 1 ? 0.0 : -g.extent + 2 * g.extent * k / (g.points - 1);
    };
    while (true) {
        for (int i = 0; i < n; ++i) x[i] = coord(idx[i]);
        fn(std::span<const double>(x));
        int i = n - 1;
        while (i >= 0 && ++idx[i] == g.points) idx[i--] = 0;
        if (i < 0) break;
    }
}

VerifyGrid clamp_grid(VerifyGrid g, int dims)
{
    // keep the total sample count near 2e6
    while (g.points > 5 && std::pow(double(g.points), dims) > 2.0e6) g.points -= 2;
    return g;
}

template <class Ratio>
WeightCheck sup_with_refinement(int dims, const VerifyGrid& grid, Ratio&& ratio)
{
    WeightCheck res;
    res.grid = clamp_grid(grid, dims);
    auto sup_on = [&](const VerifyGrid& g) {
        double sup = 0.0;
        for_each_point(dims, g, [&](std::span<const double> p) { sup = std::max(sup, ratio(p)); });
        return sup;
    };
    res.C = sup_on(res.grid);
    VerifyGrid wide = res.grid;
    wide.extent *= 2;
    res.C_refined = sup_on(wide);
    res.holds = std::isfinite(res.C) && std::isfinite(res.C_refined) &&
                res.C_refined <= 1.25 * res.C + 1e-12;
    return res;
}

std::vector<double> matvec(const std::vector<double>& A, int d, std::span<const double> v, bool transpose)
{
    std::vector<double> out(d, 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i] += (transpose ? A[j * d + i] : A[i * d + j]) * v[j];
    return out;
}

}  // namespace

WeightCheck check_moderate(const Weight& w, const Weight& v, const VerifyGrid& grid)
{
    if (w.dim() != v.dim()) throw std::invalid_argument("check_moderate: dimension mismatch");
    using K = Weight::Kind;
    if (w.kind() == K::polynomial && v.kind() == K::polynomial && v.s() >= std::abs(w.s())) {
        WeightCheck r;
        r.holds = true;
        r.analytic = true;
        r.C = r.C_refined = std::pow(2.0, std::abs(w.s()) / 2);
        r.grid = grid;
        return r;
    }
    if (w.kind() == K::exponential && v.kind() == K::exponential && v.r() >= std::abs(w.r())) {
        WeightCheck r;
        r.holds = true;
        r.analytic = true;
        r.C = r.C_refined = 1.0;
        r.grid = grid;
        return r;
    }
    const int n = w.dim();
    std::vector<double> s(n);
    return sup_with_refinement(2 * n, grid, [&](std::span<const double> p) {
        auto x = p.subspan(0, n);
        auto y = p.subspan(n, n);
        for (int i = 0; i < n; ++i) s[i] = x[i] + y[i];
        return w(s) / (w(x) * v(y));
    });
}

WeightCheck check_pseudo_weight_condition(const Weight& w0, const Weight& w1, const Weight& w2,
                                          const std::vector<double>& A, const VerifyGrid& grid)
{
    const int d2 = w1.dim();
    if (d2 % 2 || w2.dim() != d2 || w0.dim() != 2 * d2)
        throw std::invalid_argument("check_pseudo_weight_condition: inconsistent dimensions");
    const int d = d2 / 2;
    if (int(A.size()) != d * d) throw std::invalid_argument("check_pseudo_weight_condition: A must be d x d");
    std::vector<double> a(2 * d), b(2 * d), c(4 * d), diff(d);
    return sup_with_refinement(4 * d, grid, [&](std::span<const double> p) {
        auto x = p.subspan(0, d), xi = p.subspan(d, d), y = p.subspan(2 * d, d), eta = p.subspan(3 * d, d);
        for (int i = 0; i < d; ++i) diff[i] = x[i] - y[i];
        auto Ad = matvec(A, d, diff, false);
        auto Atxi = matvec(A, d, xi, true);
        auto Ateta = matvec(A, d, eta, true);
        for (int i = 0; i < d; ++i) {
            a[i] = x[i];
            a[d + i] = xi[i];
            b[i] = y[i];
            b[d + i] = eta[i];
            c[i] = x[i] - Ad[i];
            c[d + i] = Atxi[i] + eta[i] - Ateta[i];
            c[2 * d + i] = xi[i] - eta[i];
            c[3 * d + i] = y[i] - x[i];
        }
        return w2(a) / (w1(b) * w0(c));
    });
}

WeightCheck check_wigner_weight_condition(const Weight& w, const Weight& w1, const Weight& w2,
                                          const std::vector<double>& A, const VerifyGrid& grid)
{
    const int d2 = w1.dim();
    if (d2 % 2 || w2.dim() != d2 || w.dim() != 2 * d2)
        throw std::invalid_argument("check_wigner_weight_condition: inconsistent dimensions");
    const int d = d2 / 2;
    if (int(A.size()) != d * d) throw std::invalid_argument("check_wigner_weight_condition: A must be d x d");
    std::vector<double> a(2 * d), b(2 * d);
    return sup_with_refinement(4 * d, grid, [&](std::span<const double> p) {
        auto x = p.subspan(0, d), xi = p.subspan(d, d), eta = p.subspan(2 * d, d), y = p.subspan(3 * d, d);
        auto Ay = matvec(A, d, y, false);
        auto Ateta = matvec(A, d, eta, true);
        for (int i = 0; i < d; ++i) {
            a[i] = x[i] - Ay[i];
            a[d + i] = xi[i] + eta[i] - Ateta[i];
            b[i] = x[i] + y[i] - Ay[i];
            b[d + i] = xi[i] - Ateta[i];
        }
        return w(p) / (w1(a) * w2(b));
    });
}

double weight_bound_constant(const Weight& w, const VerifyGrid& grid)
{
    const double r = w.growth_r();
    double C = 0.0;
    for_each_point(w.dim(), clamp_grid(grid, w.dim()), [&](std::span<const double> x) {
        double n2 = 0;
        for (double v : x) n2 += v * v;
        double e = std::exp(-r * std::sqrt(n2));
        double val = w(x);
        C = std::max({C, val * e, e / val});
    });
    return C;
}

}  // namespace otf
