#include "orlicz_tf/young.hpp"

#include "orlicz_tf/probe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace otf {

namespace {

const double kEntropySplice = std::exp(-1.5);        // inflection of -t^2 log t
const double kPrintedSplice = std::exp(-2.0 / 3.0);  // splice point of the printed form
constexpr double kHalfPi = 1.5707963267948966;
constexpr double kLogTiny = -744.0;                  // ~ log of the smallest subnormal

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

YoungFunction YoungFunction::power(double p, double scale)
{
    if (!(p > 0) || !std::isfinite(p)) throw std::invalid_argument("power: p must be positive");
    if (!(scale > 0) || !std::isfinite(scale)) throw std::invalid_argument("power: scale must be positive");
    YoungFunction f;
    f.kind_ = Kind::power;
    f.p_ = p;
    f.scale_ = scale;
    return f;
}

YoungFunction YoungFunction::power_scaled(double p)
{
    if (!(p > 0) || !std::isfinite(p)) throw std::invalid_argument("power_scaled: p must be positive");
    YoungFunction f;
    f.kind_ = Kind::power_scaled;
    f.p_ = p;
    return f;
}

YoungFunction YoungFunction::cap(double a)
{
    if (!(a > 0) || !std::isfinite(a)) throw std::invalid_argument("cap: a must be positive");
    YoungFunction f;
    f.kind_ = Kind::cap;
    f.scale_ = a;
    return f;
}

YoungFunction YoungFunction::entropy()
{
    YoungFunction f;
    f.kind_ = Kind::entropy;
    return f;
}

YoungFunction YoungFunction::entropy_printed()
{
    YoungFunction f;
    f.kind_ = Kind::entropy_printed;
    return f;
}

YoungFunction YoungFunction::tan_example()
{
    YoungFunction f;
    f.kind_ = Kind::tan_example;
    return f;
}

YoungFunction YoungFunction::log_example()
{
    YoungFunction f;
    f.kind_ = Kind::log_example;
    return f;
}

YoungFunction YoungFunction::table(std::vector<Knot> knots, double tail_slope)
{
    if (knots.empty() || knots.front().t != 0.0 || knots.front().value != 0.0)
        throw std::invalid_argument("table: first knot must be (0, 0)");
    double prev_slope = 0.0;
    for (size_t i = 1; i < knots.size(); ++i) {
        double dt = knots[i].t - knots[i - 1].t;
        if (!(dt > 0)) throw std::invalid_argument("table: knots must be strictly increasing in t");
        if (!std::isfinite(knots[i].value) || knots[i].value < 0)
            throw std::invalid_argument("table: knot values must be finite and nonnegative");
        double s = (knots[i].value - knots[i - 1].value) / dt;
        if (s < prev_slope - 1e-12 * std::max(1.0, std::abs(prev_slope)))
            throw std::invalid_argument("table: knots are not convex");
        prev_slope = s;
    }
    if (!(tail_slope > 0) || !std::isfinite(tail_slope))
        throw std::invalid_argument("table: tail slope must be positive and finite");
    if (tail_slope < prev_slope - 1e-12 * std::max(1.0, prev_slope))
        throw std::invalid_argument("table: tail slope breaks convexity");
    YoungFunction f;
    f.kind_ = Kind::table;
    f.knots_ = std::move(knots);
    f.tail_slope_ = tail_slope;
    return f;
}

YoungFunction YoungFunction::with_quasi_order(double p0) const
{
    if (!(p0 > 0) || p0 > 1) throw std::invalid_argument("quasi_order must lie in (0, 1]");
    if (kind_ == Kind::conjugate && p0 != 1.0)
        throw std::invalid_argument("quasi_order < 1 is not supported for conjugate functions");
    YoungFunction f = *this;
    f.quasi_order_ = p0;
    return f;
}

bool YoungFunction::is_power() const
{
    return kind_ == Kind::power || kind_ == Kind::power_scaled;
}

double YoungFunction::evaluate(double t) const
{
    if (std::isnan(t)) return t;
    if (t <= 0) return 0.0;
    if (quasi_order_ != 1.0 && std::isfinite(t)) t = std::pow(t, quasi_order_);
    return evaluate_base(t);
}

double YoungFunction::evaluate_base(double t) const
{
    if (std::isinf(t)) return kInf;
    switch (kind_) {
    case Kind::power:
        return scale_ * std::pow(t, p_);
    case Kind::power_scaled:
        return std::pow(t, p_) / p_;
    case Kind::cap:
        return t <= scale_ ? 0.0 : kInf;
    case Kind::entropy:
        if (t <= kEntropySplice) return -t * t * std::log(t);
        return 2.0 * kEntropySplice * t - 0.5 * kEntropySplice * kEntropySplice;
    case Kind::entropy_printed:
        if (t <= kPrintedSplice) return -t * t * std::log(t);
        return kPrintedSplice / 3.0 * (t + kPrintedSplice);
    case Kind::tan_example:
        return t < kHalfPi ? std::tan(t) : kInf;
    case Kind::log_example:
        return t < 1.0 ? -t / std::log(t) : kInf;
    case Kind::table: {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                   [](double v, const Knot& k) { return v < k.t; });
        if (it == knots_.end()) {
            const Knot& last = knots_.back();
            return last.value + tail_slope_ * (t - last.t);
        }
        const Knot& hi = *it;
        const Knot& lo = *(it - 1);
        double w = (t - lo.t) / (hi.t - lo.t);
        return lo.value + w * (hi.value - lo.value);
    }
    case Kind::conjugate:
        return legendre(*base_, t);
    }
    return kInf;
}

std::string YoungFunction::name() const
{
    std::string s;
    switch (kind_) {
    case Kind::power:
        s = "power(" + fmt(p_) + (scale_ != 1.0 ? "," + fmt(scale_) : std::string()) + ")";
        break;
    case Kind::power_scaled: s = "power_scaled(" + fmt(p_) + ")"; break;
    case Kind::cap: s = "cap(" + fmt(scale_) + ")"; break;
    case Kind::table: s = "table(" + std::to_string(knots_.size()) + " knots)"; break;
    case Kind::conjugate: s = "conjugate(" + base_->name() + ")"; break;
    default: s = to_string(kind_); break;
    }
    if (quasi_order_ != 1.0) s += "^q" + fmt(quasi_order_);
    return s;
}

const char* to_string(YoungFunction::Kind k)
{
    switch (k) {
    case YoungFunction::Kind::power: return "power";
    case YoungFunction::Kind::power_scaled: return "power_scaled";
    case YoungFunction::Kind::cap: return "cap";
    case YoungFunction::Kind::entropy: return "entropy";
    case YoungFunction::Kind::entropy_printed: return "entropy_printed";
    case YoungFunction::Kind::tan_example: return "tan_example";
    case YoungFunction::Kind::log_example: return "log_example";
    case YoungFunction::Kind::table: return "table";
    case YoungFunction::Kind::conjugate: return "conjugate";
    }
    return "unknown";
}

const char* to_string(SteeredBranch b)
{
    switch (b) {
    case SteeredBranch::none: return "none";
    case SteeredBranch::limsup_infinite: return "limsup_infinite";
    case SteeredBranch::young_after_power: return "young_after_power";
    }
    return "none";
}

// ---------------------------------------------------------------- conjugation

YoungFunction conjugate(const YoungFunction& phi)
{
    using K = YoungFunction::Kind;
    if (phi.quasi_order() != 1.0)
        throw std::invalid_argument("conjugate: quasi-Young functions (quasi_order < 1) have no conjugate here");
    switch (phi.kind()) {
    case K::power: {
        double p = phi.p(), c = phi.scale();
        if (p < 1) throw std::invalid_argument("conjugate: power with p < 1 is not a Young function");
        if (p == 1) return YoungFunction::cap(c);
        double q = p / (p - 1);
        double scale = (p - 1) * std::pow(p, -q) * std::pow(c, -1.0 / (p - 1));
        return YoungFunction::power(q, scale);
    }
    case K::power_scaled: {
        double p = phi.p();
        if (p < 1) throw std::invalid_argument("conjugate: power with p < 1 is not a Young function");
        if (p == 1) return YoungFunction::cap(1.0);
        return YoungFunction::power_scaled(p / (p - 1));
    }
    case K::cap:
        return YoungFunction::power(1.0, phi.scale());
    case K::conjugate:
        return *phi.base();
    default: {
        YoungFunction f;
        f.kind_ = K::conjugate;
        f.base_ = std::make_shared<const YoungFunction>(phi);
        return f;
    }
    }
}

double legendre(const YoungFunction& phi, double t)
{
    if (std::isnan(t)) return t;
    if (t <= 0) return 0.0;
    if (std::isinf(t)) return kInf;
    if (t > asymptotic_slope(phi)) return kInf;

    const Landmarks lm = landmarks(phi);
    auto g = [&](double s) {
        double v = phi(s);
        return std::isinf(v) ? -kInf : s * t - v;
    };

    double best = 0.0;
    double hi;
    if (std::isfinite(lm.t2)) {
        hi = lm.t2;
        best = std::max(best, g(hi));
    } else {
        hi = 1.0;
        while (hi < 1e300 && g(2 * hi) > g(hi)) hi *= 2;
        hi *= 2;
    }

    // g is concave in s, hence unimodal in u = log s
    const double u_lo = kLogTiny;
    const double u_hi = std::log(hi);
    constexpr int M = 128;
    auto gu = [&](double u) { return g(std::exp(u)); };
    int ibest = 0;
    double vbest = -kInf;
    for (int i = 0; i <= M; ++i) {
        double u = u_lo + (u_hi - u_lo) * i / M;
        double v = gu(u);
        if (v > vbest) {
            vbest = v;
            ibest = i;
        }
    }
    double a = u_lo + (u_hi - u_lo) * std::max(0, ibest - 1) / M;
    double b = u_lo + (u_hi - u_lo) * std::min(M, ibest + 1) / M;
    const double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double gc = gu(c), gd = gu(d);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
        if (gc >= gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - invphi * (b - a);
            gc = gu(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + invphi * (b - a);
            gd = gu(d);
        }
    }
    best = std::max({best, vbest, gc, gd});
    return best;
}

// ---------------------------------------------------------------- landmarks

double asymptotic_slope(const YoungFunction& phi)
{
    using K = YoungFunction::Kind;
    const double p0 = phi.quasi_order();
    if (phi.is_power()) {
        double e = phi.p() * p0;
        double c = phi.kind() == K::power ? phi.scale() : 1.0 / phi.p();
        if (e > 1) return kInf;
        if (e == 1) return c;
        return 0.0;
    }
    Landmarks lm = landmarks(phi);
    if (std::isfinite(lm.t2)) return kInf;
    double base;
    switch (phi.kind()) {
    case K::entropy: base = 2.0 * kEntropySplice; break;
    case K::entropy_printed: base = kPrintedSplice / 3.0; break;
    case K::table: base = phi.tail_slope(); break;
    case K::conjugate: base = landmarks(*phi.base()).t2; break;
    default: base = kInf; break;
    }
    if (p0 == 1.0) return base;
    if (std::isfinite(base)) return 0.0;
    return phi(1e100) / 1e100;
}

double slope_at_zero(const YoungFunction& phi)
{
    using K = YoungFunction::Kind;
    const double p0 = phi.quasi_order();
    if (phi.is_power()) {
        double e = phi.p() * p0;
        double c = phi.kind() == K::power ? phi.scale() : 1.0 / phi.p();
        if (e > 1) return 0.0;
        if (e == 1) return c;
        return kInf;
    }
    if (p0 != 1.0) {
        double t = 1e-100;
        return phi(t) / t;
    }
    switch (phi.kind()) {
    case K::cap:
    case K::entropy:
    case K::entropy_printed:
    case K::log_example:
        return 0.0;
    case K::tan_example:
        return 1.0;
    case K::table: {
        const auto& k = phi.knots();
        if (k.size() < 2) return phi.tail_slope();
        return (k[1].value - k[0].value) / (k[1].t - k[0].t);
    }
    case K::conjugate:
        return landmarks(*phi.base()).t1;
    default:
        return 0.0;
    }
}

Landmarks landmarks(const YoungFunction& phi)
{
    using K = YoungFunction::Kind;
    Landmarks lm;
    switch (phi.kind()) {
    case K::power:
    case K::power_scaled:
    case K::entropy:
    case K::entropy_printed:
        break;
    case K::cap:
        lm.t1 = lm.t2 = phi.scale();
        lm.s0 = 0.0;
        break;
    case K::tan_example:
        lm.t2 = kHalfPi;
        break;
    case K::log_example:
        lm.t2 = 1.0;
        break;
    case K::table:
        for (const auto& k : phi.knots())
            if (k.value == 0.0) lm.t1 = k.t;
        break;
    case K::conjugate: {
        const YoungFunction& b = *phi.base();
        lm.t1 = slope_at_zero(b);
        lm.t2 = asymptotic_slope(b);
        lm.s0 = std::isfinite(lm.t2) ? legendre(b, lm.t2) : kInf;
        break;
    }
    }
    const double p0 = phi.quasi_order();
    if (p0 != 1.0) {
        lm.t1 = std::pow(lm.t1, 1.0 / p0);
        lm.t2 = std::pow(lm.t2, 1.0 / p0);
    }
    return lm;
}

double essential_inverse(const YoungFunction& phi, double s)
{
    using K = YoungFunction::Kind;
    if (!(s > 0)) return 0.0;
    const Landmarks lm = landmarks(phi);
    if (std::isinf(s) || s >= lm.s0) return lm.t2;

    const double p0 = phi.quasi_order();
    auto unq = [&](double t) { return p0 == 1.0 ? t : std::pow(t, 1.0 / p0); };
    switch (phi.kind()) {
    case K::power: return unq(std::pow(s / phi.scale(), 1.0 / phi.p()));
    case K::power_scaled: return unq(std::pow(phi.p() * s, 1.0 / phi.p()));
    case K::tan_example: return unq(std::atan(s));
    default: break;
    }

    double lo = lm.t1;
    double hi;
    if (std::isfinite(lm.t2)) {
        hi = lm.t2;
    } else {
        hi = std::max(1.0, 2 * lo);
        while (phi(hi) < s && hi < 1e300) hi *= 2;
    }
    for (int it = 0; it < 400 && hi - lo > 2e-16 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (phi(mid) < s)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------- predicates

namespace {

double delta2_sup(const YoungFunction& phi, double lo, double hi, int n, double t2)
{
    std::vector<double> ts;
    for (int i = 0; i < n; ++i) ts.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    if (std::isfinite(t2) && t2 / 2 < hi) {
        for (int i = 1; i < n / 4; ++i) ts.push_back(t2 / 2 + (t2 / 2) * i / (n / 4));
    }
    double sup = 0.0;
    for (double t : ts) {
        double a = phi(t);
        if (std::isinf(a)) continue;
        double b = phi(2 * t);
        if (a == 0.0) {
            if (b == 0.0) continue;
            return kInf;
        }
        sup = std::max(sup, b / a);
    }
    return sup;
}

}  // namespace

Delta2Result check_delta2(const YoungFunction& phi, double radius)
{
    using K = YoungFunction::Kind;
    const bool local = radius > 0;
    Delta2Result r;
    if (phi.is_power()) {
        r.holds = true;
        r.C = std::pow(2.0, phi.p() * phi.quasi_order());
        r.analytic = true;
        return r;
    }
    if (phi.kind() == K::cap) {
        r.analytic = true;
        double a = std::pow(phi.scale(), 1.0 / phi.quasi_order());
        r.holds = local && radius <= a / 2;
        r.C = r.holds ? 1.0 : kInf;
        return r;
    }
    const Landmarks lm = landmarks(phi);
    if (!local && std::isfinite(lm.t2)) {
        r.analytic = true;
        r.holds = false;
        return r;
    }
    double lo = local ? radius * 1e-12 : 1e-12;
    double hi = local ? radius : 1e12;
    double s1 = delta2_sup(phi, lo, hi, 200, lm.t2);
    double s2 = delta2_sup(phi, lo, hi, 400, lm.t2);
    r.C = std::max(s1, s2);
    r.holds = std::isfinite(s1) && std::isfinite(s2) && s2 <= s1 * (1 + 1e-3) + 1e-12;
    if (!r.holds) r.C = kInf;
    return r;
}

SteeredResult check_p_steered(const YoungFunction& phi, double p)
{
    SteeredResult res;
    const Landmarks lm = landmarks(phi);
    double r = 0.1;
    if (std::isfinite(lm.t2)) r = std::min(r, lm.t2 / 2);
    if (!(r > 0)) return res;

    auto ratio = [&](double t) { return phi(t) / std::pow(t, p); };
    if (!probe_near_zero(ratio, r).bounded) {
        res.steered = true;
        res.branch = SteeredBranch::limsup_infinite;
        return res;
    }

    // t -> Phi(t^{1/p}) near the origin
    double tau0 = std::min(1e-3, std::pow(r, p));
    auto h = [&](double tau) { return phi(std::pow(tau, 1.0 / p)); };
    std::vector<double> pts;
    for (int i = 0; i <= 64; ++i) pts.push_back(tau0 * i / 64.0);
    for (int k = 1; k <= 48; ++k) pts.push_back(tau0 * std::pow(10.0, -k / 4.0));
    std::sort(pts.begin(), pts.end());
    std::vector<double> hv(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        hv[i] = h(pts[i]);
        if (!std::isfinite(hv[i])) return res;
    }
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            double m = h(0.5 * (pts[i] + pts[j]));
            double rhs = 0.5 * (hv[i] + hv[j]);
            if (m > rhs + 1e-9 * (hv[i] + hv[j]) + 1e-300) return res;
        }
    }
    res.steered = true;
    res.branch = SteeredBranch::young_after_power;
    return res;
}

bool is_midpoint_convex(const YoungFunction& phi, double lo, double hi, int n)
{
    std::vector<double> ts{0.0};
    for (int i = 0; i < n; ++i) ts.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    std::vector<double> v(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) v[i] = phi(ts[i]);
    for (size_t i = 0; i < ts.size(); ++i) {
        if (!std::isfinite(v[i])) continue;
        for (size_t j = i + 1; j < ts.size(); ++j) {
            if (!std::isfinite(v[j])) continue;
            double m = phi(0.5 * (ts[i] + ts[j]));
            if (m > 0.5 * (v[i] + v[j]) + 1e-12 * (1 + v[i] + v[j])) return false;
        }
    }
    return true;
}

}  // namespace otf
