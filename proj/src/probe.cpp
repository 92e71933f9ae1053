#include "orlicz_tf/probe.hpp"

#include <algorithm>
#include <cmath>

namespace otf {

GrowthReport probe_near_zero(const std::function<double(double)>& ratio, double r)
{
    GrowthReport rep;
    rep.r = r;
    const double lo = std::min(1e-8, r * 1e-3);
    rep.grid_lo = lo;

    double sup = 0.0;
    for (int i = 0; i < rep.grid_points; ++i) {
        double t = r * std::pow(lo / r, double(i) / (rep.grid_points - 1));
        double v = ratio(t);
        if (std::isnan(v)) continue;
        sup = std::max(sup, v);
    }
    rep.sup = sup;

    // compare increments across the last three quarter-decades of depth
    double a = ratio(r * 1e-8);
    double b = ratio(r * 1e-12);
    double c = ratio(r * 1e-16);
    if (std::isinf(a) || std::isinf(b) || std::isinf(c) || std::isinf(sup)) {
        rep.bounded = false;
        rep.sup = INFINITY;
        return rep;
    }
    double d2 = b - a;
    double d3 = c - b;
    bool diverging = d3 > 1e-9 * std::max(1.0, std::abs(b)) && d3 >= 0.75 * d2;
    rep.bounded = !diverging;
    return rep;
}

}  // namespace otf
