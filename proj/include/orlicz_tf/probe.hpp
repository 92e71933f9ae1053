#pragma once

#include <functional>

namespace otf {

// Decides whether ratio(t) stays bounded as t -> 0+ on (0, r].
// `sup` is the largest value on a 60-point geometric grid in (1e-8, r].
struct GrowthReport {
    bool bounded = true;
    double sup = 0.0;
    double r = 0.0;
    double grid_lo = 1e-8;
    int grid_points = 60;
};

GrowthReport probe_near_zero(const std::function<double(double)>& ratio, double r);

}  // namespace otf
