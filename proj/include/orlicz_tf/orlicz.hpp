#pragma once

#include "orlicz_tf/field.hpp"
#include "orlicz_tf/weights.hpp"
#include "orlicz_tf/young.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace otf {

struct MixedStage {
    std::vector<int> axes;
    YoungFunction phi;
};

// Iterated Luxemburg norm, innermost stage first. The weight (if any) multiplies the
// integrand at the innermost stage only.
struct MixedNormSpec {
    std::vector<MixedStage> stages;
    std::optional<Weight> weight;
};

// inf{lambda > 0 : cell * sum Phi(m_k / lambda) <= 1} for nonnegative samples m_k
double luxemburg(std::span<const double> mags, double cell, const YoungFunction& phi);

double luxemburg_norm(const Field& f, const YoungFunction& phi);
double luxemburg_norm(const Field& f, const YoungFunction& phi, const Weight& w);

double mixed_norm(const Field& F, const MixedNormSpec& spec);

// convolution on a d = 1 grid: (f1 * f2)(x_j) = sum_k f1(y_k) f2(x_j - y_k) dy, periodic
Field convolve(const Field& f1, const Field& f2);

struct InequalityReport {
    double max_ratio = 0.0;
    bool holds = false;
    bool precheck = false;
    int trials = 0;
    std::uint64_t seed = 0;
    double bound = 2.0;
};

// Phi0(t1 t2) <= Phi1(t1) + Phi2(t2), or Phi0^{-1} >= Phi1^{-1} Phi2^{-1}, on log grids
bool holder_precheck(const YoungFunction& phi0, const YoungFunction& phi1, const YoungFunction& phi2);
// Phi1^{-1}(s) Phi2^{-1}(s) <= s Phi0^{-1}(s) on a log grid
bool young_precheck(const YoungFunction& phi0, const YoungFunction& phi1, const YoungFunction& phi2);

// random step functions on [-L/2, L/2] of a d = 1 grid (default N = 64, L = 8)
InequalityReport verify_holder(const YoungFunction& phi0, const YoungFunction& phi1, const YoungFunction& phi2,
                               int trials, std::uint64_t seed, const Grid& grid = Grid::uniform(1, 8.0, 64));
InequalityReport verify_young_convolution(const YoungFunction& phi0, const YoungFunction& phi1,
                                          const YoungFunction& phi2, int trials, std::uint64_t seed,
                                          const Grid& grid = Grid::uniform(1, 8.0, 64));

}  // namespace otf
