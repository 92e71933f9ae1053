#pragma once

#include "orlicz_tf/field.hpp"
#include "orlicz_tf/modspace.hpp"
#include "orlicz_tf/tfa.hpp"

#include <cstdint>
#include <vector>

namespace otf {

// K[j, m] ~ K_{a,A}(x_j, y_m); apply uses the quadrature weight on the y index (d = 1)
class KernelMatrix {
public:
    KernelMatrix(Grid g, std::vector<cplx> entries);

    const Grid& grid() const { return grid_; }
    int n() const { return grid_.axis(0).N; }
    cplx operator()(int j, int m) const { return k_[size_t(j) * n() + m]; }
    const std::vector<cplx>& values() const { return k_; }

    Field apply(const Field& f) const;
    Field apply_adjoint(const Field& g) const;

private:
    Grid grid_;
    std::vector<cplx> k_;
};

// K = (2 pi)^{-1/2} (F_2^{-1} a)(x - t(x-y), x - y) on the grid; a lives on phase_grid(signal grid)
KernelMatrix kernel(const Field& a, const Quantization& A);
Field apply(const Field& a, const Quantization& A, const Field& f);

// ||Op_{A1}(a) f - Op_{A2}(quantization_change(a, A1, A2)) f||_2 / ||f||_2
double calculi_consistency(const Field& a, const Quantization& A1, const Quantization& A2, const Field& f);

// grid-independent symbol: sum of modulated Gaussian packets in phase space, or a == 1
struct SymbolPacket {
    double x0 = 0, xi0 = 0, sx = 1, sxi = 1, bx = 0, bxi = 0;
    cplx amp = 1.0;
};

struct SymbolSpec {
    bool constant_one = false;
    std::vector<SymbolPacket> packets;
};

SymbolSpec random_symbol(std::uint64_t seed, int packets = 3);
Field sample_symbol(const SymbolSpec& s, const Grid& signal_grid);

// norm of a symbol on a coarse symmetric two-dimensional grid (N <= 48); spec acts on R^2
double symbol_norm(const SymbolSpec& s, const ModulationSpaceSpec& spec, int N = 32);

struct OpNormEstimate {
    double lower_bound = 0.0;
    double symbol_norm = 0.0;
    double ratio = 0.0;
    int candidates = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};

// max over random unit signals (plus an L^2 power-iteration candidate) of ||Op f||_codomain / ||f||_domain
OpNormEstimate estimate_operator_norm(const Field& a, const Quantization& A, const ModulationSpaceSpec& domain,
                                      const ModulationSpaceSpec& codomain, int trials, std::uint64_t seed,
                                      double symbol_norm_value = 1.0, int power_iterations = 30);

}  // namespace otf
