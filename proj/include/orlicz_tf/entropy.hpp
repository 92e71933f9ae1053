#pragma once

#include "orlicz_tf/field.hpp"
#include "orlicz_tf/modspace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace otf {

struct EntropyResult {
    double value = 0.0;  // nats
    double l2_norm_f = 0.0;
    double l2_norm_window = 0.0;
    std::vector<double> integrand_min_location;  // phase point where -|V|^2 log |V|^2 is smallest
};

// -sum |V|^2 log |V|^2 dx dxi + n log n with n = ||phi||^2 ||f||^2; |V|^2 < 1e-300 contributes 0
EntropyResult entropy(const Field& f, const Field& window);
EntropyResult entropy(const Field& f);  // gaussian(1) window
EntropyResult entropy_of_stft(const Field& V, double norm_f, double norm_window);

// the M^Phi norm used by the entropy experiments: the Luxemburg norm of V_phi f over all of phase space
ModulationSpaceSpec entropy_space();

struct ScanRow {
    double lambda = 0.0;
    double E = 0.0;
    double m2_norm = 0.0;
    double mphi_norm = 0.0;
    double offset = 0.0;  // E - d log(pi (sqrt(lambda) + 1/sqrt(lambda)))
    std::string warning;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    double constant = 0.0;  // mean offset
    double spread = 0.0;    // max - min offset
    std::string grid;
};

// smallest symmetric grid (power-of-two N in [256, 1024]) meeting L >= 12/sqrt(min lambda) and 8 sqrt(max lambda)
Grid scan_grid(const std::vector<double>& lambdas, int d = 1);
ScanResult gaussian_family_scan(const std::vector<double>& lambdas, const Grid& g, bool with_mphi = true);

struct LiebCheck {
    double entropy = 0.0;
    double bound = 0.0;
    bool satisfied = false;
};

// rescales f and phi to unit L^2 norm; bound d (1 + log(pi/2))
LiebCheck lieb_bound_check(const Field& f, const Field& window);
double lieb_bound(int d);

enum class ProbeSpace { M2, Mp, MPhi };

struct ProbeRow {
    double amplitude = 0.0;
    double norm = 0.0;     // || eps g ||_space
    double delta_E = 0.0;  // |E(f + eps g) - E(f)|
};

struct ProbeResult {
    std::vector<ProbeRow> rows;
    bool monotone = false;
    double fitted_C = 0.0;  // max |dE| / (n^2 (1 + |log n|))
};

ProbeResult continuity_probe(const Field& f, const Field& direction, const std::vector<double>& amplitudes,
                             ProbeSpace space, double p = 2.0);

struct OmegaSplit {
    double lambda_f = 0.0;  // 1.01 ||f||_{M^Phi}
    double omega1 = 0.0;    // |V| <= lambda_f e^{-2/3}
    double omega2 = 0.0;    // lambda_f e^{-2/3} < |V| < lambda_f
    double omega3 = 0.0;    // |V| >= lambda_f
    double total = 0.0;     // -sum |V|^2 log |V|^2 over the whole grid
};

OmegaSplit omega_decomposition(const Field& f, const Field& window);

struct WindowComparison {
    double C = 0.0;  // max E_phi(f) / (E_psi(f) + ||f||^2)
    int samples = 0;
    std::uint64_t seed = 0;
};

// random normalized band-limited signals with the given windows
WindowComparison window_comparison_constant(const Field& phi, const Field& psi, int samples, std::uint64_t seed,
                                            double band = 3.0);

}  // namespace otf
