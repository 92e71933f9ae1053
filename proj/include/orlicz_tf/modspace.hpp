#pragma once

#include "orlicz_tf/field.hpp"
#include "orlicz_tf/orlicz.hpp"
#include "orlicz_tf/probe.hpp"

#include <optional>
#include <string>
#include <vector>

namespace otf {

enum class Flavor {
    M,     // Phi over x first, then Psi over xi
    W,     // Psi over xi first, then Phi over x
    flat   // a single Luxemburg norm with Phi over all of phase space
};

struct ModulationSpaceSpec {
    YoungFunction phi = YoungFunction::power(2);
    YoungFunction psi = YoungFunction::power(2);
    std::optional<Weight> weight;  // on R^{2d}
    Flavor flavor = Flavor::M;
    std::optional<Field> window;   // default: gaussian(1) on the signal grid

    static ModulationSpaceSpec M(YoungFunction phi, YoungFunction psi);
    static ModulationSpaceSpec W(YoungFunction phi, YoungFunction psi);
    static ModulationSpaceSpec flat(YoungFunction phi);
};

const char* to_string(Flavor f);

Field default_window(const Grid& g);
MixedNormSpec mixed_spec(const ModulationSpaceSpec& spec, int d);

double modulation_norm(const Field& f, const ModulationSpaceSpec& spec);
// the mixed norm of an already computed STFT on the phase grid of a d-dimensional signal
double phase_space_norm(const Field& V, const ModulationSpaceSpec& spec);

struct EmbeddingResult {
    bool embeds = false;
    GrowthReport phi;  // sup of Phi2/Phi1 near 0
    GrowthReport psi;  // sup of Psi2/Psi1 near 0
};

// M^{Phi1,Psi1} subset of M^{Phi2,Psi2} iff Phi2 <~ Phi1 and Psi2 <~ Psi1 on (0, t0]
EmbeddingResult check_embedding(const YoungFunction& phi1, const YoungFunction& psi1, const YoungFunction& phi2,
                                const YoungFunction& psi2, double t0);

struct ConditionResult {
    std::string name;
    bool pass = false;
    double constant = 0.0;
    std::string detail;
};

struct HypothesisReport {
    bool pass = false;
    std::vector<ConditionResult> conditions;
};

// 1/(1 - 1/p) with 1' = inf and inf' = 1
double conjugate_exponent(double p);

// continuity hypotheses for Op_A(a): M^{Phi1,Psi1} -> M^{Phi2*,Psi2*} with a in M^{p,q}
HypothesisReport check_pseudo_hypotheses(double p, double q, const YoungFunction& phi1, const YoungFunction& psi1,
                                         const YoungFunction& phi2, const YoungFunction& psi2, double r = 0.5);
// continuity hypotheses for (f1, f2) -> W^A_{f1,f2} into M^{p,q}
HypothesisReport check_wigner_hypotheses(double p, double q, const YoungFunction& phi1, const YoungFunction& psi1,
                                         const YoungFunction& phi2, const YoungFunction& psi2, double r = 0.5);
// power functions t^{p_j}, t^{q_j} fed through check_pseudo_hypotheses
HypothesisReport check_power_pseudo_hypotheses(double p, double q, double p1, double q1, double p2, double q2);

struct FactorizationResult {
    double lhs = 0.0;  // ||V_{f1} f2||_{M^{Phi,Psi}(R^{2d})}
    double rhs = 0.0;  // ||f1||_{M^{Phi,Psi}} ||f2||_{W^{Psi,Phi}}
    double ratio = 0.0;
};

// d = 1 inputs on a grid with N <= 48 (the left side is a four-dimensional object)
FactorizationResult stft_norm_factorization_check(const Field& f1, const Field& f2, const YoungFunction& phi,
                                                  const YoungFunction& psi);

}  // namespace otf
