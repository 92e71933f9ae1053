#pragma once

#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace otf {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Young functions Phi:[0,inf] -> [0,inf] and quasi-Young functions Phi0(t^p0).
class YoungFunction {
public:
    enum class Kind {
        power,
        power_scaled,
        cap,
        entropy,
        entropy_printed,
        tan_example,
        log_example,
        table,
        conjugate
    };

    struct Knot {
        double t;
        double value;
    };

    static YoungFunction power(double p, double scale = 1.0);
    static YoungFunction power_scaled(double p);
    static YoungFunction cap(double a);
    // -t^2 log t near 0 with a convex C^1 linear continuation past e^{-3/2}
    static YoungFunction entropy();
    // the literal splice at e^{-2/3}; not convex, kept for reference
    static YoungFunction entropy_printed();
    static YoungFunction tan_example();
    static YoungFunction log_example();
    // knots must start at t=0 with value 0 and be convex; throws otherwise
    static YoungFunction table(std::vector<Knot> knots, double tail_slope);

    YoungFunction with_quasi_order(double p0) const;

    Kind kind() const { return kind_; }
    double p() const { return p_; }
    double scale() const { return scale_; }
    double quasi_order() const { return quasi_order_; }
    const std::vector<Knot>& knots() const { return knots_; }
    double tail_slope() const { return tail_slope_; }
    const YoungFunction* base() const { return base_.get(); }

    double operator()(double t) const { return evaluate(t); }
    double evaluate(double t) const;

    // exact-power kinds admit closed-form Luxemburg norms
    bool is_power() const;

    std::string name() const;

private:
    YoungFunction() = default;
    double evaluate_base(double t) const;

    Kind kind_ = Kind::power;
    double p_ = 1.0;
    double scale_ = 1.0;
    double quasi_order_ = 1.0;
    std::vector<Knot> knots_;
    double tail_slope_ = 0.0;
    std::shared_ptr<const YoungFunction> base_;

    friend YoungFunction conjugate(const YoungFunction&);
};

struct Landmarks {
    double t1 = 0.0;
    double t2 = kInf;
    double s0 = kInf;
};

// Phi* via closed forms (power, cap, conjugates of conjugates) or numeric Legendre transform.
// Throws std::invalid_argument for quasi_order < 1.
YoungFunction conjugate(const YoungFunction& phi);

// sup_{s>=0} (s t - Phi(s)) by golden-section search on the concave objective
double legendre(const YoungFunction& phi, double t);

Landmarks landmarks(const YoungFunction& phi);
double essential_inverse(const YoungFunction& phi, double s);

// lim Phi(t)/t as t -> inf and the right derivative at 0
double asymptotic_slope(const YoungFunction& phi);
double slope_at_zero(const YoungFunction& phi);

struct Delta2Result {
    bool holds = false;
    double C = kInf;
    bool analytic = false;
};

// radius <= 0 means the global condition
Delta2Result check_delta2(const YoungFunction& phi, double radius = 0.0);

enum class SteeredBranch { none, limsup_infinite, young_after_power };

struct SteeredResult {
    bool steered = false;
    SteeredBranch branch = SteeredBranch::none;
};

SteeredResult check_p_steered(const YoungFunction& phi, double p);

// midpoint convexity on a sample grid of finite values; lo/hi bound the grid
bool is_midpoint_convex(const YoungFunction& phi, double lo = 1e-8, double hi = 1e3, int n = 400);

const char* to_string(YoungFunction::Kind k);
const char* to_string(SteeredBranch b);

}  // namespace otf
