#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace otf {

class Weight {
public:
    enum class Kind { constant_one, polynomial, exponential, product, slots, custom };
    using Callable = std::function<double(std::span<const double>)>;

    static Weight constant_one(int dim);
    // <x>^s = (1+|x|^2)^{s/2}
    static Weight polynomial(double s, int dim);
    // e^{r|x|}
    static Weight exponential(double r, int dim);
    static Weight product(std::vector<Weight> factors);
    // evaluates `inner` on the coordinates listed in `axes` of a dim-dimensional point
    static Weight slots(Weight inner, std::vector<int> axes, int dim);
    // growth_r tags the exponential bound e^{-r|x|} <~ w <~ e^{r|x|}
    static Weight custom(std::string name, int dim, Callable fn, double growth_r);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double s() const { return param_; }
    double r() const { return param_; }
    const std::vector<Weight>& factors() const { return factors_; }
    const std::vector<int>& axes() const { return axes_; }
    const std::string& label() const { return label_; }

    double operator()(std::span<const double> x) const;
    bool is_constant() const;
    double growth_r() const;
    std::string name() const;

private:
    Weight() = default;
    Kind kind_ = Kind::constant_one;
    int dim_ = 1;
    double param_ = 0.0;
    std::vector<Weight> factors_;
    std::vector<int> axes_;
    std::string label_;
    std::shared_ptr<const Callable> fn_;
    double growth_r_ = 0.0;
};

// centered grid of `points` per axis on [-extent, extent]^n
struct VerifyGrid {
    double extent = 8.0;
    int points = 33;
};

struct WeightCheck {
    bool holds = false;
    double C = 0.0;          // sup on the requested grid
    double C_refined = 0.0;  // sup on the grid with doubled extent (numeric path)
    bool analytic = false;
    VerifyGrid grid;
};

// sup of w(x+y) / (w(x) v(y))
WeightCheck check_moderate(const Weight& w, const Weight& v, const VerifyGrid& grid = {});

// sup of w2(x,xi) / (w1(y,eta) w0(x - A(x-y), A^T xi + (I-A^T) eta, xi - eta, y - x)); A is d x d row-major
WeightCheck check_pseudo_weight_condition(const Weight& w0, const Weight& w1, const Weight& w2,
                                          const std::vector<double>& A, const VerifyGrid& grid = {});

// sup of w(x,xi,eta,y) / (w1(x - Ay, xi + (I-A^T) eta) w2(x + (I-A)y, xi - A^T eta))
WeightCheck check_wigner_weight_condition(const Weight& w, const Weight& w1, const Weight& w2,
                                          const std::vector<double>& A, const VerifyGrid& grid = {});

// max over the grid of max(w e^{-r|x|}, w^{-1} e^{-r|x|}) with r = growth_r()
double weight_bound_constant(const Weight& w, const VerifyGrid& grid = {});

}  // namespace otf
