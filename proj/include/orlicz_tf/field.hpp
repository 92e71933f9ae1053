#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace otf {

using cplx = std::complex<double>;

enum class AxisRole { space, frequency };

// Centered uniform axis: N (even) points x_k = -L + k*(2L/N).
struct Axis {
    double L = 12.0;
    int N = 256;
    AxisRole role = AxisRole::space;

    double spacing() const { return 2.0 * L / N; }
    double point(int k) const { return -L + k * spacing(); }
    // dual axis: half-extent pi N / (2L), spacing pi / L
    Axis dual() const;
    bool same_as(const Axis& o) const;
};

class Grid {
public:
    Grid() = default;
    explicit Grid(std::vector<Axis> axes);
    static Grid uniform(int d, double L, int N);
    // L = sqrt(pi N / 2): the dual axis coincides with the axis itself
    static Grid symmetric(int d, int N);

    int rank() const { return int(axes_.size()); }
    const Axis& axis(int i) const { return axes_[i]; }
    const std::vector<Axis>& axes() const { return axes_; }
    std::size_t size() const;
    double cell() const;  // product of spacings (quadrature weight)
    std::vector<std::size_t> strides() const;
    std::vector<double> coords(std::size_t flat) const;

    Grid dual() const;
    Grid with_dual_axes(const std::vector<int>& which) const;
    Grid concat(const Grid& other) const;
    Grid sub(const std::vector<int>& which) const;
    bool same_as(const Grid& o) const;
    std::string describe() const;

private:
    std::vector<Axis> axes_;
};

// x-axes followed by their dual axes
Grid phase_grid(const Grid& g);

class Field {
public:
    Field() = default;
    explicit Field(Grid g);
    Field(Grid g, std::vector<cplx> values);

    const Grid& grid() const { return grid_; }
    std::vector<cplx>& values() { return v_; }
    const std::vector<cplx>& values() const { return v_; }
    std::size_t size() const { return v_.size(); }
    cplx& operator[](std::size_t i) { return v_[i]; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }
    double cell() const { return grid_.cell(); }

    Field& operator*=(cplx c);
    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);

private:
    Grid grid_;
    std::vector<cplx> v_;
};

Field operator*(cplx c, Field f);
Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);

void require_same_grid(const Grid& a, const Grid& b, const char* what);

// ---------------------------------------------------------------- generators

// pi^{-d/4} lambda^{d/4} e^{-lambda|x-x0|^2/2} e^{i<x,xi0>}; warning set when the tails are not negligible
Field make_gaussian(const Grid& g, double lambda, const std::vector<double>& x0 = {},
                    const std::vector<double>& xi0 = {}, std::string* warning = nullptr);
// Hermite function h_n (d = 1), or the tensor product h_n(x_1)...h_n(x_d)
Field make_hermite(const Grid& g, int n);
// inverse transform of a random spectrum supported on |xi| <= band
Field make_random_bandlimited(const Grid& g, std::uint64_t seed, double band);
// sum of `count` random Gaussian packets with centers in [-spread, spread]; grid independent
Field make_random_packets(const Grid& g, std::uint64_t seed, int count = 4, double spread = 3.0);
// random complex step function on `pieces` cells of [-L/2, L/2] (d = 1)
Field make_random_steps(const Grid& g, std::uint64_t seed, int pieces = 8);

// ---------------------------------------------------------------- transforms

// (2 pi)^{-d/2} sum f(x) e^{-i<x,xi>} dx on all axes; result lives on the dual grid
Field fourier_transform(const Field& f);
Field inverse_fourier_transform(const Field& f);
// sign = -1 forward, +1 inverse, on the listed axes only
Field fourier_axes(const Field& f, const std::vector<int>& axes, int sign);
// in-place centered transform of one contiguous line
void fourier_line(cplx* data, const Axis& ax, int sign);

// ---------------------------------------------------------------- quadrature

cplx inner_product(const Field& f, const Field& g);
double l2_norm(const Field& f);
double lp_norm(const Field& f, double p);
double max_abs(const Field& f);
double max_abs_diff(const Field& a, const Field& b);

// ---------------------------------------------------------------- interpolation

// samples at x_k and x_k + spacing/2 (length 2N, interleaved) by spectral half shift
std::vector<cplx> half_grid(const cplx* line, const Axis& ax);

// trigonometric interpolant of one periodic line
class TrigInterpolant {
public:
    TrigInterpolant(const cplx* line, const Axis& ax);
    cplx operator()(double z) const;

private:
    std::vector<cplx> spec_;
    Axis dual_;
    double scale_;
};

}  // namespace otf
