#pragma once

#include "orlicz_tf/field.hpp"

#include <string>

namespace otf {

// A = t I; t = 0 Kohn-Nirenberg, 1/2 Weyl, 1 anti-standard, other t by interpolation
struct Quantization {
    enum class Tag { zero, half_identity, t_identity };
    double t = 0.0;

    static Quantization kohn_nirenberg() { return {0.0}; }
    static Quantization weyl() { return {0.5}; }
    static Quantization scalar(double t) { return {t}; }
    Tag tag() const;
    std::string name() const;
};

// V_phi f(x, xi) = (2 pi)^{-d/2} sum_y f(y) conj(phi(y - x)) e^{-i<y,xi>} dy, periodic window shifts
Field stft(const Field& f, const Field& window);
// f(y) = (2 pi)^{-d/2} sum F(x, xi) phi(y - x) e^{i<y,xi>} dx dxi
Field stft_adjoint(const Field& F, const Field& window);
// ||phi||^{-2} V_phi V_phi^*
Field stft_projection(const Field& F, const Field& window);

// (F *_V G)(x, xi) = (2 pi)^{-1/2} sum F(x-y, xi-eta) G(y, eta) e^{-i y (xi-eta)} dy deta; d = 1, O(N^4)
Field twisted_convolution(const Field& F, const Field& G);

// W^A_{f1,f2}(x, xi) = F_y( f1(x + t y) conj(f2(x + (t-1) y)) )(xi); d = 1
Field wigner(const Field& f1, const Field& f2, const Quantization& A);

// symbol transfer a_1 -> a_2 with Op_{A1}(a_1) = Op_{A2}(a_2); d = 1
Field quantization_change(const Field& a, const Quantization& A1, const Quantization& A2);

}  // namespace otf
