#include "qmem/complex_math.hpp"

#include <array>
#include <cmath>

namespace qmem {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kH = 0.25;   // quadrature step of the Faddeeva rule
constexpr int kK = 27;        // nodes cover |t| <= 6.875, exp(-t^2) < 4e-21

// exp(-t_k^2) on the midpoint nodes t_k = (k+1/2)h, k = 0..kK-1 (symmetric).
const std::array<double, kK>& midpoint_weights() {
    static const std::array<double, kK> table = [] {
        std::array<double, kK> t{};
        for (int k = 0; k < kK; ++k) {
            const double tk = (k + 0.5) * kH;
            t[k] = std::exp(-tk * tk);
        }
        return t;
    }();
    return table;
}

// exp(-t_k^2) on the trapezoid nodes t_k = k h, k = 0..kK.
const std::array<double, kK + 1>& trapezoid_weights() {
    static const std::array<double, kK + 1> table = [] {
        std::array<double, kK + 1> t{};
        for (int k = 0; k <= kK; ++k) {
            const double tk = k * kH;
            t[k] = std::exp(-tk * tk);
        }
        return t;
    }();
    return table;
}

// Image-sum correction 2 exp(-z^2) / (1 \mp exp(-2 pi i z / h)).
// sign = -1 for the trapezoid rule, +1 for the midpoint rule.
complex pole_correction(complex z, double sign) {
    const complex q = complex(0.0, -2.0 * kPi / kH) * z;
    if (q.real() > 690.0) return {0.0, 0.0};  // correction underflows relative to w
    return 2.0 * std::exp(-z * z) / (1.0 + sign * std::exp(q));
}

// w(z) for Im z >= 0 by the corrected midpoint rule; falls back to the
// trapezoid variant when z sits near a midpoint node on the real axis
// (each rule has poles only at its own nodes, and the node sets interleave).
complex faddeeva_upper(complex z) {
    const double x = z.real();
    const double frac = std::abs(x / kH - std::floor(x / kH) - 0.5);
    const bool near_midpoint_node = z.imag() < kH && frac < 0.25;
    complex sum(0.0, 0.0);
    if (near_midpoint_node) {
        const auto& wts = trapezoid_weights();
        sum = wts[0] / z;
        for (int k = 1; k <= kK; ++k) {
            const double tk = k * kH;
            sum += wts[k] * (1.0 / (z - tk) + 1.0 / (z + tk));
        }
        return complex(0.0, kH / kPi) * sum + pole_correction(z, -1.0);
    }
    const auto& wts = midpoint_weights();
    for (int k = 0; k < kK; ++k) {
        const double tk = (k + 0.5) * kH;
        sum += wts[k] * (1.0 / (z - tk) + 1.0 / (z + tk));
    }
    return complex(0.0, kH / kPi) * sum + pole_correction(z, +1.0);
}

}  // namespace

complex faddeeva_w(complex z) {
    if (z.imag() >= 0.0) return faddeeva_upper(z);
    // w(z) = 2 exp(-z^2) - w(-z); exp(-z^2) grows as exp(y^2 - x^2) here.
    const double ex = z.imag() * z.imag() - z.real() * z.real();
    if (ex > kErfiOverflowExponent)
        throw RangeError("faddeeva_w: exp(-z^2) overflows in the lower half-plane");
    return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

namespace {

// Maclaurin series of erf, adequate to full precision for |z| <= ~1.
complex erf_series(complex z) {
    const complex z2 = z * z;
    complex term = z;
    complex sum = z;
    for (int n = 1; n < 40; ++n) {
        term *= -z2 / static_cast<double>(n);
        const complex add = term / static_cast<double>(2 * n + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum * (2.0 / std::sqrt(kPi));
}

}  // namespace

complex erf_complex(complex z) {
    if (std::abs(z) <= 1.0) return erf_series(z);
    const bool flip = z.real() < 0.0;
    const complex s = flip ? -z : z;
    if (-(s * s).real() > kErfiOverflowExponent)
        throw RangeError("erf_complex: argument outside admissible range");
    const complex val = 1.0 - std::exp(-s * s) * faddeeva_w(complex(-s.imag(), s.real()));
    return flip ? -val : val;
}

complex erfi_complex(complex z) {
    // Canonicalize to the first quadrant; erfi is odd and commutes with
    // conjugation, which also makes those symmetries exact by construction.
    const bool neg = z.real() < 0.0 || (z.real() == 0.0 && z.imag() < 0.0);
    complex s = neg ? -z : z;
    const bool conj = s.imag() < 0.0;
    if (conj) s = std::conj(s);

    complex val;
    if (std::abs(s) <= 0.9) {
        // erfi(z) = -i erf(iz); the series form keeps full precision near 0.
        val = complex(0.0, -1.0) * erf_series(complex(-s.imag(), s.real()));
    } else {
        if ((s * s).real() > kErfiOverflowExponent)
            throw RangeError("erfi_complex: exp(z^2) overflows");
        val = complex(0.0, 1.0) * (1.0 - std::exp(s * s) * faddeeva_w(s));
        if (s.imag() == 0.0) val = complex(val.real(), 0.0);  // erfi maps R to R
    }
    if (conj) val = std::conj(val);
    return neg ? -val : val;
}

}  // namespace qmem
