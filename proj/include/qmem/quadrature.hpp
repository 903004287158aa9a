#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature for complex-valued integrands
// of one real variable, over a finite interval or the whole real line.
// Infinite domains are mapped through x = t/(1-t^2), t in (-1,1).

#include <complex>
#include <functional>
#include <stdexcept>

namespace qmem {

using complex = std::complex<double>;

struct QuadratureResult {
    complex value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, QuadratureResult best_so_far)
        : std::runtime_error(what), best(best_so_far) {}
    QuadratureResult best;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool infinite = false;  // when set, lo/hi are ignored

    static Interval finite(double a, double b) { return {a, b, false}; }
    static Interval real_line() { return {0.0, 0.0, true}; }
};

inline constexpr double kQuadDefaultRelTol = 1e-9;
inline constexpr double kQuadDefaultAbsTol = 1e-12;
inline constexpr long kQuadDefaultBudget = 400000;  // integrand evaluations

QuadratureResult adaptive_quad(const std::function<complex(double)>& f,
                               Interval domain,
                               double rel_tol = kQuadDefaultRelTol,
                               double abs_tol = kQuadDefaultAbsTol,
                               long max_evaluations = kQuadDefaultBudget);

}  // namespace qmem
