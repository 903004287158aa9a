#pragma once

// Complex error-function family used by the Gaussian line shapes.
//
// The workhorse is the Faddeeva function w(z) = exp(-z^2) erfc(-iz),
// evaluated with a correction-term midpoint rule (Chiarella-Reichel /
// Hunter-Regan construction). erf and erfi are derived from it through
// the standard identities
//     erfc(z)  = exp(-z^2) w(iz)            (Re z >= 0)
//     erfi(z)  = i (1 - exp(z^2) w(z))
// which avoid the catastrophic e^{z^2} cancellation of the textbook
// erfi series for large arguments.

#include <complex>
#include <stdexcept>

namespace qmem {

using complex = std::complex<double>;

// Argument magnitude beyond which exp(Re z^2) overflows a double and the
// erfi/erf reductions are declared out of range.
inline constexpr double kErfiOverflowExponent = 700.0;

struct RangeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Faddeeva function w(z), relative accuracy ~1e-13 over the tested range
// |z| <= 12 (both half-planes; the lower half-plane uses the reflection
// w(z) = 2 exp(-z^2) - w(-z) and can overflow for large |Im z|).
complex faddeeva_w(complex z);

// Error function for complex argument.
complex erf_complex(complex z);

// Imaginary error function erfi(z) = -i erf(iz).
// Accuracy ~1e-13 relative for |z| <= 10 away from the (complex) zeros of
// erfi; throws RangeError once exp(Re z^2) would overflow.
complex erfi_complex(complex z);

}  // namespace qmem
