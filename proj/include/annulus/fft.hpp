#pragma once

#include <vector>

#include "annulus/types.hpp"

namespace annulus {

// In-place radix-2 FFT, length must be a power of two.
// Forward transform is unnormalized: X_k = sum_j x_j exp(-2*pi*i*j*k/n).
void fft(std::vector<Cx>& x);
void ifft(std::vector<Cx>& x);  // includes the 1/n factor

// Fourier coefficients of samples taken at theta_j = 2*pi*j/n:
// c_k = (1/n) sum_j x_j exp(-i*k*theta_j), returned in FFT order
// (index k for k in [0, n/2], index n+k for k in [-n/2+1, -1]).
std::vector<Cx> fourier_coeffs(const std::vector<Cx>& samples);
std::vector<Cx> fourier_synthesis(const std::vector<Cx>& coeffs);

// Harmonic conjugation on the circle for real sample vectors.
// interior: multiplies coefficient k by -i*sgn(k)  (conjugate of the
//           harmonic extension into the unit disk, zero at the origin);
// exterior: multiplies by +i*sgn(k) (extension into |z|>1, zero at inf).
// The Nyquist bin is zeroed. Mean is dropped from the output.
std::vector<double> conjugate_interior(const std::vector<double>& u);
std::vector<double> conjugate_exterior(const std::vector<double>& u);

}  // namespace annulus
