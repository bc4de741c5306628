#pragma once

#include <complex>
#include <vector>

namespace hermite {

/// In-place complex FFT (FFTW backend, ESTIMATE plans only so results do not
/// depend on timing). Thread-safe: plan creation is serialized internally.
void fft_forward(std::vector<std::complex<double>>& data);
void fft_inverse(std::vector<std::complex<double>>& data);  // unscaled

/// Linear convolution of two real vectors, zero-padded to a power of two.
std::vector<double> fft_convolve(const std::vector<double>& a, const std::vector<double>& b);

std::size_t next_pow2(std::size_t n);

}  // namespace hermite
