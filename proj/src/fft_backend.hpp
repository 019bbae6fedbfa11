#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace chlab::fft {

/// Unnormalized DFT, FFTW under the hood.  Plans use FFTW_ESTIMATE so plan
/// selection (and therefore roundoff) is reproducible across runs.
void forward(const std::vector<std::complex<double>>& in,
             std::vector<std::complex<double>>& out);
void backward(const std::vector<std::complex<double>>& in,
              std::vector<std::complex<double>>& out);

}  // namespace chlab::fft
