#pragma once

#include <string>

#include "chlab/field.hpp"
#include "chlab/grid.hpp"

namespace chlab {

/// Fourier multiplier tabulated on the frequency lattice in FFT order.
struct MultiplierSymbol {
  Spectrum values;
  std::string name;
};

namespace symbols {
MultiplierSymbol differentiation(const Grid& grid);             // i*xi
MultiplierSymbol helmholtz_inverse(const Grid& grid);           // 1/(1+xi^2)
MultiplierSymbol transport_smoothing(const Grid& grid);         // -i*xi/(1+xi^2), i.e. -dx o (1-dxx)^{-1}
MultiplierSymbol neg_laplacian(const Grid& grid);               // -xi^2
}  // namespace symbols

/// Unnormalized forward transform: c_k = sum_j f(x_j) e^{-i xi_k x_j}.
Spectrum to_spectrum(const Field& f);

/// Inverse of to_spectrum (1/N normalization).  Rejects spectra that are not
/// Hermitian-symmetric; the Nyquist mode is forced real.
Field from_spectrum(const Spectrum& c, const Grid& grid);

/// Same inverse, but skips the Hermitian gate.  For spectra that are
/// Hermitian by construction (real even symbols applied to the transform of
/// a real field), where the gate would trip on transform noise in blocks
/// whose own scale is far below the parent spectrum's.
Field from_spectrum_trusted(const Spectrum& c, const Grid& grid);

Field derivative(const Field& f);

Field apply_multiplier(const Field& f, const MultiplierSymbol& m);

/// L^p norm by the rectangle rule (p = infinity -> max over samples).
double lp_norm(const Field& f, double p);

/// ||f||_{L^2}^2 computed from the spectrum (Parseval).
double l2_norm_sq_spectrum(const Spectrum& c, const Grid& grid);

bool is_hermitian(const Spectrum& c, double tol_rel);

/// Zero all modes with |k| > keep_index, in place.
void truncate_spectrum(Spectrum& c, const Grid& grid, std::int64_t keep_index);

}  // namespace chlab
