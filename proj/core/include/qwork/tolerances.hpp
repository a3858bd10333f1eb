#pragma once

namespace qwork::tol {

inline constexpr double hermitian = 1e-10;
inline constexpr double unitary = 1e-10;
inline constexpr double reconstruction = 1e-10;
inline constexpr double norm = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-10;
// Degenerate eigenvalues are merged when their gap is below this fraction of
// the spectral range.
inline constexpr double degeneracy_relative = 1e-8;
inline constexpr double entropy = 1e-9;
inline constexpr double edge = 1e-12;
// Split-operator steps are rejected once the norm has drifted this far.
inline constexpr double norm_drift = 1e-6;

}  // namespace qwork::tol
