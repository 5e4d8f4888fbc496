#pragma once

#include <cmath>

namespace qtrace::tol {

// Crossover to the classical exp/log branch. The power-form formulas lose
// roughly eight digits to cancellation inside this window.
inline constexpr double q_one = 1e-8;

// Strict-interior margin for the exp_q spectral domain.
inline constexpr double domain_margin = 1e-9;

// Smallest admissible eigenvalue of a positive definite matrix. Inputs
// below the floor are rejected, never clamped.
inline constexpr double pd_floor = 1e-10;

// Divided-difference threshold of the Daleckii-Krein formula; below it the
// derivative at the midpoint is used instead.
inline constexpr double divided_difference = 1e-7;

// Hermiticity check: |M - M*|_max <= max(hermiticity_rel * max|entry|,
// hermiticity_floor).
inline constexpr double hermiticity_rel = 1e-12;
inline constexpr double hermiticity_floor = 1e-14;

// Allowed violation of an inequality direction.
inline constexpr double dir_slack = 1e-9;

// Relative agreement required between the numeric optimizer and a
// closed-form optimum.
inline constexpr double opt_rel = 1e-4;

// Total imaginary drift allowed when taking the real trace of a product of
// Hermitian matrices.
inline constexpr double trace_imag_drift = 1e-10;

// Scale factor of the equality-at-optimizer tolerance.
inline constexpr double eq_scale = 1e-10;

// Equality tolerance grows with dimension and magnitude: trace sums
// accumulate roundoff linearly in n.
inline double eq_tol(int n, double value, double scale = eq_scale) {
    return scale * n * (1.0 + std::abs(value));
}

// Unitarity / reconstruction tolerance of a spectral decomposition.
inline constexpr double spectral_roundtrip = 1e-10;

// Tolerance on |p - 1| below which the Tsallis entropy switches to the
// Umegaki form.
inline constexpr double p_one = 1e-8;

}  // namespace qtrace::tol
