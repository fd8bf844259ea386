// normal_modes.hpp — Quadratic expansion around a stable mean-field point and
// the two excitation frequencies nu_-, nu_+ of the resulting pair of
// bilinearly coupled oscillators, with an independent symplectic oracle.

#pragma once

#include <optional>

#include "dicke/model.hpp"

namespace dicke {

// Coefficients of H = gamma (y^2 + p_y^2) + omega (x^2 + p_x^2) + c_xy x y,
// expanded around a stationary point.  omega is identically 1 in internal
// units; gamma = delta cos(theta) + (epsilon + 4 G X0) sin(theta); the cross
// coupling is c_xy = 4 G cos(theta).
struct TwoModeQuadraticForm {
    double gamma{0.0};
    double omega{1.0};
    double coupling_xy{0.0};
    StationaryPoint origin;
    bool degenerate_origin{false};  // expansion around a flat-curvature point
};

// nu_minus <= nu_plus.  If the low mode squares to a genuinely negative value
// (expansion around a non-minimum), imaginary_mode is set and nu_minus holds
// the magnitude |Im nu| of the unstable rate instead of a frequency.
struct ModeFrequencies {
    double nu_minus{0.0};
    double nu_plus{0.0};
    bool imaginary_mode{false};
};

struct BranchSpectrum {
    double epsilon{0.0};
    ModeFrequencies ground_modes;
    std::optional<ModeFrequencies> metastable_modes;
};

// Builds the quadratic form around a stable (or degenerate, flagged) point.
// Throws std::invalid_argument for an UnstableMaximum origin or when the
// linear terms of the expansion fail to vanish (not a stationary point).
TwoModeQuadraticForm quadratic_form(const StationaryPoint& point, const ModelParams& params);

// Closed-form mode frequencies:
//   nu_pm^2 = (gamma^2 + omega^2 +/- sqrt((gamma^2-omega^2)^2 + c_xy^2 gamma omega)) / 2.
// Tiny negative nu_-^2 in [-1e-12, 0] is clamped to 0; below that the
// imaginary flag is raised.
ModeFrequencies mode_frequencies(const TwoModeQuadraticForm& form);

// Independent oracle: eigenfrequencies of the 4x4 linear equations-of-motion
// matrix of the same quadratic form.  Flags dynamical instability when
// eigenvalues acquire real parts beyond 1e-10.
ModeFrequencies symplectic_frequencies(const TwoModeQuadraticForm& form);

// branch_states -> quadratic_form -> mode_frequencies for the ground and
// (when present) metastable branches.
BranchSpectrum branch_spectrum(const ModelParams& params);

}  // namespace dicke
