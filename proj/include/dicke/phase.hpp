// phase.hpp — Derived phase-diagram quantities: critical coupling, bistability
// boundary, symmetry-point slopes and frequencies, maximum line separation,
// the metastable decay-rate estimate, and the quartic double-well toy model.

#pragma once

#include <vector>

#include "dicke/model.hpp"
#include "dicke/normal_modes.hpp"

namespace dicke {

enum class Phase { Normal, Superradiant };

struct PhaseVerdict {
    Phase phase{Phase::Normal};
    int n_stable{1};  // superradiant iff 2
};

// G_c = sqrt(delta * omega) / 2 with omega = 1.
double critical_coupling(double delta);

PhaseVerdict phase_at(const ModelParams& params);

// Largest |epsilon| with a metastable excited state, located by bisection on
// the stationary-point count to |d epsilon| < 1e-10.  Returns 0 when the
// coupling does not exceed the critical value.
double bistability_epsilon_max(double delta, double coupling);

struct SymmetrySlopes {
    double d_nu_minus{0.0};  // d nu_- / d epsilon at epsilon -> 0+, ground branch
    double d_nu_plus{0.0};
    bool converged{true};    // Richardson extrapolation consistency
};

// One-sided finite-difference slopes of the ground-branch frequencies at the
// symmetry point (the branch that extends to epsilon -> infinity), base step
// 1e-6 with two Richardson levels.  (0, 0) in the normal phase; undefined at
// exactly the critical coupling (throws std::domain_error).
SymmetrySlopes slope_at_symmetry(double delta, double coupling);

// nu_+(ground) - nu_+(metastable) evaluated at epsilon = eps_max - 1e-8, just
// inside the bistable window.  Negative values signal the W-shaped spectrum of
// the small-gap regime.  Throws std::domain_error in the normal phase.
double max_line_separation(double delta, double coupling);

// nu_-, nu_+ at epsilon = 0 on the appropriate branch.
ModeFrequencies symmetry_point_frequencies(double delta, double coupling);

// log10 of the metastable decay-rate estimate in units of delta,
//   log10(rate/delta) = N log10(omega delta / (N G^2)) - 2 G^2 / (omega ln 10),
// evaluated entirely in the log domain.  An order-of-magnitude estimate only.
// Requires n_qubits and coupling above the critical value.
double metastable_decay_estimate(const ModelParams& params);

// ---- quartic double-well toy: V(x) = tilt*x + eta*x^2 + x^4 -----------------

struct QuarticCriticalPoint {
    double x{0.0};
    double curvature{0.0};  // V''(x) = 12 x^2 + 2 eta
};

struct QuarticWell {
    double eta{0.0};
    double tilt{0.0};
    std::vector<QuarticCriticalPoint> minima;
    std::vector<QuarticCriticalPoint> maxima;
    std::vector<QuarticCriticalPoint> degenerate;  // saddle-node inflections
};

// Critical points of V via the closed-form cubic V'(x) = 4x^3 + 2 eta x + tilt.
QuarticWell quartic_stationary_points(double eta, double tilt);

// Positive tilt at which V' acquires a double root (the metastable minimum
// vanishes): (-4 eta / 3) sqrt(-eta / 6) for eta < 0, else 0.
double quartic_saddle_node_tilt(double eta);

}  // namespace dicke
