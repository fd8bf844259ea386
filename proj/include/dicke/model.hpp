// model.hpp — Mean-field stationary states of the biased Dicke model.
//
// Internal units: hbar = omega = 1 (oscillator frequency fixed to 1); all
// energies and frequencies are in units of hbar*omega.  The classical
// analysis uses the scaled variables X = x/sqrt(N) and G = sqrt(N)*g, which
// make the mean-field problem independent of the qubit number N.

#pragma once

#include <optional>
#include <vector>

namespace dicke {

struct ModelParams {
    double delta{1.0};               // qubit gap (> 0)
    double epsilon{0.0};             // qubit bias
    double coupling{0.0};            // collective coupling G = sqrt(N) g (>= 0)
    std::optional<int> n_qubits{};   // needed only by the ED oracle and decay estimate
};

// Throws std::invalid_argument on non-finite or out-of-range fields.
void validate(const ModelParams& params);

enum class Stability {
    StableMinimum,
    UnstableMaximum,
    Degenerate,
};

struct StationaryPoint {
    double x_scaled{0.0};           // X = x/sqrt(N), bounded by |X| <= G
    double theta{0.0};              // spin rotation angle, in (-pi/2, pi/2) for delta > 0
    double energy_per_qubit{0.0};   // E/N
    Stability stability{Stability::StableMinimum};
};

struct BranchSet {
    StationaryPoint ground;
    std::optional<StationaryPoint> metastable;
    std::optional<StationaryPoint> unstable;
};

// Classical energy per qubit, spin direction minimized out:
//   E/N = X^2 - (1/2) sqrt(delta^2 + (epsilon + 4 G X)^2)
double effective_energy(double x_scaled, const ModelParams& params);

// dE/dX and d2E/dX2 of the above (closed form).
double effective_energy_d1(double x_scaled, const ModelParams& params);
double effective_energy_d2(double x_scaled, const ModelParams& params);

// All real solutions of X = G (epsilon + 4GX) / sqrt(delta^2 + (epsilon+4GX)^2),
// ascending in X.  Count is 1 or 3; exactly at a saddle-node a tangent double
// root is returned once, flagged Degenerate.
std::vector<StationaryPoint> stationary_points(const ModelParams& params);

// Sign classification of d2E/dX2 at a stationary point.  Throws
// std::invalid_argument if |dE/dX| exceeds 1e-8 (not a stationary point).
Stability classify_stability(double x_scaled, const ModelParams& params);

// Partition of stationary_points into ground / metastable / unstable.
// Ground is the stable point of lowest energy; at the exact epsilon = 0
// energy tie in the superradiant phase, X > 0 is labeled ground.
BranchSet branch_states(const ModelParams& params);

}  // namespace dicke
