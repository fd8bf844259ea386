// ensemble.hpp — Mean-field fixed points for inhomogeneous qubit ensembles
// and the avoided-crossing observability criterion under bias disorder.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

struct QubitParams {
    double delta{1.0};    // per-qubit gap (> 0)
    double epsilon{0.0};  // per-qubit bias
    double g{0.0};        // single-qubit coupling (unscaled)
};

// Per-qubit parameter lists; the summary statistics are always recomputed
// from the list.
struct EnsembleSpec {
    std::vector<QubitParams> qubits;

    double delta_bar() const;       // mean gap
    double epsilon_bar() const;     // mean bias
    double epsilon_spread() const;  // population standard deviation of the biases
    double g_bar() const;           // mean coupling
};

// Throws std::invalid_argument on an empty list or non-positive gaps.
void validate(const EnsembleSpec& spec);

struct EnsembleFixedPoint {
    double x{0.0};  // resonator displacement (unscaled)
    Stability stability{Stability::StableMinimum};
};

// All real solutions of
//   x = sum_i g_i (eps_i + 4 g_i x) / sqrt(delta_i^2 + (eps_i + 4 g_i x)^2),
// each qubit contributing its ground-state spin projection at the local
// effective bias.  Stability from the curvature of the summed energy.
std::vector<EnsembleFixedPoint> ensemble_fixed_points(const EnsembleSpec& spec);

// g_eff = sqrt(N) g_bar * delta_bar / sqrt(delta_bar^2 + epsilon_bar^2).
double effective_coupling(const EnsembleSpec& spec);

enum class Resolvability { Resolvable, Unresolvable, Marginal };

struct CrossingObservability {
    double ratio{0.0};  // g_eff / epsilon_spread; +inf for zero spread
    Resolvability verdict{Resolvability::Marginal};
};

// Resolvable when the ratio exceeds 10, Unresolvable below 0.1, Marginal
// in between (the factor-of-10 reading of "much greater").
CrossingObservability avoided_crossing_observable(const EnsembleSpec& spec);

// Reads an ensemble from CSV with the exact header "delta,epsilon,g", one
// row per qubit.  Throws std::runtime_error on malformed input.
EnsembleSpec load_ensemble_csv(std::istream& in);
EnsembleSpec load_ensemble_csv(const std::string& path);

const char* to_string(Resolvability verdict);

}  // namespace dicke
