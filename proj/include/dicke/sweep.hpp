// sweep.hpp — Parameter sweeps behind the CLI: bias sweeps of the excitation
// spectrum, coupling sweeps of the phase-diagram quantities, and the smaller
// table emitters.  Grid points are independent pure computations; they may be
// evaluated on worker threads but rows are always assembled in grid order.

#pragma once

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "dicke/ensemble.hpp"
#include "dicke/model.hpp"
#include "dicke/table.hpp"

namespace dicke {

struct Range {
    double start{0.0};
    double stop{0.0};
    int steps{2};  // >= 2, inclusive endpoints

    std::vector<double> values() const;
};

// Parses "start:stop:steps"; enforces steps >= 2 and start < stop.
Range parse_range(const std::string& text);

// Worker-count resolution: the DICKE_THREADS environment variable when set
// (clamped to >= 1), otherwise the hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n) on worker threads; callers store results by
// index, so output order is independent of scheduling.
template <typename F>
void parallel_for_indexed(int n, F&& fn) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&next, n, &fn] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// One row per (epsilon, branch): columns epsilon, branch, nu_minus, nu_plus,
// x_scaled, theta, energy_per_qubit, stable.  Ground rows always present,
// metastable rows only inside the bistable window.
Table sweep_epsilon(const ModelParams& fixed, const Range& epsilon_range);

// One row per coupling: columns coupling, g_over_gc, slope_minus, slope_plus,
// eps_max, max_sep, nu_minus_sym, nu_plus_sym.  Superradiant-only columns are
// empty below the critical coupling; the slope columns are also empty at the
// exact critical point, where the slope diverges.
Table sweep_coupling(double delta, const Range& coupling_range);

// One row per coupling: phase verdict at epsilon = 0 and the bistability
// boundary (the phase diagram in the coupling-bias plane).
Table phase_diagram(double delta, const Range& coupling_range);

// nu_-, nu_+ at the symmetry point versus coupling.
Table symmetry_tables(double delta, const Range& coupling_range);

// One row per (tilt, critical point) of V(x) = tilt x + eta x^2 + x^4.
Table quartic_demo(double eta, const Range& tilt_range);

// Fixed points and observability summary for an inhomogeneous ensemble.
Table ensemble_report(const EnsembleSpec& spec);

// Decay-rate estimate rows; one row per coupling value.
Table decay_table(const ModelParams& fixed, const std::vector<double>& couplings);

}  // namespace dicke
