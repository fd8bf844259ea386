#include "dicke/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "dicke/normal_modes.hpp"
#include "dicke/phase.hpp"

namespace dicke {

std::vector<double> Range::values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i)
        out.push_back(start + (stop - start) * i / (steps - 1));
    return out;
}

Range parse_range(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("range must have the form start:stop:steps");
    Range range;
    try {
        std::size_t used = 0;
        range.start = std::stod(text.substr(0, first), &used);
        if (used != first) throw std::invalid_argument("");
        range.stop = std::stod(text.substr(first + 1, second - first - 1), &used);
        if (used != second - first - 1) throw std::invalid_argument("");
        range.steps = std::stoi(text.substr(second + 1), &used);
        if (second + 1 + used != text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range '" + text + "' (want start:stop:steps)");
    }
    if (range.steps < 2) throw std::invalid_argument("range needs at least 2 steps");
    if (!(range.start < range.stop))
        throw std::invalid_argument("range start must be below stop");
    return range;
}

int worker_count() {
    if (const char* env = std::getenv("DICKE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

std::vector<Cell> spectrum_row(double epsilon, const char* branch, const StationaryPoint& pt,
                               const ModeFrequencies& modes) {
    return {epsilon,
            std::string(branch),
            modes.nu_minus,
            modes.nu_plus,
            pt.x_scaled,
            pt.theta,
            pt.energy_per_qubit,
            pt.stability == Stability::StableMinimum};
}

}  // namespace

Table sweep_epsilon(const ModelParams& fixed, const Range& epsilon_range) {
    validate(fixed);
    const std::vector<double> grid = epsilon_range.values();

    struct PointResult {
        BranchSet branches;
        ModeFrequencies ground;
        std::optional<ModeFrequencies> metastable;
    };
    std::vector<PointResult> results(grid.size());
    parallel_for_indexed(static_cast<int>(grid.size()), [&](int i) {
        ModelParams p = fixed;
        p.epsilon = grid[static_cast<std::size_t>(i)];
        auto& r = results[static_cast<std::size_t>(i)];
        r.branches = branch_states(p);
        r.ground = mode_frequencies(quadratic_form(r.branches.ground, p));
        if (r.branches.metastable)
            r.metastable = mode_frequencies(quadratic_form(*r.branches.metastable, p));
    });

    Table table;
    table.columns = {"epsilon", "branch",          "nu_minus", "nu_plus",
                     "x_scaled", "theta", "energy_per_qubit", "stable"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& r = results[i];
        table.add_row(spectrum_row(grid[i], "ground", r.branches.ground, r.ground));
        if (r.metastable)
            table.add_row(spectrum_row(grid[i], "metastable", *r.branches.metastable,
                                       *r.metastable));
    }
    return table;
}

Table sweep_coupling(double delta, const Range& coupling_range) {
    const double gc = critical_coupling(delta);
    const std::vector<double> grid = coupling_range.values();

    struct RowResult {
        Cell slope_minus{std::monostate{}};
        Cell slope_plus{std::monostate{}};
        double eps_max{0.0};
        Cell max_sep{std::monostate{}};
        ModeFrequencies sym;
    };
    std::vector<RowResult> results(grid.size());
    parallel_for_indexed(static_cast<int>(grid.size()), [&](int i) {
        const double g = grid[static_cast<std::size_t>(i)];
        auto& r = results[static_cast<std::size_t>(i)];
        const bool critical = std::abs(g - gc) <= 1e-14 * gc;
        if (!critical) {
            const SymmetrySlopes slopes = slope_at_symmetry(delta, g);
            r.slope_minus = slopes.d_nu_minus;
            r.slope_plus = slopes.d_nu_plus;
        }
        r.eps_max = bistability_epsilon_max(delta, g);
        if (g > gc && !critical) r.max_sep = max_line_separation(delta, g);
        r.sym = symmetry_point_frequencies(delta, g);
    });

    Table table;
    table.columns = {"coupling", "g_over_gc", "slope_minus", "slope_plus",
                     "eps_max",  "max_sep",   "nu_minus_sym", "nu_plus_sym"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& r = results[i];
        table.add_row({grid[i], grid[i] / gc, r.slope_minus, r.slope_plus, r.eps_max,
                       r.max_sep, r.sym.nu_minus, r.sym.nu_plus});
    }
    return table;
}

Table phase_diagram(double delta, const Range& coupling_range) {
    const double gc = critical_coupling(delta);
    const std::vector<double> grid = coupling_range.values();

    struct RowResult {
        PhaseVerdict verdict;
        double eps_max{0.0};
    };
    std::vector<RowResult> results(grid.size());
    parallel_for_indexed(static_cast<int>(grid.size()), [&](int i) {
        const double g = grid[static_cast<std::size_t>(i)];
        auto& r = results[static_cast<std::size_t>(i)];
        r.verdict = phase_at({delta, 0.0, g, {}});
        r.eps_max = bistability_epsilon_max(delta, g);
    });

    Table table;
    table.columns = {"coupling", "g_over_gc", "phase", "n_stable", "eps_max"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& r = results[i];
        table.add_row({grid[i], grid[i] / gc,
                       std::string(r.verdict.phase == Phase::Superradiant ? "superradiant"
                                                                          : "normal"),
                       static_cast<std::int64_t>(r.verdict.n_stable), r.eps_max});
    }
    return table;
}

Table symmetry_tables(double delta, const Range& coupling_range) {
    const double gc = critical_coupling(delta);
    const std::vector<double> grid = coupling_range.values();
    std::vector<ModeFrequencies> results(grid.size());
    parallel_for_indexed(static_cast<int>(grid.size()), [&](int i) {
        results[static_cast<std::size_t>(i)] =
            symmetry_point_frequencies(delta, grid[static_cast<std::size_t>(i)]);
    });

    Table table;
    table.columns = {"coupling", "g_over_gc", "nu_minus", "nu_plus"};
    for (std::size_t i = 0; i < grid.size(); ++i)
        table.add_row({grid[i], grid[i] / gc, results[i].nu_minus, results[i].nu_plus});
    return table;
}

Table quartic_demo(double eta, const Range& tilt_range) {
    Table table;
    table.columns = {"eta", "tilt", "x", "curvature", "kind"};
    for (const double tilt : tilt_range.values()) {
        const QuarticWell well = quartic_stationary_points(eta, tilt);
        struct Tagged {
            QuarticCriticalPoint cp;
            const char* kind;
        };
        std::vector<Tagged> points;
        for (const auto& cp : well.minima) points.push_back({cp, "minimum"});
        for (const auto& cp : well.maxima) points.push_back({cp, "maximum"});
        for (const auto& cp : well.degenerate) points.push_back({cp, "degenerate"});
        std::sort(points.begin(), points.end(),
                  [](const Tagged& a, const Tagged& b) { return a.cp.x < b.cp.x; });
        for (const auto& t : points)
            table.add_row({eta, tilt, t.cp.x, t.cp.curvature, std::string(t.kind)});
    }
    return table;
}

Table ensemble_report(const EnsembleSpec& spec) {
    const auto points = ensemble_fixed_points(spec);
    const double g_eff = effective_coupling(spec);
    const CrossingObservability obs = avoided_crossing_observable(spec);
    const double n = static_cast<double>(spec.qubits.size());

    Table table;
    table.columns = {"x",         "x_scaled",      "stable",       "n_qubits",
                     "delta_bar", "epsilon_bar",   "epsilon_spread", "g_eff",
                     "gap_ratio", "verdict"};
    for (const auto& pt : points) {
        const Cell ratio = std::isinf(obs.ratio) ? Cell{std::string("inf")} : Cell{obs.ratio};
        table.add_row({pt.x, pt.x / std::sqrt(n), pt.stability == Stability::StableMinimum,
                       static_cast<std::int64_t>(spec.qubits.size()), spec.delta_bar(),
                       spec.epsilon_bar(), spec.epsilon_spread(), g_eff, ratio,
                       std::string(to_string(obs.verdict))});
    }
    return table;
}

Table decay_table(const ModelParams& fixed, const std::vector<double>& couplings) {
    Table table;
    table.columns = {"delta", "coupling", "n_qubits", "log10_rate_over_delta", "caveat"};
    for (const double g : couplings) {
        ModelParams p = fixed;
        p.coupling = g;
        table.add_row({p.delta, g,
                       static_cast<std::int64_t>(p.n_qubits.value_or(0)),
                       metastable_decay_estimate(p),
                       std::string("order-of-magnitude estimate")});
    }
    return table;
}

}  // namespace dicke
