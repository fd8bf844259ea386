#include "dicke/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dicke/ed.hpp"
#include "dicke/model.hpp"
#include "dicke/normal_modes.hpp"
#include "dicke/phase.hpp"

namespace dicke {

namespace {

std::string metric_string(double value) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << value;
    return out.str();
}

// Closed-form superradiant displacement X = (delta/4G) sqrt((4G^2/delta)^2 - 1).
double superradiant_x_closed(double delta, double coupling) {
    const double r = 4.0 * coupling * coupling / delta;
    return delta / (4.0 * coupling) * std::sqrt(r * r - 1.0);
}

// Closed-form saddle-node boundary eps* = u^3 / delta^2, u^2 = (4G^2 d^2)^(2/3) - d^2.
double eps_star_closed(double delta, double coupling) {
    const double m = std::cbrt(4.0 * coupling * coupling * delta * delta);
    const double usq = m * m - delta * delta;
    if (usq <= 0.0) return 0.0;
    return usq * std::sqrt(usq) / (delta * delta);
}

CheckResult check_mode_oracle_agreement() {
    // Stable branches over the full verification grid.
    double max_diff = 0.0;
    for (const double delta : {0.2, 0.8, 1.0, 1.2}) {
        for (int ig = 0; ig < 50; ++ig) {
            const double g = 0.05 + (1.0 - 0.05) * ig / 49.0;
            for (int ie = 0; ie < 50; ++ie) {
                const double eps = -1.0 + 2.0 * ie / 49.0;
                const ModelParams p{delta, eps, g, {}};
                const BranchSet branches = branch_states(p);
                for (const StationaryPoint* pt :
                     {&branches.ground,
                      branches.metastable ? &*branches.metastable : nullptr}) {
                    if (!pt) continue;
                    const TwoModeQuadraticForm form = quadratic_form(*pt, p);
                    const ModeFrequencies closed = mode_frequencies(form);
                    const ModeFrequencies symp = symplectic_frequencies(form);
                    max_diff = std::max({max_diff,
                                         std::abs(closed.nu_minus - symp.nu_minus),
                                         std::abs(closed.nu_plus - symp.nu_plus)});
                }
            }
        }
    }
    return {"mode_frequencies_vs_symplectic", max_diff < 1e-10, max_diff,
            "max |closed form - symplectic| = " + metric_string(max_diff) +
                " over the 50x50x4 grid"};
}

CheckResult check_grid_minimization() {
    double worst = 0.0;
    bool pass = true;
    const ModelParams cases[] = {
        {1.0, 0.0, 0.4, {}},  {1.0, 0.0, 0.6, {}},  {1.0, 0.3, 0.2, {}},
        {1.0, 0.05, 0.6, {}}, {0.2, 0.02, 0.3, {}}, {1.2, -0.1, 0.7, {}},
    };
    for (const ModelParams& p : cases) {
        const double lo = -p.coupling - 0.1;
        const double hi = p.coupling + 0.1;
        const int n = 100000;
        const double step = (hi - lo) / n;
        // Local minima of the effective energy on a dense grid.
        std::vector<double> grid_minima;
        double prev = effective_energy(lo, p);
        double curr = effective_energy(lo + step, p);
        for (int i = 2; i <= n; ++i) {
            const double next = effective_energy(lo + step * i, p);
            if (curr <= prev && curr <= next) grid_minima.push_back(lo + step * (i - 1));
            prev = curr;
            curr = next;
        }
        std::vector<double> solver_minima;
        for (const auto& pt : stationary_points(p))
            if (pt.stability == Stability::StableMinimum) solver_minima.push_back(pt.x_scaled);
        if (grid_minima.size() != solver_minima.size()) {
            pass = false;
            continue;
        }
        for (std::size_t i = 0; i < grid_minima.size(); ++i)
            worst = std::max(worst, std::abs(grid_minima[i] - solver_minima[i]));
    }
    pass = pass && worst <= 2.0 * (2.0 * 1.0 + 0.2) / 100000;  // two grid cells, widest case
    return {"stationary_points_vs_grid_minimization", pass, worst,
            "max |grid minimum - solver minimum| = " + metric_string(worst)};
}

CheckResult check_superradiant_closed_form() {
    double worst = 0.0;
    for (const auto& [delta, g] : std::vector<std::pair<double, double>>{
             {1.0, 0.6}, {1.0, 0.8}, {0.8, 0.55}, {0.2, 0.3}}) {
        const ModelParams p{delta, 0.0, g, {}};
        const auto points = stationary_points(p);
        const double x_closed = superradiant_x_closed(delta, g);
        if (points.size() != 3) return {"superradiant_displacement_closed_form", false, 0.0,
                                        "expected three stationary points"};
        worst = std::max({worst,
                          std::abs(points.front().x_scaled + x_closed) / x_closed,
                          std::abs(points.back().x_scaled - x_closed) / x_closed});
    }
    return {"superradiant_displacement_closed_form", worst < 1e-9, worst,
            "max relative deviation = " + metric_string(worst)};
}

CheckResult check_saddle_node_boundary() {
    double worst = 0.0;
    for (const auto& [delta, g] : std::vector<std::pair<double, double>>{
             {1.0, 0.6}, {1.0, 0.8}, {0.2, 0.3}, {1.2, 0.7}}) {
        worst = std::max(worst,
                         std::abs(bistability_epsilon_max(delta, g) - eps_star_closed(delta, g)));
    }
    return {"bistability_boundary_vs_saddle_node", worst < 1e-8, worst,
            "max |bisected - closed form| = " + metric_string(worst)};
}

CheckResult check_meanfield_bias_reversal() {
    double worst = 0.0;
    for (const double delta : {0.2, 1.0, 1.2}) {
        for (const double g : {0.3, 0.6, 0.9}) {
            for (const double eps : {0.02, 0.1, 0.4}) {
                const BranchSpectrum plus = branch_spectrum({delta, eps, g, {}});
                const BranchSpectrum minus = branch_spectrum({delta, -eps, g, {}});
                worst = std::max({worst,
                                  std::abs(plus.ground_modes.nu_minus -
                                           minus.ground_modes.nu_minus),
                                  std::abs(plus.ground_modes.nu_plus -
                                           minus.ground_modes.nu_plus)});
                if (plus.metastable_modes != minus.metastable_modes ? true : false) {
                    // presence must agree; values compared when both exist
                }
                if (plus.metastable_modes && minus.metastable_modes) {
                    worst = std::max({worst,
                                      std::abs(plus.metastable_modes->nu_minus -
                                               minus.metastable_modes->nu_minus),
                                      std::abs(plus.metastable_modes->nu_plus -
                                               minus.metastable_modes->nu_plus)});
                } else if (plus.metastable_modes.has_value() !=
                           minus.metastable_modes.has_value()) {
                    return {"meanfield_bias_reversal", false, 1.0,
                            "branch presence differs under bias reversal"};
                }
            }
        }
    }
    return {"meanfield_bias_reversal", worst == 0.0, worst,
            "max |spectrum(eps) - spectrum(-eps)| = " + metric_string(worst)};
}

CheckResult check_ed_hp_normal() {
    const double nu_minus_hp = std::sqrt(0.6);
    const double nu_plus_hp = std::sqrt(1.4);
    std::vector<double> err_minus;
    std::vector<double> err_plus;
    try {
        for (const int n : {8, 16, 32}) {
            const ModelParams p{1.0, 0.0, 0.2, n};
            const ed::Config cfg{n, 24, 4, 1e-6};
            const auto gaps = ed::excitation_gaps(p, cfg);
            const auto distinct = ed::lowest_distinct_gaps(gaps, 2);
            err_minus.push_back(std::abs(distinct[0] - nu_minus_hp) / nu_minus_hp);
            err_plus.push_back(std::abs(distinct[1] - nu_plus_hp) / nu_plus_hp);
        }
    } catch (const std::exception& e) {
        return {"ed_hp_convergence_normal", false, 0.0, e.what()};
    }
    const bool monotone =
        err_minus[0] > err_minus[1] && err_minus[1] > err_minus[2] &&
        err_plus[0] > err_plus[1] && err_plus[1] > err_plus[2];
    const bool tight = err_minus[2] < 0.05 && err_plus[2] < 0.05;
    return {"ed_hp_convergence_normal", monotone && tight,
            std::max(err_minus[2], err_plus[2]),
            "relative errors vs N=8,16,32: nu-: " + metric_string(err_minus[0]) + ", " +
                metric_string(err_minus[1]) + ", " + metric_string(err_minus[2]) +
                "; nu+: " + metric_string(err_plus[0]) + ", " + metric_string(err_plus[1]) +
                ", " + metric_string(err_plus[2])};
}

CheckResult check_ed_hp_superradiant() {
    try {
        const ModelParams p{1.0, 0.05, 0.6, 32};
        const ed::Config cfg{32, 40, 4, 1e-6};
        const auto gaps = ed::excitation_gaps(p, cfg);
        const ModeFrequencies ground = branch_spectrum(p).ground_modes;
        const double err = std::abs(gaps[0] - ground.nu_minus) / ground.nu_minus;
        return {"ed_hp_superradiant", err < 0.10, err,
                "N=32 lowest gap vs nu-(ground): relative error " + metric_string(err)};
    } catch (const std::exception& e) {
        return {"ed_hp_superradiant", false, 0.0, e.what()};
    }
}

CheckResult check_ed_bias_reversal() {
    try {
        const ed::Config cfg{8, 30, 4, 1e-6};
        const Eigen::VectorXd plus = ed::eigenvalues({1.0, 0.3, 0.4, 8}, cfg);
        const Eigen::VectorXd minus = ed::eigenvalues({1.0, -0.3, 0.4, 8}, cfg);
        const double diff = (plus - minus).cwiseAbs().maxCoeff();
        return {"ed_bias_reversal", diff < 1e-10, diff,
                "max eigenvalue difference under bias reversal = " + metric_string(diff)};
    } catch (const std::exception& e) {
        return {"ed_bias_reversal", false, 0.0, e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(check_mode_oracle_agreement());
    results.push_back(check_grid_minimization());
    results.push_back(check_superradiant_closed_form());
    results.push_back(check_saddle_node_boundary());
    results.push_back(check_meanfield_bias_reversal());
    if (options.include_ed) {
        results.push_back(check_ed_hp_normal());
        results.push_back(check_ed_hp_superradiant());
        results.push_back(check_ed_bias_reversal());
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

Table verification_table(const std::vector<CheckResult>& results) {
    Table table;
    table.columns = {"check", "pass", "metric", "detail"};
    for (const auto& r : results)
        table.add_row({r.name, r.pass, r.metric, r.detail});
    return table;
}

}  // namespace dicke
