#include "dicke/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dicke {

namespace {

constexpr double kBoundaryTol = 1e-10;   // epsilon bisection width
constexpr double kSlopeBaseStep = 1e-6;
constexpr double kSeparationInset = 1e-8;

int stable_count(const ModelParams& p) {
    const auto points = stationary_points(p);
    int n = 0;
    for (const auto& pt : points)
        if (pt.stability == Stability::StableMinimum) ++n;
    // A lone flat-curvature critical point (exact critical coupling) is the
    // global minimum of the coercive energy.
    if (n == 0 && points.size() == 1) n = 1;
    return n;
}

ModeFrequencies ground_modes_at(double delta, double epsilon, double coupling) {
    const ModelParams p{delta, epsilon, coupling, {}};
    return mode_frequencies(quadratic_form(branch_states(p).ground, p));
}

}  // namespace

double critical_coupling(double delta) {
    if (!(delta > 0.0))
        throw std::invalid_argument("critical_coupling: delta must be positive");
    return 0.5 * std::sqrt(delta);
}

PhaseVerdict phase_at(const ModelParams& params) {
    const int n = stable_count(params);
    return {n >= 2 ? Phase::Superradiant : Phase::Normal, n};
}

double bistability_epsilon_max(double delta, double coupling) {
    if (coupling <= critical_coupling(delta)) return 0.0;

    auto bistable = [&](double eps) {
        return stable_count({delta, eps, coupling, {}}) >= 2;
    };
    double lo = 0.0;   // bistable
    double hi = 1.0;
    while (bistable(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) throw std::runtime_error("bistability_epsilon_max: no upper bound found");
    }
    while (hi - lo > kBoundaryTol) {
        const double mid = 0.5 * (lo + hi);
        (bistable(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

SymmetrySlopes slope_at_symmetry(double delta, double coupling) {
    const double gc = critical_coupling(delta);
    if (coupling == gc)
        throw std::domain_error("slope_at_symmetry: undefined at the critical coupling");
    if (coupling < gc) return {0.0, 0.0, true};

    const ModeFrequencies base = ground_modes_at(delta, 0.0, coupling);
    const double h = kSlopeBaseStep;
    double d_minus[3];
    double d_plus[3];
    for (int k = 0; k < 3; ++k) {
        const double step = h / (1 << k);
        const ModeFrequencies shifted = ground_modes_at(delta, step, coupling);
        d_minus[k] = (shifted.nu_minus - base.nu_minus) / step;
        d_plus[k] = (shifted.nu_plus - base.nu_plus) / step;
    }
    auto richardson = [](const double d[3], double& out) {
        const double r1a = 2.0 * d[1] - d[0];
        const double r1b = 2.0 * d[2] - d[1];
        out = (4.0 * r1b - r1a) / 3.0;
        return std::abs(out - r1b) <= std::max(1e-4 * std::abs(out), 1e-7);
    };
    SymmetrySlopes slopes;
    const bool ok_minus = richardson(d_minus, slopes.d_nu_minus);
    const bool ok_plus = richardson(d_plus, slopes.d_nu_plus);
    slopes.converged = ok_minus && ok_plus;
    return slopes;
}

double max_line_separation(double delta, double coupling) {
    const double eps_max = bistability_epsilon_max(delta, coupling);
    if (eps_max <= 0.0)
        throw std::domain_error("max_line_separation: defined only in the superradiant phase");

    const ModelParams p{delta, eps_max - kSeparationInset, coupling, {}};
    const BranchSet branches = branch_states(p);
    if (!branches.metastable)
        throw std::runtime_error("max_line_separation: metastable branch not resolved");
    const double nu_plus_ground = mode_frequencies(quadratic_form(branches.ground, p)).nu_plus;
    const double nu_plus_meta =
        mode_frequencies(quadratic_form(*branches.metastable, p)).nu_plus;
    return nu_plus_ground - nu_plus_meta;
}

ModeFrequencies symmetry_point_frequencies(double delta, double coupling) {
    return ground_modes_at(delta, 0.0, coupling);
}

double metastable_decay_estimate(const ModelParams& params) {
    validate(params);
    if (!params.n_qubits)
        throw std::invalid_argument("metastable_decay_estimate: n_qubits is required");
    if (params.coupling <= critical_coupling(params.delta))
        throw std::domain_error(
            "metastable_decay_estimate: meaningful only above the critical coupling");
    const double n = static_cast<double>(*params.n_qubits);
    const double g2 = params.coupling * params.coupling;
    return n * std::log10(params.delta / (n * g2)) - 2.0 * g2 / std::numbers::ln10;
}

// ---- quartic toy -------------------------------------------------------------

namespace {

constexpr double kCurvatureTol = 1e-9;

// Real roots of x^3 + p x + q = 0.
std::vector<double> depressed_cubic_roots(double p, double q) {
    if (p == 0.0) return {std::cbrt(-q)};
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    std::vector<double> roots;
    if (disc > 0.0) {
        // three real roots (requires p < 0)
        const double r = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.push_back(r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
    } else if (disc < 0.0) {
        if (p < 0.0) {
            const double r = 2.0 * std::sqrt(-p / 3.0);
            const double arg = 3.0 * std::abs(q) / (-p * r);
            const double t = std::acosh(arg) / 3.0;
            roots.push_back(-std::copysign(r * std::cosh(t), q));
        } else {
            const double r = 2.0 * std::sqrt(p / 3.0);
            const double arg = 3.0 * q / (p * r);
            const double t = std::asinh(arg) / 3.0;
            roots.push_back(-r * std::sinh(t));
        }
    } else {
        // vanishing discriminant, p != 0: a double and a simple root
        roots.push_back(3.0 * q / p);
        roots.push_back(-1.5 * q / p);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

QuarticWell quartic_stationary_points(double eta, double tilt) {
    QuarticWell well;
    well.eta = eta;
    well.tilt = tilt;
    // V'(x)/4 = x^3 + (eta/2) x + tilt/4
    for (const double x : depressed_cubic_roots(eta / 2.0, tilt / 4.0)) {
        const QuarticCriticalPoint cp{x, 12.0 * x * x + 2.0 * eta};
        if (cp.curvature > kCurvatureTol) {
            well.minima.push_back(cp);
        } else if (cp.curvature < -kCurvatureTol) {
            well.maxima.push_back(cp);
        } else if (std::abs(24.0 * x) <= kCurvatureTol) {
            well.minima.push_back(cp);  // quartic-bottom minimum (eta = tilt = 0)
        } else {
            well.degenerate.push_back(cp);
        }
    }
    return well;
}

double quartic_saddle_node_tilt(double eta) {
    if (eta >= 0.0) return 0.0;
    return (-4.0 * eta / 3.0) * std::sqrt(-eta / 6.0);
}

}  // namespace dicke
