#include "dicke/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

constexpr double kRootTol = 1e-13;        // |f| at an accepted root
constexpr double kDegenerateTol = 1e-8;   // |d2E/dX2| below which a point is Degenerate
constexpr double kBracketPad = 0.1;       // scan interval is [-G - pad, G + pad]
constexpr int kScanSamples = 2048;

double local_bias(double x_scaled, const ModelParams& p) {
    return p.epsilon + 4.0 * p.coupling * x_scaled;
}

// Stationarity residual f(X) = X - G u / sqrt(delta^2 + u^2) = (dE/dX)/2.
double residual(double x, const ModelParams& p) {
    const double u = local_bias(x, p);
    return x - p.coupling * u / std::hypot(p.delta, u);
}

StationaryPoint make_point(double x, const ModelParams& p) {
    const double u = local_bias(x, p);
    StationaryPoint pt;
    pt.x_scaled = x;
    pt.theta = std::atan2(u, p.delta);
    pt.energy_per_qubit = effective_energy(x, p);
    const double d2 = effective_energy_d2(x, p);
    pt.stability = std::abs(d2) < kDegenerateTol ? Stability::Degenerate
                 : d2 > 0.0                      ? Stability::StableMinimum
                                                 : Stability::UnstableMaximum;
    return pt;
}

// Bisection on a sign-changing bracket; f has a single simple root there.
double bisect(double a, double b, double fa, const ModelParams& p) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = residual(mid, p);
        if (std::abs(fm) < kRootTol || mid == a || mid == b) return mid;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

void validate(const ModelParams& params) {
    if (!std::isfinite(params.delta) || params.delta <= 0.0)
        throw std::invalid_argument("ModelParams: delta must be positive and finite");
    if (!std::isfinite(params.epsilon))
        throw std::invalid_argument("ModelParams: epsilon must be finite");
    if (!std::isfinite(params.coupling) || params.coupling < 0.0)
        throw std::invalid_argument("ModelParams: coupling must be nonnegative and finite");
    if (params.n_qubits && *params.n_qubits < 1)
        throw std::invalid_argument("ModelParams: n_qubits must be >= 1");
}

double effective_energy(double x_scaled, const ModelParams& p) {
    const double u = local_bias(x_scaled, p);
    return x_scaled * x_scaled - 0.5 * std::hypot(p.delta, u);
}

double effective_energy_d1(double x_scaled, const ModelParams& p) {
    return 2.0 * residual(x_scaled, p);
}

double effective_energy_d2(double x_scaled, const ModelParams& p) {
    const double u = local_bias(x_scaled, p);
    const double s2 = p.delta * p.delta + u * u;
    const double g2 = p.coupling * p.coupling;
    return 2.0 - 8.0 * g2 * p.delta * p.delta / (s2 * std::sqrt(s2));
}

std::vector<StationaryPoint> stationary_points(const ModelParams& params) {
    validate(params);
    const ModelParams& p = params;
    const double lo = -p.coupling - kBracketPad;
    const double hi = p.coupling + kBracketPad;

    // f is monotone except between its two extrema, whose positions are known
    // in closed form: d2E/dX2 = 0 at u^2 = (4 G^2 delta^2)^(2/3) - delta^2.
    std::vector<double> breaks;
    const double m = std::cbrt(4.0 * p.coupling * p.coupling * p.delta * p.delta);
    const double usq = m * m - p.delta * p.delta;
    if (usq > 0.0 && p.coupling > 0.0) {
        const double us = std::sqrt(usq);
        for (const double ue : {-us, us}) {
            const double xe = (ue - p.epsilon) / (4.0 * p.coupling);
            if (xe > lo && xe < hi) breaks.push_back(xe);
        }
    }
    // Dense scan samples, built as an exact +/- mirror pair so that the
    // epsilon -> -epsilon symmetry of the stationary set is bit-exact; the
    // extremum breakpoints keep near-tangent root pairs resolvable down to
    // the bisection tolerance.
    for (int i = 0; i <= kScanSamples / 2; ++i) {
        const double s = hi * (2.0 * i) / kScanSamples;
        breaks.push_back(s);
        if (i > 0) breaks.push_back(-s);
    }
    std::sort(breaks.begin(), breaks.end());

    std::vector<double> roots;
    auto push_root = [&roots](double x) {
        for (const double r : roots)
            if (std::abs(r - x) < 64 * kRootTol) return;
        roots.push_back(x);
    };

    double prev_x = breaks.front();
    double prev_f = residual(prev_x, p);
    if (std::abs(prev_f) < kRootTol) push_root(prev_x);
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        const double x = breaks[i];
        const double f = residual(x, p);
        if (std::abs(f) < kRootTol) {
            push_root(x);  // tangent root at an extremum, or an exact sample hit
        } else if (prev_f != 0.0 && std::abs(prev_f) >= kRootTol &&
                   (prev_f < 0.0) != (f < 0.0)) {
            push_root(bisect(prev_x, x, prev_f, p));
        }
        prev_x = x;
        prev_f = f;
    }

    std::sort(roots.begin(), roots.end());
    std::vector<StationaryPoint> out;
    out.reserve(roots.size());
    for (const double r : roots) out.push_back(make_point(r, p));
    return out;
}

Stability classify_stability(double x_scaled, const ModelParams& params) {
    validate(params);
    if (std::abs(effective_energy_d1(x_scaled, params)) > 1e-8)
        throw std::invalid_argument("classify_stability: input is not a stationary point");
    return make_point(x_scaled, params).stability;
}

BranchSet branch_states(const ModelParams& params) {
    const auto points = stationary_points(params);

    std::vector<StationaryPoint> stable;
    std::optional<StationaryPoint> unstable;
    for (const auto& pt : points) {
        if (pt.stability == Stability::StableMinimum) stable.push_back(pt);
        if (pt.stability == Stability::UnstableMaximum) unstable = pt;
    }
    // A lone critical point of the coercive energy is its global minimum even
    // when the curvature is flat (exactly critical coupling).
    if (stable.empty() && points.size() == 1) stable.push_back(points.front());

    BranchSet set;
    if (stable.size() == 1) {
        set.ground = stable.front();
    } else {
        const double e0 = stable[0].energy_per_qubit;
        const double e1 = stable[1].energy_per_qubit;
        const double scale = std::max({1.0, std::abs(e0), std::abs(e1)});
        bool first_is_ground;
        if (std::abs(e0 - e1) <= 1e-12 * scale) {
            first_is_ground = stable[0].x_scaled > stable[1].x_scaled;  // tie-break: X > 0
        } else {
            first_is_ground = e0 < e1;
        }
        set.ground = first_is_ground ? stable[0] : stable[1];
        set.metastable = first_is_ground ? stable[1] : stable[0];
    }
    set.unstable = unstable;
    return set;
}

}  // namespace dicke
