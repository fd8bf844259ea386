#include "dicke/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dicke {

namespace {

constexpr double kRootTol = 1e-13;
constexpr double kDegenerateTol = 1e-8;
constexpr int kScanSamples = 4096;

double map_sum(double x, const EnsembleSpec& spec) {
    double sum = 0.0;
    for (const auto& q : spec.qubits) {
        const double u = q.epsilon + 4.0 * q.g * x;
        sum += q.g * u / std::hypot(q.delta, u);
    }
    return sum;
}

double residual(double x, const EnsembleSpec& spec) {
    return x - map_sum(x, spec);
}

// Curvature of the summed effective energy, E''(x) = 2 - sum_i 8 g_i^2 d_i^2 / (...)^{3/2}.
double curvature(double x, const EnsembleSpec& spec) {
    double sum = 0.0;
    for (const auto& q : spec.qubits) {
        const double u = q.epsilon + 4.0 * q.g * x;
        const double s2 = q.delta * q.delta + u * u;
        sum += 8.0 * q.g * q.g * q.delta * q.delta / (s2 * std::sqrt(s2));
    }
    return 2.0 - sum;
}

template <typename F>
double bisect(F&& f, double a, double b, double fa) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
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

double EnsembleSpec::delta_bar() const {
    double s = 0.0;
    for (const auto& q : qubits) s += q.delta;
    return s / static_cast<double>(qubits.size());
}

double EnsembleSpec::epsilon_bar() const {
    double s = 0.0;
    for (const auto& q : qubits) s += q.epsilon;
    return s / static_cast<double>(qubits.size());
}

double EnsembleSpec::epsilon_spread() const {
    const double mean = epsilon_bar();
    double s = 0.0;
    for (const auto& q : qubits) s += (q.epsilon - mean) * (q.epsilon - mean);
    return std::sqrt(s / static_cast<double>(qubits.size()));
}

double EnsembleSpec::g_bar() const {
    double s = 0.0;
    for (const auto& q : qubits) s += q.g;
    return s / static_cast<double>(qubits.size());
}

void validate(const EnsembleSpec& spec) {
    if (spec.qubits.empty())
        throw std::invalid_argument("EnsembleSpec: qubit list must be non-empty");
    for (const auto& q : spec.qubits) {
        if (!std::isfinite(q.delta) || q.delta <= 0.0)
            throw std::invalid_argument("EnsembleSpec: every delta_i must be positive");
        if (!std::isfinite(q.epsilon) || !std::isfinite(q.g))
            throw std::invalid_argument("EnsembleSpec: parameters must be finite");
    }
}

std::vector<EnsembleFixedPoint> ensemble_fixed_points(const EnsembleSpec& spec) {
    validate(spec);
    double g_abs_sum = 0.0;
    for (const auto& q : spec.qubits) g_abs_sum += std::abs(q.g);
    const double hi = g_abs_sum + 0.1;

    auto f = [&spec](double x) { return residual(x, spec); };
    auto fp = [&spec](double x) { return curvature(x, spec) / 2.0; };  // = f'(x)

    // Dense scan of f' to split the interval into monotone segments, then a
    // sign scan of f per segment (the summed map has no closed-form extrema).
    std::vector<double> breaks;
    breaks.reserve(kScanSamples + 8);
    for (int i = 0; i <= kScanSamples / 2; ++i) {
        const double s = hi * (2.0 * i) / kScanSamples;
        breaks.push_back(s);
        if (i > 0) breaks.push_back(-s);
    }
    std::sort(breaks.begin(), breaks.end());

    std::vector<double> cuts{breaks.front()};
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        const double a = breaks[i - 1];
        const double b = breaks[i];
        const double fpa = fp(a);
        const double fpb = fp(b);
        if (fpa == 0.0) {
            cuts.push_back(a);
        } else if ((fpa < 0.0) != (fpb < 0.0)) {
            cuts.push_back(bisect(fp, a, b, fpa));
        }
    }
    cuts.push_back(breaks.back());
    std::sort(cuts.begin(), cuts.end());

    std::vector<double> roots;
    auto push_root = [&roots](double x) {
        for (const double r : roots)
            if (std::abs(r - x) < 64 * kRootTol) return;
        roots.push_back(x);
    };
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const double a = cuts[i - 1];
        const double b = cuts[i];
        const double fa = f(a);
        const double fb = f(b);
        if (std::abs(fa) < kRootTol) {
            push_root(a);
        } else if (std::abs(fb) >= kRootTol && (fa < 0.0) != (fb < 0.0)) {
            push_root(bisect(f, a, b, fa));
        }
    }
    if (std::abs(f(cuts.back())) < kRootTol) push_root(cuts.back());

    std::sort(roots.begin(), roots.end());
    std::vector<EnsembleFixedPoint> out;
    out.reserve(roots.size());
    for (const double r : roots) {
        const double d2 = curvature(r, spec);
        const Stability s = std::abs(d2) < kDegenerateTol ? Stability::Degenerate
                          : d2 > 0.0                      ? Stability::StableMinimum
                                                          : Stability::UnstableMaximum;
        out.push_back({r, s});
    }
    return out;
}

double effective_coupling(const EnsembleSpec& spec) {
    validate(spec);
    const double n = static_cast<double>(spec.qubits.size());
    const double db = spec.delta_bar();
    const double eb = spec.epsilon_bar();
    return std::sqrt(n) * spec.g_bar() * db / std::hypot(db, eb);
}

CrossingObservability avoided_crossing_observable(const EnsembleSpec& spec) {
    validate(spec);
    const double g_eff = effective_coupling(spec);
    const double spread = spec.epsilon_spread();
    CrossingObservability result;
    if (spread == 0.0) {
        result.ratio = std::numeric_limits<double>::infinity();
        result.verdict = Resolvability::Resolvable;
        return result;
    }
    result.ratio = g_eff / spread;
    result.verdict = result.ratio > 10.0  ? Resolvability::Resolvable
                   : result.ratio < 0.1   ? Resolvability::Unresolvable
                                          : Resolvability::Marginal;
    return result;
}

EnsembleSpec load_ensemble_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("ensemble CSV: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "delta,epsilon,g")
        throw std::runtime_error("ensemble CSV: expected header 'delta,epsilon,g'");

    EnsembleSpec spec;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        QubitParams q;
        char c1 = 0;
        char c2 = 0;
        if (!(row >> q.delta >> c1 >> q.epsilon >> c2 >> q.g) || c1 != ',' || c2 != ',')
            throw std::runtime_error("ensemble CSV: malformed row at line " +
                                     std::to_string(line_no));
        std::string rest;
        if (row >> rest)
            throw std::runtime_error("ensemble CSV: trailing fields at line " +
                                     std::to_string(line_no));
        spec.qubits.push_back(q);
    }
    validate(spec);
    return spec;
}

EnsembleSpec load_ensemble_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ensemble CSV: cannot open " + path);
    return load_ensemble_csv(in);
}

const char* to_string(Resolvability verdict) {
    switch (verdict) {
        case Resolvability::Resolvable: return "resolvable";
        case Resolvability::Unresolvable: return "unresolvable";
        case Resolvability::Marginal: return "marginal";
    }
    return "unknown";
}

}  // namespace dicke
