#include "dicke/normal_modes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace dicke {

namespace {

constexpr double kLinearTermTol = 1e-9;
constexpr double kClampTol = 1e-12;
constexpr double kRealPartTol = 1e-10;

}  // namespace

TwoModeQuadraticForm quadratic_form(const StationaryPoint& point, const ModelParams& params) {
    validate(params);
    if (point.stability == Stability::UnstableMaximum)
        throw std::invalid_argument(
            "quadratic_form: expansion around an energy maximum has no spectrum");

    const double u = params.epsilon + 4.0 * params.coupling * point.x_scaled;
    const double norm = std::hypot(params.delta, u);
    const double cos_theta = params.delta / norm;  // theta from atan2(u, delta)
    const double sin_theta = u / norm;

    // The linear terms of the expansion must vanish at a stationary point.
    if (std::abs(u * cos_theta - params.delta * sin_theta) > kLinearTermTol ||
        std::abs(point.x_scaled - params.coupling * sin_theta) > kLinearTermTol)
        throw std::invalid_argument("quadratic_form: origin is not a stationary point");

    TwoModeQuadraticForm form;
    form.gamma = params.delta * cos_theta + u * sin_theta;
    form.omega = 1.0;
    form.coupling_xy = 4.0 * params.coupling * cos_theta;
    form.origin = point;
    form.degenerate_origin = point.stability == Stability::Degenerate;
    return form;
}

ModeFrequencies mode_frequencies(const TwoModeQuadraticForm& form) {
    const double g2 = form.gamma * form.gamma;
    const double w2 = form.omega * form.omega;
    const double diff = g2 - w2;
    const double disc = std::sqrt(diff * diff +
                                  form.coupling_xy * form.coupling_xy * form.gamma * form.omega);
    const double nm2 = 0.5 * (g2 + w2 - disc);
    const double np2 = 0.5 * (g2 + w2 + disc);

    ModeFrequencies modes;
    modes.nu_plus = std::sqrt(np2);
    if (nm2 >= 0.0) {
        modes.nu_minus = std::sqrt(nm2);
    } else if (nm2 >= -kClampTol) {
        modes.nu_minus = 0.0;  // roundoff on a soft mode
    } else {
        modes.nu_minus = std::sqrt(-nm2);
        modes.imaginary_mode = true;
    }
    return modes;
}

ModeFrequencies symplectic_frequencies(const TwoModeQuadraticForm& form) {
    // Heisenberg equations for H = gamma (y^2+p_y^2) + omega (x^2+p_x^2) + c x y
    // with [x, p_x] = [y, p_y] = i/2:
    //   d/dt (x, p_x, y, p_y) = M (x, p_x, y, p_y).
    const double w = form.omega;
    const double g = form.gamma;
    const double ch = 0.5 * form.coupling_xy;
    Eigen::Matrix4d eom;
    eom <<  0.0,   w,  0.0, 0.0,
            -w,  0.0,  -ch, 0.0,
            0.0, 0.0,  0.0,   g,
            -ch, 0.0,   -g, 0.0;

    const Eigen::EigenSolver<Eigen::Matrix4d> solver(eom, /*computeEigenvectors=*/false);
    const Eigen::Vector4cd lambda = solver.eigenvalues();

    ModeFrequencies modes;
    double max_real = 0.0;
    std::array<double, 4> im_abs{};
    for (int i = 0; i < 4; ++i) {
        max_real = std::max(max_real, std::abs(lambda[i].real()));
        im_abs[static_cast<std::size_t>(i)] = std::abs(lambda[i].imag());
    }
    std::sort(im_abs.begin(), im_abs.end());
    // Eigenvalues come in +/- i nu pairs; an unstable mode shows up as a
    // +/- real pair instead.
    modes.nu_plus = 0.5 * (im_abs[2] + im_abs[3]);
    if (max_real > kRealPartTol) {
        modes.imaginary_mode = true;
        modes.nu_minus = max_real;
    } else {
        modes.nu_minus = 0.5 * (im_abs[0] + im_abs[1]);
    }
    return modes;
}

BranchSpectrum branch_spectrum(const ModelParams& params) {
    const BranchSet branches = branch_states(params);
    BranchSpectrum spectrum;
    spectrum.epsilon = params.epsilon;
    spectrum.ground_modes = mode_frequencies(quadratic_form(branches.ground, params));
    if (branches.metastable)
        spectrum.metastable_modes = mode_frequencies(quadratic_form(*branches.metastable, params));
    return spectrum;
}

}  // namespace dicke
