#include "dicke/ed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace dicke::ed {

namespace {

long matrix_dimension(const Config& cfg) {
    return static_cast<long>(cfg.n_qubits + 1) * static_cast<long>(cfg.fock_cutoff + 1);
}

Eigen::MatrixXd hamiltonian_at_cutoff(const ModelParams& params, const Config& cfg,
                                      int fock_cutoff) {
    const int n_spin = cfg.n_qubits + 1;
    const int n_fock = fock_cutoff + 1;
    const long dim = static_cast<long>(n_spin) * n_fock;
    if (dim > cfg.dimension_cap)
        throw std::invalid_argument("ed: matrix dimension " + std::to_string(dim) +
                                    " exceeds the cap " + std::to_string(cfg.dimension_cap));

    const double spin = 0.5 * cfg.n_qubits;
    const double g = params.coupling / std::sqrt(static_cast<double>(cfg.n_qubits));

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    auto index = [n_fock](int spin_idx, int n) { return spin_idx * n_fock + n; };

    for (int si = 0; si < n_spin; ++si) {
        const double m = -spin + si;
        // <m+1| S_x |m> = s_plus / 2
        const double s_plus =
            si + 1 < n_spin ? std::sqrt(spin * (spin + 1.0) - m * (m + 1.0)) : 0.0;
        for (int n = 0; n < n_fock; ++n) {
            const int i = index(si, n);
            h(i, i) = params.delta * m + (n + 0.5);
            if (si + 1 == n_spin) continue;
            const double sx = 0.5 * s_plus;
            h(index(si + 1, n), i) += params.epsilon * sx;
            // 4 g S_x x with <n+1| x |n> = sqrt(n+1)/2
            if (n + 1 < n_fock) h(index(si + 1, n + 1), i) += 4.0 * g * sx * 0.5 * std::sqrt(n + 1.0);
            if (n > 0) h(index(si + 1, n - 1), i) += 4.0 * g * sx * 0.5 * std::sqrt(static_cast<double>(n));
        }
    }
    return h.selfadjointView<Eigen::Lower>();
}

}  // namespace

void validate(const Config& cfg) {
    if (cfg.n_qubits < 1) throw std::invalid_argument("ed: n_qubits must be >= 1");
    if (cfg.fock_cutoff < 0) throw std::invalid_argument("ed: fock_cutoff must be >= 0");
    if (cfg.n_eigenvalues < 2) throw std::invalid_argument("ed: n_eigenvalues must be >= 2");
    if (cfg.convergence_tol <= 0.0)
        throw std::invalid_argument("ed: convergence_tol must be positive");
    if (matrix_dimension(cfg) > cfg.dimension_cap)
        throw std::invalid_argument("ed: matrix dimension exceeds the cap");
}

Eigen::MatrixXd build_hamiltonian(const ModelParams& params, const Config& cfg) {
    dicke::validate(params);
    validate(cfg);
    if (!params.n_qubits || *params.n_qubits != cfg.n_qubits)
        throw std::invalid_argument("ed: params.n_qubits must match cfg.n_qubits");
    return hamiltonian_at_cutoff(params, cfg, cfg.fock_cutoff);
}

Eigen::VectorXd eigenvalues(const ModelParams& params, const Config& cfg) {
    const Eigen::MatrixXd h = build_hamiltonian(params, cfg);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("ed: eigenvalue decomposition failed");
    return solver.eigenvalues();
}

Eigensystem eigensystem(const ModelParams& params, const Config& cfg) {
    const Eigen::MatrixXd h = build_hamiltonian(params, cfg);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("ed: eigenvalue decomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> excitation_gaps(const ModelParams& params, const Config& cfg) {
    const Eigen::VectorXd base = eigenvalues(params, cfg);

    Config grown = cfg;
    grown.fock_cutoff += 10;
    grown.dimension_cap =
        std::max(grown.dimension_cap, matrix_dimension(grown));  // growth check is internal
    const Eigen::VectorXd wide = eigenvalues(params, grown);

    const int k = std::min<int>(cfg.n_eigenvalues, static_cast<int>(base.size()));
    double max_shift = 0.0;
    for (int i = 0; i < k; ++i) max_shift = std::max(max_shift, std::abs(base[i] - wide[i]));
    if (max_shift > cfg.convergence_tol)
        throw std::runtime_error("ed: fock cutoff not converged (lowest eigenvalues shift by " +
                                 std::to_string(max_shift) + ")");

    std::vector<double> gaps;
    gaps.reserve(static_cast<std::size_t>(k) - 1);
    for (int i = 1; i < k; ++i) gaps.push_back(base[i] - base[0]);
    return gaps;
}

std::vector<double> lowest_distinct_gaps(const std::vector<double>& gaps, int count,
                                         double merge_tol) {
    std::vector<double> sorted = gaps;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> distinct;
    for (const double g : sorted) {
        if (distinct.empty() || g - distinct.back() > merge_tol) distinct.push_back(g);
        if (static_cast<int>(distinct.size()) == count) break;
    }
    return distinct;
}

std::vector<double> doublet_centroid_gaps(const Eigen::VectorXd& eigenvalues, int n_gaps) {
    std::vector<double> gaps;
    const int pairs = static_cast<int>(eigenvalues.size()) / 2;
    if (pairs < 1) return gaps;
    const double ground = 0.5 * (eigenvalues[0] + eigenvalues[1]);
    for (int p = 1; p < pairs && static_cast<int>(gaps.size()) < n_gaps; ++p)
        gaps.push_back(0.5 * (eigenvalues[2 * p] + eigenvalues[2 * p + 1]) - ground);
    return gaps;
}

Eigen::VectorXd parity_diagonal(int n_qubits, int fock_cutoff) {
    const int n_fock = fock_cutoff + 1;
    Eigen::VectorXd diag(static_cast<long>(n_qubits + 1) * n_fock);
    for (int si = 0; si <= n_qubits; ++si)
        for (int n = 0; n < n_fock; ++n)
            diag[static_cast<long>(si) * n_fock + n] = ((si + n) % 2 == 0) ? 1.0 : -1.0;
    return diag;
}

ConvergenceReport hp_convergence_report(const std::vector<int>& n_values,
                                        const std::vector<double>& ed_gaps,
                                        const std::vector<double>& hp_frequencies) {
    if (n_values.size() != ed_gaps.size() || n_values.size() != hp_frequencies.size())
        throw std::invalid_argument("hp_convergence_report: length mismatch");

    ConvergenceReport report;
    report.rows.reserve(n_values.size());
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        ConvergenceRow row;
        row.n_qubits = n_values[i];
        row.ed_gap = ed_gaps[i];
        row.hp_frequency = hp_frequencies[i];
        row.rel_error = std::abs(ed_gaps[i] - hp_frequencies[i]) / std::abs(hp_frequencies[i]);
        report.rows.push_back(row);
    }
    report.monotone_decreasing = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        if (report.rows[i].rel_error > report.rows[i - 1].rel_error)
            report.monotone_decreasing = false;
    return report;
}

}  // namespace dicke::ed
