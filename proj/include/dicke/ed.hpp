// ed.hpp — Exact diagonalization of the collective-spin Dicke Hamiltonian
//   H = delta S_z + epsilon S_x + omega (x^2 + p_x^2) + 4 g S_x x,  g = G/sqrt(N),
// in the maximal-spin sector |S = N/2, m> tensor a truncated Fock space.
// Serves as the quantum oracle for the mean-field + normal-mode predictions.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dicke/model.hpp"

namespace dicke::ed {

struct Config {
    int n_qubits{1};              // N; spin length S = N/2
    int fock_cutoff{20};          // max photon number n_max
    int n_eigenvalues{2};         // K lowest eigenvalues of interest (>= 2)
    double convergence_tol{1e-8}; // max eigenvalue shift allowed under cutoff growth
    long dimension_cap{200000};   // refuse matrices larger than this
};

void validate(const Config& cfg);

// Real symmetric matrix in the product basis |S, m> (x) |n>, with the boson
// part entered exactly as omega (n + 1/2).  Hermitian by construction.
// Throws std::invalid_argument on a dimension-cap breach or when
// params.n_qubits disagrees with cfg.n_qubits.
Eigen::MatrixXd build_hamiltonian(const ModelParams& params, const Config& cfg);

// All eigenvalues, ascending (dense symmetric solver).
Eigen::VectorXd eigenvalues(const ModelParams& params, const Config& cfg);

struct Eigensystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // columns
};

Eigensystem eigensystem(const ModelParams& params, const Config& cfg);

// K-1 excitation gaps E_i - E_0.  Cutoff adequacy is asserted by re-running
// at fock_cutoff + 10; throws std::runtime_error if the lowest K eigenvalues
// shift by more than convergence_tol.
std::vector<double> excitation_gaps(const ModelParams& params, const Config& cfg);

// First `count` distinct values among the gaps, merging within merge_tol.
std::vector<double> lowest_distinct_gaps(const std::vector<double>& gaps, int count,
                                         double merge_tol = 1e-6);

// Gaps between centroids of consecutive eigenvalue pairs, for comparing the
// tunneling-split superradiant doublets at epsilon = 0 against a single
// harmonic ladder.
std::vector<double> doublet_centroid_gaps(const Eigen::VectorXd& eigenvalues, int n_gaps);

// Diagonal of the parity operator exp(i pi (S_z + S + n)) in the product basis.
Eigen::VectorXd parity_diagonal(int n_qubits, int fock_cutoff);

struct ConvergenceRow {
    int n_qubits{0};
    double ed_gap{0.0};
    double hp_frequency{0.0};
    double rel_error{0.0};
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    bool monotone_decreasing{false};
};

// Relative errors |gap - nu| / nu per N, plus a monotone-trend flag.
// Entries must share the collective coupling G (caller's responsibility).
ConvergenceReport hp_convergence_report(const std::vector<int>& n_values,
                                        const std::vector<double>& ed_gaps,
                                        const std::vector<double>& hp_frequencies);

}  // namespace dicke::ed
