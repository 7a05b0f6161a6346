// oracle.hpp: Truncated-Fock-space propagator for the full JC Hamiltonian
//
// Brute-force reference for the closed forms. One subsystem is a qubit and an
// oscillator truncated to Fock states 0..ncut, with
//
//   H / omega = a^dag a + beta (a^dag + a) sigma_x + (omega0 / 2 omega) sigma_z
//
// written in the sigma_x eigenbasis, where it is real symmetric. No constant
// shifts are included. Subsystem vectors are indexed qubit * (ncut+1) + n
// with qubit 0 = up (sigma_x = +1) and 1 = down.
//
// Two-qubit observables are assembled from per-subsystem conditional maps,
// since the two subsystems never interact.

#pragma once

#include "degjc/model.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace degjc::oracle {

/// Truncated probability mass above tolerance, or a failed convergence check.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TruncationSpec {
    int ncut = 40;
    double tail_tol = 1e-10;
};

/// Probability mass of the field outside Fock states 0..ncut.
double field_tail_mass(const FieldSpec& field, int ncut);

/// Starting cutoff ceil((|a0| + 2 beta + 3 sqrt(nbar) + sqrt(N))^2) + 20, raised to
/// (smallest cutoff whose tail mass is <= tail_tol) + 20 when that is larger.
int default_ncut(const FieldSpec& field, double beta, double tail_tol = 1e-10);

/// Field state as a weighted set of truncated Fock vectors (one column per component).
struct FieldEnsemble {
    std::vector<double> weights;
    Eigen::MatrixXcd vectors;  // (ncut+1) x components
    double tail_mass = 0.0;

    double norm() const;
};

/// Pure fields give one unnormalised truncated vector; thermal fields give the
/// Fock basis with thermal weights. Throws TruncationError when the tail exceeds tail_tol.
FieldEnsemble field_ensemble(const FieldSpec& field, const TruncationSpec& trunc);

/// Truncated coherent state e^{-|a|^2/2} a^n / sqrt(n!), n = 0..ncut (not renormalised).
Eigen::VectorXcd coherent_vector(cplx alpha, int ncut);

/// |qubit> (x) |field> with qubit amplitudes in the sigma_x basis.
Eigen::VectorXcd product_state(const Eigen::Vector2cd& qubit, const Eigen::VectorXcd& field);

/// Eigendecomposition of one subsystem Hamiltonian, reused for every time.
///
/// In the degenerate regime the Hamiltonian splits into independent up and
/// down blocks, which are diagonalised separately.
class SubsystemPropagator {
public:
    static SubsystemPropagator build(const ModelParams& params, const TruncationSpec& trunc);

    const ModelParams& params() const { return params_; }
    int ncut() const { return ncut_; }
    int dim() const { return 2 * (ncut_ + 1); }

    /// Dense H / omega.
    const Eigen::MatrixXd& hamiltonian() const { return hamiltonian_; }

    /// All eigenvalues of H / omega, ascending.
    Eigen::VectorXd energies() const;

    /// Orthogonal matrix of eigenvectors, columns ordered block by block.
    Eigen::MatrixXd eigenvectors() const;

    Eigen::MatrixXcd unitary(double omega_t) const;

    /// Applies exp(-i H t) to every column of `states`.
    Eigen::MatrixXcd propagate(const Eigen::MatrixXcd& states, double omega_t) const;

private:
    struct Block {
        int offset;
        Eigen::VectorXd energies;
        Eigen::MatrixXd vectors;
    };

    SubsystemPropagator(const ModelParams& params, int ncut) : params_(params), ncut_(ncut) {}

    ModelParams params_;
    int ncut_;
    Eigen::MatrixXd hamiltonian_;
    std::vector<Block> blocks_;
};

/// exp(-i H t) |state> for one vector. Throws InvalidInput on dimension mismatch.
Eigen::VectorXcd propagate_state(const SubsystemPropagator& prop, const Eigen::VectorXcd& state, double omega_t);

/// exp(-i H t) rho exp(+i H t).
Eigen::MatrixXcd propagate_density(const SubsystemPropagator& prop, const Eigen::MatrixXcd& rho, double omega_t);

/// M[i][k] = Tr_field[U (|i><k| (x) F) U^dag] for i, k in {up, down}.
struct SubsystemConditionalMap {
    std::array<std::array<Mat2, 2>, 2> m;
    double field_norm = 1.0;  // Tr F over the truncated space
    double tail_mass = 0.0;
};

SubsystemConditionalMap conditional_maps(const SubsystemPropagator& prop, const FieldSpec& field,
                                         const TruncationSpec& trunc, double omega_t);

/// Two-qubit state at the time the maps were taken, for the product initial
/// state (qubits) (x) F_a (x) F_b. Renormalised by the truncated field norms;
/// returned in the SigmaX basis.
QubitPairState two_qubit_reduced(const SubsystemConditionalMap& map_a, const SubsystemConditionalMap& map_b,
                                 const QubitPairState& initial);

/// Evolved pure state of qubit A, field a, qubit B, field b for a Bell input and
/// identical pure fields. Stored as psi(qa * n + fa, qb * n + fb) with n = ncut+1.
class FourPartyState {
public:
    static FourPartyState evolve(const SubsystemPropagator& prop_a, const SubsystemPropagator& prop_b,
                                 BellState bell, const FieldSpec& field, const TruncationSpec& trunc,
                                 double omega_t);

    int field_dim() const { return n_; }
    const Eigen::MatrixXcd& amplitudes() const { return psi_; }

    /// Both qubits traced out; (ncut+1)^2 square, field a is the first factor.
    Eigen::MatrixXcd fields() const;
    Mat4 qubits() const;
    Mat2 qubit_a() const;
    Eigen::MatrixXcd field_a() const;

private:
    FourPartyState(Eigen::MatrixXcd psi, int n) : psi_(std::move(psi)), n_(n) {}
    Eigen::MatrixXcd psi_;
    int n_;
};

/// Field-field reduced density matrix of FourPartyState::evolve. Rejects mixed fields.
Eigen::MatrixXcd field_field_reduced(const SubsystemPropagator& prop_a, const SubsystemPropagator& prop_b,
                                     BellState bell, const FieldSpec& field, const TruncationSpec& trunc,
                                     double omega_t);

/// Oracle concurrence over a phase grid, with a cutoff-doubling check.
struct OracleTrace {
    std::vector<double> concurrence;  // at ncut
    int ncut = 0;
    double tail_mass = 0.0;
    double doubling_error = 0.0;      // max |C(ncut) - C(2 ncut)| over the checked points
};

/// Throws TruncationError when the doubling error exceeds doubling_tol.
/// The doubling check runs on every `doubling_stride`-th grid point (and the last one).
OracleTrace concurrence_trace(const ModelParams& params, const FieldSpec& field, const QubitPairState& initial,
                              const std::vector<double>& omega_t_grid, const TruncationSpec& trunc,
                              double doubling_tol, int doubling_stride = 1);

}  // namespace degjc::oracle
