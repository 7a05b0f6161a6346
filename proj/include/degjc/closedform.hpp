// closedform.hpp: Exact degenerate-regime dynamics (omega0 = 0)
//
// Every function here depends on time only through the dimensionless phase
// omega*t. gamma(t) = exp(i omega t) - 1 drives all of them, so every
// observable is periodic in omega*t with period 2*pi.

#pragma once

#include "degjc/model.hpp"

namespace degjc::closedform {

struct GammaValue {
    double omega_t;
    cplx gamma;   // exp(i omega_t) - 1, on the unit circle centred at -1
    double abs2;  // |gamma|^2 = 2 - 2 cos(omega_t), in [0, 4]
};

GammaValue gamma(double omega_t);

/// exp(-2 beta^2 |gamma|^2): field-independent envelope of the single-qubit coherence.
double modulation_factor(double beta, double omega_t);

/// Fourier transform of the field's P function, int d^2a P(a) exp(4 i beta Im[a conj(gamma)]).
///
///   Coherent(a0): exp(4 i beta Im[a0 conj(gamma)])
///   Number(N):    L_N(4 beta^2 |gamma|^2)
///   Thermal(n):   exp(-4 n beta^2 |gamma|^2)
///   Vacuum:       1
cplx characteristic_integral(const FieldSpec& field, double beta, const GammaValue& g);

/// <up|Q(t)|down> for an initial coherence q0 = <up|Q(0)|down> (SigmaX basis).
/// Throws InvalidInput when params is not degenerate or |q0| > 1/2.
cplx single_qubit_coherence(cplx q0, const FieldSpec& field, const ModelParams& params, double omega_t);

/// Nonzero off-diagonal element of the evolved two-qubit state, identical fields on both sides.
///
/// Phi+: Q_{up up, down down}(t) = exp(-4 beta^2 |gamma|^2) I^2 / 2
/// Phi-: Q_{up down, down up}(t) = exp(-4 beta^2 |gamma|^2) |I|^2 / 2
/// Psi+ and Psi- return the Phi+ and Phi- values. Their evolved states are the
/// Phi states rotated by sigma_x on qubit A, so the nonzero coherence has the same
/// magnitude (it sits at a mirrored position and may differ by a sign).
cplx two_qubit_offdiagonal(BellState bell, const FieldSpec& field, double beta, double omega_t);

/// Concurrence of an evolved Bell state: 2 |two_qubit_offdiagonal|. The same for all four Bell states.
double concurrence_closed(BellState bell, const FieldSpec& field, double beta, double omega_t);

/// ln concurrence_closed, evaluated in log space so that strongly damped thermal
/// traces stay finite where the concurrence itself underflows (-inf only at true zeros).
double log_concurrence_closed(BellState bell, const FieldSpec& field, double beta, double omega_t);

/// concurrence_closed at omega t = pi, where 4 beta^2 |gamma|^2 peaks at 16 beta^2.
double concurrence_at_half_period(const FieldSpec& field, double beta);

/// Concurrence for the ESD mixture with identical thermal fields.
///
/// The mixture stays an X state: diagonal (3/8, 1/8, 1/8, 3/8) is conserved
/// and the corner 3/8 decays with the Phi+ thermal factor, giving
/// max(0, 3/4 exp(-4(1+2 nbar) beta^2 |gamma|^2) - 1/4).
double esd_concurrence_closed(double beta, double nbar, double omega_t);

/// beta(t) = beta conj(gamma(t)): displacement of the up branch of an initially vacuum field.
cplx evolved_vacuum_state_amplitude(double beta, double omega_t);

struct PropagatedCoherent {
    cplx amplitude;  // coherent amplitude of the evolved field
    cplx phase;      // unit-modulus prefactor
};

/// U |s, alpha> = phase |s, amplitude> for s = up (spin_up) or down.
///
///   up:   amplitude (alpha+beta) e^{-i wt} - beta, phase e^{-i beta^2 sin wt} e^{ i beta Im[alpha conj(gamma)]}
///   down: amplitude (alpha-beta) e^{-i wt} + beta, phase e^{-i beta^2 sin wt} e^{ i beta Im[conj(alpha) gamma]}
///
/// The phase is relative to the Hamiltonian that includes the constant
/// hbar lambda^2/omega; without it both branches gain exp(+i beta^2 wt).
PropagatedCoherent propagate_coherent(cplx alpha, bool spin_up, double beta, double omega_t);

/// Full two-qubit state at omega t for any initial qubit state and identical fields on both qubits.
///
/// Diagonal SigmaX blocks are frozen; each qubit's up/down coherence picks up the
/// single-qubit factor c(t) and down/up picks up conj(c(t)). Returned in the SigmaX basis.
QubitPairState evolve_pair_closed(const QubitPairState& initial, const FieldSpec& field, double beta,
                                  double omega_t);

/// Purities of the reduced states of Phi+ (x) |0,0> after evolution.
struct BranchPurities {
    double qubit;       // one qubit: exactly 1/2
    double field;       // one field: 1/2 + 1/2 exp(-4|beta(t)|^2)
    double qubit_pair;  // both qubits: 1/2 + 1/2 exp(-8|beta(t)|^2)
    double field_pair;  // both fields: 1/2 + 1/2 exp(-8|beta(t)|^2)
};

BranchPurities vacuum_branch_purities(double beta, double omega_t);

/// Zeros of the number-state concurrence during one period, counted as sign
/// changes of the signed amplitude exp(-2 beta^2 |gamma|^2) L_N(4 beta^2 |gamma|^2)
/// sampled at `samples` equally spaced phases in [0, 2 pi].
int count_number_state_zeros(int n, double beta, int samples);

/// 2 * #{roots of L_N below 16 beta^2}: each root below the peak is crossed twice per period.
int predicted_number_state_zeros(int n, double beta);

}  // namespace degjc::closedform
