// entanglement.hpp: Wootters concurrence, X-state shortcut and negativity

#pragma once

#include "degjc/model.hpp"

#include <array>

namespace degjc::entanglement {

enum class ConcurrenceMethod { General, XStateShortcut };

struct ConcurrenceResult {
    double value;
    ConcurrenceMethod method;
    std::array<double, 4> spectrum{};  // descending s_i (General only)
};

/// C = max(0, s1 - s2 - s3 - s4), s_i the descending square roots of the eigenvalues
/// of rho (sy x sy) rho* (sy x sy). The state is moved to the SigmaZ basis first. The
/// s_i are the singular values of G^T (sy x sy) G for rho = G G^dag, which equals the
/// spectrum of sqrt(rho) rho~ sqrt(rho) without its loss of precision at low rank.
ConcurrenceResult wootters_concurrence(const QubitPairState& state);

/// Off-X entries larger than this make xstate_concurrence reject the input.
constexpr double kXStateTol = 1e-12;

/// C = 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)) for states that
/// are X-shaped in their own basis. Throws InvalidInput otherwise.
ConcurrenceResult xstate_concurrence(const QubitPairState& state);

bool is_x_state(const QubitPairState& state, double tol = kXStateTol);

/// X-state formula when the state is X-shaped in its own basis, Wootters otherwise.
ConcurrenceResult concurrence(const QubitPairState& state);

/// Partial transpose over the second factor of a dA x dB bipartite operator.
Eigen::MatrixXcd partial_transpose_b(const Eigen::MatrixXcd& rho, int dim_a, int dim_b);

/// Sum of |negative eigenvalues| of the partial transpose over B.
double negativity(const Eigen::MatrixXcd& rho, int dim_a, int dim_b);

/// Tr(rho^2).
double purity(const Eigen::MatrixXcd& rho);

}  // namespace degjc::entanglement
