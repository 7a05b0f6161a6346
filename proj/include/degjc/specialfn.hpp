// specialfn.hpp: Laguerre polynomials, thermal Fock weights, coherent-state overlaps

#pragma once

#include "degjc/model.hpp"

#include <vector>

namespace degjc::specialfn {

constexpr int kMaxLaguerreOrder = 10'000;

/// L_n(x) by the upward three-term recurrence
/// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
double laguerre(int n, double x);

/// Number of zeros of L_n strictly below x.
///
/// Uses the Sturm property of the recurrence: the count equals the number of
/// sign changes in L_0(x), L_1(x), ..., L_n(x).
int laguerre_roots_below(int n, double x);

struct ThermalWeights {
    std::vector<double> weights;  // p_n = nbar^n / (1+nbar)^(n+1), n = 0..ncut
    double tail_mass;             // sum over n > ncut, not folded back into weights
};

ThermalWeights thermal_weights(double nbar, int ncut);

/// <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
cplx coherent_overlap(cplx a, cplx b);

}  // namespace degjc::specialfn
