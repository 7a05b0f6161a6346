// specialfn.cpp

#include "degjc/specialfn.hpp"

#include <cmath>
#include <string>

namespace degjc::specialfn {

namespace {

void check_order(int n, double x) {
    if (n < 0) throw InvalidInput("Laguerre order must be >= 0");
    if (n > kMaxLaguerreOrder) throw InvalidInput("Laguerre order exceeds " + std::to_string(kMaxLaguerreOrder));
    if (!std::isfinite(x)) throw InvalidInput("Laguerre argument must be finite");
}

}  // namespace

double laguerre(int n, double x) {
    check_order(n, x);
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

int laguerre_roots_below(int n, double x) {
    check_order(n, x);
    if (x <= 0.0) return 0;
    // A zero term carries the sign of its predecessor (Sturm convention).
    int changes = 0;
    double prev = 1.0;
    double cur = 1.0;
    int last_sign = 1;
    for (int k = 0; k < n; ++k) {
        const double next = k == 0 ? 1.0 - x : ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        if (cur == 0.0) continue;
        const int s = cur > 0.0 ? 1 : -1;
        if (s != last_sign) ++changes;
        last_sign = s;
    }
    return changes;
}

ThermalWeights thermal_weights(double nbar, int ncut) {
    if (!std::isfinite(nbar) || nbar < 0.0) throw InvalidInput("thermal nbar must be finite and >= 0");
    if (ncut < 0) throw InvalidInput("ncut must be >= 0");
    ThermalWeights tw;
    tw.weights.resize(static_cast<std::size_t>(ncut) + 1);
    const double ratio = nbar / (1.0 + nbar);
    double p = 1.0 / (1.0 + nbar);
    for (int n = 0; n <= ncut; ++n) {
        tw.weights[static_cast<std::size_t>(n)] = p;
        p *= ratio;
    }
    tw.tail_mass = std::pow(ratio, ncut + 1);
    return tw;
}

cplx coherent_overlap(cplx a, cplx b) {
    return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
}

}  // namespace degjc::specialfn
