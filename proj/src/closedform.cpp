// closedform.cpp

#include "degjc/closedform.hpp"

#include "degjc/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace degjc::closedform {

namespace {

void check_beta(double beta) {
    if (!std::isfinite(beta) || beta < 0.0) throw InvalidInput("beta must be finite and >= 0");
}

void check_phase(double omega_t) {
    if (!std::isfinite(omega_t)) throw InvalidInput("omega*t must be finite");
}

// Single-qubit coherence factor c(t) = <up|Q(t)|down> / <up|Q(0)|down>.
cplx coherence_factor(const FieldSpec& field, double beta, const GammaValue& g) {
    return std::exp(-2.0 * beta * beta * g.abs2) * characteristic_integral(field, beta, g);
}

}  // namespace

GammaValue gamma(double omega_t) {
    check_phase(omega_t);
    const double half = std::sin(0.5 * omega_t);
    // cos(x) - 1 = -2 sin^2(x/2) avoids cancellation near multiples of 2 pi.
    return GammaValue{omega_t, cplx(-2.0 * half * half, std::sin(omega_t)), 4.0 * half * half};
}

double modulation_factor(double beta, double omega_t) {
    check_beta(beta);
    return std::exp(-2.0 * beta * beta * gamma(omega_t).abs2);
}

cplx characteristic_integral(const FieldSpec& field, double beta, const GammaValue& g) {
    check_beta(beta);
    const double x = 4.0 * beta * beta * g.abs2;
    struct Visitor {
        double beta;
        const GammaValue& g;
        double x;
        cplx operator()(const Vacuum&) const { return 1.0; }
        cplx operator()(const Coherent& c) const {
            return std::polar(1.0, 4.0 * beta * std::imag(c.alpha0 * std::conj(g.gamma)));
        }
        cplx operator()(const Number& n) const { return specialfn::laguerre(n.n, x); }
        cplx operator()(const Thermal& t) const { return std::exp(-t.nbar * x); }
    };
    return std::visit(Visitor{beta, g, x}, field.kind());
}

cplx single_qubit_coherence(cplx q0, const FieldSpec& field, const ModelParams& params, double omega_t) {
    params.require_degenerate();
    if (std::abs(q0) > 0.5 + 1e-15) throw InvalidInput("single-qubit coherence must satisfy |q0| <= 1/2");
    return q0 * coherence_factor(field, params.beta(), gamma(omega_t));
}

cplx two_qubit_offdiagonal(BellState bell, const FieldSpec& field, double beta, double omega_t) {
    const GammaValue g = gamma(omega_t);
    const cplx integral = characteristic_integral(field, beta, g);
    const double envelope = 0.5 * std::exp(-4.0 * beta * beta * g.abs2);
    switch (bell) {
    case BellState::PhiPlus:
    case BellState::PsiPlus:
        return envelope * integral * integral;
    case BellState::PhiMinus:
    case BellState::PsiMinus:
        return envelope * std::norm(integral);
    }
    return 0.0;
}

double concurrence_closed(BellState bell, const FieldSpec& field, double beta, double omega_t) {
    return 2.0 * std::abs(two_qubit_offdiagonal(bell, field, beta, omega_t));
}

double log_concurrence_closed(BellState, const FieldSpec& field, double beta, double omega_t) {
    check_beta(beta);
    const double x = 4.0 * beta * beta * gamma(omega_t).abs2;
    struct Visitor {
        double x;
        double operator()(const Vacuum&) const { return 0.0; }
        double operator()(const Coherent&) const { return 0.0; }
        double operator()(const Number& n) const { return 2.0 * std::log(std::abs(specialfn::laguerre(n.n, x))); }
        double operator()(const Thermal& t) const { return -2.0 * t.nbar * x; }
    };
    return -x + std::visit(Visitor{x}, field.kind());
}

double concurrence_at_half_period(const FieldSpec& field, double beta) {
    check_beta(beta);
    const double x = 16.0 * beta * beta;
    struct Visitor {
        double x;
        double operator()(const Vacuum&) const { return std::exp(-x); }
        double operator()(const Coherent&) const { return std::exp(-x); }
        double operator()(const Number& n) const {
            const double l = specialfn::laguerre(n.n, x);
            return std::exp(-x) * l * l;
        }
        double operator()(const Thermal& t) const { return std::exp(-x * (1.0 + 2.0 * t.nbar)); }
    };
    return std::visit(Visitor{x}, field.kind());
}

double esd_concurrence_closed(double beta, double nbar, double omega_t) {
    check_beta(beta);
    if (!std::isfinite(nbar) || nbar < 0.0) throw InvalidInput("thermal nbar must be finite and >= 0");
    const double corner = std::exp(-4.0 * (1.0 + 2.0 * nbar) * beta * beta * gamma(omega_t).abs2);
    return std::max(0.0, 0.75 * corner - 0.25);
}

cplx evolved_vacuum_state_amplitude(double beta, double omega_t) {
    check_beta(beta);
    return beta * std::conj(gamma(omega_t).gamma);
}

PropagatedCoherent propagate_coherent(cplx alpha, bool spin_up, double beta, double omega_t) {
    check_beta(beta);
    const GammaValue g = gamma(omega_t);
    const cplx rot = std::polar(1.0, -omega_t);
    const double shift = spin_up ? beta : -beta;
    const cplx amplitude = (alpha + shift) * rot - shift;
    const double drift = -beta * beta * std::sin(omega_t);
    const double geometric = spin_up ? beta * std::imag(alpha * std::conj(g.gamma))
                                     : beta * std::imag(std::conj(alpha) * g.gamma);
    return PropagatedCoherent{amplitude, std::polar(1.0, drift + geometric)};
}

QubitPairState evolve_pair_closed(const QubitPairState& initial, const FieldSpec& field, double beta,
                                  double omega_t) {
    const QubitPairState x = change_basis(initial, QubitBasis::SigmaX);
    const cplx c = coherence_factor(field, beta, gamma(omega_t));
    // factor[i][k] multiplies |i><k| on one qubit (0 = up, 1 = down).
    const cplx factor[2][2] = {{1.0, c}, {std::conj(c), 1.0}};
    Mat4 rho;
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) {
            const int ia = row / 2, ib = row % 2;
            const int ka = col / 2, kb = col % 2;
            rho(row, col) = x(row, col) * factor[ia][ka] * factor[ib][kb];
        }
    }
    return QubitPairState(rho, QubitBasis::SigmaX);
}

BranchPurities vacuum_branch_purities(double beta, double omega_t) {
    const double b2 = std::norm(evolved_vacuum_state_amplitude(beta, omega_t));
    const double single = 0.5 + 0.5 * std::exp(-4.0 * b2);
    const double pair = 0.5 + 0.5 * std::exp(-8.0 * b2);
    return BranchPurities{0.5, single, pair, pair};
}

int count_number_state_zeros(int n, double beta, int samples) {
    check_beta(beta);
    if (n < 0) throw InvalidInput("number state N must be >= 0");
    if (samples < 2) throw InvalidInput("need at least two samples");
    int changes = 0;
    int last_sign = 0;
    for (int k = 0; k < samples; ++k) {
        const double wt = 2.0 * std::numbers::pi * k / (samples - 1);
        const double abs2 = gamma(wt).abs2;
        const double amp = std::exp(-2.0 * beta * beta * abs2) * specialfn::laguerre(n, 4.0 * beta * beta * abs2);
        if (amp == 0.0) continue;
        const int s = amp > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++changes;
        last_sign = s;
    }
    return changes;
}

int predicted_number_state_zeros(int n, double beta) {
    check_beta(beta);
    return 2 * specialfn::laguerre_roots_below(n, 16.0 * beta * beta);
}

}  // namespace degjc::closedform
