// model.cpp: Parameter validation, Bell states and basis changes

#include "degjc/model.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <cstdio>

namespace degjc {

namespace {

std::string real_text(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Mat4 local_basis_map() {
    const Mat2 h = sigma_x_from_sigma_z();
    return Eigen::kroneckerProduct(h, h).eval();
}

Vec4 bell_vector_sigma_z(BellState variant) {
    const double s = 1.0 / std::sqrt(2.0);
    Vec4 v = Vec4::Zero();
    switch (variant) {
    case BellState::PhiPlus:  v(0) = s; v(3) = s;  break;
    case BellState::PhiMinus: v(0) = s; v(3) = -s; break;
    case BellState::PsiPlus:  v(1) = s; v(2) = s;  break;
    case BellState::PsiMinus: v(1) = s; v(2) = -s; break;
    }
    return v;
}

}  // namespace

ModelParams::ModelParams(double omega, double omega0, double lambda)
    : omega_(omega), omega0_(omega0), lambda_(lambda) {
    if (!std::isfinite(omega) || omega <= 0.0)
        throw InvalidInput("omega must be finite and > 0");
    if (!std::isfinite(omega0) || omega0 < 0.0)
        throw InvalidInput("omega0 must be finite and >= 0");
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw InvalidInput("lambda must be finite and >= 0");
}

ModelParams ModelParams::from_beta(double beta, double omega, double omega0) {
    if (!std::isfinite(beta) || beta < 0.0)
        throw InvalidInput("beta must be finite and >= 0");
    return ModelParams(omega, omega0, beta * omega);
}

void ModelParams::require_degenerate() const {
    if (!degenerate())
        throw InvalidInput("closed forms hold only in the degenerate regime (omega0 == 0), got omega0 = " +
                           real_text(omega0_));
}

FieldSpec FieldSpec::number(int n) {
    if (n < 0) throw InvalidInput("number state N must be >= 0");
    return FieldSpec(Number{n});
}

FieldSpec FieldSpec::thermal(double nbar) {
    if (!std::isfinite(nbar) || nbar < 0.0) throw InvalidInput("thermal nbar must be finite and >= 0");
    return FieldSpec(Thermal{nbar});
}

std::string FieldSpec::describe() const {
    struct Visitor {
        std::string operator()(const Vacuum&) const { return "vacuum"; }
        std::string operator()(const Coherent& c) const {
            return "coherent:alpha=" + real_text(c.alpha0.real()) + "," + real_text(c.alpha0.imag());
        }
        std::string operator()(const Number& n) const { return "number:n=" + std::to_string(n.n); }
        std::string operator()(const Thermal& t) const { return "thermal:nbar=" + real_text(t.nbar); }
    };
    return std::visit(Visitor{}, kind_);
}

std::string to_string(QubitBasis b) {
    return b == QubitBasis::SigmaX ? "sigma_x" : "sigma_z";
}

std::string to_string(BellState b) {
    switch (b) {
    case BellState::PhiPlus: return "phi+";
    case BellState::PhiMinus: return "phi-";
    case BellState::PsiPlus: return "psi+";
    case BellState::PsiMinus: return "psi-";
    }
    return "?";
}

QubitPairState::QubitPairState(const Mat4& rho, QubitBasis basis) : rho_(rho), basis_(basis) {
    if (!rho.allFinite()) throw InvalidInput("density matrix has non-finite entries");
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol)
        throw InvalidInput("density matrix is not Hermitian (deviation " + real_text(herm) + ")");
    const double tr = std::abs(rho.trace() - 1.0);
    if (tr > kTraceTol)
        throw InvalidInput("density matrix trace deviates from 1 by " + real_text(tr));
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -kPositivityTol)
        throw InvalidInput("density matrix is not positive semidefinite (min eigenvalue " +
                           real_text(min_eig) + ")");
}

QubitPairState QubitPairState::pure(const Vec4& psi, QubitBasis basis) {
    return QubitPairState(psi * psi.adjoint(), basis);
}

Mat2 sigma_x_from_sigma_z() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat2 h;
    h << s, s,
         s, -s;
    return h;
}

Vec4 bell_vector(BellState variant, QubitBasis basis) {
    const Vec4 z = bell_vector_sigma_z(variant);
    if (basis == QubitBasis::SigmaZ) return z;
    return local_basis_map() * z;
}

QubitPairState make_bell(BellState variant, QubitBasis basis) {
    const QubitPairState z = QubitPairState::pure(bell_vector_sigma_z(variant), QubitBasis::SigmaZ);
    return change_basis(z, basis);
}

QubitPairState make_esd_mixture() {
    Mat4 rho = Mat4::Zero();
    rho(0, 0) = rho(3, 3) = rho(0, 3) = rho(3, 0) = 3.0 / 8.0;
    rho(1, 1) = rho(2, 2) = 1.0 / 8.0;
    return QubitPairState(rho, QubitBasis::SigmaX);
}

QubitPairState change_basis(const QubitPairState& state, QubitBasis target) {
    if (state.basis() == target) return state;
    // The per-qubit map is its own inverse, so both directions use the same similarity.
    const Mat4 w = local_basis_map();
    Mat4 rho = w * state.rho() * w;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return QubitPairState(rho, target);
}

}  // namespace degjc
