// entanglement.cpp

#include "degjc/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace degjc::entanglement {

namespace {

Mat4 spin_flip() {
    // sigma_y (x) sigma_y in the e/g product basis.
    Mat4 f = Mat4::Zero();
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
}

// G with rho = G G^dag, dropping eigenvalues at rounding level so that exact
// rank deficiency survives floating point.
Mat4 density_factor(const Mat4& rho) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
    const double cutoff = 1e-14 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    Eigen::Vector4d roots;
    for (int i = 0; i < 4; ++i) roots(i) = es.eigenvalues()(i) > cutoff ? std::sqrt(es.eigenvalues()(i)) : 0.0;
    return es.eigenvectors() * roots.asDiagonal();
}

}  // namespace

ConcurrenceResult wootters_concurrence(const QubitPairState& state) {
    const Mat4 rho = change_basis(state, QubitBasis::SigmaZ).rho();
    // rho rho~ is similar to G^dag rho~ G = M^dag M with M = G^T F G, so the square
    // roots of its eigenvalues are the singular values of M. Taking them directly
    // avoids square roots of eigenvalues that are zero up to rounding.
    const Mat4 g = density_factor(rho);
    const Mat4 m = g.transpose() * spin_flip() * g;
    Eigen::JacobiSVD<Mat4> svd(m);

    ConcurrenceResult out{0.0, ConcurrenceMethod::General, {}};
    for (int i = 0; i < 4; ++i) out.spectrum[static_cast<std::size_t>(i)] = svd.singularValues()(i);
    std::sort(out.spectrum.begin(), out.spectrum.end(), std::greater<>());
    const auto& s = out.spectrum;
    out.value = std::max(0.0, s[0] - s[1] - s[2] - s[3]);
    return out;
}

bool is_x_state(const QubitPairState& state, double tol) {
    const Mat4& r = state.rho();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && i + j != 3 && std::abs(r(i, j)) > tol) return false;
    return true;
}

ConcurrenceResult xstate_concurrence(const QubitPairState& state) {
    if (!is_x_state(state)) throw InvalidInput("xstate_concurrence requires an X-shaped density matrix");
    const Mat4& r = state.rho();
    const double d11 = std::max(0.0, r(0, 0).real());
    const double d22 = std::max(0.0, r(1, 1).real());
    const double d33 = std::max(0.0, r(2, 2).real());
    const double d44 = std::max(0.0, r(3, 3).real());
    const double a = std::abs(r(0, 3)) - std::sqrt(d22 * d33);
    const double b = std::abs(r(1, 2)) - std::sqrt(d11 * d44);
    return ConcurrenceResult{2.0 * std::max({0.0, a, b}), ConcurrenceMethod::XStateShortcut, {}};
}

ConcurrenceResult concurrence(const QubitPairState& state) {
    return is_x_state(state) ? xstate_concurrence(state) : wootters_concurrence(state);
}

Eigen::MatrixXcd partial_transpose_b(const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
    if (dim_a <= 0 || dim_b <= 0 || rho.rows() != rho.cols() ||
        rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
        throw InvalidInput("partial transpose: matrix is " + std::to_string(rho.rows()) + "x" +
                           std::to_string(rho.cols()) + ", dims are " + std::to_string(dim_a) + "x" +
                           std::to_string(dim_b));
    Eigen::MatrixXcd out(rho.rows(), rho.cols());
    for (int a = 0; a < dim_a; ++a)
        for (int c = 0; c < dim_a; ++c)
            out.block(a * dim_b, c * dim_b, dim_b, dim_b) = rho.block(a * dim_b, c * dim_b, dim_b, dim_b).transpose();
    return out;
}

double negativity(const Eigen::MatrixXcd& rho, int dim_a, int dim_b) {
    Eigen::MatrixXcd pt = partial_transpose_b(rho, dim_a, dim_b);
    pt = 0.5 * (pt + pt.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("negativity: eigensolver failed");
    double sum = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) < 0.0) sum -= es.eigenvalues()(i);
    return sum;
}

double purity(const Eigen::MatrixXcd& rho) {
    return (rho.array() * rho.transpose().array()).sum().real();
}

}  // namespace degjc::entanglement
