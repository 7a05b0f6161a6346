// model.hpp: Parameters, field descriptions and two-qubit states for the degenerate JC model

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace degjc {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

/// Raised when a parameter or state violates its invariants.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Oscillator frequency, qubit splitting and coupling of one qubit–oscillator subsystem.
///
/// Only omega and lambda are stored; beta is always recomputed as lambda/omega.
class ModelParams {
public:
    ModelParams(double omega, double omega0, double lambda);

    /// Parameters with the given dimensionless coupling beta = lambda/omega.
    static ModelParams from_beta(double beta, double omega = 1.0, double omega0 = 0.0);

    double omega() const { return omega_; }
    double omega0() const { return omega0_; }
    double lambda() const { return lambda_; }
    double beta() const { return lambda_ / omega_; }
    bool degenerate() const { return omega0_ == 0.0; }

    /// Throws InvalidInput unless omega0 == 0.
    void require_degenerate() const;

private:
    double omega_;
    double omega0_;
    double lambda_;
};

/// Initial oscillator state.
struct Vacuum {};
struct Coherent { cplx alpha0; };
struct Number { int n; };
struct Thermal { double nbar; };

class FieldSpec {
public:
    using Kind = std::variant<Vacuum, Coherent, Number, Thermal>;

    static FieldSpec vacuum() { return FieldSpec(Vacuum{}); }
    static FieldSpec coherent(cplx alpha0) { return FieldSpec(Coherent{alpha0}); }
    static FieldSpec number(int n);
    static FieldSpec thermal(double nbar);

    const Kind& kind() const { return kind_; }
    bool is_pure() const { return !std::holds_alternative<Thermal>(kind_); }

    /// Canonical text form, identical to the CLI syntax (e.g. "number:n=25").
    std::string describe() const;

private:
    explicit FieldSpec(Kind k) : kind_(k) {}
    Kind kind_;
};

enum class QubitBasis { SigmaX, SigmaZ };

std::string to_string(QubitBasis b);

/// Two-qubit density matrix with an explicit basis tag.
///
/// Index order is (qubit A, qubit B). In the SigmaX basis the product states are
/// ordered up-up, up-down, down-up, down-down; in SigmaZ they are ee, eg, ge, gg.
/// Construction checks Hermiticity, unit trace and positivity.
class QubitPairState {
public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPositivityTol = 1e-10;

    QubitPairState(const Mat4& rho, QubitBasis basis);

    static QubitPairState pure(const Vec4& psi, QubitBasis basis);

    const Mat4& rho() const { return rho_; }
    QubitBasis basis() const { return basis_; }
    cplx operator()(int i, int j) const { return rho_(i, j); }

private:
    Mat4 rho_;
    QubitBasis basis_;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

std::string to_string(BellState b);

/// Single-qubit map from SigmaZ components to SigmaX components
/// (|up> = (|e>+|g>)/sqrt2, |down> = (|e>-|g>)/sqrt2). Real, symmetric, involutive.
Mat2 sigma_x_from_sigma_z();

/// Bell state vector; Phi+- = (|ee> +- |gg>)/sqrt2 and Psi+- = (|eg> +- |ge>)/sqrt2
/// in SigmaZ, mapped per qubit for SigmaX.
Vec4 bell_vector(BellState variant, QubitBasis basis);

/// Bell state (defined on e/g) expressed in the requested basis.
QubitPairState make_bell(BellState variant, QubitBasis basis);

/// 3/4 Phi+ + 1/8 |up,down><up,down| + 1/8 |down,up><down,up|, in the SigmaX basis.
QubitPairState make_esd_mixture();

QubitPairState change_basis(const QubitPairState& state, QubitBasis target);

}  // namespace degjc
