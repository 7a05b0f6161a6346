// oracle.cpp

#include "degjc/oracle.hpp"

#include "degjc/entanglement.hpp"
#include "degjc/specialfn.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace degjc::oracle {

namespace {

std::string describe_truncation(const FieldSpec& field, int ncut, double tail, double tol) {
    std::ostringstream os;
    os.precision(3);
    os << "field " << field.describe() << " truncated at ncut=" << ncut << " leaves tail mass " << tail
       << " > tail_tol " << tol;
    return os.str();
}

double poisson_tail(double mean, int ncut) {
    if (mean == 0.0) return 0.0;
    const double log_mean = std::log(mean);
    double sum = 0.0;
    for (int n = ncut + 1;; ++n) {
        const double term = std::exp(-mean + n * log_mean - std::lgamma(n + 1.0));
        sum += term;
        if (n > mean && term <= 1e-18 * sum) break;
        if (n > ncut + 100000) break;
    }
    return std::min(1.0, sum);
}

}  // namespace

double field_tail_mass(const FieldSpec& field, int ncut) {
    if (ncut < 0) throw InvalidInput("ncut must be >= 0");
    struct Visitor {
        int ncut;
        double operator()(const Vacuum&) const { return 0.0; }
        double operator()(const Coherent& c) const { return poisson_tail(std::norm(c.alpha0), ncut); }
        double operator()(const Number& n) const { return n.n > ncut ? 1.0 : 0.0; }
        double operator()(const Thermal& t) const { return std::pow(t.nbar / (1.0 + t.nbar), ncut + 1); }
    };
    return std::visit(Visitor{ncut}, field.kind());
}

int default_ncut(const FieldSpec& field, double beta, double tail_tol) {
    double a0 = 0.0, nbar = 0.0, n = 0.0;
    if (const auto* c = std::get_if<Coherent>(&field.kind())) a0 = std::abs(c->alpha0);
    if (const auto* t = std::get_if<Thermal>(&field.kind())) nbar = t->nbar;
    if (const auto* f = std::get_if<Number>(&field.kind())) n = f->n;
    const double reach = a0 + 2.0 * beta + 3.0 * std::sqrt(nbar) + std::sqrt(n);
    const int heuristic = static_cast<int>(std::ceil(reach * reach)) + 20;

    int tail_cut = 1;
    while (field_tail_mass(field, tail_cut) > tail_tol) {
        if (tail_cut > 1'000'000) throw TruncationError("no cutoff below 10^6 meets the tail tolerance");
        tail_cut = std::max(tail_cut + 1, static_cast<int>(tail_cut * 1.05));
    }
    // Back off the geometric stride to the smallest passing cutoff.
    while (tail_cut > 1 && field_tail_mass(field, tail_cut - 1) <= tail_tol) --tail_cut;
    return std::max(heuristic, tail_cut + 20);
}

double FieldEnsemble::norm() const {
    double total = 0.0;
    for (Eigen::Index j = 0; j < vectors.cols(); ++j)
        total += weights[static_cast<std::size_t>(j)] * vectors.col(j).squaredNorm();
    return total;
}

Eigen::VectorXcd coherent_vector(cplx alpha, int ncut) {
    if (ncut < 0) throw InvalidInput("ncut must be >= 0");
    Eigen::VectorXcd v(ncut + 1);
    v(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= ncut; ++n) v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    return v;
}

FieldEnsemble field_ensemble(const FieldSpec& field, const TruncationSpec& trunc) {
    if (trunc.ncut < 1) throw InvalidInput("ncut must be >= 1");
    const int n1 = trunc.ncut + 1;
    FieldEnsemble ens;
    ens.tail_mass = field_tail_mass(field, trunc.ncut);
    if (ens.tail_mass > trunc.tail_tol)
        throw TruncationError(describe_truncation(field, trunc.ncut, ens.tail_mass, trunc.tail_tol));

    if (const auto* t = std::get_if<Thermal>(&field.kind())) {
        const auto tw = specialfn::thermal_weights(t->nbar, trunc.ncut);
        ens.weights = tw.weights;
        ens.vectors = Eigen::MatrixXcd::Identity(n1, n1);
        return ens;
    }
    ens.weights = {1.0};
    ens.vectors = Eigen::MatrixXcd::Zero(n1, 1);
    if (const auto* c = std::get_if<Coherent>(&field.kind())) {
        ens.vectors.col(0) = coherent_vector(c->alpha0, trunc.ncut);
    } else if (const auto* f = std::get_if<Number>(&field.kind())) {
        ens.vectors(f->n, 0) = 1.0;
    } else {
        ens.vectors(0, 0) = 1.0;
    }
    return ens;
}

Eigen::VectorXcd product_state(const Eigen::Vector2cd& qubit, const Eigen::VectorXcd& field) {
    return Eigen::kroneckerProduct(qubit, field).eval();
}

SubsystemPropagator SubsystemPropagator::build(const ModelParams& params, const TruncationSpec& trunc) {
    if (trunc.ncut < 1) throw InvalidInput("ncut must be >= 1");
    SubsystemPropagator prop(params, trunc.ncut);
    const int n1 = trunc.ncut + 1;
    const int d = 2 * n1;
    const double beta = params.beta();
    const double split = 0.5 * params.omega0() / params.omega();

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (int q = 0; q < 2; ++q) {
        const double sign = q == 0 ? 1.0 : -1.0;
        const int off = q * n1;
        for (int n = 0; n < n1; ++n) {
            h(off + n, off + n) = n;
            if (n + 1 < n1) {
                h(off + n, off + n + 1) = sign * beta * std::sqrt(n + 1.0);
                h(off + n + 1, off + n) = h(off + n, off + n + 1);
            }
        }
    }
    for (int n = 0; n < n1; ++n) {
        h(n, n1 + n) = split;
        h(n1 + n, n) = split;
    }
    prop.hamiltonian_ = h;

    auto diagonalise = [&](int offset, int size) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.block(offset, offset, size, size));
        if (es.info() != Eigen::Success) {
            std::ostringstream os;
            os << "eigensolver failed on a " << size << "x" << size << " Hamiltonian block (ncut=" << trunc.ncut
               << ", beta=" << beta << ", max |H|=" << h.cwiseAbs().maxCoeff() << ")";
            throw SolverError(os.str());
        }
        prop.blocks_.push_back(Block{offset, es.eigenvalues(), es.eigenvectors()});
    };
    if (params.degenerate()) {
        diagonalise(0, n1);
        diagonalise(n1, n1);
    } else {
        diagonalise(0, d);
    }
    return prop;
}

Eigen::VectorXd SubsystemPropagator::energies() const {
    Eigen::VectorXd e(dim());
    Eigen::Index at = 0;
    for (const auto& b : blocks_) {
        e.segment(at, b.energies.size()) = b.energies;
        at += b.energies.size();
    }
    std::sort(e.data(), e.data() + e.size());
    return e;
}

Eigen::MatrixXd SubsystemPropagator::eigenvectors() const {
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(dim(), dim());
    for (const auto& b : blocks_) {
        const auto s = b.vectors.rows();
        v.block(b.offset, b.offset, s, s) = b.vectors;
    }
    return v;
}

Eigen::MatrixXcd SubsystemPropagator::unitary(double omega_t) const {
    return propagate(Eigen::MatrixXcd::Identity(dim(), dim()), omega_t);
}

Eigen::MatrixXcd SubsystemPropagator::propagate(const Eigen::MatrixXcd& states, double omega_t) const {
    if (states.rows() != dim())
        throw InvalidInput("state dimension " + std::to_string(states.rows()) + " does not match propagator dimension " +
                           std::to_string(dim()));
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(states.rows(), states.cols());
    for (const auto& b : blocks_) {
        const auto s = b.vectors.rows();
        const auto x = states.middleRows(b.offset, s);
        if (x.isZero(0.0)) continue;
        // V exp(-i E t) V^T x, with the real orthogonal V kept out of complex products.
        Eigen::MatrixXd re = b.vectors.transpose() * x.real();
        Eigen::MatrixXd im = b.vectors.transpose() * x.imag();
        for (Eigen::Index j = 0; j < s; ++j) {
            const double c = std::cos(b.energies(j) * omega_t);
            const double sn = std::sin(b.energies(j) * omega_t);
            const Eigen::RowVectorXd r = re.row(j);
            re.row(j) = c * r + sn * im.row(j);
            im.row(j) = c * im.row(j) - sn * r;
        }
        out.middleRows(b.offset, s).real() = b.vectors * re;
        out.middleRows(b.offset, s).imag() = b.vectors * im;
    }
    return out;
}

Eigen::VectorXcd propagate_state(const SubsystemPropagator& prop, const Eigen::VectorXcd& state, double omega_t) {
    return prop.propagate(state, omega_t).col(0);
}

Eigen::MatrixXcd propagate_density(const SubsystemPropagator& prop, const Eigen::MatrixXcd& rho, double omega_t) {
    if (rho.rows() != rho.cols()) throw InvalidInput("density matrix must be square");
    const Eigen::MatrixXcd left = prop.propagate(rho, omega_t);
    return prop.propagate(left.adjoint(), omega_t).adjoint();
}

SubsystemConditionalMap conditional_maps(const SubsystemPropagator& prop, const FieldSpec& field,
                                         const TruncationSpec& trunc, double omega_t) {
    if (trunc.ncut != prop.ncut())
        throw InvalidInput("truncation ncut " + std::to_string(trunc.ncut) + " differs from propagator ncut " +
                           std::to_string(prop.ncut()));
    const FieldEnsemble ens = field_ensemble(field, trunc);
    const int n1 = prop.ncut() + 1;
    Eigen::VectorXd root_w(ens.vectors.cols());
    for (Eigen::Index j = 0; j < root_w.size(); ++j) root_w(j) = std::sqrt(ens.weights[static_cast<std::size_t>(j)]);
    const Eigen::MatrixXcd weighted = ens.vectors * root_w.asDiagonal();

    std::array<Eigen::MatrixXcd, 2> evolved;
    for (int i = 0; i < 2; ++i) {
        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(prop.dim(), weighted.cols());
        x.middleRows(i * n1, n1) = weighted;
        evolved[static_cast<std::size_t>(i)] = prop.propagate(x, omega_t);
    }

    SubsystemConditionalMap out;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    out.m[i][k](a, b) = (evolved[i].middleRows(a * n1, n1).array() *
                                         evolved[k].middleRows(b * n1, n1).conjugate().array())
                                            .sum();
    out.field_norm = ens.norm();
    out.tail_mass = ens.tail_mass;
    return out;
}

QubitPairState two_qubit_reduced(const SubsystemConditionalMap& map_a, const SubsystemConditionalMap& map_b,
                                 const QubitPairState& initial) {
    const QubitPairState x = change_basis(initial, QubitBasis::SigmaX);
    Mat4 q = Mat4::Zero();
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) {
            const cplx c = x(row, col);
            if (c == 0.0) continue;
            const Mat2& ma = map_a.m[row / 2][col / 2];
            const Mat2& mb = map_b.m[row % 2][col % 2];
            q += c * Mat4(Eigen::kroneckerProduct(ma, mb));
        }
    }
    q /= map_a.field_norm * map_b.field_norm;
    q = 0.5 * (q + q.adjoint()).eval();
    return QubitPairState(q, QubitBasis::SigmaX);
}

FourPartyState FourPartyState::evolve(const SubsystemPropagator& prop_a, const SubsystemPropagator& prop_b,
                                      BellState bell, const FieldSpec& field, const TruncationSpec& trunc,
                                      double omega_t) {
    if (!field.is_pure()) throw InvalidInput("four-party state needs a pure field, got " + field.describe());
    if (prop_a.ncut() != trunc.ncut || prop_b.ncut() != trunc.ncut)
        throw InvalidInput("propagator cutoffs differ from the truncation settings");
    const FieldEnsemble ens = field_ensemble(field, trunc);
    const Eigen::VectorXcd v = ens.vectors.col(0);

    auto branches = [&](const SubsystemPropagator& prop) {
        Eigen::MatrixXcd x(prop.dim(), 2);
        x.col(0) = product_state(Eigen::Vector2cd(1.0, 0.0), v);
        x.col(1) = product_state(Eigen::Vector2cd(0.0, 1.0), v);
        return prop.propagate(x, omega_t);
    };
    const Vec4 c = bell_vector(bell, QubitBasis::SigmaX);
    Eigen::Matrix2cd coeff;
    coeff << c(0), c(1),
             c(2), c(3);
    Eigen::MatrixXcd psi = branches(prop_a) * coeff * branches(prop_b).transpose();
    psi /= psi.norm();
    return FourPartyState(std::move(psi), trunc.ncut + 1);
}

Eigen::MatrixXcd FourPartyState::fields() const {
    const int n = n_;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n * n, n * n);
    Eigen::VectorXcd v(n * n);
    for (int qa = 0; qa < 2; ++qa) {
        for (int qb = 0; qb < 2; ++qb) {
            const auto blk = psi_.block(qa * n, qb * n, n, n);
            for (int fa = 0; fa < n; ++fa)
                for (int fb = 0; fb < n; ++fb) v(fa * n + fb) = blk(fa, fb);
            rho.noalias() += v * v.adjoint();
        }
    }
    return rho;
}

Mat4 FourPartyState::qubits() const {
    const int n = n_;
    Mat4 q;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            q(r, c) = (psi_.block((r / 2) * n, (r % 2) * n, n, n).array() *
                       psi_.block((c / 2) * n, (c % 2) * n, n, n).conjugate().array())
                          .sum();
    return q;
}

Mat2 FourPartyState::qubit_a() const {
    const Mat4 q = qubits();
    Mat2 a;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) a(i, k) = q(2 * i, 2 * k) + q(2 * i + 1, 2 * k + 1);
    return a;
}

Eigen::MatrixXcd FourPartyState::field_a() const {
    const int n = n_;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
    for (int qa = 0; qa < 2; ++qa) {
        const auto rows = psi_.middleRows(qa * n, n);
        rho.noalias() += rows * rows.adjoint();
    }
    return rho;
}

Eigen::MatrixXcd field_field_reduced(const SubsystemPropagator& prop_a, const SubsystemPropagator& prop_b,
                                     BellState bell, const FieldSpec& field, const TruncationSpec& trunc,
                                     double omega_t) {
    return FourPartyState::evolve(prop_a, prop_b, bell, field, trunc, omega_t).fields();
}

OracleTrace concurrence_trace(const ModelParams& params, const FieldSpec& field, const QubitPairState& initial,
                              const std::vector<double>& omega_t_grid, const TruncationSpec& trunc,
                              double doubling_tol, int doubling_stride) {
    if (doubling_stride < 1) throw InvalidInput("doubling stride must be >= 1");
    auto run = [&](const TruncationSpec& t, const std::vector<std::size_t>& indices) {
        const SubsystemPropagator prop = SubsystemPropagator::build(params, t);
        std::vector<double> c;
        c.reserve(indices.size());
        double tail = 0.0;
        for (std::size_t idx : indices) {
            const SubsystemConditionalMap m = conditional_maps(prop, field, t, omega_t_grid[idx]);
            tail = m.tail_mass;
            c.push_back(entanglement::concurrence(two_qubit_reduced(m, m, initial)).value);
        }
        return std::pair{c, tail};
    };

    std::vector<std::size_t> all(omega_t_grid.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> checked;
    for (std::size_t i = 0; i < all.size(); i += static_cast<std::size_t>(doubling_stride)) checked.push_back(i);
    if (!all.empty() && checked.back() != all.back()) checked.push_back(all.back());

    OracleTrace out;
    out.ncut = trunc.ncut;
    auto [values, tail] = run(trunc, all);
    out.concurrence = std::move(values);
    out.tail_mass = tail;

    const TruncationSpec doubled{2 * trunc.ncut, trunc.tail_tol};
    const auto check = run(doubled, checked).first;
    for (std::size_t j = 0; j < checked.size(); ++j)
        out.doubling_error = std::max(out.doubling_error, std::abs(check[j] - out.concurrence[checked[j]]));
    if (out.doubling_error > doubling_tol) {
        std::ostringstream os;
        os << "cutoff doubling " << trunc.ncut << " -> " << doubled.ncut << " changed the concurrence by "
           << out.doubling_error << " > " << doubling_tol << " for field " << field.describe();
        throw TruncationError(os.str());
    }
    return out;
}

}  // namespace degjc::oracle
