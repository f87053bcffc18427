// two_qubit.cpp — Bell pair under local pure dephasing.

#include "puredeph/two_qubit.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace puredeph::two_qubit {

TwoQubitModel::TwoQubitModel(double eps_a, double eps_b, HermitianOperator env_hamiltonian,
                             HermitianOperator coupling_a, EnvironmentState env)
    : eps_a_(eps_a), eps_b_(eps_b), h_env_(std::move(env_hamiltonian)), v_a_(std::move(coupling_a)),
      env_(std::move(env)) {
    if (!std::isfinite(eps_a_) || !std::isfinite(eps_b_)) {
        throw std::invalid_argument("TwoQubitModel: qubit energies must be finite");
    }
    if (v_a_.dim() != h_env_.dim()) throw std::invalid_argument("TwoQubitModel: V_A and H_E dimensions differ");
    if (env_.dim() != h_env_.dim()) throw std::invalid_argument("TwoQubitModel: R0 and H_E dimensions differ");
}

model::DephasingModel TwoQubitModel::effective_model() const {
    const Index n = env_dim();
    return model::DephasingModel(0.0, eps_a_ + eps_b_, h_env_, HermitianOperator(Matrix::Zero(n, n)), v_a_);
}

DensityMatrix evolve_bell(const TwoQubitModel& model, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("evolve_bell: non-finite time");
    const Index n = model.env_dim();
    const Matrix id = Matrix::Identity(n, n);

    // H is block diagonal in the two-qubit product basis |ab⟩ (index 2a + b).
    Matrix u = Matrix::Zero(4 * n, 4 * n);
    for (Index a = 0; a < 2; ++a) {
        for (Index b = 0; b < 2; ++b) {
            const Matrix h = model.env_hamiltonian().matrix() + static_cast<double>(a) * model.coupling_a().matrix() +
                             (a * model.eps_a() + b * model.eps_b()) * id;
            u.block((2 * a + b) * n, (2 * a + b) * n, n, n) =
                linalg::unitary_exp(HermitianOperator(h), t).matrix();
        }
    }

    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::numbers::sqrt2;
    const Matrix initial = linalg::tensor(bell * bell.adjoint(), model.env().density());
    return DensityMatrix(u * initial * u.adjoint(), {4, n});
}

DensityMatrix reduced_pair(const DensityMatrix& sigma) {
    const auto& dims = sigma.subsystem_dims();
    if (dims.size() != 2 || dims[0] != 4) throw std::invalid_argument("reduced_pair: expected subsystem_dims {4, N}");
    return DensityMatrix(linalg::partial_trace(sigma.matrix(), dims, 0), {2, 2});
}

correlation::EigenphaseDecomposition pair_decomposition(const TwoQubitModel& model, double t, double tol) {
    return correlation::simultaneous_eigenbasis(model.env(), model.effective_model(), t, tol);
}

double concurrence_closed_form(const correlation::EigenphaseDecomposition& decomp) {
    Complex sum = 0.0;
    for (Index n = 0; n < decomp.weights.size(); ++n) sum += decomp.weights(n) * std::polar(1.0, decomp.phases(n));
    return std::min(1.0, std::abs(sum));
}

double wootters_concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("wootters_concurrence: expected a 4x4 density matrix");

    // Subnormalized ensemble ρ = Σ |v_i⟩⟨v_i|; the λ_i are the singular values
    // of τ_ij = ⟨v_i| σy⊗σy |v_j*⟩.
    const linalg::EigenSystem es = linalg::hermitian_eig(HermitianOperator(rho.matrix()));
    Matrix v = es.vectors;
    for (Index i = 0; i < 4; ++i) v.col(i) *= std::sqrt(std::max(0.0, es.values(i)));

    Matrix flip = Matrix::Zero(4, 4);
    flip(0, 3) = flip(3, 0) = -1.0;
    flip(1, 2) = flip(2, 1) = 1.0;
    const Matrix tau = v.adjoint() * flip * v.conjugate();

    Eigen::JacobiSVD<Matrix> svd(tau);
    const RealVector s = svd.singularValues();  // descending
    return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double negativity(const Matrix& sigma, const Bipartition& cut) {
    if (cut.side_a.empty() || cut.side_a.size() >= cut.dims.size()) {
        throw std::invalid_argument("negativity: each side of the cut needs at least one subsystem");
    }
    std::vector<std::size_t> sorted = cut.side_a;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("negativity: repeated subsystem in the cut");
    }
    const Matrix pt = linalg::partial_transpose(sigma, cut.dims, cut.side_a);
    const RealVector w = linalg::hermitian_eigenvalues(0.5 * (pt + pt.adjoint()));
    double sum = 0.0;
    for (Index i = 0; i < w.size(); ++i) {
        if (w(i) < 0.0) sum -= w(i);
    }
    return sum;
}

double negativity(const DensityMatrix& sigma, const Bipartition& cut) {
    return negativity(sigma.matrix(), cut);
}

CycleTimes cycle_times(double phi0, double phi1, int count) {
    if (!std::isfinite(phi0) || !std::isfinite(phi1)) throw std::invalid_argument("cycle_times: non-finite phases");
    if (phi0 == phi1) throw std::invalid_argument("cycle_times: phi0 == phi1, no dephasing cycle");
    if (count < 0) throw std::invalid_argument("cycle_times: negative count");

    const double gap = std::abs(phi1 - phi0);
    CycleTimes out;
    out.phi0 = phi0;
    out.phi1 = phi1;
    out.period = 2.0 * std::numbers::pi / gap;
    for (int k = 0; k < count; ++k) {
        out.t_p.push_back(2.0 * std::numbers::pi * k / gap);
        out.t_q.push_back((2.0 * k + 1.0) * std::numbers::pi / gap);
    }
    return out;
}

TwoQubitModel fig1_model(double c0, double phi_gap) {
    if (!(c0 >= 0.0 && c0 <= 1.0)) throw std::invalid_argument("fig1_model: c0 must lie in [0, 1]");
    Matrix v = Matrix::Zero(2, 2);
    v(1, 1) = phi_gap;
    Matrix r = Matrix::Zero(2, 2);
    r(0, 0) = c0;
    r(1, 1) = 1.0 - c0;
    return TwoQubitModel(0.0, 0.0, HermitianOperator(Matrix::Zero(2, 2)), HermitianOperator(v),
                         EnvironmentState(DensityMatrix(r)));
}

Fig1Curve fig1_curve(double c0, double phi_gap, int samples) {
    if (!(c0 >= 0.5 && c0 <= 1.0)) {
        throw std::invalid_argument("fig1_curve: c0 = " + std::to_string(c0) + " outside [0.5, 1]");
    }
    if (!(phi_gap > 0.0) || !std::isfinite(phi_gap)) throw std::invalid_argument("fig1_curve: phi_gap must be positive");
    if (samples < 2) throw std::invalid_argument("fig1_curve: need at least two samples");

    const TwoQubitModel model = fig1_model(c0, phi_gap);
    Fig1Curve curve;
    curve.c0 = c0;
    curve.phi_gap = phi_gap;
    curve.period = cycle_times(0.0, phi_gap, 0).period;
    for (int k = 0; k < samples; ++k) {
        Fig1Sample s;
        s.t_normalized = static_cast<double>(k) / (samples - 1);
        s.t = curve.period * s.t_normalized;
        s.concurrence = std::abs(c0 + (1.0 - c0) * std::polar(1.0, phi_gap * s.t));
        s.wootters = wootters_concurrence(reduced_pair(evolve_bell(model, s.t)));
        curve.max_deviation = std::max(curve.max_deviation, std::abs(s.concurrence - s.wootters));
        curve.samples.push_back(s);
    }
    return curve;
}

}  // namespace puredeph::two_qubit
