// linalg.cpp — dense complex matrix foundation.

#include "puredeph/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace puredeph::linalg {

namespace {

Index product(const std::vector<Index>& dims) {
    return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

void require_dims(const Matrix& m, const std::vector<Index>& dims, const char* what) {
    if (dims.empty()) throw std::invalid_argument(std::string(what) + ": empty subsystem_dims");
    for (Index d : dims) {
        if (d <= 0) throw std::invalid_argument(std::string(what) + ": subsystem dimension must be positive");
    }
    if (product(dims) != m.rows()) {
        throw std::invalid_argument(std::string(what) + ": product of subsystem_dims (" +
                                    std::to_string(product(dims)) + ") does not match matrix dimension (" +
                                    std::to_string(m.rows()) + ")");
    }
}

}  // namespace

void require_square_finite(const Matrix& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
    }
    if (!m.allFinite()) throw std::invalid_argument(std::string(what) + ": matrix has non-finite entries");
}

HermitianOperator::HermitianOperator(const Matrix& m, double tol) {
    require_square_finite(m, "HermitianOperator");
    const double skew = (m - m.adjoint()).norm();
    if (skew > tol * std::max(1.0, m.norm())) {
        throw std::invalid_argument("HermitianOperator: matrix is not self-adjoint (‖M − M†‖_F = " +
                                    std::to_string(skew) + ")");
    }
    m_ = 0.5 * (m + m.adjoint());
}

UnitaryOperator::UnitaryOperator(Matrix m, double tol) : m_(std::move(m)) {
    require_square_finite(m_, "UnitaryOperator");
    const double defect = (m_ * m_.adjoint() - Matrix::Identity(m_.rows(), m_.cols())).norm();
    if (defect > tol * std::max(1.0, std::sqrt(static_cast<double>(m_.rows())) / 8.0)) {
        throw std::invalid_argument("UnitaryOperator: ‖UU† − 1‖_F = " + std::to_string(defect));
    }
}

UnitaryOperator UnitaryOperator::identity(Index dim) {
    return UnitaryOperator(Matrix::Identity(dim, dim));
}

UnitaryOperator UnitaryOperator::adjoint() const {
    UnitaryOperator u;
    u.m_ = m_.adjoint();
    return u;
}

DensityMatrix::DensityMatrix(const Matrix& m) : DensityMatrix(m, std::vector<Index>{m.rows()}) {}

DensityMatrix::DensityMatrix(const Matrix& m, std::vector<Index> subsystem_dims)
    : dims_(std::move(subsystem_dims)) {
    require_square_finite(m, "DensityMatrix");
    require_dims(m, dims_, "DensityMatrix");
    const double skew = (m - m.adjoint()).norm();
    if (skew > kHermitianTolerance * std::max(1.0, m.norm())) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian (‖M − M†‖_F = " +
                                    std::to_string(skew) + ")");
    }
    m_ = 0.5 * (m + m.adjoint());
    const Complex tr = m_.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) + " differs from 1");
    }
    const RealVector spectrum = hermitian_eigenvalues(m_);
    if (spectrum.minCoeff() < -kPsdTolerance) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " + std::to_string(spectrum.minCoeff()));
    }
}

EigenSystem hermitian_eig(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: eigensolver failed");
    EigenSystem out{solver.eigenvalues(), solver.eigenvectors()};
    for (Index c = 0; c < out.vectors.cols(); ++c) {
        for (Index r = 0; r < out.vectors.rows(); ++r) {
            const Complex z = out.vectors(r, c);
            if (std::abs(z) > 1e-8) {
                out.vectors.col(c) *= std::conj(z) / std::abs(z);
                out.vectors(r, c) = std::abs(z);
                break;
            }
        }
    }
    return out;
}

RealVector hermitian_eigenvalues(const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
    return solver.eigenvalues();
}

std::vector<std::pair<Index, Index>> eigen_clusters(const RealVector& ascending, double gap) {
    std::vector<std::pair<Index, Index>> clusters;
    Index start = 0;
    for (Index i = 1; i <= ascending.size(); ++i) {
        if (i == ascending.size() || ascending(i) - ascending(i - 1) >= gap) {
            clusters.emplace_back(start, i);
            start = i;
        }
    }
    return clusters;
}

UnitaryOperator unitary_exp(const HermitianOperator& h, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("unitary_exp: non-finite time");
    const EigenSystem es = hermitian_eig(h);
    Vector phases(es.values.size());
    for (Index i = 0; i < es.values.size(); ++i) phases(i) = std::polar(1.0, -es.values(i) * t);
    return UnitaryOperator(es.vectors * phases.asDiagonal() * es.vectors.adjoint());
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

Matrix partial_trace(const Matrix& m, const std::vector<Index>& dims, std::size_t keep) {
    require_square_finite(m, "partial_trace");
    require_dims(m, dims, "partial_trace");
    if (dims.size() < 2) throw std::invalid_argument("partial_trace: need at least two subsystems");
    if (keep >= dims.size()) {
        throw std::invalid_argument("partial_trace: subsystem index " + std::to_string(keep) + " out of range");
    }
    const Index before = product(std::vector<Index>(dims.begin(), dims.begin() + static_cast<long>(keep)));
    const Index d = dims[keep];
    const Index after = product(std::vector<Index>(dims.begin() + static_cast<long>(keep) + 1, dims.end()));

    Matrix out = Matrix::Zero(d, d);
    for (Index a = 0; a < before; ++a) {
        // Strided view: rows/cols (a*d + x)*after + b for fixed (a, b).
        for (Index b = 0; b < after; ++b) {
            for (Index x = 0; x < d; ++x) {
                for (Index y = 0; y < d; ++y) {
                    out(x, y) += m((a * d + x) * after + b, (a * d + y) * after + b);
                }
            }
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep) {
    const Matrix reduced = partial_trace(rho.matrix(), rho.subsystem_dims(), keep);
    return DensityMatrix(reduced, {reduced.rows()});
}

Matrix partial_transpose(const Matrix& m, const std::vector<Index>& dims,
                         const std::vector<std::size_t>& transposed) {
    require_square_finite(m, "partial_transpose");
    require_dims(m, dims, "partial_transpose");
    std::vector<bool> flip(dims.size(), false);
    for (std::size_t s : transposed) {
        if (s >= dims.size()) {
            throw std::invalid_argument("partial_transpose: subsystem index " + std::to_string(s) + " out of range");
        }
        flip[s] = true;
    }

    const std::size_t k = dims.size();
    std::vector<Index> stride(k, 1);
    for (std::size_t s = k - 1; s > 0; --s) stride[s - 1] = stride[s] * dims[s];

    const Index n = m.rows();
    Matrix out(n, n);
    for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) {
            Index rr = 0;
            Index cc = 0;
            for (std::size_t s = 0; s < k; ++s) {
                const Index dr = (r / stride[s]) % dims[s];
                const Index dc = (c / stride[s]) % dims[s];
                rr += (flip[s] ? dc : dr) * stride[s];
                cc += (flip[s] ? dr : dc) * stride[s];
            }
            out(rr, cc) = m(r, c);
        }
    }
    return out;
}

double commutator_residual(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw std::invalid_argument("commutator_residual: dimension mismatch (" + std::to_string(a.rows()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    }
    return (a * b - b * a).norm();
}

bool is_normal(const Matrix& a, double tol) {
    const double scale = std::max(1.0, a.squaredNorm());
    return commutator_residual(a, a.adjoint()) <= tol * scale;
}

double von_neumann_entropy(const Matrix& rho) {
    const RealVector w = hermitian_eigenvalues(rho);
    double s = 0.0;
    for (Index i = 0; i < w.size(); ++i) {
        if (w(i) > 0.0) s -= w(i) * std::log2(w(i));
    }
    return s;
}

}  // namespace puredeph::linalg
