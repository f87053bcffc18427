// random.cpp — seeded generators for random operators and states.

#include "puredeph/random.hpp"

#include <cmath>

namespace puredeph {

double InstanceGenerator::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Complex InstanceGenerator::complex_gaussian() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

Matrix InstanceGenerator::ginibre(Index rows, Index cols) {
    Matrix g(rows, cols);
    // Fill row by row so the draw order does not depend on Eigen's storage order.
    for (Index r = 0; r < rows; ++r) {
        for (Index c = 0; c < cols; ++c) g(r, c) = complex_gaussian();
    }
    return g;
}

linalg::HermitianOperator InstanceGenerator::hermitian(Index dim, double scale) {
    const Matrix g = ginibre(dim, dim);
    return linalg::HermitianOperator(scale * 0.5 * (g + g.adjoint()));
}

linalg::DensityMatrix InstanceGenerator::ginibre_density(Index dim) {
    const Matrix g = ginibre(dim, dim);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return linalg::DensityMatrix(rho);
}

linalg::DensityMatrix InstanceGenerator::pure_density(Index dim) {
    Vector psi = ginibre(dim, 1).col(0);
    psi.normalize();
    return linalg::DensityMatrix(psi * psi.adjoint());
}

linalg::UnitaryOperator InstanceGenerator::haar_unitary(Index dim) {
    const Matrix g = ginibre(dim, dim);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR();
    for (Index i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
    }
    return linalg::UnitaryOperator(q);
}

RealVector InstanceGenerator::probabilities(Index dim) {
    RealVector p(dim);
    std::exponential_distribution<double> exp1(1.0);
    for (Index i = 0; i < dim; ++i) p(i) = exp1(engine_);
    return p / p.sum();
}

}  // namespace puredeph
