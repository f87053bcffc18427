// linalg.hpp — dense complex matrix foundation: validated operator types,
// Hermitian eigendecomposition, spectral exponentials, tensor products,
// partial traces and residual norms.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace puredeph {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Relative threshold used for every boolean criterion verdict.
inline constexpr double kDefaultTolerance = 1e-9;

namespace linalg {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

// Throws std::invalid_argument if `m` is not square or holds NaN/Inf.
void require_square_finite(const Matrix& m, const char* what);

// Self-adjoint matrix. Stored symmetrized: (M + M†)/2.
class HermitianOperator {
public:
    HermitianOperator() = default;
    explicit HermitianOperator(const Matrix& m, double tol = kHermitianTolerance);

    const Matrix& matrix() const { return m_; }
    Index dim() const { return m_.rows(); }

private:
    Matrix m_;
};

class UnitaryOperator {
public:
    UnitaryOperator() = default;
    explicit UnitaryOperator(Matrix m, double tol = kUnitaryTolerance);

    static UnitaryOperator identity(Index dim);

    const Matrix& matrix() const { return m_; }
    Index dim() const { return m_.rows(); }
    UnitaryOperator adjoint() const;

private:
    Matrix m_;
};

// Unit-trace positive semidefinite matrix over a tensor-product space.
// subsystem_dims lists the factor dimensions, first factor outermost.
class DensityMatrix {
public:
    DensityMatrix() = default;
    DensityMatrix(const Matrix& m, std::vector<Index> subsystem_dims);
    explicit DensityMatrix(const Matrix& m);

    const Matrix& matrix() const { return m_; }
    const std::vector<Index>& subsystem_dims() const { return dims_; }
    Index dim() const { return m_.rows(); }

private:
    Matrix m_;
    std::vector<Index> dims_;
};

struct EigenSystem {
    RealVector values;  // ascending
    Matrix vectors;     // columns; first nonzero entry of each column real positive
};

EigenSystem hermitian_eig(const HermitianOperator& h);

// Eigenvalues only, for callers that do not need the basis (entropies, spectra).
RealVector hermitian_eigenvalues(const Matrix& h);

// Groups of consecutive indices into an ascending spectrum whose neighbouring
// gaps fall below `gap`. Each entry is [first, last).
std::vector<std::pair<Index, Index>> eigen_clusters(const RealVector& ascending, double gap);

// exp(-i H t) from the spectral decomposition of H.
UnitaryOperator unitary_exp(const HermitianOperator& h, double t);

// Kronecker product; entry (i*dimB + k, j*dimB + l) = A(i,j) * B(k,l).
Matrix tensor(const Matrix& a, const Matrix& b);

// Reduced state on subsystem `keep`; all other factors are traced out.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep);

// Same as above for a raw matrix with the given factorization.
Matrix partial_trace(const Matrix& m, const std::vector<Index>& dims, std::size_t keep);

// Partial transpose over every subsystem listed in `transposed`.
Matrix partial_transpose(const Matrix& m, const std::vector<Index>& dims,
                         const std::vector<std::size_t>& transposed);

// ‖AB − BA‖_F
double commutator_residual(const Matrix& a, const Matrix& b);

// [A, A†] = 0 within tol · max(1, ‖A‖_F²).
bool is_normal(const Matrix& a, double tol = kDefaultTolerance);

// Von Neumann entropy in bits, 0·log 0 := 0.
double von_neumann_entropy(const Matrix& rho);

}  // namespace linalg
}  // namespace puredeph
