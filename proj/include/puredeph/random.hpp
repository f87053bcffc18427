// random.hpp — seeded generators for random operators and states.

#pragma once

#include "puredeph/linalg.hpp"

#include <cstdint>
#include <random>

namespace puredeph {

// Every draw goes through one mt19937_64 stream, so a seed fixes the whole
// sequence of instances.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    Complex complex_gaussian();

    // Independent complex-Gaussian entries.
    Matrix ginibre(Index rows, Index cols);

    // scale · (G + G†)/2 with G Ginibre.
    linalg::HermitianOperator hermitian(Index dim, double scale = 1.0);

    // G G† / Tr(G G†).
    linalg::DensityMatrix ginibre_density(Index dim);

    // |ψ⟩⟨ψ| for a uniformly random unit vector ψ.
    linalg::DensityMatrix pure_density(Index dim);

    // Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
    linalg::UnitaryOperator haar_unitary(Index dim);

    // Uniform point on the probability simplex.
    RealVector probabilities(Index dim);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace puredeph
