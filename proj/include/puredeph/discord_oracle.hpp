// discord_oracle.hpp — quantum discord from its original definition,
//   D = I(A:B) − max_{Π} J(Π),
// minimized by brute force over projective qubit measurements on the Bloch
// sphere. The result is an upper bound on the true discord.

#pragma once

#include "puredeph/linalg.hpp"

#include <cstddef>

namespace puredeph::oracle {

struct BlochGrid {
    int polar = 60;        // θ samples on [0, π], endpoints included
    int azimuthal = 120;   // φ samples on [0, 2π)
    int refine_rounds = 4; // alternating golden-section sweeps around the grid minimum
};

struct DiscordEstimate {
    double discord = 0.0;  // bits
    double theta = 0.0;    // optimal measurement axis
    double phi = 0.0;
};

// `measured` must index a two-dimensional factor of a two-party state.
DiscordEstimate discord_estimate(const linalg::DensityMatrix& sigma, std::size_t measured, const BlochGrid& grid = {});

inline double discord_oracle(const linalg::DensityMatrix& sigma, std::size_t measured, const BlochGrid& grid = {}) {
    return discord_estimate(sigma, measured, grid).discord;
}

// Σ_k p_k S(ρ_other|k) for the projective measurement along (θ, φ).
double conditional_entropy(const linalg::DensityMatrix& sigma, std::size_t measured, double theta, double phi);

}  // namespace puredeph::oracle
