// discord_oracle.cpp — brute-force projective-measurement discord.

#include "puredeph/discord_oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace puredeph::oracle {

namespace {

// ⟨v| ⊗ 1 ρ |v⟩ ⊗ 1 (measured first) or 1 ⊗ ⟨v| ρ 1 ⊗ |v⟩ (measured second).
Matrix conditional_block(const Matrix& rho, Index other, std::size_t measured, const Eigen::Vector2cd& v) {
    Matrix out = Matrix::Zero(other, other);
    for (Index x = 0; x < 2; ++x) {
        for (Index y = 0; y < 2; ++y) {
            const Complex w = std::conj(v(x)) * v(y);
            if (measured == 0) {
                out += w * rho.block(x * other, y * other, other, other);
            } else {
                for (Index k = 0; k < other; ++k) {
                    for (Index q = 0; q < other; ++q) out(k, q) += w * rho(k * 2 + x, q * 2 + y);
                }
            }
        }
    }
    return out;
}

struct Problem {
    const Matrix& rho;
    Index other;
    std::size_t measured;

    double cost(double theta, double phi) const {
        const Complex e = std::polar(1.0, phi);
        Eigen::Vector2cd up(std::cos(theta / 2.0), e * std::sin(theta / 2.0));
        Eigen::Vector2cd down(-std::conj(e) * std::sin(theta / 2.0), std::cos(theta / 2.0));
        double total = 0.0;
        for (const auto& v : {up, down}) {
            const Matrix block = conditional_block(rho, other, measured, v);
            const double p = block.trace().real();
            if (p > 1e-15) total += p * linalg::von_neumann_entropy(block / p);
        }
        return total;
    }
};

template <class F>
double golden_section(F&& f, double lo, double hi, int iterations) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

}  // namespace

double conditional_entropy(const linalg::DensityMatrix& sigma, std::size_t measured, double theta, double phi) {
    const auto& dims = sigma.subsystem_dims();
    if (dims.size() != 2 || measured > 1) {
        throw std::invalid_argument("discord_oracle: expected a two-party state and measured subsystem 0 or 1");
    }
    if (dims[measured] != 2) throw std::invalid_argument("discord_oracle: measured subsystem must be a qubit");
    return Problem{sigma.matrix(), dims[1 - measured], measured}.cost(theta, phi);
}

DiscordEstimate discord_estimate(const linalg::DensityMatrix& sigma, std::size_t measured, const BlochGrid& grid) {
    const auto& dims = sigma.subsystem_dims();
    if (dims.size() != 2 || measured > 1) {
        throw std::invalid_argument("discord_oracle: expected a two-party state and measured subsystem 0 or 1");
    }
    if (dims[measured] != 2) throw std::invalid_argument("discord_oracle: measured subsystem must be a qubit");
    if (sigma.dim() > 16) throw std::invalid_argument("discord_oracle: total dimension above 16");
    if (grid.polar < 2 || grid.azimuthal < 1) throw std::invalid_argument("discord_oracle: grid too coarse");

    const Matrix& rho = sigma.matrix();
    const Problem problem{rho, dims[1 - measured], measured};

    // D = S(measured) − S(joint) + min Σ p_k S(other|k).
    const double s_measured = linalg::von_neumann_entropy(linalg::partial_trace(rho, dims, measured));
    const double s_joint = linalg::von_neumann_entropy(rho);

    const double d_theta = std::numbers::pi / (grid.polar - 1);
    const double d_phi = 2.0 * std::numbers::pi / grid.azimuthal;
    DiscordEstimate best;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.polar; ++i) {
        for (int j = 0; j < grid.azimuthal; ++j) {
            const double theta = i * d_theta;
            const double phi = j * d_phi;
            const double c = problem.cost(theta, phi);
            if (c < best_cost) {
                best_cost = c;
                best.theta = theta;
                best.phi = phi;
            }
        }
    }

    double theta = best.theta;
    double phi = best.phi;
    for (int round = 0; round < grid.refine_rounds; ++round) {
        const double t_new = golden_section([&](double x) { return problem.cost(x, phi); }, theta - d_theta,
                                            theta + d_theta, 40);
        const double p_new = golden_section([&](double x) { return problem.cost(t_new, x); }, phi - d_phi,
                                            phi + d_phi, 40);
        const double c = problem.cost(t_new, p_new);
        if (c < best_cost) {
            best_cost = c;
            best.theta = t_new;
            best.phi = p_new;
        }
        theta = t_new;
        phi = p_new;
    }

    best.discord = s_measured - s_joint + best_cost;
    return best;
}

}  // namespace puredeph::oracle
