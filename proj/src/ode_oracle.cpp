#include "slabinv/ode_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace slabinv {

namespace {

struct State {
    Complex psi, dpsi;
};

// One RK4 step of psi'' = -K^2 n^2 psi with constant n.
State rk4_step(const State& u, double h, const Complex& minus_k2n2)
{
    auto f = [&](const State& s) { return State{s.dpsi, minus_k2n2 * s.psi}; };
    const State k1 = f(u);
    const State k2 = f({u.psi + 0.5 * h * k1.psi, u.dpsi + 0.5 * h * k1.dpsi});
    const State k3 = f({u.psi + 0.5 * h * k2.psi, u.dpsi + 0.5 * h * k2.dpsi});
    const State k4 = f({u.psi + h * k3.psi, u.dpsi + h * k3.dpsi});
    return {u.psi + h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi),
            u.dpsi + h / 6.0 * (k1.dpsi + 2.0 * k2.dpsi + 2.0 * k3.dpsi + k4.dpsi)};
}

void check_grid(double K, const IntegrationGrid& grid)
{
    if (grid.steps < 100)
        throw std::domain_error("integration grid needs at least 100 steps");
    if (K / static_cast<double>(grid.steps) > 0.5) {
        const auto required = static_cast<std::size_t>(std::ceil(K / 0.5));
        throw std::domain_error("integration grid too coarse for K = " + std::to_string(K)
                                + "; need at least " + std::to_string(required) + " steps");
    }
}

}  // namespace

AsymptoticCoefficients propagate(const SlabConfig& config, double K,
                                 const IntegrationGrid& grid,
                                 Complex a_minus, Complex b_minus)
{
    check_grid(K, grid);
    const Complex i(0.0, 1.0);
    const std::size_t per_layer = (grid.steps + 1) / 2;
    const double h = 0.5 / static_cast<double>(per_layer);

    // value and derivative at the left face z = -1/2
    const Complex e_minus = std::exp(-i * (0.5 * K));
    const Complex e_plus = std::exp(i * (0.5 * K));
    State u{a_minus * e_minus + b_minus * e_plus,
            i * K * (a_minus * e_minus - b_minus * e_plus)};

    for (const Complex& n : {config.n1, config.n2}) {
        const Complex minus_k2n2 = -K * K * n * n;
        for (std::size_t step = 0; step < per_layer; ++step)
            u = rk4_step(u, h, minus_k2n2);
    }

    // plane-wave matching at the right face z = +1/2
    AsymptoticCoefficients coeffs;
    coeffs.a_minus = a_minus;
    coeffs.b_minus = b_minus;
    coeffs.a_plus = 0.5 * (u.psi + u.dpsi / (i * K)) * e_minus;
    coeffs.b_plus = 0.5 * (u.psi - u.dpsi / (i * K)) * e_plus;
    return coeffs;
}

TransferMatrix integrate_transfer_matrix(const SlabConfig& config, double K,
                                         const IntegrationGrid& grid)
{
    const AsymptoticCoefficients col1 = propagate(config, K, grid, 1.0, 0.0);
    const AsymptoticCoefficients col2 = propagate(config, K, grid, 0.0, 1.0);
    return TransferMatrix{col1.a_plus, col2.a_plus, col1.b_plus, col2.b_plus};
}

double oracle_deviation(const SlabConfig& config, double K, const IntegrationGrid& grid)
{
    const TransferMatrix numeric = integrate_transfer_matrix(config, K, grid);
    const TransferMatrix closed = transfer_matrix(config, K);
    auto rel = [](const Complex& a, const Complex& b) {
        return std::abs(a - b) / std::max(1.0, std::abs(b));
    };
    return std::max(std::max(rel(numeric.m11, closed.m11), rel(numeric.m12, closed.m12)),
                    std::max(rel(numeric.m21, closed.m21), rel(numeric.m22, closed.m22)));
}

}  // namespace slabinv
