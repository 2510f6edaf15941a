#pragma once

#include <cstddef>

#include "slabinv/scattering.hpp"

// Independent check of the closed-form transfer matrix: integrate
// psi'' + K^2 n(z)^2 psi = 0 across the slab (z in [-1/2, 1/2], slab units)
// with a fixed-step fourth-order scheme and rebuild the matrix from
// plane-wave matching at the faces. Never touches the closed-form entries.

namespace slabinv {

// Plane-wave coefficients on the two sides, psi -> A e^{iKz} + B e^{-iKz}.
struct AsymptoticCoefficients {
    Complex a_minus, b_minus;  // z -> -inf side
    Complex a_plus, b_plus;    // z -> +inf side
};

struct IntegrationGrid {
    std::size_t steps = 100000;  // total RK4 steps across both layers
};

// Throws std::domain_error when the grid resolves less than two steps per
// radian of vacuum phase (K/steps > 0.5), naming the required step count.
TransferMatrix integrate_transfer_matrix(const SlabConfig& config, double K,
                                         const IntegrationGrid& grid);

// Propagate one set of left-side coefficients across the slab.
AsymptoticCoefficients propagate(const SlabConfig& config, double K,
                                 const IntegrationGrid& grid,
                                 Complex a_minus, Complex b_minus);

// Max entrywise deviation |integrated - closed| / max(1, |closed|).
double oracle_deviation(const SlabConfig& config, double K, const IntegrationGrid& grid);

}  // namespace slabinv
