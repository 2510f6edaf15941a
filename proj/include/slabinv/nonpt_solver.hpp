#pragma once

#include <array>
#include <utility>

#include "slabinv/scattering.hpp"

// Constructor for non-PT-symmetric unidirectionally invisible slabs.
//
// Writing a_pm = K n_pm / 2 = x_pm + i y_pm, the two complex invisibility
// conditions become
//
//   a+^2 (cos a+ - cos K) - a-^2 (cos a- - cos K) = 0
//   (a+^2 - a-^2 + K^2) a+ sin a+ + (a+^2 - a-^2 - K^2) a- sin a-
//       - 2 (a+^2 - a-^2) K sin K = 0.
//
// Because x_pm and K are large, they are anchored to integers,
//
//   x_pm = 2 pi m_pm + gamma_pm / (2 pi m_pm),
//   K    = 2 pi m0  + gamma0  / (2 pi m0),
//
// which reduces the system at leading order to hyperbolic relations fixing
// y_pm and a 2x2 linear system fixing (gamma+, gamma-) given gamma0.

namespace slabinv {

struct NonPTSeed {
    int m_plus = 0;   // positive
    int m_minus = 0;  // any sign
    int m0 = 0;       // positive
    double gamma0 = 0.0;
};

// Unidirectional branch needs m0 < m_plus - |m_minus| (and m_minus != 0).
bool seed_feasible(const NonPTSeed& seed);

// gamma0 outside [-10, 10] leaves the perturbative regime the construction
// assumes; flagged, not fatal.
bool gamma0_typical(const NonPTSeed& seed);

// Integer anchors for target layer indices eta1, eta2 at wavenumber K_target:
// m0 = round(K/2pi), m_pm = round((eta1 +- eta2) m0 / 2). Callers may override
// any integer afterwards.
NonPTSeed seed_from_targets(double eta1, double eta2, double K_target, double gamma0);

struct NonPTIntermediates {
    double mu = 0.0;        // m+/m-
    double nu = 0.0;        // (m+^2 - m-^2 + m0^2)/(m+^2 - m-^2 - m0^2)
    double nu_plus = 0.0;   // 2 m+^2 / (m+^2 - m-^2 - m0^2)
    double nu_minus = 0.0;  // 2 m-^2 / (m+^2 - m-^2 - m0^2)
    double nu0 = 0.0;       // 2 m- m+ / (m+^2 - m-^2 - m0^2)
    double y_plus = 0.0;
    double y_minus = 0.0;
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
};

NonPTIntermediates intermediates(const NonPTSeed& seed);

// Hyperbolic branch data. The negative y_plus branch yields invisibility from
// the left, the positive one from the right; the two branches are exact
// complex conjugates of each other once assembled.
std::pair<double, double> y_branch(const NonPTSeed& seed, Side side);

// Solve the 2x2 linear system for (gamma_plus, gamma_minus) given gamma0.
// The coefficients are evaluated on the left-canonical branch, so both sides
// share one gamma pair.
std::pair<double, double> solve_gammas(const NonPTSeed& seed,
                                       std::pair<double, double> y, double gamma0);

struct NonPTSolution {
    NonPTSeed seed;
    NonPTIntermediates imd;
    double K = 0.0;
    Complex n1, n2;
    Side side = Side::Left;
    double x_plus = 0.0, x_minus = 0.0;
    ScatteringData validation;  // exact scattering data at K
};

NonPTSolution assemble_config(const NonPTSeed& seed, std::pair<double, double> y,
                              std::pair<double, double> gammas);

// Full pipeline: branch data, gammas, assembly, exact validation.
NonPTSolution build_invisible_config(const NonPTSeed& seed, Side side);

// The four real residuals (real and imaginary parts of the two complex
// conditions above) evaluated in expanded real arithmetic. All four vanish at
// exact invisible configurations.
std::array<double, 4> exact_nonpt_residuals(double x_plus, double x_minus,
                                            double y_plus, double y_minus, double K);

// Magnitude scale of the residual terms, for relative comparisons.
double nonpt_residual_scale(double x_plus, double x_minus,
                            double y_plus, double y_minus, double K);

}  // namespace slabinv
