#pragma once

#include <utility>
#include <vector>

#include "slabinv/scattering.hpp"

// Root finder for PT-symmetric invisible configurations n1 = n2* = eta + i kappa.
//
// With that symmetry the two complex invisibility conditions collapse to two
// real equations in (eta, kappa, K),
//
//   (eta^2 cos(K eta) + kappa^2 cosh(K kappa)) / (eta^2 + kappa^2) = cos K
//   ((eta^2+kappa^2+1) eta sin(K eta) - (eta^2+kappa^2-1) kappa sinh(K kappa))
//       / (2 (eta^2+kappa^2)) = sin K
//
// which are even in kappa. The solver locates candidate K values from an
// approximate one-variable reduction valid for kappa^2 << eta^2, then refines
// each candidate on the exact pair with a two-variable Newton iteration.

namespace slabinv {

struct PTAux {
    double alpha;  // (eta^2+1)/(eta^2-1)
    double beta;   // 2 eta/(eta^2-1)
    double X;      // (K kappa)^2, positive root of the reduction quadratic
};

PTAux pt_aux(double eta, double K);

// Left-hand minus right-hand side of the two exact equations above.
// Throws std::range_error when |K kappa| > 700 (cosh overflow guard).
std::pair<double, double> exact_pt_residuals(double eta, double kappa, double K);

// Closed-form kappa(eta, K) from the reduction quadratic; sign picks the gain
// side (negative = gain in the left layer). Requires eta > 1.
double kappa_of(double eta, double K, double sign);

// One-variable root function F_branch(eta, K) whose zeros locate candidate
// invisible points. Returns NaN inside excluded intervals (negative
// discriminant) and -infinity where the log argument is not positive.
double f_branch(double eta, double K, int branch);

// K <= (2/|kappa|) ln(2 eta/|kappa|); +infinity for kappa == 0.
double kappa_bound(double eta, double kappa);

struct PTSolution {
    double eta = 0.0;
    double kappa = 0.0;
    double K = 0.0;
    Side side = Side::Left;
    std::pair<double, double> residuals{0.0, 0.0};  // exact equations at the solution
    // pre-refinement candidate, kept for approximation-quality studies
    double approx_K = 0.0;
    double approx_kappa = 0.0;
};

// Find every exact solution with the requested kappa sign in (K_lo, K_hi).
// Bracketing grid step 0.01 in K; candidates are sign changes of f_branch
// (signed-infinity sentinels participate as negative values) plus refined
// local minima of shallow valleys, which catch near-tangent roots the plain
// grid misses. Empty result is valid.
std::vector<PTSolution> scan_roots(double eta, double K_lo, double K_hi,
                                   double kappa_sign = -1.0);

}  // namespace slabinv
