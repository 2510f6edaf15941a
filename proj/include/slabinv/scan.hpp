#pragma once

#include <cstddef>
#include <vector>

#include "slabinv/scattering.hpp"

namespace slabinv {

struct ScanRequest {
    SlabConfig config;
    double k_lo = 0.0;
    double k_hi = 0.0;
    std::size_t samples = 0;
};

struct ScanRow {
    double K, lambda_nm, t2m1, arg_t, rl2, rr2;
};

// Uniform sampling of the scattering observables over [k_lo, k_hi], rows in
// ascending K. Samples are computed in parallel chunks; output order and
// values are deterministic.
std::vector<ScanRow> run_scan(const ScanRequest& request);

struct BandResult {
    double lambda_min_nm = 0.0;
    double lambda_max_nm = 0.0;
    double threshold = 0.0;
    double width_nm = 0.0;
    bool empty = true;
};

// Largest contiguous wavelength interval around the |Rl|^2 minimum where
// |Rl|^2 stays below the threshold; edges bisected to 0.01 nm. Sampling
// resolution is `samples` points across [lambda_lo, lambda_hi].
BandResult reflectionless_band(const SlabConfig& config, double lambda_lo_nm,
                               double lambda_hi_nm, double threshold,
                               std::size_t samples = 10000);

struct DualityReport {
    InvisibilityClass original = InvisibilityClass::None;
    InvisibilityClass pt_transformed = InvisibilityClass::None;
    InvisibilityClass conjugated = InvisibilityClass::None;
    // statement i: the PT transform obeys M -> conj(M^-1), preserving the
    // invisibility structure of the entries
    double pt_rule_deviation = 0.0;
    bool statement_i_ok = false;
    // statement ii: conjugation swaps the off-diagonal moduli, exchanging
    // left- and right-invisibility
    double conj_swap_deviation = 0.0;
    bool statement_ii_ok = false;
};

DualityReport verify_duality(const SlabConfig& config, double K);

}  // namespace slabinv
