#pragma once

#include "slabinv/scattering.hpp"

// Bidirectionally invisible slabs have rational real indices n1 = 2 m1/m,
// n2 = 2 m2/m at the half-wave resonance K = pi m (lambda = 2L/m). The
// integers m'_pm = m1 +- m2 must share the parity of m.

namespace slabinv {

struct BidirSpec {
    int m = 0;   // positive; K = pi m
    int m1 = 0;  // n1 = 2 m1 / m
    int m2 = 0;  // n2 = 2 m2 / m
    double thickness_um = 300.0;
};

struct BidirResult {
    SlabConfig config;
    double K = 0.0;
    double lambda_nm = 0.0;
};

// Throws std::domain_error on parity violation, n < 1, or n1 == n2 (only the
// empty slab is bidirectionally invisible with equal layers).
BidirResult bidirectional_config(const BidirSpec& spec);

// True iff K is an integer multiple of pi to 1e-9 relative, i.e. the slab
// thickness is a half-integer multiple of the wavelength.
bool is_half_integer_resonance(double K);

}  // namespace slabinv
