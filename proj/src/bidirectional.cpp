#include "slabinv/bidirectional.hpp"

#include <cmath>

namespace slabinv {

BidirResult bidirectional_config(const BidirSpec& spec)
{
    if (spec.m <= 0)
        throw std::domain_error("bidirectional_config: m must be positive");
    const int mp = spec.m1 + spec.m2;
    const int mm = spec.m1 - spec.m2;
    if (((mp - spec.m) % 2) != 0 || ((mm - spec.m) % 2) != 0)
        throw std::domain_error("bidirectional_config: m1 +- m2 must share the parity of m");
    const double n1 = 2.0 * spec.m1 / spec.m;
    const double n2 = 2.0 * spec.m2 / spec.m;
    if (n1 < 1.0 || n2 < 1.0)
        throw std::domain_error("bidirectional_config: layer indices must be >= 1");
    if (spec.m1 == spec.m2)
        throw std::domain_error(
            "bidirectional_config: equal layers are invisible only for the empty slab");
    if (!(spec.thickness_um > 0.0))
        throw std::domain_error("bidirectional_config: thickness must be positive");

    BidirResult result;
    result.config = SlabConfig{Complex(n1, 0.0), Complex(n2, 0.0), spec.thickness_um};
    result.K = M_PI * spec.m;
    result.lambda_nm = 2.0 * spec.thickness_um * 1e3 / spec.m;  // 2L/m in nm
    return result;
}

bool is_half_integer_resonance(double K)
{
    if (!(K > 0.0))
        throw std::domain_error("is_half_integer_resonance: K must be positive");
    const double ratio = K / M_PI;
    return std::abs(ratio - std::round(ratio)) <= 1e-9 * std::max(1.0, ratio);
}

}  // namespace slabinv
