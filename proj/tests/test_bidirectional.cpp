#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "slabinv/bidirectional.hpp"
#include "slabinv/scattering.hpp"

using namespace slabinv;
using doctest::Approx;

namespace {

double identity_deviation(const SlabConfig& config, double K)
{
    const TransferMatrix m = transfer_matrix(config, K);
    return std::max(std::max(std::abs(m.m11 - 1.0), std::abs(m.m22 - 1.0)),
                    std::max(std::abs(m.m12), std::abs(m.m21)));
}

}  // namespace

TEST_CASE("odd resonance construction")
{
    const BidirResult r = bidirectional_config(BidirSpec{1, 1, 2, 1.0});
    CHECK(r.config.n1 == Complex(2, 0));
    CHECK(r.config.n2 == Complex(4, 0));
    CHECK(r.K == Approx(M_PI).epsilon(1e-15));
    CHECK(r.lambda_nm == Approx(2000.0).epsilon(1e-12));
    CHECK(identity_deviation(r.config, r.K) <= 1e-12);
}

TEST_CASE("even resonance construction with one vacuum layer")
{
    const BidirResult r = bidirectional_config(BidirSpec{2, 3, 1, 300.0});
    CHECK(r.config.n1 == Complex(3, 0));
    CHECK(r.config.n2 == Complex(1, 0));
    CHECK(r.K == Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(identity_deviation(r.config, r.K) <= 1e-12);
}

TEST_CASE("parity violations are rejected")
{
    // m'_+ = 2 even, m = 1 odd
    CHECK_THROWS_AS(bidirectional_config(BidirSpec{1, 1, 1, 1.0}), std::domain_error);
    // m'_+ = 5 odd, m = 2 even
    CHECK_THROWS_AS(bidirectional_config(BidirSpec{2, 3, 2, 1.0}), std::domain_error);
}

TEST_CASE("equal layers are rejected")
{
    CHECK_THROWS_AS(bidirectional_config(BidirSpec{2, 3, 3, 1.0}), std::domain_error);
}

TEST_CASE("sub-unit indices are rejected")
{
    CHECK_THROWS_AS(bidirectional_config(BidirSpec{4, 1, 3, 1.0}), std::domain_error);
    CHECK_THROWS_AS(bidirectional_config(BidirSpec{0, 1, 1, 1.0}), std::domain_error);
}

TEST_CASE("every parity-valid spec yields the identity matrix")
{
    std::mt19937 rng(1123);
    std::uniform_int_distribution<int> md(1, 6);
    int built = 0;
    while (built < 40) {
        const int m = md(rng);
        std::uniform_int_distribution<int> layer(m, 4 * m);
        const int m1 = layer(rng);
        int m2 = layer(rng);
        if ((m1 + m2 - m) % 2 != 0)
            ++m2;
        if (m1 == m2 || 2 * m2 < m)
            continue;
        const BidirResult r = bidirectional_config(BidirSpec{m, m1, m2, 123.0});
        CHECK(identity_deviation(r.config, r.K) <= 1e-12);
        CHECK(r.config.n1.imag() == 0.0);
        CHECK(r.config.n2.imag() == 0.0);
        // not PT-symmetric unless the layers match, yet fully invisible
        if (m1 != m2)
            CHECK(r.config.n1 != r.config.n2);
        ++built;
    }
}

TEST_CASE("half-integer resonance detection")
{
    CHECK(is_half_integer_resonance(M_PI));
    CHECK(is_half_integer_resonance(318.0 * M_PI));
    CHECK(is_half_integer_resonance(2.0 * M_PI));
    CHECK_FALSE(is_half_integer_resonance(2000.147552));
    CHECK_FALSE(is_half_integer_resonance(1.0));
    CHECK_THROWS_AS(is_half_integer_resonance(0.0), std::domain_error);
}
