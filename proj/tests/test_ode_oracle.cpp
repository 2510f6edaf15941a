#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "golden.hpp"
#include "slabinv/ode_oracle.hpp"

using namespace slabinv;
using doctest::Approx;

TEST_CASE("empty slab integrates to the identity")
{
    const SlabConfig empty{{1, 0}, {1, 0}};
    CHECK(oracle_deviation(empty, 5.0, IntegrationGrid{10000}) <= 1e-10);
}

TEST_CASE("golden PT sample: integration confirms the closed form")
{
    const SlabConfig config{Complex(3.4, golden::pt_kappa_ref),
                            Complex(3.4, -golden::pt_kappa_ref)};
    CHECK(oracle_deviation(config, golden::pt_K_ref, IntegrationGrid{1000000}) <= 1e-6);
}

TEST_CASE("moderate sample: entrywise agreement")
{
    const SlabConfig config{{2.3, 0.01}, {1.7, -0.02}};
    const TransferMatrix numeric = integrate_transfer_matrix(config, 37.5,
                                                             IntegrationGrid{100000});
    const TransferMatrix closed = transfer_matrix(config, 37.5);
    auto rel = [](const Complex& a, const Complex& b) {
        return std::abs(a - b) / std::max(1.0, std::abs(b));
    };
    CHECK(rel(numeric.m11, closed.m11) <= 1e-6);
    CHECK(rel(numeric.m12, closed.m12) <= 1e-6);
    CHECK(rel(numeric.m21, closed.m21) <= 1e-6);
    CHECK(rel(numeric.m22, closed.m22) <= 1e-6);
}

TEST_CASE("integrated matrix conserves the Wronskian")
{
    // determinant equals one without reference to the closed form
    const SlabConfig config{{3.1, 2e-3}, {1.4, -4e-3}, 300.0};
    for (double K : {3.0, 55.0, 200.0}) {
        const auto m = integrate_transfer_matrix(config, K, IntegrationGrid{100000});
        CHECK(std::abs(m.det() - 1.0) <= 1e-8);
    }
}

TEST_CASE("fourth-order convergence under grid refinement")
{
    const SlabConfig config{{2.3, 0.01}, {1.7, -0.02}};
    const double K = 37.5;
    const double coarse = oracle_deviation(config, K, IntegrationGrid{2000});
    const double fine = oracle_deviation(config, K, IntegrationGrid{4000});
    const double order = std::log2(coarse / fine);
    CHECK(order == Approx(4.0).epsilon(0.075));  // 4 +- 0.3
}

TEST_CASE("random admissible sweep stays within 1e-6")
{
    golden::RandomConfigGen gen(60601);
    for (int i = 0; i < 20; ++i) {
        const auto s = gen.next(1.0, 100.0);
        CHECK(oracle_deviation(SlabConfig{s.n1, s.n2}, s.K, IntegrationGrid{100000}) <= 1e-6);
    }
}

TEST_CASE("resolution guard names the required step count")
{
    const SlabConfig config{{2, 0}, {3, 0}};
    CHECK_THROWS_WITH_AS(integrate_transfer_matrix(config, 1000.0, IntegrationGrid{1000}),
                         doctest::Contains("2000"), std::domain_error);
    CHECK_THROWS_AS(integrate_transfer_matrix(config, 10.0, IntegrationGrid{50}),
                    std::domain_error);
}
