#include "slabinv/scan.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace slabinv {

namespace {

// Deterministic chunked parallel map: each worker fills disjoint index ranges
// of a preallocated buffer.
template <typename Fn>
void parallel_index_for(std::size_t count, Fn&& fn)
{
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, std::max<std::size_t>(1, count / 256));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i)
                fn(i);
        });
    }
    for (std::thread& t : pool)
        t.join();
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanRequest& request)
{
    if (!(request.k_lo < request.k_hi))
        throw std::domain_error("run_scan: need k_lo < k_hi");
    if (request.samples < 2)
        throw std::domain_error("run_scan: need at least 2 samples");

    const double step = (request.k_hi - request.k_lo) / static_cast<double>(request.samples - 1);
    std::vector<ScanRow> rows(request.samples);
    const SlabConfig config = request.config;
    parallel_index_for(request.samples, [&](std::size_t i) {
        const double K = request.k_lo + static_cast<double>(i) * step;
        const ScatteringData s = scattering_at(config, K);
        rows[i] = ScanRow{K,
                          wavelength_nm(K, config.thickness_m()),
                          s.t_coeff - 1.0,
                          std::arg(s.t),
                          s.rl_coeff,
                          s.rr_coeff};
    });
    return rows;
}

BandResult reflectionless_band(const SlabConfig& config, double lambda_lo_nm,
                               double lambda_hi_nm, double threshold, std::size_t samples)
{
    if (!(0.0 < lambda_lo_nm && lambda_lo_nm < lambda_hi_nm))
        throw std::domain_error("reflectionless_band: bad wavelength range");
    if (!(threshold > 0.0))
        throw std::domain_error("reflectionless_band: threshold must be positive");
    if (samples < 2)
        throw std::domain_error("reflectionless_band: need at least 2 samples");

    const double thickness = config.thickness_m();
    auto rl2_at = [&](double lambda_nm) {
        const double K = 2.0 * M_PI * thickness / (lambda_nm * 1e-9);
        return scattering_at(config, K).rl_coeff;
    };

    const double step = (lambda_hi_nm - lambda_lo_nm) / static_cast<double>(samples - 1);
    std::vector<double> values(samples);
    parallel_index_for(samples, [&](std::size_t i) {
        values[i] = rl2_at(lambda_lo_nm + static_cast<double>(i) * step);
    });

    const std::size_t i_min =
        static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());

    BandResult band;
    band.threshold = threshold;
    if (!(values[i_min] < threshold))
        return band;  // empty: nothing below threshold

    std::size_t lo = i_min, hi = i_min;
    while (lo > 0 && values[lo - 1] < threshold)
        --lo;
    while (hi + 1 < samples && values[hi + 1] < threshold)
        ++hi;

    auto lambda_of = [&](std::size_t i) { return lambda_lo_nm + static_cast<double>(i) * step; };

    // bisect each edge to 0.01 nm between the last inside and first outside sample
    auto bisect_edge = [&](double inside, double outside) {
        while (std::abs(outside - inside) > 0.01) {
            const double mid = 0.5 * (inside + outside);
            if (rl2_at(mid) < threshold)
                inside = mid;
            else
                outside = mid;
        }
        return 0.5 * (inside + outside);
    };

    band.lambda_min_nm = (lo == 0) ? lambda_lo_nm : bisect_edge(lambda_of(lo), lambda_of(lo - 1));
    band.lambda_max_nm =
        (hi + 1 == samples) ? lambda_hi_nm : bisect_edge(lambda_of(hi), lambda_of(hi + 1));
    band.width_nm = band.lambda_max_nm - band.lambda_min_nm;
    band.empty = false;
    return band;
}

DualityReport verify_duality(const SlabConfig& config, double K)
{
    DualityReport report;
    report.original = classify_invisibility(config, K);
    report.pt_transformed = classify_invisibility(pt_transform(config), K);
    report.conjugated = classify_invisibility(time_reverse(config), K);

    report.pt_rule_deviation = verify_pt_matrix_rule(config, K);
    const bool pt_class_ok = report.pt_transformed == report.original;
    report.statement_i_ok = report.pt_rule_deviation <= 1e-10 && pt_class_ok;

    const TransferMatrix m = transfer_matrix(config, K);
    const TransferMatrix mc = transfer_matrix(time_reverse(config), K);
    report.conj_swap_deviation = std::max(std::abs(std::abs(m.m21) - std::abs(mc.m12)),
                                          std::abs(std::abs(m.m12) - std::abs(mc.m21)));
    auto swapped = [](InvisibilityClass a, InvisibilityClass b) {
        if (a == InvisibilityClass::Left)
            return b == InvisibilityClass::Right;
        if (a == InvisibilityClass::Right)
            return b == InvisibilityClass::Left;
        return a == b;
    };
    report.statement_ii_ok = report.conj_swap_deviation <= 1e-10
                             && swapped(report.original, report.conjugated);
    return report;
}

}  // namespace slabinv
