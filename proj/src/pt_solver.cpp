#include "slabinv/pt_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace slabinv {

namespace {

constexpr double kGridStep = 0.01;
constexpr double kPreFilter = 1e-4;      // exact-residual cut before Newton
constexpr double kRefineTarget = 1e-12;  // Newton stops here
constexpr double kAcceptResidual = 1e-10;
constexpr double kMaxRefineShift = 0.5;  // K may not move further during refinement
constexpr double kValleyCeiling = 20.0;  // grid local minima below this get a closer look

double inf() { return std::numeric_limits<double>::infinity(); }

bool counts_negative(double v)
{
    // NaN (excluded interval) and the -inf sentinel both sit on the negative
    // side for bracketing purposes.
    return !(v >= 0.0);
}

}  // namespace

PTAux pt_aux(double eta, double K)
{
    if (!(eta > 1.0))
        throw std::domain_error("pt_aux: eta must exceed 1");
    if (!(K > 0.0))
        throw std::domain_error("pt_aux: K must be positive");
    PTAux aux;
    aux.alpha = (eta * eta + 1.0) / (eta * eta - 1.0);
    aux.beta = 2.0 * eta / (eta * eta - 1.0);
    const double g = aux.alpha * std::sin(K * eta) - aux.beta * std::sin(K);
    const double c = std::cos(K * eta) - std::cos(K);
    const double inner = std::sqrt(0.25 * g * g * g * g + c * c) - 0.5 * g * g;
    const double kappa_sq = eta * eta * std::max(inner, 0.0);
    aux.X = K * K * kappa_sq;
    return aux;
}

std::pair<double, double> exact_pt_residuals(double eta, double kappa, double K)
{
    if (!(eta * eta + kappa * kappa > 0.0))
        throw std::domain_error("exact_pt_residuals: eta and kappa cannot both vanish");
    if (std::abs(K * kappa) > 700.0)
        throw std::range_error("exact_pt_residuals: |K kappa| > 700 overflows cosh");
    const double mod_sq = eta * eta + kappa * kappa;
    const double r1 = (eta * eta * std::cos(K * eta) + kappa * kappa * std::cosh(K * kappa)) / mod_sq
                      - std::cos(K);
    const double r2 = ((mod_sq + 1.0) * eta * std::sin(K * eta)
                       - (mod_sq - 1.0) * kappa * std::sinh(K * kappa))
                          / (2.0 * mod_sq)
                      - std::sin(K);
    return {r1, r2};
}

double kappa_of(double eta, double K, double sign)
{
    if (!(eta > 1.0))
        throw std::domain_error("kappa_of: eta must exceed 1");
    if (!(K > 0.0))
        throw std::domain_error("kappa_of: K must be positive");
    const PTAux aux = pt_aux(eta, K);
    const double kappa_mag = std::sqrt(aux.X) / K;
    return (sign < 0.0 ? -kappa_mag : kappa_mag);
}

double f_branch(double eta, double K, int branch)
{
    const double kappa = kappa_of(eta, K, -1.0);
    if (kappa == 0.0)
        return -inf();
    const double c = std::cos(K) - std::cos(K * eta);
    const double kap_sq_rel = kappa * kappa / (eta * eta);
    const double disc = c * c - kap_sq_rel * kap_sq_rel;
    if (disc < 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    const double arg = (c + branch * std::sqrt(disc)) / kap_sq_rel;
    if (!(arg > 0.0))
        return -inf();
    return K * std::abs(kappa) - std::log(arg);
}

double kappa_bound(double eta, double kappa)
{
    if (!(eta > 0.0))
        throw std::domain_error("kappa_bound: eta must be positive");
    if (kappa == 0.0)
        return inf();
    return 2.0 / std::abs(kappa) * std::log(2.0 * eta / std::abs(kappa));
}

namespace {

// Two-variable Newton on the exact residual pair, Jacobian by central
// differences, with step halving when the residual norm fails to shrink.
struct RefineResult {
    double kappa, K;
    std::pair<double, double> res;
    bool converged;
};

std::optional<std::pair<double, double>> safe_residuals(double eta, double kappa, double K)
{
    try {
        return exact_pt_residuals(eta, kappa, K);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct NewtonStep {
    double dk, dK;
    bool ok;
};

NewtonStep newton_direction(double eta, double kappa, double K,
                            const std::pair<double, double>& res)
{
    const double hk = 1e-7 * std::max(std::abs(kappa), 1e-4);
    const double hK = 1e-7 * std::max(std::abs(K), 1.0);
    const auto rkp = safe_residuals(eta, kappa + hk, K);
    const auto rkm = safe_residuals(eta, kappa - hk, K);
    const auto rKp = safe_residuals(eta, kappa, K + hK);
    const auto rKm = safe_residuals(eta, kappa, K - hK);
    if (!rkp || !rkm || !rKp || !rKm)
        return {0.0, 0.0, false};
    const double j11 = (rkp->first - rkm->first) / (2.0 * hk);
    const double j12 = (rKp->first - rKm->first) / (2.0 * hK);
    const double j21 = (rkp->second - rkm->second) / (2.0 * hk);
    const double j22 = (rKp->second - rKm->second) / (2.0 * hK);
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det))
        return {0.0, 0.0, false};
    return {(res.first * j22 - j12 * res.second) / det,
            (j11 * res.second - res.first * j21) / det, true};
}

// Plain Newton; quadratic close to a root but may wander from poor starts.
RefineResult refine_plain(double eta, double kappa0, double K0)
{
    double kappa = kappa0, K = K0;
    auto res = safe_residuals(eta, kappa, K);
    if (!res)
        return {kappa0, K0, {inf(), inf()}, false};
    for (int iter = 0; iter < 100; ++iter) {
        const double norm = std::max(std::abs(res->first), std::abs(res->second));
        if (norm < kRefineTarget)
            return {kappa, K, *res, true};
        const NewtonStep step = newton_direction(eta, kappa, K, *res);
        if (!step.ok)
            break;
        kappa -= step.dk;
        K -= step.dK;
        if (!std::isfinite(kappa) || !std::isfinite(K))
            return {kappa0, K0, {inf(), inf()}, false};
        const auto next = safe_residuals(eta, kappa, K);
        if (!next)
            return {kappa0, K0, {inf(), inf()}, false};
        res = next;
    }
    const double norm = std::max(std::abs(res->first), std::abs(res->second));
    return {kappa, K, *res, norm <= kAcceptResidual};
}

// Damped fallback: keeps the residual norm decreasing.
RefineResult refine_damped(double eta, double kappa0, double K0)
{
    double kappa = kappa0, K = K0;
    auto res = safe_residuals(eta, kappa, K);
    if (!res)
        return {kappa0, K0, {inf(), inf()}, false};
    for (int iter = 0; iter < 200; ++iter) {
        const double norm = std::max(std::abs(res->first), std::abs(res->second));
        if (norm < kRefineTarget)
            return {kappa, K, *res, true};
        const NewtonStep step = newton_direction(eta, kappa, K, *res);
        if (!step.ok)
            break;
        double dk = step.dk;
        double dK = step.dK;
        bool stepped = false;
        for (int halving = 0; halving < 25; ++halving) {
            const double kt = kappa - dk;
            const double Kt = K - dK;
            const auto rt = safe_residuals(eta, kt, Kt);
            if (rt && std::max(std::abs(rt->first), std::abs(rt->second)) < norm) {
                kappa = kt;
                K = Kt;
                res = rt;
                stepped = true;
                break;
            }
            dk *= 0.5;
            dK *= 0.5;
        }
        if (!stepped)
            break;
    }
    const double norm = std::max(std::abs(res->first), std::abs(res->second));
    return {kappa, K, *res, norm <= kAcceptResidual};
}

RefineResult refine_exact(double eta, double kappa0, double K0)
{
    const RefineResult plain = refine_plain(eta, kappa0, K0);
    if (plain.converged)
        return plain;
    return refine_damped(eta, kappa0, K0);
}

double bisect_zero(double eta, int branch, double lo, double hi, bool lo_negative)
{
    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const bool mid_negative = counts_negative(f_branch(eta, mid, branch));
        if (mid_negative == lo_negative)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimum of f_branch on [a, b]; used on shallow grid valleys
// whose dips are far narrower than the bracketing grid.
double minimize_valley(double eta, int branch, double a, double b)
{
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f_branch(eta, c, branch);
    double fd = f_branch(eta, d, branch);
    for (int iter = 0; iter < 120; ++iter) {
        if (!(fd < fc)) {  // NaN at d also sends the window left
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f_branch(eta, c, branch);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f_branch(eta, d, branch);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<PTSolution> scan_roots(double eta, double K_lo, double K_hi, double kappa_sign)
{
    if (!(0.0 < K_lo && K_lo < K_hi))
        throw std::domain_error("scan_roots: need 0 < K_lo < K_hi");
    if (eta == 1.0)
        return {};  // unit index forces kappa = 0, the empty slab
    if (!(eta > 1.0))
        throw std::domain_error("scan_roots: eta must be at least 1");

    struct Candidate {
        double K;
        bool from_valley;
    };
    std::vector<Candidate> candidates;

    const int branch = +1;  // F_- has no roots on the gain-side convention
    const std::size_t n = static_cast<std::size_t>(std::ceil((K_hi - K_lo) / kGridStep)) + 1;
    std::vector<double> grid(n), val(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = std::min(K_lo + static_cast<double>(i) * kGridStep, K_hi);
        val[i] = f_branch(eta, grid[i], branch);
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::isnan(val[i]) && std::isnan(val[i + 1]))
            continue;
        const bool neg_a = counts_negative(val[i]);
        const bool neg_b = counts_negative(val[i + 1]);
        if (neg_a != neg_b)
            candidates.push_back({bisect_zero(eta, branch, grid[i], grid[i + 1], neg_a), false});
    }

    // Near-tangent roots live in dips much narrower than the grid: refine any
    // finite positive local minimum below the ceiling and split it into two
    // brackets when the dip goes negative.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!std::isfinite(val[i]) || !std::isfinite(val[i - 1]) || !std::isfinite(val[i + 1]))
            continue;
        if (!(val[i] < val[i - 1] && val[i] < val[i + 1] && val[i] > 0.0 && val[i] < kValleyCeiling))
            continue;
        const double k_min = minimize_valley(eta, branch, grid[i - 1], grid[i + 1]);
        const double f_min = f_branch(eta, k_min, branch);
        if (std::isfinite(f_min) && f_min < 0.0) {
            candidates.push_back({bisect_zero(eta, branch, grid[i - 1], k_min, false), true});
            candidates.push_back({bisect_zero(eta, branch, k_min, grid[i + 1],
                                              counts_negative(f_branch(eta, k_min, branch))),
                                  true});
        } else {
            candidates.push_back({k_min, true});  // let Newton decide
        }
    }

    std::vector<PTSolution> solutions;
    for (const Candidate& cand : candidates) {
        double kappa0;
        try {
            kappa0 = kappa_of(eta, cand.K, kappa_sign);
        } catch (const std::exception&) {
            continue;
        }
        auto pre = safe_residuals(eta, kappa0, cand.K);
        if (!pre)
            continue;
        const double pre_norm = std::max(std::abs(pre->first), std::abs(pre->second));
        // Plain bracket candidates with large exact residuals are false roots
        // of the non-invertible reduction; valley candidates skip the filter
        // because tangent dips start further from the exact surface.
        if (!cand.from_valley && pre_norm > kPreFilter)
            continue;

        const RefineResult refined = refine_exact(eta, kappa0, cand.K);
        if (!refined.converged)
            continue;
        if (std::abs(refined.K - cand.K) > kMaxRefineShift)
            continue;
        if (!(refined.K > K_lo && refined.K < K_hi))
            continue;
        if (std::abs(refined.kappa) >= 1.0)
            continue;
        if (refined.kappa * kappa_sign < 0.0)
            continue;  // Newton crossed to the mirror branch
        if (refined.K > kappa_bound(eta, refined.kappa))
            continue;

        PTSolution sol;
        sol.eta = eta;
        sol.kappa = refined.kappa;
        sol.K = refined.K;
        sol.residuals = refined.res;
        sol.approx_K = cand.K;
        sol.approx_kappa = kappa0;
        // Side by direct evaluation of the off-diagonal entries. At an exact
        // root one of them vanishes to rounding noise while the other stays
        // many orders larger, even when both are small in absolute terms.
        const SlabConfig config{Complex(eta, refined.kappa), Complex(eta, -refined.kappa)};
        const TransferMatrix m = transfer_matrix(config, refined.K);
        if (std::max(std::norm(m.m11 - 1.0), std::norm(m.m22 - 1.0)) > 1e-16)
            continue;  // diagonal not pinned to unity: not an invisible point
        const ScatteringData s = scattering_data(m);
        const double lo = std::min(s.rl_coeff, s.rr_coeff);
        const double hi = std::max(s.rl_coeff, s.rr_coeff);
        if (!(hi > 1e6 * std::max(lo, 1e-300)))
            continue;  // no clear vanishing side
        sol.side = (s.rl_coeff < s.rr_coeff) ? Side::Left : Side::Right;
        solutions.push_back(sol);
    }

    std::sort(solutions.begin(), solutions.end(),
              [](const PTSolution& a, const PTSolution& b) { return a.K < b.K; });
    std::vector<PTSolution> unique;
    for (const PTSolution& s : solutions) {
        if (unique.empty() || std::abs(s.K - unique.back().K) > 1e-6)
            unique.push_back(s);
    }
    return unique;
}

}  // namespace slabinv
