#include "slabinv/nonpt_solver.hpp"

#include <cmath>

namespace slabinv {

bool seed_feasible(const NonPTSeed& seed)
{
    return seed.m_plus > 0 && seed.m0 > 0 && seed.m_minus != 0
           && std::abs(seed.m_minus) < seed.m_plus && seed.m0 <= seed.m_plus
           && seed.m0 < seed.m_plus - std::abs(seed.m_minus);
}

bool gamma0_typical(const NonPTSeed& seed)
{
    return std::abs(seed.gamma0) <= 10.0;
}

NonPTSeed seed_from_targets(double eta1, double eta2, double K_target, double gamma0)
{
    if (!(eta1 >= 1.0) || !(eta2 >= 1.0))
        throw std::domain_error("seed_from_targets: layer indices must have Re >= 1");
    if (!(K_target > 0.0))
        throw std::domain_error("seed_from_targets: K_target must be positive");
    NonPTSeed seed;
    seed.m0 = static_cast<int>(std::lround(K_target / (2.0 * M_PI)));
    seed.m_plus = static_cast<int>(std::lround(0.5 * (eta1 + eta2) * seed.m0));
    seed.m_minus = static_cast<int>(std::lround(0.5 * (eta1 - eta2) * seed.m0));
    seed.gamma0 = gamma0;
    return seed;
}

NonPTIntermediates intermediates(const NonPTSeed& seed)
{
    if (seed.m_minus == 0)
        throw std::domain_error("nonpt intermediates: m_minus = 0 (degenerate seed)");
    const double mp = seed.m_plus, mm = seed.m_minus, m0 = seed.m0;
    const double denom = mp * mp - mm * mm - m0 * m0;
    if (denom == 0.0)
        throw std::domain_error("nonpt intermediates: m+^2 - m-^2 - m0^2 vanishes");
    NonPTIntermediates imd;
    imd.mu = mp / mm;
    imd.nu = (mp * mp - mm * mm + m0 * m0) / denom;
    imd.nu_plus = 2.0 * mp * mp / denom;
    imd.nu_minus = 2.0 * mm * mm / denom;
    imd.nu0 = 2.0 * mm * mp / denom;
    return imd;
}

std::pair<double, double> y_branch(const NonPTSeed& seed, Side side)
{
    if (side == Side::Both)
        throw std::domain_error("y_branch: bidirectional branch has y = 0 identically");
    if (!seed_feasible(seed))
        throw std::domain_error("y_branch: infeasible seed, need m0 < m_plus - |m_minus|");
    const NonPTIntermediates imd = intermediates(seed);
    const double mu2 = imd.mu * imd.mu;
    const double nu2 = imd.nu * imd.nu;
    if (!(mu2 > nu2))
        throw std::domain_error("y_branch: mu^2 must exceed nu^2");
    const double cosh_yp = (mu2 + nu2 - 2.0) / (mu2 - nu2);
    const double sinh_ym = 2.0 * imd.mu * imd.nu * std::sqrt((mu2 - 1.0) * (nu2 - 1.0))
                           / (mu2 - nu2);
    const double sign = (side == Side::Right) ? +1.0 : -1.0;
    return {sign * std::acosh(cosh_yp), -sign * std::asinh(sinh_ym)};
}

std::pair<double, double> solve_gammas(const NonPTSeed& seed,
                                       std::pair<double, double> y, double gamma0)
{
    const NonPTIntermediates imd = intermediates(seed);
    if (y.first == 0.0 && y.second == 0.0) {
        // Bidirectional limit: the hyperbolic equation degenerates and only
        // nu g+ + g- = (nu+ - nu-) gamma0 survives. Return the symmetric
        // member of that family.
        const double g = (imd.nu_plus - imd.nu_minus) * gamma0 / (imd.nu + 1.0);
        return {g, g};
    }
    // canonical (left) orientation; both branches use the same gammas
    double yp = y.first, ym = y.second;
    if (yp > 0.0) {
        yp = -yp;
        ym = -ym;
    }
    const double shp = std::sinh(yp), chp = std::cosh(yp);
    const double shm = std::sinh(ym), chm = std::cosh(ym);
    const double a11 = imd.mu * shp, a12 = -shm;
    const double a21 = imd.nu * chp, a22 = chm;
    const double b1 = 2.0 * imd.mu * (chp - 1.0);
    const double b2 = ((imd.nu + imd.nu_plus) * yp - imd.nu0 * ym) * shp
                      + (imd.nu0 * yp + (1.0 - imd.nu_minus) * ym) * shm
                      + (imd.nu_plus - imd.nu_minus) * gamma0;
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-12)
        throw std::domain_error("solve_gammas: singular linear system for this seed");
    return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det};
}

NonPTSolution assemble_config(const NonPTSeed& seed, std::pair<double, double> y,
                              std::pair<double, double> gammas)
{
    NonPTSolution sol;
    sol.seed = seed;
    sol.imd = intermediates(seed);
    sol.imd.y_plus = y.first;
    sol.imd.y_minus = y.second;
    sol.imd.gamma_plus = gammas.first;
    sol.imd.gamma_minus = gammas.second;
    sol.side = (y.first > 0.0) ? Side::Right : Side::Left;

    const double two_pi_mp = 2.0 * M_PI * seed.m_plus;
    const double two_pi_mm = 2.0 * M_PI * seed.m_minus;
    const double two_pi_m0 = 2.0 * M_PI * seed.m0;
    sol.x_plus = two_pi_mp + gammas.first / two_pi_mp;
    sol.x_minus = two_pi_mm + gammas.second / two_pi_mm;
    sol.K = two_pi_m0 + seed.gamma0 / two_pi_m0;

    const Complex a_plus(sol.x_plus, y.first);
    const Complex a_minus(sol.x_minus, y.second);
    sol.n1 = (a_plus + a_minus) / sol.K;
    sol.n2 = (a_plus - a_minus) / sol.K;

    SlabConfig config{sol.n1, sol.n2};
    sol.validation = scattering_at(config, sol.K);
    return sol;
}

NonPTSolution build_invisible_config(const NonPTSeed& seed, Side side)
{
    const auto y = y_branch(seed, side);
    const auto gammas = solve_gammas(seed, y, seed.gamma0);
    return assemble_config(seed, y, gammas);
}

std::array<double, 4> exact_nonpt_residuals(double x_plus, double x_minus,
                                            double y_plus, double y_minus, double K)
{
    const double cxp = std::cos(x_plus), sxp = std::sin(x_plus);
    const double cxm = std::cos(x_minus), sxm = std::sin(x_minus);
    const double chp = std::cosh(y_plus), shp = std::sinh(y_plus);
    const double chm = std::cosh(y_minus), shm = std::sinh(y_minus);
    const double cK = std::cos(K), sK = std::sin(K);

    // a_pm^2 and a_pm sin(a_pm) split into real and imaginary parts
    const double re_ap2 = x_plus * x_plus - y_plus * y_plus;
    const double im_ap2 = 2.0 * x_plus * y_plus;
    const double re_am2 = x_minus * x_minus - y_minus * y_minus;
    const double im_am2 = 2.0 * x_minus * y_minus;

    const double re_sp = x_plus * sxp * chp - y_plus * cxp * shp;
    const double im_sp = y_plus * sxp * chp + x_plus * cxp * shp;
    const double re_sm = x_minus * sxm * chm - y_minus * cxm * shm;
    const double im_sm = y_minus * sxm * chm + x_minus * cxm * shm;

    // first condition: a+^2 (cos a+ - cos K) - a-^2 (cos a- - cos K)
    const double re_cp = cxp * chp - cK;
    const double im_cp = -sxp * shp;
    const double re_cm = cxm * chm - cK;
    const double im_cm = -sxm * shm;
    const double r1_re = (re_ap2 * re_cp - im_ap2 * im_cp) - (re_am2 * re_cm - im_am2 * im_cm);
    const double r1_im = (re_ap2 * im_cp + im_ap2 * re_cp) - (re_am2 * im_cm + im_am2 * re_cm);

    // second condition: (P + K^2) a+ sin a+ + (P - K^2) a- sin a- - 2 P K sin K,
    // with P = a+^2 - a-^2
    const double re_p = re_ap2 - re_am2;
    const double im_p = im_ap2 - im_am2;
    const double r2_re = (re_p + K * K) * re_sp - im_p * im_sp
                         + (re_p - K * K) * re_sm - im_p * im_sm
                         - 2.0 * K * sK * re_p;
    const double r2_im = (re_p + K * K) * im_sp + im_p * re_sp
                         + (re_p - K * K) * im_sm + im_p * re_sm
                         - 2.0 * K * sK * im_p;

    return {r1_re, r1_im, r2_re, r2_im};
}

double nonpt_residual_scale(double x_plus, double x_minus,
                            double y_plus, double y_minus, double K)
{
    const double a2 = std::max(x_plus * x_plus + y_plus * y_plus,
                               x_minus * x_minus + y_minus * y_minus);
    const double amp = std::max(std::cosh(y_plus), std::cosh(y_minus));
    const double a = std::sqrt(a2);
    return std::max((a2 + K * K) * a * amp, a2 * amp);
}

}  // namespace slabinv
