#include "slabinv/scattering.hpp"

#include <cmath>
#include <algorithm>

namespace slabinv {

namespace detail {

Complex cos_guarded(Complex z)
{
    if (std::abs(z.imag()) > kTrigImagGuard)
        throw std::range_error("complex trig argument exceeds overflow guard |Im| <= 50");
    const Complex eiz = std::exp(Complex(0.0, 1.0) * z);
    return 0.5 * (eiz + 1.0 / eiz);
}

Complex sin_guarded(Complex z)
{
    if (std::abs(z.imag()) > kTrigImagGuard)
        throw std::range_error("complex trig argument exceeds overflow guard |Im| <= 50");
    const Complex eiz = std::exp(Complex(0.0, 1.0) * z);
    return (eiz - 1.0 / eiz) / Complex(0.0, 2.0);
}

}  // namespace detail

bool physically_admissible(const SlabConfig& config)
{
    return config.n1.real() >= 1.0 && config.n2.real() >= 1.0;
}

AuxQuantities aux_quantities(const SlabConfig& config, double K)
{
    if (!(K > 0.0))
        throw std::domain_error("aux_quantities: K must be positive");
    AuxQuantities aux;
    aux.n_plus = config.n1 + config.n2;
    aux.n_minus = config.n1 - config.n2;
    aux.n_tilde_plus = config.n1 * config.n2 + 1.0;
    aux.n_tilde_minus = config.n1 * config.n2 - 1.0;
    aux.a_plus = 0.5 * K * aux.n_plus;
    aux.a_minus = 0.5 * K * aux.n_minus;
    aux.K = K;
    return aux;
}

TransferMatrix transfer_matrix(const SlabConfig& config, double K)
{
    const AuxQuantities aux = aux_quantities(config, K);
    // n_plus^2 - n_minus^2 = 4 n1 n2; the entries are singular iff n1 n2 = 0.
    const Complex prefactor = aux.n_plus * aux.n_plus - aux.n_minus * aux.n_minus;
    if (prefactor == Complex(0.0, 0.0))
        throw std::domain_error("transfer_matrix: singular prefactor, n1*n2 must be nonzero");

    const Complex cos_p = detail::cos_guarded(aux.a_plus);
    const Complex cos_m = detail::cos_guarded(aux.a_minus);
    const Complex sin_p = detail::sin_guarded(aux.a_plus);
    const Complex sin_m = detail::sin_guarded(aux.a_minus);

    const Complex diag_re = aux.n_plus * aux.n_plus * cos_p - aux.n_minus * aux.n_minus * cos_m;
    const Complex diag_im = aux.n_tilde_plus * aux.n_plus * sin_p + aux.n_tilde_minus * aux.n_minus * sin_m;
    const Complex off_re = aux.n_minus * aux.n_plus * (cos_p - cos_m);
    const Complex off_im = aux.n_tilde_plus * aux.n_minus * sin_m + aux.n_tilde_minus * aux.n_plus * sin_p;

    const Complex phase = std::exp(Complex(0.0, 1.0) * K);
    const Complex i(0.0, 1.0);

    TransferMatrix m;
    m.m11 = (diag_re + i * diag_im) / prefactor / phase;
    m.m12 = (off_re + i * off_im) / prefactor;
    m.m21 = (off_re - i * off_im) / prefactor;
    m.m22 = (diag_re - i * diag_im) / prefactor * phase;
    return m;
}

ScatteringData scattering_data(const TransferMatrix& m)
{
    if (m.m22 == Complex(0.0, 0.0))
        throw spectral_singularity_error("scattering_data: m22 vanishes (spectral singularity)");
    ScatteringData s;
    s.t = 1.0 / m.m22;
    s.rr = m.m12 / m.m22;
    s.rl = -m.m21 / m.m22;
    s.t_coeff = std::norm(s.t);
    s.rl_coeff = std::norm(s.rl);
    s.rr_coeff = std::norm(s.rr);
    return s;
}

ScatteringData scattering_at(const SlabConfig& config, double K)
{
    return scattering_data(transfer_matrix(config, K));
}

SlabConfig pt_transform(const SlabConfig& config)
{
    return SlabConfig{std::conj(config.n2), std::conj(config.n1), config.thickness_um};
}

SlabConfig time_reverse(const SlabConfig& config)
{
    return SlabConfig{std::conj(config.n1), std::conj(config.n2), config.thickness_um};
}

InvisibilityResiduals invisibility_residuals(const SlabConfig& config, double K)
{
    const TransferMatrix m = transfer_matrix(config, K);
    return InvisibilityResiduals{m.m21, m.m12, m.m11 - 1.0, m.m22 - 1.0};
}

namespace {

constexpr double kZeroBand = 1e-8;     // |entry|^2 below this counts as zero
constexpr double kNonzeroBand = 1e-4;  // |entry|^2 above this counts as nonzero

enum class Band { Zero, Nonzero, Gap };

Band band_of(const Complex& v)
{
    const double sq = std::norm(v);
    if (sq < kZeroBand)
        return Band::Zero;
    if (sq > kNonzeroBand)
        return Band::Nonzero;
    return Band::Gap;
}

}  // namespace

InvisibilityClass classify_invisibility(const InvisibilityResiduals& r)
{
    const Band diag1 = band_of(r.r_m11);
    const Band diag2 = band_of(r.r_m22);
    const Band off12 = band_of(r.r_m12);
    const Band off21 = band_of(r.r_m21);

    if (diag1 == Band::Nonzero || diag2 == Band::Nonzero)
        return InvisibilityClass::None;
    if (diag1 == Band::Gap || diag2 == Band::Gap)
        return InvisibilityClass::Indeterminate;

    // unit diagonal established
    if (off12 == Band::Zero && off21 == Band::Zero)
        return InvisibilityClass::Both;
    if (off21 == Band::Zero && off12 == Band::Nonzero)
        return InvisibilityClass::Left;
    if (off12 == Band::Zero && off21 == Band::Nonzero)
        return InvisibilityClass::Right;
    if (off12 == Band::Nonzero && off21 == Band::Nonzero)
        return InvisibilityClass::None;
    return InvisibilityClass::Indeterminate;
}

InvisibilityClass classify_invisibility(const SlabConfig& config, double K)
{
    return classify_invisibility(invisibility_residuals(config, K));
}

double verify_pt_matrix_rule(const SlabConfig& config, double K)
{
    const TransferMatrix m = transfer_matrix(config, K);
    const TransferMatrix mp = transfer_matrix(pt_transform(config), K);
    // inverse of a unit-determinant 2x2 matrix
    const Complex inv11 = m.m22, inv12 = -m.m12, inv21 = -m.m21, inv22 = m.m11;
    double dev = std::abs(mp.m11 - std::conj(inv11));
    dev = std::max(dev, std::abs(mp.m12 - std::conj(inv12)));
    dev = std::max(dev, std::abs(mp.m21 - std::conj(inv21)));
    dev = std::max(dev, std::abs(mp.m22 - std::conj(inv22)));
    return dev;
}

double wavelength_nm(double K, double thickness_m)
{
    if (!(K > 0.0) || !(thickness_m > 0.0))
        throw std::domain_error("wavelength_nm: K and thickness must be positive");
    return 2.0 * M_PI * thickness_m / K * 1e9;
}

}  // namespace slabinv
