#pragma once

#include <complex>
#include <stdexcept>

// Exact scattering data for a two-layer planar slab surrounded by vacuum.
//
// The slab occupies z in [-L/2, L/2] with refractive index n1 on the left
// half and n2 on the right half. For a scalar wave psi'' + k^2 n(z)^2 psi = 0
// the transfer matrix M relates the plane-wave coefficients on the right of
// the slab to those on the left,
//
//   [A+, B+]^T = M [A-, B-]^T,   psi -> A e^{ikz} + B e^{-ikz},
//
// and has unit determinant. All formulas below are written in the
// dimensionless wavenumber K = L k = 2 pi L / lambda.

namespace slabinv {

using Complex = std::complex<double>;

// m22 == 0 marks a pole of the transmission amplitude (lasing threshold);
// scattering amplitudes are undefined there.
class spectral_singularity_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct SlabConfig {
    Complex n1{1.0, 0.0};
    Complex n2{1.0, 0.0};
    double thickness_um = 300.0;  // only used for K <-> lambda conversion

    double thickness_m() const { return thickness_um * 1e-6; }
};

// Passive media have Re(n) >= 1 in both layers. Configs outside this range
// are allowed but flagged.
bool physically_admissible(const SlabConfig& config);

// Derived index combinations shared by every closed-form entry:
//   n_plus  = n1 + n2          n_tilde_plus  = n1 n2 + 1
//   n_minus = n1 - n2          n_tilde_minus = n1 n2 - 1
//   a_pm    = n_pm K / 2
struct AuxQuantities {
    Complex n_plus, n_minus;
    Complex n_tilde_plus, n_tilde_minus;
    Complex a_plus, a_minus;
    double K = 0.0;
};

AuxQuantities aux_quantities(const SlabConfig& config, double K);

struct TransferMatrix {
    Complex m11, m12, m21, m22;

    Complex det() const { return m11 * m22 - m12 * m21; }
};

// Closed-form transfer matrix of the two-layer slab. Throws std::domain_error
// for K <= 0 or n1*n2 == 0 (the common prefactor diverges) and
// std::range_error when |Im(a_pm)| exceeds the overflow guard.
TransferMatrix transfer_matrix(const SlabConfig& config, double K);

struct ScatteringData {
    Complex t, rl, rr;              // transmission, left/right reflection
    double t_coeff, rl_coeff, rr_coeff;  // squared moduli
};

// T = 1/m22, Rr = m12/m22, Rl = -m21/m22.
ScatteringData scattering_data(const TransferMatrix& m);
ScatteringData scattering_at(const SlabConfig& config, double K);

enum class Side { Left, Right, Both };

// Parity-time transform: (n1, n2) -> (n2*, n1*). An involution; PT-symmetric
// configs (n1 == n2*) are fixed points.
SlabConfig pt_transform(const SlabConfig& config);

// Time reversal: conjugate both indices. Swaps left- and right-invisibility.
SlabConfig time_reverse(const SlabConfig& config);

// Deviations of the four entries from the invisible slab (M == identity):
// r_m11 = m11 - 1, r_m22 = m22 - 1, and the raw off-diagonal entries.
struct InvisibilityResiduals {
    Complex r_m21, r_m12, r_m11, r_m22;
};

InvisibilityResiduals invisibility_residuals(const SlabConfig& config, double K);

// Two-threshold classification: an entry counts as zero when its squared
// modulus is below 1e-8 and as nonzero above 1e-4; anything caught in the gap
// band makes the verdict Indeterminate.
enum class InvisibilityClass { None, Left, Right, Both, Indeterminate };

InvisibilityClass classify_invisibility(const InvisibilityResiduals& r);
InvisibilityClass classify_invisibility(const SlabConfig& config, double K);

// Max entrywise |M(pt_transform(c)) - conj(inverse(M(c)))|; an identity of the
// model, so the result is pure rounding noise for admissible inputs.
double verify_pt_matrix_rule(const SlabConfig& config, double K);

// lambda = 2 pi L / K, reported in nanometers.
double wavelength_nm(double K, double thickness_m);

namespace detail {

inline constexpr double kTrigImagGuard = 50.0;

// cos/sin of a complex argument via its exponential form, guarded against
// cosh overflow in the imaginary direction.
Complex cos_guarded(Complex z);
Complex sin_guarded(Complex z);

}  // namespace detail

}  // namespace slabinv
