#include "slabinv.h"

#include <cstring>
#include <new>
#include <string>
#include <system_error>
#include <vector>

#include "slabinv/bidirectional.hpp"
#include "slabinv/io.hpp"
#include "slabinv/nonpt_solver.hpp"
#include "slabinv/ode_oracle.hpp"
#include "slabinv/pt_solver.hpp"
#include "slabinv/scan.hpp"
#include "slabinv/scattering.hpp"

using slabinv::Complex;

struct slabinv_pt_solutions {
    std::vector<slabinv::PTSolution> items;
};

struct slabinv_scan {
    std::vector<slabinv::ScanRow> rows;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what)
{
    g_last_error = what ? what : "";
}

slabinv_status fail(slabinv_status code, const char* what)
{
    set_error(what);
    return code;
}

// Run a callable, translate exceptions to status codes.
template <typename Fn>
slabinv_status guarded(Fn&& fn)
{
    try {
        set_error("");
        return fn();
    } catch (const slabinv::spectral_singularity_error& e) {
        return fail(SLABINV_ERR_SINGULAR, e.what());
    } catch (const std::range_error& e) {
        return fail(SLABINV_ERR_RANGE, e.what());
    } catch (const std::domain_error& e) {
        return fail(SLABINV_ERR_INVALID_INPUT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SLABINV_ERR_INVALID_INPUT, e.what());
    } catch (const std::system_error& e) {
        return fail(SLABINV_ERR_IO, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(SLABINV_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(SLABINV_ERR_INTERNAL, e.what());
    }
}

Complex to_cpp(const slabinv_complex& c)
{
    return Complex(c.re, c.im);
}

slabinv_complex to_c(const Complex& c)
{
    return slabinv_complex{c.real(), c.imag()};
}

slabinv::SlabConfig to_cpp(const slabinv_config& c)
{
    return slabinv::SlabConfig{to_cpp(c.n1), to_cpp(c.n2), c.thickness_um};
}

slabinv_config to_c(const slabinv::SlabConfig& c)
{
    return slabinv_config{to_c(c.n1), to_c(c.n2), c.thickness_um};
}

slabinv_matrix to_c(const slabinv::TransferMatrix& m)
{
    return slabinv_matrix{to_c(m.m11), to_c(m.m12), to_c(m.m21), to_c(m.m22)};
}

slabinv::TransferMatrix to_cpp(const slabinv_matrix& m)
{
    return slabinv::TransferMatrix{to_cpp(m.m11), to_cpp(m.m12), to_cpp(m.m21), to_cpp(m.m22)};
}

slabinv_scattering to_c(const slabinv::ScatteringData& s)
{
    return slabinv_scattering{to_c(s.t), to_c(s.rl), to_c(s.rr),
                              s.t_coeff, s.rl_coeff, s.rr_coeff};
}

slabinv_side to_c(slabinv::InvisibilityClass cls)
{
    switch (cls) {
    case slabinv::InvisibilityClass::Left: return SLABINV_SIDE_LEFT;
    case slabinv::InvisibilityClass::Right: return SLABINV_SIDE_RIGHT;
    case slabinv::InvisibilityClass::Both: return SLABINV_SIDE_BOTH;
    case slabinv::InvisibilityClass::Indeterminate: return SLABINV_SIDE_INDETERMINATE;
    case slabinv::InvisibilityClass::None: break;
    }
    return SLABINV_SIDE_NONE;
}

slabinv_side to_c(slabinv::Side side)
{
    switch (side) {
    case slabinv::Side::Left: return SLABINV_SIDE_LEFT;
    case slabinv::Side::Right: return SLABINV_SIDE_RIGHT;
    case slabinv::Side::Both: return SLABINV_SIDE_BOTH;
    }
    return SLABINV_SIDE_NONE;
}

char* dup_string(const std::string& text)
{
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

slabinv_status require(bool ok, const char* what)
{
    return ok ? SLABINV_OK : fail(SLABINV_ERR_INVALID_INPUT, what);
}

}  // namespace

extern "C" {

const char* slabinv_version(void)
{
    return "1.0.0";
}

const char* slabinv_last_error(void)
{
    return g_last_error.c_str();
}

void slabinv_string_free(char* str)
{
    delete[] str;
}

slabinv_status slabinv_aux_quantities(const slabinv_config* config, double K, slabinv_aux* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        const auto aux = slabinv::aux_quantities(to_cpp(*config), K);
        *out = slabinv_aux{to_c(aux.n_plus), to_c(aux.n_minus), to_c(aux.n_tilde_plus),
                           to_c(aux.n_tilde_minus), to_c(aux.a_plus), to_c(aux.a_minus)};
        return SLABINV_OK;
    });
}

slabinv_status slabinv_transfer_matrix(const slabinv_config* config, double K,
                                       slabinv_matrix* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = to_c(slabinv::transfer_matrix(to_cpp(*config), K));
        return SLABINV_OK;
    });
}

slabinv_status slabinv_scattering_data(const slabinv_matrix* m, slabinv_scattering* out)
{
    if (require(m && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = to_c(slabinv::scattering_data(to_cpp(*m)));
        return SLABINV_OK;
    });
}

slabinv_status slabinv_scattering_at(const slabinv_config* config, double K,
                                     slabinv_scattering* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = to_c(slabinv::scattering_at(to_cpp(*config), K));
        return SLABINV_OK;
    });
}

slabinv_status slabinv_pt_transform(const slabinv_config* config, slabinv_config* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    *out = to_c(slabinv::pt_transform(to_cpp(*config)));
    return SLABINV_OK;
}

slabinv_status slabinv_time_reverse(const slabinv_config* config, slabinv_config* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    *out = to_c(slabinv::time_reverse(to_cpp(*config)));
    return SLABINV_OK;
}

slabinv_status slabinv_invisibility_residuals(const slabinv_config* config, double K,
                                              slabinv_residuals* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        const auto r = slabinv::invisibility_residuals(to_cpp(*config), K);
        *out = slabinv_residuals{to_c(r.r_m21), to_c(r.r_m12), to_c(r.r_m11), to_c(r.r_m22)};
        return SLABINV_OK;
    });
}

slabinv_status slabinv_classify(const slabinv_config* config, double K, slabinv_side* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = to_c(slabinv::classify_invisibility(to_cpp(*config), K));
        return SLABINV_OK;
    });
}

slabinv_status slabinv_verify_pt_rule(const slabinv_config* config, double K,
                                      double* deviation)
{
    if (require(config && deviation, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *deviation = slabinv::verify_pt_matrix_rule(to_cpp(*config), K);
        return SLABINV_OK;
    });
}

slabinv_status slabinv_wavelength_nm(double K, double thickness_um, double* out)
{
    if (require(out != nullptr, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = slabinv::wavelength_nm(K, thickness_um * 1e-6);
        return SLABINV_OK;
    });
}

int slabinv_physically_admissible(const slabinv_config* config)
{
    if (!config)
        return 0;
    return slabinv::physically_admissible(to_cpp(*config)) ? 1 : 0;
}

slabinv_status slabinv_pt_scan(double eta, double k_lo, double k_hi, double kappa_sign,
                               slabinv_pt_solutions** out)
{
    if (require(out != nullptr, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    *out = nullptr;
    return guarded([&]() -> slabinv_status {
        auto solutions = slabinv::scan_roots(eta, k_lo, k_hi, kappa_sign);
        if (solutions.empty())
            return fail(SLABINV_ERR_NO_SOLUTIONS, "no invisible points in the window");
        *out = new slabinv_pt_solutions{std::move(solutions)};
        return SLABINV_OK;
    });
}

size_t slabinv_pt_solutions_count(const slabinv_pt_solutions* solutions)
{
    return solutions ? solutions->items.size() : 0;
}

slabinv_status slabinv_pt_solutions_get(const slabinv_pt_solutions* solutions, size_t index,
                                        slabinv_pt_solution* out)
{
    if (require(solutions && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    if (index >= solutions->items.size())
        return fail(SLABINV_ERR_INVALID_INPUT, "solution index out of range");
    const auto& s = solutions->items[index];
    *out = slabinv_pt_solution{s.eta,       s.kappa,           s.K,
                               to_c(s.side), s.residuals.first, s.residuals.second,
                               s.approx_K,  s.approx_kappa};
    return SLABINV_OK;
}

void slabinv_pt_solutions_free(slabinv_pt_solutions* solutions)
{
    delete solutions;
}

slabinv_status slabinv_pt_exact_residuals(double eta, double kappa, double K,
                                          double* r1, double* r2)
{
    if (require(r1 && r2, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        const auto res = slabinv::exact_pt_residuals(eta, kappa, K);
        *r1 = res.first;
        *r2 = res.second;
        return SLABINV_OK;
    });
}

slabinv_status slabinv_pt_kappa_of(double eta, double K, double sign, double* out)
{
    if (require(out != nullptr, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = slabinv::kappa_of(eta, K, sign);
        return SLABINV_OK;
    });
}

slabinv_status slabinv_pt_kappa_bound(double eta, double kappa, double* out)
{
    if (require(out != nullptr, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = slabinv::kappa_bound(eta, kappa);
        return SLABINV_OK;
    });
}

slabinv_status slabinv_nonpt_seed_from_targets(double eta1, double eta2, double k_target,
                                               double gamma0, slabinv_nonpt_seed* out)
{
    if (require(out != nullptr, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        const auto seed = slabinv::seed_from_targets(eta1, eta2, k_target, gamma0);
        *out = slabinv_nonpt_seed{seed.m_plus, seed.m_minus, seed.m0, seed.gamma0};
        return SLABINV_OK;
    });
}

int slabinv_nonpt_seed_feasible(const slabinv_nonpt_seed* seed)
{
    if (!seed)
        return 0;
    return slabinv::seed_feasible(
               slabinv::NonPTSeed{seed->m_plus, seed->m_minus, seed->m0, seed->gamma0})
               ? 1
               : 0;
}

slabinv_status slabinv_nonpt_build(const slabinv_nonpt_seed* seed, slabinv_side side,
                                   slabinv_nonpt_solution* out)
{
    if (require(seed && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    if (side != SLABINV_SIDE_LEFT && side != SLABINV_SIDE_RIGHT)
        return fail(SLABINV_ERR_INVALID_INPUT, "nonpt_build: side must be left or right");
    return guarded([&] {
        const slabinv::NonPTSeed s{seed->m_plus, seed->m_minus, seed->m0, seed->gamma0};
        const auto sol = slabinv::build_invisible_config(
            s, side == SLABINV_SIDE_LEFT ? slabinv::Side::Left : slabinv::Side::Right);
        *out = slabinv_nonpt_solution{};
        out->seed = *seed;
        out->y_plus = sol.imd.y_plus;
        out->y_minus = sol.imd.y_minus;
        out->gamma_plus = sol.imd.gamma_plus;
        out->gamma_minus = sol.imd.gamma_minus;
        out->x_plus = sol.x_plus;
        out->x_minus = sol.x_minus;
        out->K = sol.K;
        out->config = slabinv_config{to_c(sol.n1), to_c(sol.n2), 300.0};
        out->side = to_c(sol.side);
        out->validation = to_c(sol.validation);
        return SLABINV_OK;
    });
}

slabinv_status slabinv_nonpt_exact_residuals(double x_plus, double x_minus, double y_plus,
                                             double y_minus, double K, double out[4])
{
    if (require(out != nullptr, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        const auto res = slabinv::exact_nonpt_residuals(x_plus, x_minus, y_plus, y_minus, K);
        for (int i = 0; i < 4; ++i)
            out[i] = res[static_cast<size_t>(i)];
        return SLABINV_OK;
    });
}

slabinv_status slabinv_bidirectional_config(int m, int m1, int m2, double thickness_um,
                                            slabinv_config* out_config, double* out_K,
                                            double* out_lambda_nm)
{
    if (require(out_config && out_K && out_lambda_nm, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        const auto result =
            slabinv::bidirectional_config(slabinv::BidirSpec{m, m1, m2, thickness_um});
        *out_config = to_c(result.config);
        *out_K = result.K;
        *out_lambda_nm = result.lambda_nm;
        return SLABINV_OK;
    });
}

slabinv_status slabinv_is_half_integer_resonance(double K, int* out)
{
    if (require(out != nullptr, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = slabinv::is_half_integer_resonance(K) ? 1 : 0;
        return SLABINV_OK;
    });
}

slabinv_status slabinv_oracle_matrix(const slabinv_config* config, double K, size_t steps,
                                     slabinv_matrix* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = to_c(slabinv::integrate_transfer_matrix(to_cpp(*config), K,
                                                       slabinv::IntegrationGrid{steps}));
        return SLABINV_OK;
    });
}

slabinv_status slabinv_oracle_deviation(const slabinv_config* config, double K, size_t steps,
                                        double* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = slabinv::oracle_deviation(to_cpp(*config), K, slabinv::IntegrationGrid{steps});
        return SLABINV_OK;
    });
}

slabinv_status slabinv_scan_run(const slabinv_config* config, double k_lo, double k_hi,
                                size_t samples, slabinv_scan** out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    *out = nullptr;
    return guarded([&] {
        auto rows = slabinv::run_scan(slabinv::ScanRequest{to_cpp(*config), k_lo, k_hi, samples});
        *out = new slabinv_scan{std::move(rows)};
        return SLABINV_OK;
    });
}

size_t slabinv_scan_rows(const slabinv_scan* scan)
{
    return scan ? scan->rows.size() : 0;
}

slabinv_status slabinv_scan_get(const slabinv_scan* scan, size_t index, slabinv_scan_row* out)
{
    if (require(scan && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    if (index >= scan->rows.size())
        return fail(SLABINV_ERR_INVALID_INPUT, "scan row index out of range");
    const auto& r = scan->rows[index];
    *out = slabinv_scan_row{r.K, r.lambda_nm, r.t2m1, r.arg_t, r.rl2, r.rr2};
    return SLABINV_OK;
}

slabinv_status slabinv_scan_csv(const slabinv_scan* scan, char** out)
{
    if (require(scan && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = dup_string(slabinv::scan_to_csv(scan->rows));
        return SLABINV_OK;
    });
}

slabinv_status slabinv_scan_write_csv(const slabinv_scan* scan, const char* path)
{
    if (require(scan && path, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        slabinv::write_scan_csv(scan->rows, path);
        return SLABINV_OK;
    });
}

void slabinv_scan_free(slabinv_scan* scan)
{
    delete scan;
}

slabinv_status slabinv_reflectionless_band(const slabinv_config* config, double lambda_lo_nm,
                                           double lambda_hi_nm, double threshold,
                                           size_t samples, slabinv_band* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        const auto band = slabinv::reflectionless_band(to_cpp(*config), lambda_lo_nm,
                                                       lambda_hi_nm, threshold, samples);
        *out = slabinv_band{band.lambda_min_nm, band.lambda_max_nm, band.width_nm,
                            band.threshold, band.empty ? 1 : 0};
        return SLABINV_OK;
    });
}

slabinv_status slabinv_verify_duality(const slabinv_config* config, double K,
                                      slabinv_duality_report* out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        const auto report = slabinv::verify_duality(to_cpp(*config), K);
        *out = slabinv_duality_report{to_c(report.original),
                                      to_c(report.pt_transformed),
                                      to_c(report.conjugated),
                                      report.pt_rule_deviation,
                                      report.statement_i_ok ? 1 : 0,
                                      report.conj_swap_deviation,
                                      report.statement_ii_ok ? 1 : 0};
        return SLABINV_OK;
    });
}

slabinv_status slabinv_config_to_json(const slabinv_config* config, char** out)
{
    if (require(config && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = dup_string(slabinv::config_to_json(to_cpp(*config)));
        return SLABINV_OK;
    });
}

slabinv_status slabinv_config_from_json(const char* json_text, slabinv_config* out)
{
    if (require(json_text && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = to_c(slabinv::config_from_json(json_text));
        return SLABINV_OK;
    });
}

slabinv_status slabinv_config_from_json_file(const char* path, slabinv_config* out)
{
    if (require(path && out, "null pointer argument") != SLABINV_OK)
        return SLABINV_ERR_INVALID_INPUT;
    return guarded([&] {
        *out = to_c(slabinv::config_from_json_file(path));
        return SLABINV_OK;
    });
}

}  // extern "C"
