// Command-line front end for the slabinv shared library.
//
// Exit codes: 0 success, 2 invalid input, 3 solver found no solutions,
// 4 numeric range error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slabinv.h"

namespace {

int exit_code_for(slabinv_status status)
{
    switch (status) {
    case SLABINV_OK: return 0;
    case SLABINV_ERR_NO_SOLUTIONS: return 3;
    case SLABINV_ERR_RANGE:
    case SLABINV_ERR_SINGULAR: return 4;
    case SLABINV_ERR_INVALID_INPUT:
    case SLABINV_ERR_IO: return 2;
    case SLABINV_ERR_INTERNAL: break;
    }
    return 1;
}

[[noreturn]] void die(slabinv_status status)
{
    std::cerr << "error: " << slabinv_last_error() << "\n";
    std::exit(exit_code_for(status));
}

void check(slabinv_status status)
{
    if (status != SLABINV_OK)
        die(status);
}

int g_digits = 17;

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", g_digits, v);
    return buf;
}

std::string cnum(slabinv_complex c)
{
    std::ostringstream out;
    out << num(c.re) << (c.im < 0 ? " - " : " + ") << num(std::abs(c.im)) << "i";
    return out.str();
}

const char* side_name(slabinv_side side)
{
    switch (side) {
    case SLABINV_SIDE_LEFT: return "left";
    case SLABINV_SIDE_RIGHT: return "right";
    case SLABINV_SIDE_BOTH: return "both";
    case SLABINV_SIDE_INDETERMINATE: return "indeterminate";
    case SLABINV_SIDE_NONE: break;
    }
    return "none";
}

// Shared --n1-re/--n1-im/--n2-re/--n2-im/--L-um/--config options. Flags
// override values read from the JSON file.
struct ConfigArgs {
    double n1_re = 1.0, n1_im = 0.0, n2_re = 1.0, n2_im = 0.0, l_um = 300.0;
    std::string config_path;
    CLI::Option *o_n1re = nullptr, *o_n1im = nullptr, *o_n2re = nullptr, *o_n2im = nullptr,
                *o_lum = nullptr;

    void attach(CLI::App* app)
    {
        o_n1re = app->add_option("--n1-re", n1_re, "Re(n1), left layer");
        o_n1im = app->add_option("--n1-im", n1_im, "Im(n1), left layer");
        o_n2re = app->add_option("--n2-re", n2_re, "Re(n2), right layer");
        o_n2im = app->add_option("--n2-im", n2_im, "Im(n2), right layer");
        o_lum = app->add_option("--L-um", l_um, "slab thickness in micrometers");
        app->add_option("--config", config_path, "JSON config file (flags override)");
    }

    slabinv_config resolve() const
    {
        slabinv_config config{{1.0, 0.0}, {1.0, 0.0}, 300.0};
        if (!config_path.empty())
            check(slabinv_config_from_json_file(config_path.c_str(), &config));
        if (o_n1re->count())
            config.n1.re = n1_re;
        if (o_n1im->count())
            config.n1.im = n1_im;
        if (o_n2re->count())
            config.n2.re = n2_re;
        if (o_n2im->count())
            config.n2.im = n2_im;
        if (o_lum->count())
            config.thickness_um = l_um;
        return config;
    }
};

using ScanHandle = std::unique_ptr<slabinv_scan, decltype(&slabinv_scan_free)>;
using PTHandle = std::unique_ptr<slabinv_pt_solutions, decltype(&slabinv_pt_solutions_free)>;

int run_scan_cmd(const ConfigArgs& cfg, double k_lo, double k_hi, std::size_t samples,
                 const std::string& output)
{
    const slabinv_config config = cfg.resolve();
    slabinv_scan* raw = nullptr;
    check(slabinv_scan_run(&config, k_lo, k_hi, samples, &raw));
    ScanHandle scan(raw, slabinv_scan_free);
    if (output == "-") {
        char* csv = nullptr;
        check(slabinv_scan_csv(scan.get(), &csv));
        std::fwrite(csv, 1, std::string(csv).size(), stdout);
        slabinv_string_free(csv);
    } else {
        check(slabinv_scan_write_csv(scan.get(), output.c_str()));
        std::cerr << "wrote " << slabinv_scan_rows(scan.get()) << " rows to " << output << "\n";
    }
    return 0;
}

int run_solve_pt(double eta, double k_lo, double k_hi, double kappa_sign, double l_um)
{
    slabinv_pt_solutions* raw = nullptr;
    const slabinv_status status = slabinv_pt_scan(eta, k_lo, k_hi, kappa_sign, &raw);
    if (status != SLABINV_OK)
        die(status);
    PTHandle solutions(raw, slabinv_pt_solutions_free);
    const std::size_t count = slabinv_pt_solutions_count(solutions.get());
    std::cout << "# " << count << " invisible point(s) for eta = " << num(eta) << "\n";
    std::cout << "K,kappa,lambda_nm,side,residual1,residual2\n";
    for (std::size_t i = 0; i < count; ++i) {
        slabinv_pt_solution sol;
        check(slabinv_pt_solutions_get(solutions.get(), i, &sol));
        double lambda = 0.0;
        check(slabinv_wavelength_nm(sol.K, l_um, &lambda));
        std::cout << num(sol.K) << "," << num(sol.kappa) << "," << num(lambda) << ","
                  << side_name(sol.side) << "," << num(sol.residual1) << ","
                  << num(sol.residual2) << "\n";
    }
    return 0;
}

int run_solve_nonpt(double eta1, double eta2, double k_target, double gamma0,
                    int m_plus, int m_minus, int m0, bool have_overrides,
                    const std::string& side_name_arg, double l_um)
{
    slabinv_nonpt_seed seed{};
    check(slabinv_nonpt_seed_from_targets(eta1, eta2, k_target, gamma0, &seed));
    if (have_overrides) {
        if (m_plus > 0)
            seed.m_plus = m_plus;
        if (m_minus != 0)
            seed.m_minus = m_minus;
        if (m0 > 0)
            seed.m0 = m0;
    }
    std::cout << "seed: m+ = " << seed.m_plus << ", m- = " << seed.m_minus
              << ", m0 = " << seed.m0 << ", gamma0 = " << num(seed.gamma0) << "\n";
    if (!slabinv_nonpt_seed_feasible(&seed)) {
        std::cerr << "error: seed infeasible for unidirectional invisibility "
                     "(need m0 < m+ - |m-|)\n";
        return 3;
    }
    if (std::abs(gamma0) > 10.0)
        std::cerr << "warning: gamma0 outside [-10, 10]; construction assumes order-1 values\n";

    const slabinv_side side =
        (side_name_arg == "right") ? SLABINV_SIDE_RIGHT : SLABINV_SIDE_LEFT;
    slabinv_nonpt_solution sol{};
    check(slabinv_nonpt_build(&seed, side, &sol));
    sol.config.thickness_um = l_um;

    std::cout << "y+ = " << num(sol.y_plus) << ", y- = " << num(sol.y_minus) << "\n";
    std::cout << "gamma+ = " << num(sol.gamma_plus) << ", gamma- = " << num(sol.gamma_minus)
              << "\n";
    std::cout << "K = " << num(sol.K) << "\n";
    double lambda = 0.0;
    check(slabinv_wavelength_nm(sol.K, l_um, &lambda));
    std::cout << "lambda = " << num(lambda) << " nm at L = " << num(l_um) << " um\n";
    std::cout << "n1 = " << cnum(sol.config.n1) << "\n";
    std::cout << "n2 = " << cnum(sol.config.n2) << "\n";
    std::cout << "invisible from the " << side_name(sol.side) << "\n";
    std::cout << "validation: |T|^2-1 = " << num(sol.validation.t2 - 1.0)
              << ", arg T = " << num(std::atan2(sol.validation.t.im, sol.validation.t.re))
              << ", |Rl|^2 = " << num(sol.validation.rl2)
              << ", |Rr|^2 = " << num(sol.validation.rr2) << "\n";
    return 0;
}

int run_bidir(int m, int m1, int m2, double l_um)
{
    slabinv_config config{};
    double K = 0.0, lambda = 0.0;
    check(slabinv_bidirectional_config(m, m1, m2, l_um, &config, &K, &lambda));
    std::cout << "n1 = " << cnum(config.n1) << ", n2 = " << cnum(config.n2) << "\n";
    std::cout << "K = " << num(K) << " (= pi * " << m << "), lambda = " << num(lambda)
              << " nm\n";
    slabinv_matrix mt{};
    check(slabinv_transfer_matrix(&config, K, &mt));
    const double dev = std::max(
        std::max(std::hypot(mt.m11.re - 1.0, mt.m11.im), std::hypot(mt.m22.re - 1.0, mt.m22.im)),
        std::max(std::hypot(mt.m12.re, mt.m12.im), std::hypot(mt.m21.re, mt.m21.im)));
    std::cout << "transfer matrix deviation from identity: " << num(dev) << "\n";
    return 0;
}

int run_band(const ConfigArgs& cfg, double lambda_lo, double lambda_hi, double threshold,
             std::size_t samples)
{
    const slabinv_config config = cfg.resolve();
    slabinv_band band{};
    check(slabinv_reflectionless_band(&config, lambda_lo, lambda_hi, threshold, samples, &band));
    if (band.empty) {
        std::cout << "no wavelengths below threshold " << num(threshold) << "\n";
        return 3;
    }
    std::cout << "band: [" << num(band.lambda_min_nm) << ", " << num(band.lambda_max_nm)
              << "] nm, width " << num(band.width_nm) << " nm at threshold "
              << num(band.threshold) << "\n";
    return 0;
}

int run_verify(const ConfigArgs& cfg, double K)
{
    const slabinv_config config = cfg.resolve();
    slabinv_duality_report report{};
    check(slabinv_verify_duality(&config, K, &report));
    std::cout << "classification: original = " << side_name(report.original)
              << ", pt-transformed = " << side_name(report.pt_transformed)
              << ", conjugated = " << side_name(report.conjugated) << "\n";
    std::cout << "statement i  (PT transform preserves invisibility): "
              << (report.statement_i_ok ? "pass" : "FAIL")
              << " (matrix-rule deviation " << num(report.pt_rule_deviation) << ")\n";
    std::cout << "statement ii (conjugation swaps left and right):    "
              << (report.statement_ii_ok ? "pass" : "FAIL")
              << " (off-diagonal swap deviation " << num(report.conj_swap_deviation) << ")\n";
    return (report.statement_i_ok && report.statement_ii_ok) ? 0 : 1;
}

int run_oracle_check(const ConfigArgs& cfg, double K, std::size_t steps)
{
    const slabinv_config config = cfg.resolve();
    double deviation = 0.0;
    check(slabinv_oracle_deviation(&config, K, steps, &deviation));
    std::cout << "closed-form vs integrated transfer matrix: max relative deviation "
              << num(deviation) << " (" << steps << " steps)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-layer slab scattering calculator and invisibility solvers"};
    app.require_subcommand(1);
    app.add_option("--digits", g_digits, "significant digits in printed numbers")
        ->check(CLI::Range(1, 17));

    // scan
    auto* scan = app.add_subcommand("scan", "sample scattering observables over a K window");
    ConfigArgs scan_cfg;
    scan_cfg.attach(scan);
    double k_lo = 1995.0, k_hi = 2005.0;
    std::size_t samples = 10000;
    std::string output = "-";
    scan->add_option("--k-lo", k_lo, "window start (dimensionless K)")->required();
    scan->add_option("--k-hi", k_hi, "window end")->required();
    scan->add_option("--samples", samples, "number of samples");
    scan->add_option("--output,-o", output, "CSV path, or - for stdout");

    // solve-pt
    auto* solve_pt = app.add_subcommand("solve-pt", "find PT-symmetric invisible points");
    double eta = 3.4, kappa_sign = -1.0, pt_l_um = 300.0;
    double pt_k_lo = 1995.0, pt_k_hi = 2005.0;
    solve_pt->add_option("--eta", eta, "Re(n1) = Re(n2)")->required();
    solve_pt->add_option("--k-lo", pt_k_lo, "window start")->required();
    solve_pt->add_option("--k-hi", pt_k_hi, "window end")->required();
    solve_pt->add_option("--kappa-sign", kappa_sign, "gain side: -1 left (default), +1 right");
    solve_pt->add_option("--L-um", pt_l_um, "thickness for wavelength output");

    // solve-nonpt
    auto* solve_nonpt =
        app.add_subcommand("solve-nonpt", "construct a non-PT-symmetric invisible slab");
    double eta1 = 3.4, eta2 = 1.4, k_target = 2000.0, gamma0 = -6.0, np_l_um = 300.0;
    int m_plus = 0, m_minus = 0, m0 = 0;
    std::string side_arg = "left";
    solve_nonpt->add_option("--eta1", eta1, "target Re(n1)")->required();
    solve_nonpt->add_option("--eta2", eta2, "target Re(n2)")->required();
    solve_nonpt->add_option("--K", k_target, "target dimensionless wavenumber")->required();
    solve_nonpt->add_option("--gamma0", gamma0, "free order-1 parameter");
    auto* o_mp = solve_nonpt->add_option("--m-plus", m_plus, "override integer m+");
    auto* o_mm = solve_nonpt->add_option("--m-minus", m_minus, "override integer m-");
    auto* o_m0 = solve_nonpt->add_option("--m0", m0, "override integer m0");
    solve_nonpt->add_option("--side", side_arg, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    solve_nonpt->add_option("--L-um", np_l_um, "thickness for wavelength output");

    // bidir
    auto* bidir = app.add_subcommand("bidir", "construct a bidirectionally invisible slab");
    int b_m = 1, b_m1 = 1, b_m2 = 2;
    double b_l_um = 300.0;
    bidir->add_option("--m", b_m, "K = pi m")->required();
    bidir->add_option("--m1", b_m1, "n1 = 2 m1 / m")->required();
    bidir->add_option("--m2", b_m2, "n2 = 2 m2 / m")->required();
    bidir->add_option("--L-um", b_l_um, "thickness in micrometers");

    // band
    auto* band = app.add_subcommand("band", "largest reflectionless wavelength band");
    ConfigArgs band_cfg;
    band_cfg.attach(band);
    double lambda_lo = 700.0, lambda_hi = 1300.0, threshold = 1e-4;
    std::size_t band_samples = 10000;
    band->add_option("--lambda-lo", lambda_lo, "window start, nm")->required();
    band->add_option("--lambda-hi", lambda_hi, "window end, nm")->required();
    band->add_option("--threshold", threshold, "|Rl|^2 threshold");
    band->add_option("--samples", band_samples, "sampling resolution");

    // verify
    auto* verify = app.add_subcommand("verify", "check the duality structure at one K");
    ConfigArgs verify_cfg;
    verify_cfg.attach(verify);
    double verify_k = 2000.0;
    verify->add_option("--K", verify_k, "dimensionless wavenumber")->required();

    // oracle-check
    auto* oracle = app.add_subcommand("oracle-check",
                                      "compare closed form against direct integration");
    ConfigArgs oracle_cfg;
    oracle_cfg.attach(oracle);
    double oracle_k = 100.0;
    std::size_t oracle_steps = 100000;
    oracle->add_option("--K", oracle_k, "dimensionless wavenumber")->required();
    oracle->add_option("--steps", oracle_steps, "integration steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (scan->parsed())
            return run_scan_cmd(scan_cfg, k_lo, k_hi, samples, output);
        if (solve_pt->parsed())
            return run_solve_pt(eta, pt_k_lo, pt_k_hi, kappa_sign, pt_l_um);
        if (solve_nonpt->parsed())
            return run_solve_nonpt(eta1, eta2, k_target, gamma0, m_plus, m_minus, m0,
                                   o_mp->count() || o_mm->count() || o_m0->count(), side_arg,
                                   np_l_um);
        if (bidir->parsed())
            return run_bidir(b_m, b_m1, b_m2, b_l_um);
        if (band->parsed())
            return run_band(band_cfg, lambda_lo, lambda_hi, threshold, band_samples);
        if (verify->parsed())
            return run_verify(verify_cfg, verify_k);
        if (oracle->parsed())
            return run_oracle_check(oracle_cfg, oracle_k, oracle_steps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
