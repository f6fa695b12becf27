#include "dfnls/elliptic.hpp"
#include "dfnls/krein.hpp"
#include "dfnls/serialize.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace dfnls;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConvergence = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitValidation = 4;

struct CommonOpts {
    double s = 1.0;
    double omega = 0.0;
    Eigen::Index n_modes = 4096;
    Eigen::Index basis_cutoff = 0;  // 0 selects N/4
    double tol = 1e-6;
    double gmres_tol = 1e-8;
    double kernel_tol = 0.0;  // 0 selects the scale-relative default
    double fd_step = 1e-3;
    std::string output_dir = "out";
    bool force = false;
    bool json_output = false;
    bool no_dealias = false;
};

SolverConfig solver_config(const CommonOpts& o) {
    SolverConfig cfg;
    cfg.newton_tol = o.tol;
    cfg.gmres_tol = o.gmres_tol;
    cfg.dealias = !o.no_dealias;
    return cfg;
}

std::string num(double v) { return format_full(v); }

std::string num_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// Shared flag checks; failures surface as exit 3 with a [flags]-tagged message.
std::string check_s_range(const std::string& text) {
    try {
        const double s = std::stod(text);
        if (!(s > 0.25 && s <= 1.0)) return "s must lie in (0.25, 1]";
    } catch (...) {
        return "s must be a number";
    }
    return {};
}

std::string check_n_modes(const std::string& text) {
    try {
        const long long n = std::stoll(text);
        if (n < 16 || (n & (n - 1)) != 0) return "n-modes must be a power of two >= 16";
    } catch (...) {
        return "n-modes must be an integer";
    }
    return {};
}

void add_grid_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n-modes", o.n_modes, "collocation points (power of two)")
        ->check(CLI::Validator(check_n_modes, "POW2"))
        ->capture_default_str();
    cmd->add_option("--basis-cutoff", o.basis_cutoff,
                    "sector basis wavenumber cutoff (default N/4)");
    cmd->add_option("--tol", o.tol, "Newton residual tolerance")->capture_default_str();
    cmd->add_option("--gmres-tol", o.gmres_tol, "inner linear-solve tolerance")
        ->capture_default_str();
    cmd->add_option("--output-dir", o.output_dir, "artifact directory")
        ->capture_default_str();
    cmd->add_flag("--force", o.force, "allow writing into a nonempty directory");
    cmd->add_flag("--json", o.json_output, "print the machine-readable report to stdout");
    cmd->add_flag("--no-dealias", o.no_dealias,
                  "evaluate cubic terms without zero padding (coarse grids only)");
}

void add_s_flag(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--s", o.s, "fractional exponent in (0.25, 1]")
        ->required()
        ->check(CLI::Validator(check_s_range, "S"));
}

void add_spectral_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--kernel-tol", o.kernel_tol,
                    "kernel classification threshold (default: scale-relative)");
    cmd->add_option("--fd-step", o.fd_step, "finite-difference step for d||phi||^2/domega")
        ->capture_default_str();
}

// Returns empty string on success, an error message otherwise.
std::string prepare_output_dir(const std::string& dir, bool force) {
    std::error_code ec;
    if (fs::exists(dir, ec)) {
        if (!fs::is_directory(dir, ec)) return "output path exists and is not a directory";
        if (!fs::is_empty(dir, ec) && !force)
            return "output directory is not empty (pass --force to overwrite)";
    }
    fs::create_directories(dir, ec);
    if (ec) return "cannot create output directory: " + ec.message();
    return {};
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

void write_json(const fs::path& path, const ordered_json& doc) {
    write_text(path, doc.dump(2) + "\n");
}

void write_manifest(const std::string& command, const CommonOpts& o,
                    std::map<std::string, std::string> parameters,
                    std::vector<std::string> artifacts) {
    RunManifest manifest;
    manifest.command = command;
    manifest.parameters = std::move(parameters);
    manifest.output_dir = o.output_dir;
    manifest.timestamp = iso8601_utc_now();
    artifacts.push_back("manifest.json");
    manifest.artifact_paths = std::move(artifacts);
    write_json(fs::path(o.output_dir) / "manifest.json", manifest_json(manifest));
}

std::map<std::string, std::string> base_parameters(const CommonOpts& o) {
    const SolverConfig cfg = solver_config(o);
    return {
        {"s", num(o.s)},
        {"omega", num(o.omega)},
        {"n_modes", std::to_string(o.n_modes)},
        {"basis_cutoff", std::to_string(o.basis_cutoff ? o.basis_cutoff : o.n_modes / 4)},
        {"tol", num(o.tol)},
        {"gmres_tol", num(o.gmres_tol)},
        {"kernel_tol", o.kernel_tol > 0.0 ? num(o.kernel_tol) : "auto"},
        {"fd_step", num(o.fd_step)},
        {"seed_step", num(cfg.seed_step)},
        {"dealias", cfg.dealias ? "true" : "false"},
    };
}

void print_lobes(const LobeCertificate& cert) {
    if (cert.certified)
        std::cout << "lobes: certified two-lobe (max at " << num_short(cert.x_max)
                  << ", min at " << num_short(cert.x_min) << ")\n";
    else
        std::cout << "lobes: NOT a two-lobe profile (" << cert.critical_points
                  << " critical points)\n";
}

// Trivial-branch diagnosis, directory preparation, then the solve itself;
// shared by every command that needs a converged wave.
int pre_solve_checks(const CommonOpts& o) {
    if (o.omega <= 1.0) {
        std::cerr << "[solve] omega = " << num_short(o.omega)
                  << ": only the trivial zero solution exists for omega <= 1\n";
        return kExitConvergence;
    }
    if (auto err = prepare_output_dir(o.output_dir, o.force); !err.empty()) {
        std::cerr << "[flags] " << err << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int solve_stage(const CommonOpts& o, WaveProfile& wave) {
    try {
        wave = solve_wave(o.s, o.omega, PeriodicGrid::make(o.n_modes), solver_config(o));
    } catch (const TrivialSolutionError& e) {
        std::cerr << "[solve] " << e.what() << "\n";
        return kExitConvergence;
    } catch (const ContinuationError& e) {
        std::cerr << "[solve] " << e.what() << " (omega " << num_short(e.omega_failed)
                  << ")\n";
        return kExitConvergence;
    } catch (const ConvergenceError& e) {
        std::cerr << "[solve] " << e.what() << "\n";
        return kExitConvergence;
    }
    return kExitOk;
}

void print_solve_summary(const WaveProfile& wave) {
    std::cout << "newton: converged in " << wave.newton_iters
              << " iterations, residual max-norm " << num_short(wave.residual_norm)
              << "\n";
    print_lobes(lobe_check(wave));
}

int cmd_solve(const CommonOpts& o) {
    if (int rc = pre_solve_checks(o); rc != kExitOk) return rc;
    WaveProfile wave;
    if (int rc = solve_stage(o, wave); rc != kExitOk) return rc;

    const ordered_json doc = profile_json(wave);
    write_json(fs::path(o.output_dir) / "profile.json", doc);
    std::ostringstream csv;
    write_profile_csv(csv, wave);
    write_text(fs::path(o.output_dir) / "profile.csv", csv.str());
    write_manifest("solve", o, base_parameters(o), {"profile.json", "profile.csv"});

    if (o.json_output)
        std::cout << doc.dump(2) << "\n";
    else
        print_solve_summary(wave);
    return kExitOk;
}

void print_krein_table(const KreinAnalysis& a) {
    const KreinReport& r = a.report;
    auto row = [](const std::string& name, int nl1, int zl1, int nl2, int zl2, int nl,
                  int nv) {
        std::printf("%-6s %6d %6d %6d %6d %6d %6d %7d\n", name.c_str(), nl1, zl1, nl2,
                    zl2, nl, nv, nl - nv);
    };
    std::printf("%-6s %6s %6s %6s %6s %6s %6s %7s\n", "sector", "n(L1)", "z(L1)",
                "n(L2)", "z(L2)", "n(L)", "n(V)", "diff");
    row("odd", a.l1_odd.n_neg, a.l1_odd.n_zero, a.l2_odd.n_neg, a.l2_odd.n_zero,
        r.n_l_odd, r.n_v_odd);
    row("even", a.l1_even.n_neg, a.l1_even.n_zero, a.l2_even.n_neg, a.l2_even.n_zero,
        r.n_l_even, r.n_v_even);
    row("full", a.l1_odd.n_neg + a.l1_even.n_neg, a.l1_odd.n_zero + a.l1_even.n_zero,
        a.l2_odd.n_neg + a.l2_even.n_neg, a.l2_odd.n_zero + a.l2_even.n_zero, r.n_l_full,
        r.n_v_full);
    std::cout << "v_odd = " << num_short(r.v_odd) << "   v_even = " << num_short(r.v_even);
    if (std::isfinite(r.dnorm_domega))
        std::cout << "   d||phi||^2/domega / 2 = " << num_short(r.dnorm_domega);
    std::cout << "\nverdict: " << verdict_name(r.verdict) << "\n";
}

int cmd_krein(const CommonOpts& o) {
    if (int rc = pre_solve_checks(o); rc != kExitOk) return rc;
    WaveProfile wave;
    if (int rc = solve_stage(o, wave); rc != kExitOk) return rc;

    KreinAnalysis analysis;
    try {
        analysis = analyze_wave_full(wave, solver_config(o), o.basis_cutoff,
                                     o.kernel_tol, o.fd_step);
    } catch (const SingularSectorError& e) {
        std::cerr << "[krein] " << e.what() << "\n";
        return kExitValidation;
    } catch (const ConvergenceError& e) {
        std::cerr << "[krein] finite-difference endpoint solve failed: " << e.what()
                  << "\n";
        return kExitConvergence;
    }

    const ordered_json doc = krein_json(analysis.report);
    write_json(fs::path(o.output_dir) / "krein.json", doc);
    write_json(fs::path(o.output_dir) / "profile.json", profile_json(wave));
    std::ostringstream csv;
    write_profile_csv(csv, wave);
    write_text(fs::path(o.output_dir) / "profile.csv", csv.str());
    write_manifest("krein", o, base_parameters(o),
                   {"krein.json", "profile.json", "profile.csv"});

    if (o.json_output) {
        std::cout << doc.dump(2) << "\n";
    } else {
        print_solve_summary(wave);
        print_krein_table(analysis);
    }
    return kExitOk;
}

int cmd_spectrum(const CommonOpts& o) {
    if (int rc = pre_solve_checks(o); rc != kExitOk) return rc;
    WaveProfile wave;
    if (int rc = solve_stage(o, wave); rc != kExitOk) return rc;

    ordered_json reports = ordered_json::array();
    for (OperatorKind kind : {OperatorKind::L1, OperatorKind::L2}) {
        for (Parity parity : {Parity::Odd, Parity::Even, Parity::Full}) {
            const SpectrumReport report =
                eig_counts({kind, wave, parity}, o.kernel_tol, o.basis_cutoff);
            reports.push_back(spectrum_json(report));
            if (!o.json_output) {
                std::printf("%-3s %-5s  n_neg=%d  n_zero=%d  lowest=%s\n",
                            operator_kind_name(kind), parity_name(parity), report.n_neg,
                            report.n_zero, num_short(report.eigenvalues[0]).c_str());
            }
        }
    }

    write_json(fs::path(o.output_dir) / "spectrum.json", reports);
    write_json(fs::path(o.output_dir) / "profile.json", profile_json(wave));
    write_manifest("spectrum", o, base_parameters(o), {"spectrum.json", "profile.json"});
    if (o.json_output) std::cout << reports.dump(2) << "\n";
    return kExitOk;
}

int cmd_validate_exact(const CommonOpts& o, double max_err) {
    CommonOpts opts = o;
    opts.s = 1.0;
    if (int rc = pre_solve_checks(opts); rc != kExitOk) return rc;
    WaveProfile wave;
    if (int rc = solve_stage(opts, wave); rc != kExitOk) return rc;

    WaveProfile exact;
    try {
        exact = exact_profile(o.omega, wave.field.grid);
    } catch (const std::domain_error& e) {
        std::cerr << "[validate] " << e.what() << "\n";
        return kExitInvalid;
    }

    const Eigen::ArrayXd diff = (wave.field.values - exact.field.values).abs();
    const double err_max = diff.maxCoeff();

    std::ostringstream csv;
    csv << "x,phi_exact,phi_numeric,abs_diff\n";
    const Eigen::ArrayXd& x = wave.field.grid->points();
    for (Eigen::Index j = 0; j < x.size(); ++j)
        csv << format_full(x[j]) << ',' << format_full(exact.field.values[j]) << ','
            << format_full(wave.field.values[j]) << ',' << format_full(diff[j]) << '\n';
    write_text(fs::path(o.output_dir) / "validate.csv", csv.str());

    ordered_json doc;
    doc["omega"] = o.omega;
    doc["n_modes"] = o.n_modes;
    doc["max_error"] = err_max;
    doc["max_error_allowed"] = max_err;
    doc["exact_residual_norm"] = exact.residual_norm;
    doc["numeric_residual_norm"] = wave.residual_norm;
    write_json(fs::path(o.output_dir) / "validate.json", doc);

    auto params = base_parameters(opts);
    params["max_err"] = num(max_err);
    write_manifest("validate-exact", opts, params, {"validate.csv", "validate.json"});

    if (o.json_output)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << "max |phi_numeric - phi_exact| = " << num_short(err_max)
                  << " (allowed " << num_short(max_err) << ")\n";
    if (err_max > max_err) {
        std::cerr << "[validate] max error " << num_short(err_max)
                  << " exceeds threshold " << num_short(max_err) << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

struct SweepRow {
    double omega = 0.0;
    bool ok = false;
    double norm_sq = std::numeric_limits<double>::quiet_NaN();
    double vodd = std::numeric_limits<double>::quiet_NaN();
    double veven = std::numeric_limits<double>::quiet_NaN();
    int n_l1 = -1, z_l1 = -1, n_l2 = -1, z_l2 = -1;
    std::string verdict = "failed";
    ordered_json krein = nullptr;
};

struct SweepChain {
    double s = 0.0;
    std::vector<SweepRow> rows;
    bool any_failed = false;
};

SweepChain run_chain(double s, const std::vector<double>& omegas, const CommonOpts& o) {
    SweepChain chain;
    chain.s = s;
    const GridPtr grid = PeriodicGrid::make(o.n_modes);
    const SolverConfig cfg = solver_config(o);

    WaveProfile last;
    bool have_last = false;
    for (double omega : omegas) {
        SweepRow row;
        row.omega = omega;
        try {
            WaveProfile wave;
            bool solved = false;
            if (have_last) {
                try {
                    wave = newton_solve(last.field, omega, s, cfg);
                    solved = true;
                } catch (const ConvergenceError&) {
                } catch (const TrivialSolutionError&) {
                }
            }
            if (!solved) wave = solve_wave(s, omega, grid, cfg);

            const KreinAnalysis a =
                analyze_wave_full(wave, cfg, o.basis_cutoff, o.kernel_tol, 0.0);
            row.ok = true;
            row.norm_sq = inner_product(wave.field, wave.field);
            row.vodd = a.report.v_odd;
            row.veven = a.report.v_even;
            row.n_l1 = a.l1_odd.n_neg + a.l1_even.n_neg;
            row.z_l1 = a.l1_odd.n_zero + a.l1_even.n_zero;
            row.n_l2 = a.l2_odd.n_neg + a.l2_even.n_neg;
            row.z_l2 = a.l2_odd.n_zero + a.l2_even.n_zero;
            row.verdict = verdict_name(a.report.verdict);
            row.krein = krein_json(a.report);
            last = wave;
            have_last = true;
        } catch (const std::exception&) {
            chain.any_failed = true;  // failure marker row; chain reseeds next omega
            have_last = false;
        }
        chain.rows.push_back(std::move(row));
    }
    return chain;
}

std::string sweep_csv(const SweepChain& chain) {
    std::ostringstream out;
    out << "omega,norm_sq,v_odd,v_even,n_L1,z_L1,n_L2,z_L2,verdict\n";
    for (const SweepRow& row : chain.rows) {
        out << format_full(row.omega) << ',';
        if (row.ok) {
            out << format_full(row.norm_sq) << ',' << format_full(row.vodd) << ','
                << format_full(row.veven) << ',' << row.n_l1 << ',' << row.z_l1 << ','
                << row.n_l2 << ',' << row.z_l2 << ',' << row.verdict << '\n';
        } else {
            out << "nan,nan,nan,-1,-1,-1,-1,failed\n";
        }
    }
    return out.str();
}

int sweep_workers(std::size_t n_chains) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DFNLS_WORKERS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1)
            workers = static_cast<unsigned>(parsed);
        else
            std::cerr << "[flags] ignoring invalid DFNLS_WORKERS='" << env << "'\n";
    }
    return static_cast<int>(std::min<std::size_t>(workers, n_chains));
}

int cmd_sweep(CommonOpts& o, const std::vector<double>& s_list, double omega_min,
              double omega_max, double omega_step) {
    if (!(omega_step > 0.0) || omega_min > omega_max || !(omega_min > 1.0)) {
        std::cerr << "[flags] empty or invalid omega range (need 1 < omega-min <= "
                     "omega-max and omega-step > 0)\n";
        return kExitInvalid;
    }
    std::vector<double> omegas;
    for (int i = 0;; ++i) {
        const double w = omega_min + i * omega_step;
        if (w > omega_max + 1e-9 * omega_step) break;
        omegas.push_back(w);
    }
    if (auto err = prepare_output_dir(o.output_dir, o.force); !err.empty()) {
        std::cerr << "[flags] " << err << "\n";
        return kExitInvalid;
    }

    // Chains are independent; workers pull chain indices off a shared counter
    // and results are assembled in input order, so output does not depend on
    // the worker count.
    std::vector<SweepChain> chains(s_list.size());
    const int workers = sweep_workers(s_list.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < s_list.size();)
            chains[i] = run_chain(s_list[i], omegas, o);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();

    ordered_json combined;
    combined["omega_min"] = omega_min;
    combined["omega_max"] = omega_max;
    combined["omega_step"] = omega_step;
    combined["n_modes"] = o.n_modes;
    combined["chains"] = ordered_json::array();
    std::vector<std::string> artifacts;
    bool any_failed = false;
    for (const SweepChain& chain : chains) {
        const std::string name = "sweep_s" + num_short(chain.s) + ".csv";
        write_text(fs::path(o.output_dir) / name, sweep_csv(chain));
        artifacts.push_back(name);
        any_failed = any_failed || chain.any_failed;

        ordered_json rows = ordered_json::array();
        for (const SweepRow& row : chain.rows) {
            ordered_json r;
            r["omega"] = row.omega;
            r["ok"] = row.ok;
            r["norm_sq"] = row.ok ? ordered_json(row.norm_sq) : ordered_json(nullptr);
            r["verdict"] = row.verdict;
            r["krein"] = row.krein;
            rows.push_back(std::move(r));
        }
        combined["chains"].push_back({{"s", chain.s}, {"rows", std::move(rows)}});
    }
    write_json(fs::path(o.output_dir) / "sweep.json", combined);
    artifacts.push_back("sweep.json");

    std::ostringstream s_text;
    for (std::size_t i = 0; i < s_list.size(); ++i)
        s_text << (i ? "," : "") << num(s_list[i]);
    auto params = base_parameters(o);
    params.erase("omega");
    params["s"] = s_text.str();
    params["omega_min"] = num(omega_min);
    params["omega_max"] = num(omega_max);
    params["omega_step"] = num(omega_step);
    write_manifest("sweep", o, params, artifacts);

    if (o.json_output) {
        std::cout << combined.dump(2) << "\n";
    } else {
        for (const SweepChain& chain : chains) {
            std::cout << "s = " << num_short(chain.s) << ":";
            for (const SweepRow& row : chain.rows)
                std::cout << " " << num_short(row.omega) << ":"
                          << (row.ok ? row.verdict : "FAILED");
            std::cout << "\n";
        }
    }
    if (any_failed) {
        std::cerr << "[sweep] one or more omega rows failed to converge\n";
        return kExitConvergence;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Odd periodic standing waves of the defocusing fractional cubic NLS "
        "equation: profiles, linearized spectra, and Krein-index stability "
        "verdicts"};
    app.require_subcommand(1);

    CommonOpts o;
    double max_err = 1e-5;
    std::vector<double> s_list;
    double omega_min = 0.0, omega_max = 0.0, omega_step = 0.1;

    CLI::App* solve = app.add_subcommand("solve", "compute one standing-wave profile");
    add_s_flag(solve, o);
    solve->add_option("--omega", o.omega, "frequency (nontrivial waves need omega > 1)")
        ->required();
    add_grid_flags(solve, o);

    CLI::App* krein = app.add_subcommand("krein", "full stability analysis at one point");
    add_s_flag(krein, o);
    krein->add_option("--omega", o.omega, "frequency")->required();
    add_grid_flags(krein, o);
    add_spectral_flags(krein, o);

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "sector eigenvalue counts of L1 and L2");
    add_s_flag(spectrum_cmd, o);
    spectrum_cmd->add_option("--omega", o.omega, "frequency")->required();
    add_grid_flags(spectrum_cmd, o);
    spectrum_cmd->add_option("--kernel-tol", o.kernel_tol,
                             "kernel classification threshold (default: scale-relative)");

    CLI::App* sweep = app.add_subcommand("sweep", "Krein verdicts over an (s, omega) grid");
    sweep->add_option("--s-list", s_list, "fractional exponents")
        ->required()
        ->delimiter(',');
    sweep->add_option("--omega-min", omega_min, "first frequency")->required();
    sweep->add_option("--omega-max", omega_max, "last frequency")->required();
    sweep->add_option("--omega-step", omega_step, "frequency increment")
        ->capture_default_str();
    add_grid_flags(sweep, o);
    sweep->add_option("--kernel-tol", o.kernel_tol,
                      "kernel classification threshold (default: scale-relative)");

    CLI::App* validate =
        app.add_subcommand("validate-exact", "compare s = 1 against the elliptic profile");
    validate->add_option("--omega", o.omega, "frequency (> 1)")
        ->required()
        ->check(CLI::Validator(
            [](const std::string& text) -> std::string {
                try {
                    if (!(std::stod(text) > 1.0)) return "omega must exceed 1";
                } catch (...) {
                    return "omega must be a number";
                }
                return {};
            },
            "OMEGA"));
    validate->add_option("--max-err", max_err, "largest allowed max-norm error")
        ->capture_default_str();
    add_grid_flags(validate, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "[flags] " << e.what() << "\n";
        return kExitInvalid;
    }

    for (double s : s_list)
        if (!(s > 0.25 && s <= 1.0)) {
            std::cerr << "[flags] s-list entry " << num_short(s)
                      << " outside (0.25, 1]\n";
            return kExitInvalid;
        }

    try {
        if (solve->parsed()) return cmd_solve(o);
        if (krein->parsed()) return cmd_krein(o);
        if (spectrum_cmd->parsed()) return cmd_spectrum(o);
        if (sweep->parsed()) return cmd_sweep(o, s_list, omega_min, omega_max, omega_step);
        if (validate->parsed()) return cmd_validate_exact(o, max_err);
    } catch (const std::invalid_argument& e) {
        std::cerr << "[flags] " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "[flags] " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::logic_error& e) {
        std::cerr << "[consistency] " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "[error] " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitInvalid;
}
