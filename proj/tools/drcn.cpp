// drcn: symmetric-rate computations for a two-user device-relaying cellular
// network. Subcommands: rate, sweep, figure, threshold.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drcn/drcn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRegression = 2;
constexpr int kExitIo = 3;

struct ConfigFlags {
    double h1 = 0.0, h2 = 0.0, h3 = 0.0;
    double p = -1.0;
    double p1 = -1.0, p2 = -1.0, p3 = -1.0;

    void attach(CLI::App* cmd, bool need_h3 = true) {
        cmd->add_option("--h1", h1, "channel gain user 2 <-> BS")->required();
        cmd->add_option("--h2", h2, "channel gain user 1 <-> BS")->required();
        if (need_h3) cmd->add_option("--h3", h3, "D2D channel gain")->required();
        auto* p_all = cmd->add_option("--p", p, "power budget for all three nodes (linear)");
        auto* p1o = cmd->add_option("--p1", p1, "user-1 power budget (linear)");
        auto* p2o = cmd->add_option("--p2", p2, "user-2 power budget (linear)");
        auto* p3o = cmd->add_option("--p3", p3, "BS power budget (linear)");
        p_all->excludes(p1o)->excludes(p2o)->excludes(p3o);
    }

    drcn::NetworkConfig to_config() const {
        drcn::NetworkConfig cfg;
        cfg.h1 = h1;
        cfg.h2 = h2;
        cfg.h3 = h3;
        if (p >= 0.0) {
            cfg.p1 = cfg.p2 = cfg.p3 = p;
        } else {
            if (p1 < 0.0 || p2 < 0.0 || p3 < 0.0) {
                throw CLI::ValidationError("power", "give --p or all of --p1 --p2 --p3");
            }
            cfg.p1 = p1;
            cfg.p2 = p2;
            cfg.p3 = p3;
        }
        return drcn::validate_config(cfg);
    }
};

void emit(std::ostream& os, const std::string& line) { os << line << "\n"; }

std::string fmt(double v) { return drcn::format_sig15(v); }

int run_rate(const ConfigFlags& flags, const std::string& scheme, double tol_sim,
             double tol_sep, int cf_exponent, const std::string& out_path) {
    const drcn::NetworkConfig cfg = flags.to_config();
    std::vector<std::string> machine;

    if (scheme == "sim" || scheme == "all") {
        auto r = drcn::optimize_sim(cfg, tol_sim);
        std::cout << "simultaneous UL/DL: R_sim = " << fmt(r.rate) << " bit/channel use\n"
                  << "  time share: alpha = " << fmt(r.share.alpha)
                  << ", beta = " << fmt(r.share.beta) << ", gamma = " << fmt(r.share.gamma)
                  << "\n  search: " << r.search.evaluations << " evaluations, converged="
                  << (r.search.converged ? "yes" : "no") << "\n";
        machine.push_back("scheme=sim rate=" + fmt(r.rate) + " alpha=" + fmt(r.share.alpha) +
                          " beta=" + fmt(r.share.beta) + " gamma=" + fmt(r.share.gamma) +
                          " evals=" + std::to_string(r.search.evaluations) +
                          " converged=" + (r.search.converged ? "1" : "0"));
    }
    if (scheme == "sep" || scheme == "all") {
        auto r = drcn::optimize_sep(cfg, tol_sep, cf_exponent);
        const double tb = 1.0 - r.point.tau;
        const double p1d = tb > 0 ? std::max(0.0, cfg.p1 - r.point.tau * r.point.p1u) / tb : 0.0;
        const double p2d = tb > 0 ? std::max(0.0, cfg.p2 - r.point.tau * r.point.p2u) / tb : 0.0;
        auto mac = drcn::mac_c_optimize(cfg.h1, cfg.h2, cfg.h3, r.point.p1u, r.point.p2u,
                                        tol_sep / 4.0);
        auto bc = drcn::bc_c_optimize(cfg.h1, cfg.h2, cfg.h3, p1d, p2d,
                                      tb > 0 ? cfg.p3 / tb : 0.0, tol_sep / 4.0, cf_exponent);
        std::cout << "separated UL/DL (cf exponent " << cf_exponent
                  << "): R_sep = " << fmt(r.rate) << " bit/channel use\n"
                  << "  outer: tau = " << fmt(r.point.tau) << ", p1u = " << fmt(r.point.p1u)
                  << ", p2u = " << fmt(r.point.p2u) << "\n"
                  << "  UL split: p21 = " << fmt(mac.split.p21) << ", p31 = "
                  << fmt(mac.split.p31) << ", pc1 = " << fmt(mac.split.pc1)
                  << ", p12 = " << fmt(mac.split.p12) << ", p32 = " << fmt(mac.split.p32)
                  << ", pc2 = " << fmt(mac.split.pc2) << "\n"
                  << "  DL split: pc3 = " << fmt(bc.split.pc3) << ", p23 = "
                  << fmt(bc.split.p23) << ", p13 = " << fmt(bc.split.p13)
                  << ", p2 = " << fmt(bc.split.p2) << "\n"
                  << "  search: " << r.search.evaluations << " outer evaluations, converged="
                  << (r.search.converged ? "yes" : "no") << "\n";
        machine.push_back("scheme=sep rate=" + fmt(r.rate) + " tau=" + fmt(r.point.tau) +
                          " p1u=" + fmt(r.point.p1u) + " p2u=" + fmt(r.point.p2u) +
                          " cf_exponent=" + std::to_string(cf_exponent) +
                          " evals=" + std::to_string(r.search.evaluations));
    }
    if (scheme == "baseline" || scheme == "all") {
        auto r = drcn::baseline_no_cooperation(cfg, tol_sep);
        std::cout << "no-cooperation baseline: R = " << fmt(r.rate) << " bit/channel use\n"
                  << "  equal UL/DL split, UL rate = " << fmt(r.uplink_rate)
                  << ", DL rate = " << fmt(r.downlink_rate) << " (before time scaling)\n";
        machine.push_back("scheme=baseline rate=" + fmt(r.rate) +
                          " ul=" + fmt(r.uplink_rate) + " dl=" + fmt(r.downlink_rate));
    }

    for (const std::string& line : machine) emit(std::cout, line);
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitIo;
        }
        for (const std::string& line : machine) emit(os, line);
    }
    return kExitOk;
}

int run_sweep(const ConfigFlags& flags, const std::string& var, double from, double to,
              int points, bool log_spacing, const std::vector<std::string>& schemes,
              double tol_sim, double tol_sep, int cf_exponent, const std::string& out_path,
              bool quiet) {
    drcn::SweepSpec spec;
    spec.base = drcn::NetworkConfig{flags.h1, flags.h2, flags.h3, 0, 0, 0};
    if (flags.p >= 0.0) {
        spec.base.p1 = spec.base.p2 = spec.base.p3 = flags.p;
    } else if (flags.p1 >= 0.0 && flags.p2 >= 0.0 && flags.p3 >= 0.0) {
        spec.base.p1 = flags.p1;
        spec.base.p2 = flags.p2;
        spec.base.p3 = flags.p3;
    } else if (var != "snr2") {
        throw CLI::ValidationError("power", "give --p or all of --p1 --p2 --p3");
    }
    if (var == "h3") {
        spec.variable = drcn::SweepVariable::h3;
        spec.from = from;
        spec.to = to;
    } else {
        // snr2 bounds arrive in dB; the core works in linear scale.
        spec.variable = drcn::SweepVariable::snr2;
        spec.from = drcn::db_to_linear(from);
        spec.to = drcn::db_to_linear(to);
    }
    spec.points = points;
    spec.log_spacing = log_spacing;
    spec.compute_sim = spec.compute_sep = spec.compute_baseline = false;
    for (const std::string& s : schemes) {
        if (s == "sim" || s == "all") spec.compute_sim = true;
        if (s == "sep" || s == "all") spec.compute_sep = true;
        if (s == "baseline" || s == "all") spec.compute_baseline = true;
    }
    spec.cf_exponent = cf_exponent;
    spec.tol_sim = tol_sim;
    spec.tol_sep = tol_sep;

    const drcn::SweepTable table = drcn::run_sweep(spec, quiet ? nullptr : &std::cerr);
    if (out_path.empty()) {
        drcn::write_sweep_csv(table, std::cout);
    } else {
        std::ofstream os(out_path);
        if (!os) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitIo;
        }
        drcn::write_sweep_csv(table, os);
        if (!os.good()) {
            std::cerr << "error: write failed for " << out_path << "\n";
            return kExitIo;
        }
    }
    return kExitOk;
}

int run_figure(const std::string& name, double tol_sim, double tol_sep,
               const std::string& out_dir, bool quiet) {
    drcn::FigureResult res =
        drcn::compute_figure(name, tol_sim, tol_sep, quiet ? nullptr : &std::cerr);
    try {
        auto written = drcn::write_figure_outputs(res, out_dir);
        for (const auto& p : written) std::cerr << "wrote " << p.string() << "\n";
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    drcn::write_figure_summary(res, std::cout);
    return res.pass ? kExitOk : kExitRegression;
}

int run_threshold(const ConfigFlags& flags, double gain, double tol_sim, double tol_sep) {
    const drcn::NetworkConfig cfg = flags.to_config();
    const auto sim = drcn::optimize_sim(cfg, tol_sim);
    const auto base = drcn::baseline_no_cooperation(cfg, tol_sep);
    const double diff = sim.rate - base.rate;
    const bool on = diff >= gain;
    std::cout << "R_sim = " << fmt(sim.rate) << ", baseline = " << fmt(base.rate)
              << ", gain = " << fmt(diff) << " bit/channel use\n"
              << "device relaying: " << (on ? "relay ON" : "relay OFF") << " (threshold "
              << fmt(gain) << ")\n"
              << "relay=" << (on ? "on" : "off") << " gain=" << fmt(diff)
              << " r_sim=" << fmt(sim.rate) << " r_baseline=" << fmt(base.rate) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric (max-min fair) rates for a two-user device-relaying "
                 "cellular network"};
    app.require_subcommand(1);

    // rate
    auto* rate = app.add_subcommand("rate", "compute rates for one configuration");
    ConfigFlags rate_flags;
    rate_flags.attach(rate);
    std::string rate_scheme = "all";
    double rate_tol_sim = 1e-3, rate_tol_sep = 5e-3;
    int rate_e = 2;
    std::string rate_out;
    rate->add_option("--scheme", rate_scheme, "sim|sep|baseline|all")
        ->check(CLI::IsMember({"sim", "sep", "baseline", "all"}));
    rate->add_option("--tol", rate_tol_sim, "sim optimizer tolerance (default 1e-3)");
    rate->add_option("--tol-sep", rate_tol_sep, "sep optimizer tolerance (default 5e-3)");
    rate->add_option("--cf-exponent", rate_e, "compress-forward h3 exponent (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    rate->add_option("--out", rate_out, "also write machine-readable lines to this file");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "sweep h3 or SNR2 and emit CSV");
    ConfigFlags sweep_flags;
    sweep_flags.attach(sweep, /*need_h3=*/false);
    sweep->add_option("--h3", sweep_flags.h3, "D2D gain (fixed during snr2 sweeps)");
    std::string sweep_var = "h3";
    double sweep_from = 0.0, sweep_to = 0.0;
    int sweep_points = 2;
    bool sweep_log = false, sweep_quiet = false;
    std::vector<std::string> sweep_schemes{"all"};
    double sweep_tol_sim = 1e-3, sweep_tol_sep = 5e-3;
    int sweep_e = 2;
    std::string sweep_out;
    sweep->add_option("--var", sweep_var, "h3 | snr2 (snr2 bounds in dB)")
        ->check(CLI::IsMember({"h3", "snr2"}));
    sweep->add_option("--from", sweep_from, "sweep start (h3 linear, snr2 in dB)")->required();
    sweep->add_option("--to", sweep_to, "sweep end")->required();
    sweep->add_option("--points", sweep_points, "number of grid points (>= 2)")->required();
    sweep->add_flag("--log", sweep_log, "logarithmic spacing (linear-scale geometric)");
    sweep->add_option("--scheme", sweep_schemes, "schemes: sim sep baseline all")
        ->check(CLI::IsMember({"sim", "sep", "baseline", "all"}));
    sweep->add_option("--tol", sweep_tol_sim, "sim optimizer tolerance");
    sweep->add_option("--tol-sep", sweep_tol_sep, "sep optimizer tolerance");
    sweep->add_option("--cf-exponent", sweep_e, "compress-forward h3 exponent (2 or 3)")
        ->check(CLI::IsMember({2, 3}));
    sweep->add_option("--out", sweep_out, "output CSV path (stdout if omitted)");
    sweep->add_flag("--quiet", sweep_quiet, "suppress progress lines on stderr");

    // figure
    auto* figure = app.add_subcommand(
        "figure", "recompute a comparison figure and report deviations from the "
                  "reference coordinates (r_sep under both cf exponents)");
    std::string fig_name;
    std::string fig_out = ".";
    double fig_tol_sim = 1e-3, fig_tol_sep = 5e-3;
    bool fig_quiet = false;
    figure->add_option("name", fig_name, "fig3 | fig4")
        ->required()
        ->check(CLI::IsMember({"fig3", "fig4"}));
    figure->add_option("--out", fig_out, "output directory (default .)");
    figure->add_option("--tol", fig_tol_sim, "sim optimizer tolerance");
    figure->add_option("--tol-sep", fig_tol_sep, "sep optimizer tolerance");
    figure->add_flag("--quiet", fig_quiet, "suppress progress lines on stderr");

    // threshold
    auto* threshold = app.add_subcommand(
        "threshold", "report whether device relaying clears a rate-gain threshold");
    ConfigFlags thr_flags;
    thr_flags.attach(threshold);
    double thr_gain = 0.0, thr_tol_sim = 1e-3, thr_tol_sep = 5e-3;
    threshold->add_option("--gain", thr_gain, "required rate gain (bit/channel use)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    threshold->add_option("--tol", thr_tol_sim, "sim optimizer tolerance");
    threshold->add_option("--tol-sep", thr_tol_sep, "baseline optimizer tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rate->parsed()) {
            return run_rate(rate_flags, rate_scheme, rate_tol_sim, rate_tol_sep, rate_e,
                            rate_out);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_flags, sweep_var, sweep_from, sweep_to, sweep_points,
                             sweep_log, sweep_schemes, sweep_tol_sim, sweep_tol_sep, sweep_e,
                             sweep_out, sweep_quiet);
        }
        if (figure->parsed()) {
            return run_figure(fig_name, fig_tol_sim, fig_tol_sep, fig_out, fig_quiet);
        }
        if (threshold->parsed()) {
            return run_threshold(thr_flags, thr_gain, thr_tol_sim, thr_tol_sep);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
