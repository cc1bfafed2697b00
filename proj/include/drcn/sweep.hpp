#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "drcn/network.hpp"
#include "drcn/sep_scheme.hpp"
#include "drcn/sim_scheme.hpp"

namespace drcn {

// Parameter sweeps along the two figure axes. h3 sweeps vary the D2D gain
// with powers fixed; snr2 sweeps vary SNR2 = h2^2 P and set P1 = P2 = P3 =
// snr2 / h2^2. snr2 bounds are linear here; dB conversion happens at the CLI
// boundary only.

enum class SweepVariable { h3, snr2 };

struct SweepSpec {
    SweepVariable variable = SweepVariable::h3;
    double from = 0.0;
    double to = 0.0;
    int points = 2;
    bool log_spacing = false;
    NetworkConfig base;  // swept field(s) overridden per point
    bool compute_sim = true;
    bool compute_sep = true;
    bool compute_baseline = true;
    int cf_exponent = 2;
    double tol_sim = 1e-3;
    double tol_sep = 5e-3;
};

inline void validate_sweep_spec(const SweepSpec& spec) {
    if (!std::isfinite(spec.from) || !std::isfinite(spec.to) || spec.from >= spec.to) {
        throw std::invalid_argument("sweep: need finite from < to");
    }
    if (spec.points < 2) throw std::invalid_argument("sweep: points must be >= 2");
    if (spec.log_spacing && spec.from <= 0.0) {
        throw std::invalid_argument("sweep: log spacing requires from > 0");
    }
    if (!spec.compute_sim && !spec.compute_sep && !spec.compute_baseline) {
        throw std::invalid_argument("sweep: no schemes selected");
    }
    validate_cf_exponent(spec.cf_exponent);
    if (spec.variable == SweepVariable::snr2 && spec.base.h2 == 0.0) {
        throw std::invalid_argument("sweep: snr2 sweep requires h2 != 0");
    }
}

inline std::vector<double> sweep_abscissas(const SweepSpec& spec) {
    std::vector<double> xs(static_cast<std::size_t>(spec.points));
    const int n = spec.points;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        xs[static_cast<std::size_t>(i)] =
            spec.log_spacing ? spec.from * std::pow(spec.to / spec.from, t)
                             : spec.from + (spec.to - spec.from) * t;
    }
    xs.front() = spec.from;
    xs.back() = spec.to;
    return xs;
}

inline NetworkConfig sweep_config_at(const SweepSpec& spec, double x) {
    NetworkConfig cfg = spec.base;
    if (spec.variable == SweepVariable::h3) {
        cfg.h3 = x;
    } else {
        const double p = x / (spec.base.h2 * spec.base.h2);
        cfg.p1 = cfg.p2 = cfg.p3 = p;
    }
    return validate_config(cfg);
}

struct SweepRow {
    double abscissa = 0.0;
    double r_sim = 0.0;
    double r_sep = 0.0;
    double r_nocoop = 0.0;
};

struct SweepTable {
    SweepSpec spec;
    std::vector<SweepRow> rows;
};

inline SweepTable run_sweep(const SweepSpec& spec, std::ostream* progress = nullptr) {
    validate_sweep_spec(spec);
    SweepTable table;
    table.spec = spec;
    for (double x : sweep_abscissas(spec)) {
        const NetworkConfig cfg = sweep_config_at(spec, x);
        SweepRow row;
        row.abscissa = x;
        if (spec.compute_sim) row.r_sim = optimize_sim(cfg, spec.tol_sim).rate;
        if (spec.compute_sep) row.r_sep = optimize_sep(cfg, spec.tol_sep, spec.cf_exponent).rate;
        if (spec.compute_baseline) row.r_nocoop = baseline_no_cooperation(cfg, spec.tol_sep).rate;
        table.rows.push_back(row);
        if (progress) {
            *progress << "sweep: abscissa " << x << " done\n";
            progress->flush();
        }
    }
    return table;
}

// 15 significant digits, '.' decimal separator, locale-independent.
inline std::string format_sig15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline void write_sweep_csv(const SweepTable& table, std::ostream& os) {
    os << "abscissa";
    if (table.spec.compute_sim) os << ",r_sim";
    if (table.spec.compute_sep) os << ",r_sep";
    if (table.spec.compute_baseline) os << ",r_nocoop";
    os << "\n";
    for (const SweepRow& row : table.rows) {
        os << format_sig15(row.abscissa);
        if (table.spec.compute_sim) os << "," << format_sig15(row.r_sim);
        if (table.spec.compute_sep) os << "," << format_sig15(row.r_sep);
        if (table.spec.compute_baseline) os << "," << format_sig15(row.r_nocoop);
        os << "\n";
    }
}

}  // namespace drcn
