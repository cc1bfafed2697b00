#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "drcn/capacity.hpp"
#include "drcn/network.hpp"
#include "drcn/optimizer.hpp"

namespace drcn {

// Simultaneous uplink/downlink: a TDMA combination of three phases.
// Phase 1 (fraction alpha): two-way communication user 1 <-> BS.
// Phase 2 (fraction beta): two-way communication user 2 <-> BS.
// Phase 3 (fraction gamma): two-way relaying user 2 <-> BS via user 1,
// with compute-forward decoding of the signal sum at the relay.
//
// User 1 is idle in phase 2, so its phase-1/3 power is boosted by 1/(1-beta);
// user 2 is idle in phase 1, boosted by 1/(1-alpha). The BS transmits at p3
// throughout.

struct TimeShare {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

inline constexpr double kTimeShareTol = 1e-12;

inline TimeShare validate_time_share(const TimeShare& ts) {
    const double f[] = {ts.alpha, ts.beta, ts.gamma};
    for (double v : f) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw std::domain_error("TimeShare: fractions must lie in [0,1]");
        }
    }
    const double sum = ts.alpha + ts.beta + ts.gamma;
    if (std::abs(sum - 1.0) > kTimeShareTol) {
        throw std::domain_error("TimeShare: alpha+beta+gamma must equal 1");
    }
    return ts;
}

struct SimRateComponents {
    double r13_bar = 0.0;  // DL to user 1, phase 1
    double r31_bar = 0.0;  // UL from user 1, phase 1
    double ru2_bar = 0.0;  // UL from user 2, phase 2
    double ru3_bar = 0.0;  // DL to user 2, phase 2
    double rb_bar = 0.0;   // two-way relaying rate, phase 3
};

namespace detail {

// A phase rate is duration * C(snr); a zero-duration phase contributes 0
// even when the boosted SNR inside diverges (the 1/(1-x) boosts only blow
// up when the corresponding duration is forced to 0 by the simplex).
inline double timed_rate(double duration, double snr) {
    return duration <= 0.0 ? 0.0 : duration * capacity(snr);
}

inline SimRateComponents sim_components_unchecked(const NetworkConfig& cfg, double alpha,
                                                  double beta, double gamma) {
    const double h1s = cfg.h1 * cfg.h1;
    const double h2s = cfg.h2 * cfg.h2;
    const double h3s = cfg.h3 * cfg.h3;
    const double ab = 1.0 - alpha;  // user-2 active fraction
    const double bb = 1.0 - beta;   // user-1 active fraction

    SimRateComponents c;
    c.r13_bar = timed_rate(alpha, h2s * cfg.p3);
    c.r31_bar = alpha <= 0.0 ? 0.0 : alpha * capacity(h2s * cfg.p1 / bb);
    c.ru2_bar = beta <= 0.0 ? 0.0 : beta * capacity(h1s * cfg.p2 / ab);
    c.ru3_bar = timed_rate(beta, h1s * cfg.p3);
    if (gamma <= 0.0) {
        c.rb_bar = 0.0;
    } else {
        const double decode_at_relay = std::min(capacity_plus(h3s * cfg.p2 / ab - 0.5),
                                                capacity_plus(h2s * cfg.p3 - 0.5));
        const double decode_from_relay =
            std::min(capacity(h2s * cfg.p1 / bb), capacity(h3s * cfg.p1 / bb));
        c.rb_bar = gamma * std::min(decode_at_relay, decode_from_relay);
    }
    return c;
}

inline double sim_rate_unchecked(const NetworkConfig& cfg, double alpha, double beta,
                                 double gamma) {
    const SimRateComponents c = sim_components_unchecked(cfg, alpha, beta, gamma);
    return std::min(std::min(c.r13_bar, c.r31_bar),
                    std::min(c.rb_bar + c.ru3_bar, c.rb_bar + c.ru2_bar));
}

}  // namespace detail

inline SimRateComponents sim_components(const NetworkConfig& cfg, const TimeShare& ts) {
    validate_time_share(ts);
    return detail::sim_components_unchecked(cfg, ts.alpha, ts.beta, ts.gamma);
}

// Symmetric rate supported by a given time share: the four messages all get
// min{R13, R31, Rb+Ru3, Rb+Ru2}.
inline double sim_rate_at(const NetworkConfig& cfg, const TimeShare& ts) {
    validate_time_share(ts);
    return detail::sim_rate_unchecked(cfg, ts.alpha, ts.beta, ts.gamma);
}

struct SimOptimum {
    double rate = 0.0;
    TimeShare share;
    SearchResult search;
};

namespace detail {

inline SimOptimum sim_optimum_from(const NetworkConfig& cfg, const SearchResult& sr) {
    SimOptimum opt;
    opt.search = sr;
    opt.rate = sr.value;
    opt.share.alpha = sr.argmax[0];
    opt.share.beta = sr.argmax[1];
    opt.share.gamma = std::max(0.0, 1.0 - sr.argmax[0] - sr.argmax[1]);
    (void)cfg;
    return opt;
}

}  // namespace detail

// Maximize sim_rate_at over the time-share simplex. The search runs over
// (alpha, beta) with gamma as the remainder. The slow shrink keeps the
// window wide enough to follow the narrow balance ridges this objective has
// near its optimum.
inline SimOptimum optimize_sim(const NetworkConfig& cfg, double tol = 1e-3) {
    if (!(tol > 0.0)) throw std::invalid_argument("optimize_sim: tol must be positive");
    validate_config(cfg);
    SearchDomain dom = SearchDomain::simplex(2, 1.0);
    RefineParams params{17, 14, 2.0, tol};
    auto obj = [&cfg](std::span<const double> x) {
        const double g = std::max(0.0, 1.0 - x[0] - x[1]);
        return detail::sim_rate_unchecked(cfg, x[0], x[1], g);
    };
    return detail::sim_optimum_from(cfg, refine_grid_max(obj, dom, params));
}

// Same maximization restricted to gamma = 0 (no relaying phase); used as the
// comparison point for the closed-form two-way oracle below.
inline SimOptimum optimize_sim_two_way(const NetworkConfig& cfg, double tol = 1e-3) {
    if (!(tol > 0.0)) throw std::invalid_argument("optimize_sim_two_way: tol must be positive");
    validate_config(cfg);
    SearchDomain dom = SearchDomain::simplex(2, 1.0, SearchDomain::SumMode::eq);
    RefineParams params{33, 12, 2.0, tol};
    auto obj = [&cfg](std::span<const double> x) {
        return detail::sim_rate_unchecked(cfg, x[0], x[1], 0.0);
    };
    return detail::sim_optimum_from(cfg, refine_grid_max(obj, dom, params));
}

// Closed-form optimum of the gamma = 0 restriction when all three power
// budgets coincide: alpha C(h2^2 P) = beta C(h1^2 P) with alpha + beta = 1
// gives C1 C2 / (C1 + C2), half the harmonic mean of the two direct rates.
// Requires p1 = p3 and p2 = p3 so the boosted terms r31, ru2 dominate their
// direct counterparts and drop out of the min.
inline double harmonic_two_way_rate(const NetworkConfig& cfg) {
    validate_config(cfg);
    const double scale = std::max({1.0, cfg.p1, cfg.p2, cfg.p3});
    if (std::abs(cfg.p1 - cfg.p3) > 1e-12 * scale || std::abs(cfg.p2 - cfg.p3) > 1e-12 * scale) {
        throw std::domain_error(
            "harmonic_two_way_rate: closed form requires p1 = p2 = p3");
    }
    const double c1 = capacity(cfg.h1 * cfg.h1 * cfg.p3);
    const double c2 = capacity(cfg.h2 * cfg.h2 * cfg.p3);
    if (c1 + c2 <= 0.0) return 0.0;
    return c1 * c2 / (c1 + c2);
}

}  // namespace drcn
