#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace drcn {

// Derivative-free maximin search over small box/simplex domains.
//
// The engine evaluates a uniform grid, keeps the maximum with deterministic
// lexicographic tie-breaking (first feasible point in lexicographic order
// wins among equal values), then re-centers a window of width range/shrink
// around the incumbent and repeats. Windows are shifted, not shrunk, when
// they would cross the domain boundary, because optima frequently sit on
// boundaries. Two runs with identical inputs are bit-identical.

inline constexpr std::size_t kMaxSearchDim = 6;

struct SearchDomain {
    struct Box {
        double lo = 0.0;
        double hi = 1.0;
    };
    enum class SumMode { le, eq };
    struct SimplexGroup {
        std::vector<std::size_t> coords;  // indices into boxes
        double bound = 1.0;
        SumMode mode = SumMode::le;
    };

    std::vector<Box> boxes;
    std::vector<SimplexGroup> groups;

    std::size_t dim() const { return boxes.size(); }

    // n coordinates in [lo,hi] each, unconstrained jointly.
    static SearchDomain box(std::vector<Box> bs) {
        SearchDomain d;
        d.boxes = std::move(bs);
        return d;
    }

    // n coordinates >= 0 with sum <= bound (or == bound).
    static SearchDomain simplex(std::size_t n, double bound, SumMode mode = SumMode::le) {
        SearchDomain d;
        SimplexGroup g;
        g.bound = bound;
        g.mode = mode;
        for (std::size_t i = 0; i < n; ++i) {
            d.boxes.push_back({0.0, bound});
            g.coords.push_back(i);
        }
        d.groups.push_back(std::move(g));
        return d;
    }

    void add_simplex_group(std::vector<std::size_t> coords, double bound,
                           SumMode mode = SumMode::le) {
        groups.push_back({std::move(coords), bound, mode});
    }

    void validate() const {
        if (boxes.empty() || boxes.size() > kMaxSearchDim) {
            throw std::invalid_argument("SearchDomain: dimension must be in [1," +
                                        std::to_string(kMaxSearchDim) + "], got " +
                                        std::to_string(boxes.size()));
        }
        for (const Box& b : boxes) {
            if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || b.lo > b.hi) {
                throw std::invalid_argument("SearchDomain: box bounds must be finite with lo <= hi");
            }
        }
        std::array<bool, kMaxSearchDim> used{};
        for (const SimplexGroup& g : groups) {
            if (!(g.bound >= 0.0) || !std::isfinite(g.bound)) {
                throw std::invalid_argument("SearchDomain: simplex bound must be >= 0");
            }
            if (g.coords.empty()) {
                throw std::invalid_argument("SearchDomain: empty simplex group");
            }
            for (std::size_t c : g.coords) {
                if (c >= boxes.size()) {
                    throw std::invalid_argument("SearchDomain: simplex coord out of range");
                }
                if (used[c]) {
                    throw std::invalid_argument("SearchDomain: coordinate in two simplex groups");
                }
                used[c] = true;
            }
        }
    }

    // Slack tolerance used for feasibility of grid points assembled from
    // floating-point axes.
    static constexpr double kFeasSlack = 1e-12;

    bool contains(std::span<const double> x, double slack = kFeasSlack) const {
        if (x.size() != boxes.size()) return false;
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            const double tol = slack * std::max(1.0, std::abs(boxes[i].hi));
            if (x[i] < boxes[i].lo - tol || x[i] > boxes[i].hi + tol) return false;
        }
        for (const SimplexGroup& g : groups) {
            double s = 0.0;
            for (std::size_t c : g.coords) s += x[c];
            const double tol = slack * std::max(1.0, g.bound);
            if (s > g.bound + tol) return false;
            if (g.mode == SumMode::eq && s < g.bound - tol) return false;
        }
        return true;
    }
};

struct SearchResult {
    double value = 0.0;
    std::vector<double> argmax;
    std::uint64_t evaluations = 0;
    bool converged = false;
    std::vector<double> resolution;    // final grid spacing per coordinate
    std::vector<double> round_values;  // incumbent value after each round
};

struct RefineParams {
    int points_per_dim = 17;
    int rounds = 5;
    double shrink = 4.0;
    // Convergence is declared when the final round improves the incumbent by
    // at most value_tol.
    double value_tol = 0.0;
};

class search_error : public std::runtime_error {
public:
    search_error(const std::string& msg, std::vector<double> point)
        : std::runtime_error(msg), point_(std::move(point)) {}
    const std::vector<double>& point() const noexcept { return point_; }

private:
    std::vector<double> point_;
};

namespace detail {

struct Window {
    double lo, hi;
    double width() const { return hi - lo; }
};

// Shift-clamp a window of width w centered at c into [lo,hi].
inline Window clamp_window(double c, double w, double lo, double hi) {
    w = std::min(w, hi - lo);
    double wlo = c - 0.5 * w;
    if (wlo < lo) wlo = lo;
    if (wlo + w > hi) wlo = hi - w;
    return {wlo, wlo + w};
}

}  // namespace detail

template <typename Objective>
SearchResult refine_grid_max(Objective&& objective, const SearchDomain& domain,
                             const RefineParams& params = {}) {
    domain.validate();
    if (params.points_per_dim < 3) throw std::invalid_argument("refine_grid_max: points_per_dim >= 3");
    if (params.rounds < 1) throw std::invalid_argument("refine_grid_max: rounds >= 1");
    if (!(params.shrink > 1.0)) throw std::invalid_argument("refine_grid_max: shrink > 1");

    const std::size_t dim = domain.dim();
    const std::size_t n = static_cast<std::size_t>(params.points_per_dim);

    // For an equality group the last coordinate is derived as the remainder,
    // never gridded.
    std::array<bool, kMaxSearchDim> derived{};
    for (const auto& g : domain.groups) {
        if (g.mode == SearchDomain::SumMode::eq) derived[g.coords.back()] = true;
    }

    SearchResult res;
    res.argmax.assign(dim, 0.0);
    res.resolution.assign(dim, 0.0);

    std::array<detail::Window, kMaxSearchDim> win;
    for (std::size_t k = 0; k < dim; ++k) win[k] = {domain.boxes[k].lo, domain.boxes[k].hi};

    std::array<std::vector<double>, kMaxSearchDim> axes;
    std::array<double, kMaxSearchDim> pt{};
    bool have_incumbent = false;
    double best = 0.0;
    std::array<double, kMaxSearchDim> best_pt{};

    for (int round = 0; round < params.rounds; ++round) {
        for (std::size_t k = 0; k < dim; ++k) {
            axes[k].clear();
            if (derived[k]) continue;
            const double step = win[k].width() / static_cast<double>(n - 1);
            for (std::size_t i = 0; i < n; ++i) {
                double v = win[k].lo + step * static_cast<double>(i);
                if (i + 1 == n) v = win[k].hi;  // avoid drift at the top end
                v = std::min(std::max(v, domain.boxes[k].lo), domain.boxes[k].hi);
                if (axes[k].empty() || v != axes[k].back()) axes[k].push_back(v);
            }
        }

        const double prev_best = have_incumbent ? best : 0.0;
        const bool had_incumbent = have_incumbent;

        // Odometer over gridded coordinates, lexicographic.
        std::array<std::size_t, kMaxSearchDim> idx{};
        bool done = false;
        while (!done) {
            bool feasible = true;
            for (std::size_t k = 0; k < dim; ++k) {
                if (!derived[k]) pt[k] = axes[k][idx[k]];
            }
            for (const auto& g : domain.groups) {
                const std::size_t last = g.coords.back();
                double s = 0.0;
                const bool has_derived = (g.mode == SearchDomain::SumMode::eq);
                for (std::size_t c : g.coords) {
                    if (has_derived && c == last) continue;
                    s += pt[c];
                }
                const double tol = SearchDomain::kFeasSlack * std::max(1.0, g.bound);
                if (has_derived) {
                    const double rem = g.bound - s;
                    if (rem < -tol) { feasible = false; break; }
                    pt[last] = std::max(rem, 0.0);
                } else if (s > g.bound + tol) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                assert(domain.contains(std::span<const double>(pt.data(), dim)));
                const double v = objective(std::span<const double>(pt.data(), dim));
                ++res.evaluations;
                if (!std::isfinite(v)) {
                    throw search_error("refine_grid_max: objective returned non-finite value",
                                       std::vector<double>(pt.begin(), pt.begin() + dim));
                }
                if (!have_incumbent || v > best) {
                    have_incumbent = true;
                    best = v;
                    best_pt = pt;
                }
            }
            // advance odometer (last coordinate fastest)
            done = true;
            for (std::size_t k = dim; k-- > 0;) {
                if (derived[k]) continue;
                if (++idx[k] < axes[k].size()) { done = false; break; }
                idx[k] = 0;
            }
        }

        if (!have_incumbent) {
            throw search_error("refine_grid_max: no feasible grid point", {});
        }

        res.round_values.push_back(best);
        const double improvement = had_incumbent ? best - prev_best : best;
        if (round + 1 == params.rounds) {
            res.converged = improvement <= params.value_tol;
            for (std::size_t k = 0; k < dim; ++k) {
                res.resolution[k] =
                    derived[k] ? 0.0 : win[k].width() / static_cast<double>(n - 1);
            }
        }

        for (std::size_t k = 0; k < dim; ++k) {
            if (derived[k]) continue;
            win[k] = detail::clamp_window(best_pt[k], win[k].width() / params.shrink,
                                          domain.boxes[k].lo, domain.boxes[k].hi);
        }
    }

    res.value = best;
    res.argmax.assign(best_pt.begin(), best_pt.begin() + dim);
    return res;
}

}  // namespace drcn
