#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace drcn {

// Gaussian channel capacity C(x) = 1/2 log2(1+x) in bits per real channel use.
// All rates in this library are base-2; powers are linear scale with unit
// noise variance, so x is a dimensionless SNR.
inline double capacity(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::domain_error("capacity: SNR must be finite and nonnegative, got " +
                                std::to_string(x));
    }
    return 0.5 * std::log1p(x) / std::numbers::ln2;
}

// C+(x) = max{0, C(x)}, defined for x > -1. Appears in compute-forward rate
// terms where the effective SNR carries a -1/2 offset and can go negative.
inline double capacity_plus(double x) {
    if (!std::isfinite(x) || x <= -1.0) {
        throw std::domain_error("capacity_plus: argument must be finite and > -1, got " +
                                std::to_string(x));
    }
    if (x <= 0.0) return 0.0;
    return 0.5 * std::log1p(x) / std::numbers::ln2;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) {
    if (!(lin > 0.0)) throw std::domain_error("linear_to_db: value must be positive");
    return 10.0 * std::log10(lin);
}

}  // namespace drcn
