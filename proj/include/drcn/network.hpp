#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace drcn {

// Three-node network: users 1 and 2 plus the base station (node 3).
// h2 connects user 1 and the BS, h1 connects user 2 and the BS, h3 is the
// D2D link between the users. Powers are linear, noise-normalized.
struct NetworkConfig {
    double h1 = 0.0;
    double h2 = 0.0;
    double h3 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
};

class config_error : public std::invalid_argument {
public:
    enum class Kind { non_finite, negative_power, ordering };

    config_error(Kind kind, const std::string& msg)
        : std::invalid_argument(msg), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Accepts iff all fields are finite, powers are nonnegative and h2^2 >= h1^2
// (user 1 is the stronger user; callers must relabel users otherwise).
inline NetworkConfig validate_config(const NetworkConfig& raw) {
    const double fields[] = {raw.h1, raw.h2, raw.h3, raw.p1, raw.p2, raw.p3};
    const char* names[] = {"h1", "h2", "h3", "p1", "p2", "p3"};
    for (int i = 0; i < 6; ++i) {
        if (!std::isfinite(fields[i])) {
            throw config_error(config_error::Kind::non_finite,
                               std::string(names[i]) + " is not finite");
        }
    }
    for (int i = 3; i < 6; ++i) {
        if (fields[i] < 0.0) {
            throw config_error(config_error::Kind::negative_power,
                               std::string(names[i]) + " must be nonnegative, got " +
                                   std::to_string(fields[i]));
        }
    }
    if (raw.h2 * raw.h2 < raw.h1 * raw.h1) {
        throw config_error(config_error::Kind::ordering,
                           "h2^2 < h1^2: user 1 must be the stronger user; relabel users");
    }
    return raw;
}

}  // namespace drcn
