#include "qkick/schedule.hpp"

#include <cmath>

#include "qkick/errors.hpp"

namespace qkick {

void KickSchedule::validate() const {
    double prev = 0.0;
    for (double t : times) {
        if (!std::isfinite(t) || t <= prev)
            throw DomainError("kick times must be positive and strictly increasing");
        prev = t;
    }
}

void GaussianSchedule::validate() const {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("pulse width tau must be > 0");
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (!std::isfinite(centers[i])) throw DomainError("pulse centers must be finite");
        if (i > 0 && centers[i] <= centers[i - 1])
            throw DomainError("pulse centers must be strictly increasing");
    }
}

}  // namespace qkick
