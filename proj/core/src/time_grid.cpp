#include "winfree/time_grid.hpp"

#include "winfree/error.hpp"

#include <cmath>

namespace winfree {

TimeGrid TimeGrid::over(double horizon, double dt, double t0) {
    if (!(dt > 0.0) || !(horizon > 0.0)) {
        throw InvalidArgument("TimeGrid::over: horizon and dt must be positive");
    }
    const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
    TimeGrid grid{t0, dt, steps};
    grid.validate();
    return grid;
}

void TimeGrid::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidArgument("TimeGrid: dt must be positive and finite");
    }
    if (steps < 1) {
        throw InvalidArgument("TimeGrid: steps must be >= 1");
    }
    if (!std::isfinite(t0) || !std::isfinite(end())) {
        throw InvalidArgument("TimeGrid: grid end points must be finite");
    }
}

}  // namespace winfree
