#include "fairsignal/sim/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairsignal {

const char* to_string(Phase p) {
    return p == Phase::GreenWE ? "green-we" : "green-ns";
}

const char* to_string(Approach a) {
    switch (a) {
        case Approach::North: return "N";
        case Approach::East: return "E";
        case Approach::South: return "S";
        case Approach::West: return "W";
    }
    return "?";
}

const char* to_string(Flow f) {
    return f == Flow::NS ? "NS" : "WE";
}

void SimConfig::validate() const {
    if (we_lanes < 1 || ns_lanes < 1)
        throw std::invalid_argument("SimConfig: lane counts must be >= 1");
    if (we_length_m <= 0.0 || ns_length_m <= 0.0)
        throw std::invalid_argument("SimConfig: road lengths must be positive");
    if (we_speed_mps <= 0.0 || ns_speed_mps <= 0.0)
        throw std::invalid_argument("SimConfig: speed limits must be positive");
    if (saturation_headway_s <= 0.0)
        throw std::invalid_argument("SimConfig: saturation headway must be positive");
    if (yellow_duration_s < 0 || min_green_s < 0)
        throw std::invalid_argument("SimConfig: yellow/min-green must be non-negative");
    if (delta_switch_s != yellow_duration_s + min_green_s)
        throw std::invalid_argument(
            "SimConfig: delta_switch must equal yellow_duration + min_green");
    if (decision_interval_s < 1)
        throw std::invalid_argument("SimConfig: decision interval must be >= 1");
    if (queue_cap_terminate < 1)
        throw std::invalid_argument("SimConfig: queue termination cap must be >= 1");
    if (max_episode_steps < 1)
        throw std::invalid_argument("SimConfig: max episode steps must be >= 1");
    if (vicinity_m <= 0.0 || vicinity_m > std::max(we_length_m, ns_length_m))
        throw std::invalid_argument("SimConfig: vicinity must be in (0, max road length]");
}

}  // namespace fairsignal
