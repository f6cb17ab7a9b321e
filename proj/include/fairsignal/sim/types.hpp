#pragma once

#include <array>
#include <optional>
#include <vector>

namespace fairsignal {

enum class Phase : int { GreenWE = 0, GreenNS = 1 };
enum class Approach : int { North = 0, East = 1, South = 2, West = 3 };
enum class Flow : int { NS = 0, WE = 1 };

constexpr int kNumApproaches = 4;
constexpr std::array<Approach, 4> kApproaches{Approach::North, Approach::East,
                                              Approach::South, Approach::West};

constexpr int index(Approach a) { return static_cast<int>(a); }
constexpr int index(Flow f) { return static_cast<int>(f); }
constexpr int index(Phase p) { return static_cast<int>(p); }

constexpr Flow flow_of(Approach a) {
    return (a == Approach::North || a == Approach::South) ? Flow::NS : Flow::WE;
}

constexpr bool served_by(Approach a, Phase p) {
    return (p == Phase::GreenWE) ? (flow_of(a) == Flow::WE) : (flow_of(a) == Flow::NS);
}

constexpr Phase other_phase(Phase p) {
    return p == Phase::GreenWE ? Phase::GreenNS : Phase::GreenWE;
}

const char* to_string(Phase p);
const char* to_string(Approach a);
const char* to_string(Flow f);

struct SimConfig {
    int we_lanes = 3;
    int ns_lanes = 2;
    double we_length_m = 250.0;
    double ns_length_m = 200.0;
    double we_speed_mps = 50.0 / 3.6;  // 50 km/h
    double ns_speed_mps = 30.0 / 3.6;  // 30 km/h
    int yellow_duration_s = 3;
    int min_green_s = 7;
    int delta_switch_s = 10;  // must equal yellow + min green
    int decision_interval_s = 5;
    double saturation_headway_s = 2.0;  // seconds per vehicle per lane under green
    int queue_cap_terminate = 100;
    int max_episode_steps = 2000;
    double vicinity_m = 40.0;

    void validate() const;  // throws std::invalid_argument

    int lanes(Approach a) const { return flow_of(a) == Flow::WE ? we_lanes : ns_lanes; }
    double length_m(Approach a) const {
        return flow_of(a) == Flow::WE ? we_length_m : ns_length_m;
    }
    double speed_mps(Approach a) const {
        return flow_of(a) == Flow::WE ? we_speed_mps : ns_speed_mps;
    }
    double travel_time_s(Approach a) const { return length_m(a) / speed_mps(a); }
};

struct Vehicle {
    long long id = 0;
    Approach approach = Approach::North;
    int spawn_time = 0;
    double arrive_at_queue_time = 0.0;
    int join_tick = -1;    // clock at the end of the tick it joined the queue
    int wait_so_far = 0;   // whole ticks spent stopped in the queue
    int depart_time = -1;  // -1 until it crosses the stop line
};

struct SignalMachine {
    Phase current = Phase::GreenWE;
    bool in_yellow = false;
    int time_in_phase = 0;  // counts from the phase-change command, so it spans the yellow
    std::optional<Phase> pending;

    // Agent-facing phase: the target while the yellow runs, otherwise the lit one.
    Phase commanded() const { return pending ? *pending : current; }
};

struct TickOutcome {
    std::vector<Vehicle> departures;
    std::array<int, 4> arrivals_spawned{};
    std::array<int, 4> arrivals_joined_queue{};
    bool terminated_early = false;

    // End-of-tick snapshot consumed by estimators, rewards and trace exports.
    int clock_after = 0;
    std::array<int, 4> queues_after{};
    std::array<int, 4> vicinity_after{};
    std::array<long long, 4> wait_sums_after{};  // ground-truth sum of d_n per approach
    Phase commanded_after = Phase::GreenWE;
    bool was_yellow = false;
};

}  // namespace fairsignal
