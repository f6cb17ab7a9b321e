#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "fairsignal/sim/arrivals.hpp"
#include "fairsignal/sim/types.hpp"

namespace fairsignal {

// Discrete-time (1 s tick) point-queue model of a four-way intersection with a
// two-phase signal. Vehicles travel the approach at free-flow speed, stack in a
// FIFO queue at the stop line, and discharge at the saturation rate under green.
class Simulation {
public:
    Simulation(SimConfig config, const std::array<ArrivalSpec, 4>& arrivals,
               std::uint64_t seed);

    // Advances one second. Throws std::logic_error on a terminated simulation.
    TickOutcome tick();

    // Runs one control decision: decision_interval ticks when the command keeps
    // the phase, yellow + min green (= delta_switch ticks) when it changes it.
    // Throws std::logic_error if issued before the delta_switch dwell is met.
    std::vector<TickOutcome> decision_step(Phase command);

    std::array<int, 4> queue_lengths() const;

    // Queued vehicles plus traveling vehicles within `vicinity_m` meters of the
    // stop line. Throws std::invalid_argument when the range is out of bounds.
    std::array<int, 4> vicinity_counts(double vicinity_m) const;

    // Traveling vehicles only (not yet stopped) within `within_m` meters.
    std::array<int, 4> approaching_counts(double within_m) const;

    int clock() const { return clock_; }
    const SimConfig& config() const { return config_; }
    const SignalMachine& signal() const { return signal_; }
    bool terminated() const { return terminated_; }

    // Departures of the latest tick, indexed by Flow.
    const std::array<int, 2>& tick_throughput() const { return tick_throughput_; }

    const std::vector<Vehicle>& departed() const { return departed_; }
    const std::deque<Vehicle>& queue(Approach a) const { return queues_[index(a)]; }
    const std::deque<Vehicle>& traveling(Approach a) const { return traveling_[index(a)]; }

    // Ground-truth sum of partial waits d_n over currently queued vehicles.
    const std::array<long long, 4>& queue_wait_sums() const { return queue_wait_sums_; }

    long long spawned_count() const { return next_vehicle_id_; }

    // Setup hook for controller studies and tests: places a vehicle directly in
    // a queue as if it had been waiting `waited` ticks already.
    void push_queued_vehicle(Approach a, int waited = 0);

private:
    void advance_signal();
    void snapshot(TickOutcome& out) const;

    SimConfig config_;
    std::vector<ArrivalProcess> arrivals_;  // one per approach, N/E/S/W order
    SignalMachine signal_;
    int clock_ = 0;
    long long next_vehicle_id_ = 0;
    std::array<std::deque<Vehicle>, 4> traveling_;
    std::array<std::deque<Vehicle>, 4> queues_;
    std::vector<Vehicle> departed_;
    std::array<double, 4> discharge_credit_{};
    std::array<long long, 4> queue_wait_sums_{};
    std::array<int, 2> tick_throughput_{};
    bool terminated_ = false;
};

}  // namespace fairsignal
