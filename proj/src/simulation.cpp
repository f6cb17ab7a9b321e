#include "fairsignal/sim/simulation.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairsignal/util/rng.hpp"

namespace fairsignal {

Simulation::Simulation(SimConfig config, const std::array<ArrivalSpec, 4>& arrivals,
                       std::uint64_t seed)
    : config_(config) {
    config_.validate();
    arrivals_.reserve(kNumApproaches);
    for (Approach a : kApproaches)
        arrivals_.emplace_back(arrivals[index(a)],
                               derive_seed(seed, static_cast<std::uint64_t>(index(a))));
    // Start in GreenWE with the dwell already satisfied so the first decision is
    // unconstrained.
    signal_.current = Phase::GreenWE;
    signal_.time_in_phase = config_.delta_switch_s;
}

TickOutcome Simulation::tick() {
    if (terminated_)
        throw std::logic_error("tick() called on a terminated simulation");

    TickOutcome out;
    out.was_yellow = signal_.in_yellow;
    const int t0 = clock_;
    clock_ = t0 + 1;
    tick_throughput_ = {0, 0};

    // 1) Arrivals spawn at the start of the interval and drive toward the stop
    //    line at the speed limit.
    for (Approach a : kApproaches) {
        const int k = index(a);
        const int n = arrivals_[k].sample(t0);
        out.arrivals_spawned[k] = n;
        for (int i = 0; i < n; ++i) {
            Vehicle v;
            v.id = next_vehicle_id_++;
            v.approach = a;
            v.spawn_time = t0;
            v.arrive_at_queue_time = static_cast<double>(t0) + config_.travel_time_s(a);
            traveling_[k].push_back(v);
        }
    }

    // 2) Vehicles that reached the stop line join the back of their queue.
    for (Approach a : kApproaches) {
        const int k = index(a);
        while (!traveling_[k].empty() &&
               traveling_[k].front().arrive_at_queue_time <= static_cast<double>(clock_)) {
            Vehicle v = traveling_[k].front();
            traveling_[k].pop_front();
            v.join_tick = clock_;
            queues_[k].push_back(v);
            ++out.arrivals_joined_queue[k];
        }
    }

    // 3) Saturation discharge on the green approaches; yellow blocks everything.
    if (!signal_.in_yellow) {
        for (Approach a : kApproaches) {
            if (!served_by(a, signal_.current)) continue;
            const int k = index(a);
            if (queues_[k].empty()) {
                // The server idles; unused credit must not pile up into a burst.
                discharge_credit_[k] = 0.0;
                continue;
            }
            discharge_credit_[k] +=
                static_cast<double>(config_.lanes(a)) / config_.saturation_headway_s;
            int n = std::min(static_cast<int>(discharge_credit_[k]),
                             static_cast<int>(queues_[k].size()));
            discharge_credit_[k] -= static_cast<double>(n);
            while (n-- > 0) {
                Vehicle v = queues_[k].front();
                queues_[k].pop_front();
                v.depart_time = clock_;
                queue_wait_sums_[k] -= v.wait_so_far;
                ++tick_throughput_[index(flow_of(a))];
                out.departures.push_back(v);
                departed_.push_back(v);
            }
        }
    }

    // 4) Everyone still queued waits one more second; a vehicle's first queued
    //    tick counts, so d = 1 at the end of the tick it joined.
    for (int k = 0; k < kNumApproaches; ++k) {
        for (Vehicle& v : queues_[k]) ++v.wait_so_far;
        queue_wait_sums_[k] += static_cast<long long>(queues_[k].size());
    }

    // 5) Runaway queues end the episode early.
    for (int k = 0; k < kNumApproaches; ++k) {
        if (static_cast<int>(queues_[k].size()) > config_.queue_cap_terminate) {
            terminated_ = true;
            out.terminated_early = true;
        }
    }

    advance_signal();
    snapshot(out);
    return out;
}

void Simulation::advance_signal() {
    ++signal_.time_in_phase;
    if (signal_.in_yellow && signal_.time_in_phase >= config_.yellow_duration_s) {
        signal_.current = *signal_.pending;
        signal_.pending.reset();
        signal_.in_yellow = false;
    }
}

void Simulation::snapshot(TickOutcome& out) const {
    out.clock_after = clock_;
    out.queues_after = queue_lengths();
    out.vicinity_after = vicinity_counts(config_.vicinity_m);
    out.wait_sums_after = queue_wait_sums_;
    out.commanded_after = signal_.commanded();
}

std::vector<TickOutcome> Simulation::decision_step(Phase command) {
    if (signal_.time_in_phase < config_.delta_switch_s)
        throw std::logic_error("phase command issued before the delta_switch dwell");

    int ticks = config_.decision_interval_s;
    if (command != signal_.current) {
        signal_.pending = command;
        signal_.in_yellow = true;
        signal_.time_in_phase = 0;
        ticks = config_.delta_switch_s;
    }

    std::vector<TickOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(ticks));
    for (int i = 0; i < ticks && !terminated_; ++i) outcomes.push_back(tick());
    return outcomes;
}

std::array<int, 4> Simulation::queue_lengths() const {
    std::array<int, 4> q{};
    for (int k = 0; k < kNumApproaches; ++k) q[k] = static_cast<int>(queues_[k].size());
    return q;
}

std::array<int, 4> Simulation::vicinity_counts(double vicinity_m) const {
    if (vicinity_m <= 0.0 ||
        vicinity_m > std::max(config_.we_length_m, config_.ns_length_m))
        throw std::invalid_argument("vicinity range out of bounds");
    std::array<int, 4> counts = approaching_counts(vicinity_m);
    for (int k = 0; k < kNumApproaches; ++k)
        counts[k] += static_cast<int>(queues_[k].size());
    return counts;
}

std::array<int, 4> Simulation::approaching_counts(double within_m) const {
    std::array<int, 4> counts{};
    for (Approach a : kApproaches) {
        const int k = index(a);
        const double speed = config_.speed_mps(a);
        for (const Vehicle& v : traveling_[k]) {
            const double remaining =
                std::max(0.0, speed * (v.arrive_at_queue_time - static_cast<double>(clock_)));
            if (remaining <= within_m) ++counts[k];
        }
    }
    return counts;
}

void Simulation::push_queued_vehicle(Approach a, int waited) {
    Vehicle v;
    v.id = next_vehicle_id_++;
    v.approach = a;
    v.spawn_time = clock_;
    v.arrive_at_queue_time = static_cast<double>(clock_);
    v.join_tick = clock_;
    v.wait_so_far = waited;
    queues_[index(a)].push_back(v);
    queue_wait_sums_[index(a)] += waited;
}

}  // namespace fairsignal
