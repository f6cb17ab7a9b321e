#pragma once

#include <array>
#include <vector>

namespace fairsignal {

struct FairnessWeights {
    double phi_ns = 1.0;
    double phi_we = 1.0;

    void validate() const;  // both weights must be positive
};

// Delay-based per-tick reward: -sum over waiting vehicles of (1 + alpha(2d - 1)),
// where d is the vehicle's partial wait in whole ticks (d >= 1 once queued).
double dfc_reward(const std::vector<int>& partial_waits, double alpha);

// Same reward from per-approach aggregates: total queued vehicles and the total
// of their partial waits. Algebraically identical to dfc_reward, which lets the
// estimator's approach sums stand in for ground truth.
double dfc_reward_from_sums(long long total_queued, long long wait_sum, double alpha);

// Contribution of one completed wait to the episode return: -(w + alpha w^2).
double dfc_return_contribution(long long wait, double alpha);

// Weighted-throughput deviation recursion; gated by whether both flows have
// traffic near the intersection. delta(0) = 0.
double fairness_deviation_update(double delta_prev, int throughput_ns, int throughput_we,
                                 bool both_present, const FairnessWeights& weights);

// Throughput-based per-tick reward: -sum of queue lengths - beta * |delta|.
double tfc_reward(const std::array<int, 4>& queues, double delta, double beta);

}  // namespace fairsignal
