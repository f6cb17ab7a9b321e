#include "fairsignal/fairness/rewards.hpp"

#include <cmath>
#include <stdexcept>

namespace fairsignal {

void FairnessWeights::validate() const {
    if (phi_ns <= 0.0 || phi_we <= 0.0)
        throw std::invalid_argument("fairness weights must be positive");
}

double dfc_reward(const std::vector<int>& partial_waits, double alpha) {
    double sum = 0.0;
    for (int d : partial_waits)
        sum += 1.0 + alpha * (2.0 * static_cast<double>(d) - 1.0);
    return -sum;
}

double dfc_reward_from_sums(long long total_queued, long long wait_sum, double alpha) {
    // sum (1 + a(2d-1)) = |N| + a(2 sum d - |N|)
    return -(static_cast<double>(total_queued) +
             alpha * (2.0 * static_cast<double>(wait_sum) -
                      static_cast<double>(total_queued)));
}

double dfc_return_contribution(long long wait, double alpha) {
    const double w = static_cast<double>(wait);
    return -(w + alpha * w * w);
}

double fairness_deviation_update(double delta_prev, int throughput_ns, int throughput_we,
                                 bool both_present, const FairnessWeights& weights) {
    if (throughput_ns < 0 || throughput_we < 0)
        throw std::invalid_argument("throughput counts must be non-negative");
    if (!both_present) return delta_prev;
    return delta_prev + static_cast<double>(throughput_ns) / weights.phi_ns -
           static_cast<double>(throughput_we) / weights.phi_we;
}

double tfc_reward(const std::array<int, 4>& queues, double delta, double beta) {
    long long total = 0;
    for (int q : queues) total += q;
    return -static_cast<double>(total) - beta * std::abs(delta);
}

}  // namespace fairsignal
