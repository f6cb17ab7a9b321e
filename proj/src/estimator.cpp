#include "fairsignal/fairness/estimator.hpp"

#include <stdexcept>

namespace fairsignal {

void WaitSumEstimator::update(Phase commanded, const std::array<int, 4>& queues) {
    for (int q : queues)
        if (q < 0) throw std::invalid_argument("estimator: negative queue length");

    if (!started_ || commanded != prev_phase_) {
        reset();
        started_ = true;
    }

    for (Approach a : kApproaches) {
        if (served_by(a, commanded)) continue;  // only red approaches accumulate
        const int k = index(a);
        const long long dq = static_cast<long long>(queues[k]) - q_prev_[k];
        const long long d = 2 * d_prev1_[k] - d_prev2_[k] + dq;
        // The two-step history must shift before the newest value overwrites it.
        d_prev2_[k] = d_prev1_[k];
        d_prev1_[k] = d;
        q_prev_[k] = queues[k];
        d_[k] = d;
    }
    prev_phase_ = commanded;
}

void WaitSumEstimator::reset() {
    d_.fill(0);
    d_prev1_.fill(0);
    d_prev2_.fill(0);
    q_prev_.fill(0);
}

}  // namespace fairsignal
