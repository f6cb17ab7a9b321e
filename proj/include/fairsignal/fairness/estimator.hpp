#pragma once

#include <array>

#include "fairsignal/sim/types.hpp"

namespace fairsignal {

// Recursive per-approach waiting-time-sum estimator driven only by the queue
// length sequence and the commanded phase. On every phase change the whole
// history resets, so each red interval is tracked from zero:
//
//   D_k(t) = 2 D_k(t-1) - D_k(t-2) + (q_k(t) - q_k(t-1))
//
// While an approach stays red its queue never shrinks, which makes the
// recursion exact for the waits accumulated since the phase change.
class WaitSumEstimator {
public:
    // Call once per tick, after queues are measured. Throws
    // std::invalid_argument on a negative queue length.
    void update(Phase commanded, const std::array<int, 4>& queues);

    // Current estimates; zero for green approaches.
    const std::array<long long, 4>& sums() const { return d_; }

    long long total() const { return d_[0] + d_[1] + d_[2] + d_[3]; }

    void reset();

private:
    bool started_ = false;
    Phase prev_phase_ = Phase::GreenWE;
    std::array<long long, 4> d_{};
    std::array<long long, 4> d_prev1_{};
    std::array<long long, 4> d_prev2_{};
    std::array<int, 4> q_prev_{};
};

}  // namespace fairsignal
