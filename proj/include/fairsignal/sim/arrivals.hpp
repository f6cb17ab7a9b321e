#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

namespace fairsignal {

struct PoissonSpec {
    double rate = 0.0;  // veh/s
};

struct MmppSpec {
    double rate_on = 0.0;  // veh/s while the modulating chain is ON
    double p_on_off = 0.0;
    double p_off_on = 0.0;
    bool start_on = false;
};

// Piecewise-constant periodic rate. Segment i applies while (t mod period) < until_s;
// segments are sorted and the last until_s equals the period, so [0, period) is covered.
struct NhppSegment {
    double until_s = 0.0;
    double rate = 0.0;
};

struct NhppSpec {
    std::vector<NhppSegment> schedule;
    double period_s = 0.0;
};

using ArrivalSpec = std::variant<PoissonSpec, MmppSpec, NhppSpec>;

void validate(const ArrivalSpec& spec);  // throws std::invalid_argument

double nhpp_rate(const NhppSpec& spec, double t);

// Long-run average rate implied by the spec (stationary ON fraction for MMPP,
// time average over one period for NHPP).
double mean_rate(const ArrivalSpec& spec);

class ArrivalProcess {
public:
    ArrivalProcess(ArrivalSpec spec, std::uint64_t seed);

    // Arrival count for the tick covering [t, t+1). Advances the generator;
    // the draw sequence is a pure function of (spec, seed, call order).
    int sample(int t);

    const ArrivalSpec& spec() const { return spec_; }
    bool mmpp_on() const { return mmpp_on_; }

private:
    ArrivalSpec spec_;
    std::mt19937_64 rng_;
    bool mmpp_on_ = false;
};

}  // namespace fairsignal
