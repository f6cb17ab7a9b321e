#include "fairsignal/sim/arrivals.hpp"

#include <cmath>
#include <stdexcept>

#include "fairsignal/util/rng.hpp"

namespace fairsignal {

namespace {

void validate_nhpp(const NhppSpec& s) {
    if (s.period_s <= 0.0)
        throw std::invalid_argument("NHPP: period must be positive");
    if (s.schedule.empty())
        throw std::invalid_argument("NHPP: schedule must not be empty");
    double prev = 0.0;
    for (const NhppSegment& seg : s.schedule) {
        if (seg.rate < 0.0)
            throw std::invalid_argument("NHPP: rates must be non-negative");
        if (seg.until_s <= prev)
            throw std::invalid_argument("NHPP: segment boundaries must be increasing");
        prev = seg.until_s;
    }
    if (prev != s.period_s)
        throw std::invalid_argument("NHPP: schedule must cover [0, period) exactly");
}

}  // namespace

void validate(const ArrivalSpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PoissonSpec>) {
                if (s.rate < 0.0)
                    throw std::invalid_argument("Poisson: rate must be non-negative");
            } else if constexpr (std::is_same_v<T, MmppSpec>) {
                if (s.rate_on < 0.0)
                    throw std::invalid_argument("MMPP: rate must be non-negative");
                if (s.p_on_off < 0.0 || s.p_on_off > 1.0 || s.p_off_on < 0.0 ||
                    s.p_off_on > 1.0)
                    throw std::invalid_argument("MMPP: probabilities must be in [0,1]");
            } else {
                validate_nhpp(s);
            }
        },
        spec);
}

double nhpp_rate(const NhppSpec& spec, double t) {
    double phase = std::fmod(t, spec.period_s);
    if (phase < 0.0) phase += spec.period_s;
    for (const NhppSegment& seg : spec.schedule) {
        if (phase < seg.until_s) return seg.rate;
    }
    return spec.schedule.back().rate;
}

double mean_rate(const ArrivalSpec& spec) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PoissonSpec>) {
                return s.rate;
            } else if constexpr (std::is_same_v<T, MmppSpec>) {
                const double denom = s.p_on_off + s.p_off_on;
                if (denom == 0.0) return s.start_on ? s.rate_on : 0.0;
                return s.rate_on * s.p_off_on / denom;
            } else {
                double weighted = 0.0;
                double prev = 0.0;
                for (const NhppSegment& seg : s.schedule) {
                    weighted += seg.rate * (seg.until_s - prev);
                    prev = seg.until_s;
                }
                return weighted / s.period_s;
            }
        },
        spec);
}

ArrivalProcess::ArrivalProcess(ArrivalSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), rng_(seed) {
    validate(spec_);
    if (const auto* m = std::get_if<MmppSpec>(&spec_)) mmpp_on_ = m->start_on;
}

int ArrivalProcess::sample(int t) {
    return std::visit(
        [&](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PoissonSpec>) {
                return poisson_sample(rng_, s.rate);
            } else if constexpr (std::is_same_v<T, MmppSpec>) {
                // One Markov transition per tick, then sample under the new mode.
                // Exactly one uniform is consumed for the transition either way.
                const double u = uniform01(rng_);
                mmpp_on_ = mmpp_on_ ? (u >= s.p_on_off) : (u < s.p_off_on);
                return mmpp_on_ ? poisson_sample(rng_, s.rate_on) : 0;
            } else {
                return poisson_sample(rng_, nhpp_rate(s, static_cast<double>(t)));
            }
        },
        spec_);
}

}  // namespace fairsignal
