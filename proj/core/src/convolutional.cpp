#include "ecclink/convolutional.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ecclink {

void ConvSpec::validate() const {
    if (constraint_length < 2 || constraint_length > 16)
        throw std::invalid_argument("ConvSpec: constraint_length must be in [2, 16]");
    if (generators.size() < 2)
        throw std::invalid_argument("ConvSpec: need at least two generators");
    for (unsigned g : generators) {
        if (g == 0 || g >= (1u << constraint_length))
            throw std::invalid_argument("ConvSpec: generator " + std::to_string(g) +
                                        " does not fit constraint_length " +
                                        std::to_string(constraint_length));
    }
}

ConvolutionalCode::ConvolutionalCode(const ConvSpec& spec) : spec_(spec) {
    spec_.validate();
    const unsigned K = spec_.constraint_length;
    states_ = 1u << (K - 1);
    out_.resize(states_);
    for (unsigned s = 0; s < states_; ++s) {
        for (unsigned u = 0; u < 2; ++u) {
            const unsigned window = (u << (K - 1)) | s;
            std::uint32_t packed = 0;
            for (std::size_t g = 0; g < spec_.generators.size(); ++g) {
                const unsigned bit = std::popcount(window & spec_.generators[g]) & 1u;
                packed |= bit << g;
            }
            out_[s][u] = packed;
        }
    }
}

std::size_t ConvolutionalCode::coded_length(std::size_t info_bits) const {
    const std::size_t flush = spec_.terminated ? spec_.constraint_length - 1 : 0;
    return (info_bits + flush) * spec_.rate_inverse();
}

Bits ConvolutionalCode::encode(const Bits& info) const {
    if (info.empty()) throw std::invalid_argument("ConvolutionalCode::encode: empty input");
    const unsigned K = spec_.constraint_length;
    const std::size_t flush = spec_.terminated ? K - 1 : 0;

    Bits out;
    out.reserve(coded_length(info.size()));
    unsigned s = 0;
    for (std::size_t i = 0; i < info.size() + flush; ++i) {
        const unsigned u = i < info.size() ? (info[i] & 1u) : 0u;
        const std::uint32_t packed = out_[s][u];
        for (unsigned g = 0; g < spec_.rate_inverse(); ++g)
            out.push_back(static_cast<std::uint8_t>((packed >> g) & 1u));
        s = ((u << (K - 1)) | s) >> 1;
    }
    return out;
}

std::size_t ConvolutionalCode::steps_for(std::size_t coded_symbols, const char* who) const {
    const unsigned r = spec_.rate_inverse();
    if (coded_symbols == 0 || coded_symbols % r != 0)
        throw std::invalid_argument(std::string(who) + ": length must be a nonzero multiple of " +
                                    std::to_string(r));
    const std::size_t steps = coded_symbols / r;
    const std::size_t flush = spec_.terminated ? spec_.constraint_length - 1 : 0;
    if (steps <= flush)
        throw std::invalid_argument(std::string(who) + ": word too short for the flush tail");
    return steps;
}

// Add-compare-select over the full trellis, then one traceback. StepCost maps
// (step, packed branch bits) to the branch metric; lower is better. Ties keep
// the first writer, with states and input bits visited in ascending order, so
// hard and soft decoding agree exactly on +/-1 inputs.
template <typename Metric, typename StepCost>
Bits ConvolutionalCode::run_viterbi(std::size_t steps, StepCost&& cost) const {
    const unsigned K = spec_.constraint_length;
    const unsigned pred_mask = states_ > 1 ? (states_ >> 1) - 1 : 0;
    const std::size_t flush = spec_.terminated ? K - 1 : 0;
    const std::size_t info_steps = steps - flush;
    const Metric inf = std::numeric_limits<Metric>::max() / 4;

    std::vector<Metric> metric(states_, inf), next(states_, inf);
    metric[0] = 0;
    // survivor[t][s] = low bit of the predecessor state chosen for s at step t
    std::vector<std::vector<std::uint8_t>> survivor(steps, std::vector<std::uint8_t>(states_, 0));

    for (std::size_t t = 0; t < steps; ++t) {
        const unsigned max_u = t < info_steps ? 2u : 1u;
        std::fill(next.begin(), next.end(), inf);
        for (unsigned s = 0; s < states_; ++s) {
            if (metric[s] >= inf) continue;
            for (unsigned u = 0; u < max_u; ++u) {
                const unsigned to = ((u << (K - 1)) | s) >> 1;
                const Metric m = metric[s] + cost(t, out_[s][u]);
                if (m < next[to]) {
                    next[to] = m;
                    survivor[t][to] = static_cast<std::uint8_t>(s & 1u);
                }
            }
        }
        metric.swap(next);
    }

    unsigned end_state = 0;
    if (!spec_.terminated) {
        for (unsigned s = 1; s < states_; ++s)
            if (metric[s] < metric[end_state]) end_state = s;
    }
    if (metric[end_state] >= inf)
        throw std::invalid_argument("ConvolutionalCode: no surviving path (inconsistent input)");

    Bits decoded(info_steps, 0);
    unsigned s = end_state;
    for (std::size_t t = steps; t-- > 0;) {
        const unsigned u = s >> (K - 2);  // input bit that led into s
        if (t < info_steps) decoded[t] = static_cast<std::uint8_t>(u & 1u);
        s = ((s & pred_mask) << 1) | survivor[t][s];
    }
    return decoded;
}

Bits ConvolutionalCode::decode_hard(const Bits& coded) const {
    const std::size_t steps = steps_for(coded.size(), "ConvolutionalCode::decode_hard");
    const unsigned r = spec_.rate_inverse();
    std::vector<std::uint32_t> rx(steps, 0);
    for (std::size_t t = 0; t < steps; ++t) {
        std::uint32_t packed = 0;
        for (unsigned g = 0; g < r; ++g) packed |= static_cast<std::uint32_t>(coded[t * r + g] & 1u) << g;
        rx[t] = packed;
    }
    return run_viterbi<long>(steps, [&](std::size_t t, std::uint32_t branch) -> long {
        return std::popcount(rx[t] ^ branch);
    });
}

Bits ConvolutionalCode::decode_soft(const SoftWord& observations) const {
    const std::size_t steps = steps_for(observations.size(), "ConvolutionalCode::decode_soft");
    for (double v : observations) {
        if (!std::isfinite(v))
            throw std::invalid_argument("ConvolutionalCode::decode_soft: non-finite observation");
    }
    const unsigned r = spec_.rate_inverse();
    // negative correlation against the branch pattern; bit 0 expects +obs
    return run_viterbi<double>(steps, [&](std::size_t t, std::uint32_t branch) -> double {
        double c = 0.0;
        for (unsigned g = 0; g < r; ++g) {
            const double obs = observations[t * r + g];
            c += (branch >> g) & 1u ? obs : -obs;
        }
        return c;
    });
}

}  // namespace ecclink
