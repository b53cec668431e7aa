#include "ecclink/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ecclink {

SoftWord bpsk_modulate(const Bits& bits) {
    SoftWord out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] & 1u ? -1.0 : 1.0;
    return out;
}

double awgn_sigma(double ebn0_db, double rate_adjust) {
    if (!(rate_adjust > 0.0) || rate_adjust > 1.0)
        throw std::invalid_argument("awgn_sigma: rate_adjust must be in (0, 1]");
    if (std::isnan(ebn0_db))
        throw std::invalid_argument("awgn_sigma: ebn0_db is NaN");
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    if (std::isinf(ebn0)) return 0.0;  // noiseless limit
    return std::sqrt(1.0 / (2.0 * rate_adjust * ebn0));
}

void add_awgn(SoftWord& symbols, double sigma, std::mt19937_64& rng) {
    if (sigma == 0.0) return;
    std::normal_distribution<double> noise(0.0, sigma);
    for (double& v : symbols) v += noise(rng);
}

SoftWord awgn_channel(const SoftWord& symbols, double ebn0_db, double rate_adjust,
                      std::uint64_t seed) {
    for (double v : symbols) {
        if (!std::isfinite(v)) throw std::invalid_argument("awgn_channel: non-finite symbol");
    }
    SoftWord out = symbols;
    std::mt19937_64 rng(seed);
    add_awgn(out, awgn_sigma(ebn0_db, rate_adjust), rng);
    return out;
}

Bits hard_slice(const SoftWord& observations) {
    Bits out(observations.size());
    for (std::size_t i = 0; i < observations.size(); ++i) {
        const double v = observations[i];
        if (!std::isfinite(v)) throw std::invalid_argument("hard_slice: non-finite observation");
        out[i] = v > 0.0 ? 0 : 1;
    }
    return out;
}

}  // namespace ecclink
