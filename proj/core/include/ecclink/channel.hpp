#pragma once

#include <cstdint>
#include <random>

#include "ecclink/bits.hpp"

namespace ecclink {

// Unit-energy antipodal mapping: bit 0 -> +1.0, bit 1 -> -1.0.
SoftWord bpsk_modulate(const Bits& bits);

// Per-sample noise sigma for a given Eb/N0 in dB. rate_adjust is the code
// rate of the transmission (1.0 for uncoded); coded symbols carry
// rate_adjust * Eb of energy each, so sigma^2 = 1 / (2 * rate * 10^(dB/10)).
double awgn_sigma(double ebn0_db, double rate_adjust);

// Adds white Gaussian noise scaled for ebn0_db to unit-energy symbols.
// Deterministic for a fixed seed.
SoftWord awgn_channel(const SoftWord& symbols, double ebn0_db, double rate_adjust,
                      std::uint64_t seed);

// In-place variant for callers that keep one generator across frames.
void add_awgn(SoftWord& symbols, double sigma, std::mt19937_64& rng);

// Sign slicer, positive means bit 0. Rejects non-finite observations.
Bits hard_slice(const SoftWord& observations);

}  // namespace ecclink
