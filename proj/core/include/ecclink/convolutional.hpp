#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ecclink/bits.hpp"

namespace ecclink {

struct ConvSpec {
    unsigned constraint_length = 7;
    // Tap masks in octal as conventionally tabulated; bit K-1 of a mask taps
    // the newest input bit. One output bit per generator per input bit.
    std::vector<unsigned> generators = {0171, 0133};
    bool terminated = true;  // append K-1 zero flush bits so the trellis ends in state 0

    unsigned rate_inverse() const { return static_cast<unsigned>(generators.size()); }
    double code_rate() const { return 1.0 / static_cast<double>(rate_inverse()); }

    void validate() const;  // throws std::invalid_argument naming the field
};

// Feed-forward convolutional encoder with Viterbi decoding over the full
// terminated trellis. Hard decoding minimizes Hamming distance; soft decoding
// maximizes correlation against unit-energy antipodal symbols (positive
// observation means bit 0), which makes decisions invariant to positive
// scaling of the input.
class ConvolutionalCode {
public:
    explicit ConvolutionalCode(const ConvSpec& spec);

    const ConvSpec& spec() const { return spec_; }

    std::size_t coded_length(std::size_t info_bits) const;

    Bits encode(const Bits& info) const;
    Bits decode_hard(const Bits& coded) const;
    Bits decode_soft(const SoftWord& observations) const;

private:
    std::size_t steps_for(std::size_t coded_symbols, const char* who) const;

    template <typename Metric, typename StepCost>
    Bits run_viterbi(std::size_t steps, StepCost&& cost) const;

    ConvSpec spec_;
    unsigned states_;                                 // 2^(K-1)
    std::vector<std::array<std::uint32_t, 2>> out_;   // packed branch outputs per (state, input)
};

}  // namespace ecclink
