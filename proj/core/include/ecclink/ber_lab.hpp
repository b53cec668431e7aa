#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ecclink/bits.hpp"
#include "ecclink/convolutional.hpp"
#include "ecclink/reed_solomon.hpp"

namespace ecclink {

// BER of uncoded antipodal signaling on AWGN: Q(sqrt(2 * 10^(ebn0_db/10)))
double analytic_uncoded_ber(double ebn0_db);

struct BerPoint {
    double ebn0_db = 0.0;
    double ber = 0.0;
    std::uint64_t bits = 0;
    std::uint64_t errors = 0;
};

struct BerCurve {
    std::string codec_label;
    std::vector<BerPoint> points;  // strictly increasing in ebn0_db
};

struct GainResult {
    std::string codec_label;
    double target_ber = 0.0;
    double ebn0_uncoded_db = 0.0;
    double ebn0_coded_db = 0.0;
    double gain_db = 0.0;  // ebn0_uncoded_db - ebn0_coded_db
};

struct TrialBudget {
    std::uint64_t min_bits = 1'000'000;   // keep sampling at least this many info bits
    std::uint64_t min_errors = 500;       // and until this many errors, within max_bits
    std::uint64_t max_bits = 20'000'000;
};

// One measurable transmit chain: random info bits -> (encode) -> BPSK ->
// AWGN at the chain's code rate -> (decode) -> info-bit error count.
class TransmissionChain {
public:
    virtual ~TransmissionChain() = default;
    virtual const std::string& label() const = 0;
    virtual double code_rate() const = 0;
    // appends one frame's worth of info bits / bit errors to the counters
    virtual void run_frame(double ebn0_db, std::mt19937_64& rng,
                           std::uint64_t& bits, std::uint64_t& errors) const = 0;
};

std::unique_ptr<TransmissionChain> make_uncoded_chain();
std::unique_ptr<TransmissionChain> make_rs_chain(const RsSpec& spec);
std::unique_ptr<TransmissionChain> make_conv_chain(const ConvSpec& spec, bool soft);

// Runs frames until budget.min_bits info bits are through and budget.min_errors
// errors were seen (or budget.max_bits caps the run). Deterministic per seed.
BerPoint simulate_ber_point(const TransmissionChain& chain, double ebn0_db,
                            const TrialBudget& budget, std::uint64_t seed);

// One point per grid entry; point seeds derive from (seed, grid index) so the
// curve does not depend on evaluation order.
BerCurve ber_sweep(const TransmissionChain& chain, const std::vector<double>& grid_db,
                   const TrialBudget& budget, std::uint64_t seed);

// Eb/N0 where a curve crosses the target, interpolated linearly in
// (ebn0_db, log10 ber). Throws when no adjacent pair brackets the target,
// naming the curve.
double ebn0_at_ber(const BerCurve& curve, double target_ber);

GainResult coding_gain_at(const BerCurve& coded, const BerCurve& uncoded, double target_ber);

// header: ebn0_db,ber,bits,errors,codec
std::string ber_curve_csv(const BerCurve& curve);

// header: codec,target_ber,ebn0_uncoded_db,ebn0_coded_db,gain_db
std::string gain_results_csv(const std::vector<GainResult>& results);

}  // namespace ecclink
