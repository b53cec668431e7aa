#include "ecclink/ber_lab.hpp"

#include <cmath>
#include <stdexcept>

#include "ecclink/channel.hpp"
#include "ecclink/csv.hpp"
#include "ecclink/rng.hpp"

namespace ecclink {

double analytic_uncoded_ber(double ebn0_db) {
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    // Q(sqrt(2x)) = erfc(sqrt(x)) / 2
    return 0.5 * std::erfc(std::sqrt(ebn0));
}

namespace {

Bits random_bits(std::size_t count, std::mt19937_64& rng) {
    Bits out(count);
    std::uint64_t word = 0;
    unsigned held = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (held == 0) {
            word = rng();
            held = 64;
        }
        out[i] = static_cast<std::uint8_t>(word & 1u);
        word >>= 1;
        --held;
    }
    return out;
}

std::uint64_t count_bit_errors(const Bits& a, const Bits& b) {
    std::uint64_t errors = 0;
    for (std::size_t i = 0; i < a.size(); ++i) errors += (a[i] ^ b[i]) & 1u;
    return errors;
}

class UncodedChain final : public TransmissionChain {
public:
    const std::string& label() const override { return label_; }
    double code_rate() const override { return 1.0; }

    void run_frame(double ebn0_db, std::mt19937_64& rng,
                   std::uint64_t& bits, std::uint64_t& errors) const override {
        const Bits info = random_bits(kFrameBits, rng);
        SoftWord rx = bpsk_modulate(info);
        add_awgn(rx, awgn_sigma(ebn0_db, 1.0), rng);
        errors += count_bit_errors(info, hard_slice(rx));
        bits += info.size();
    }

private:
    static constexpr std::size_t kFrameBits = 8192;
    std::string label_ = "uncoded";
};

class RsChain final : public TransmissionChain {
public:
    explicit RsChain(const RsSpec& spec) : codec_(spec) {}

    const std::string& label() const override { return label_; }
    double code_rate() const override { return codec_.spec().code_rate(); }

    void run_frame(double ebn0_db, std::mt19937_64& rng,
                   std::uint64_t& bits, std::uint64_t& errors) const override {
        const unsigned sb = codec_.spec().symbol_bits;
        const Bits info = random_bits(std::size_t{codec_.spec().k} * sb, rng);
        const Bits coded = symbols_to_bits(codec_.encode(bits_to_symbols(info, sb)), sb);
        SoftWord rx = bpsk_modulate(coded);
        add_awgn(rx, awgn_sigma(ebn0_db, code_rate()), rng);
        const Bits sliced = hard_slice(rx);
        const auto decoded = codec_.decode(bits_to_symbols(sliced, sb));
        // on decode failure fall back to the received systematic symbols
        const Bits out = decoded ? symbols_to_bits(*decoded, sb)
                                 : Bits(sliced.begin(), sliced.begin() + info.size());
        errors += count_bit_errors(info, out);
        bits += info.size();
    }

private:
    ReedSolomon codec_;
    std::string label_ = "RS";
};

class ConvChain final : public TransmissionChain {
public:
    ConvChain(const ConvSpec& spec, bool soft)
        : codec_(spec), soft_(soft), label_(soft ? "CC-Soft" : "CC-Hard") {}

    const std::string& label() const override { return label_; }
    double code_rate() const override { return codec_.spec().code_rate(); }

    void run_frame(double ebn0_db, std::mt19937_64& rng,
                   std::uint64_t& bits, std::uint64_t& errors) const override {
        const Bits info = random_bits(kFrameBits, rng);
        SoftWord rx = bpsk_modulate(codec_.encode(info));
        add_awgn(rx, awgn_sigma(ebn0_db, code_rate()), rng);
        const Bits out = soft_ ? codec_.decode_soft(rx) : codec_.decode_hard(hard_slice(rx));
        errors += count_bit_errors(info, out);
        bits += info.size();
    }

private:
    static constexpr std::size_t kFrameBits = 1024;
    ConvolutionalCode codec_;
    bool soft_;
    std::string label_;
};

}  // namespace

std::unique_ptr<TransmissionChain> make_uncoded_chain() {
    return std::make_unique<UncodedChain>();
}

std::unique_ptr<TransmissionChain> make_rs_chain(const RsSpec& spec) {
    return std::make_unique<RsChain>(spec);
}

std::unique_ptr<TransmissionChain> make_conv_chain(const ConvSpec& spec, bool soft) {
    return std::make_unique<ConvChain>(spec, soft);
}

BerPoint simulate_ber_point(const TransmissionChain& chain, double ebn0_db,
                            const TrialBudget& budget, std::uint64_t seed) {
    if (budget.min_bits == 0 || budget.max_bits < budget.min_bits)
        throw std::invalid_argument("simulate_ber_point: inconsistent trial budget");
    std::mt19937_64 rng(seed);
    BerPoint point;
    point.ebn0_db = ebn0_db;
    while (point.bits < budget.min_bits ||
           (point.errors < budget.min_errors && point.bits < budget.max_bits)) {
        chain.run_frame(ebn0_db, rng, point.bits, point.errors);
    }
    point.ber = static_cast<double>(point.errors) / static_cast<double>(point.bits);
    return point;
}

BerCurve ber_sweep(const TransmissionChain& chain, const std::vector<double>& grid_db,
                   const TrialBudget& budget, std::uint64_t seed) {
    if (grid_db.empty()) throw std::invalid_argument("ber_sweep: empty Eb/N0 grid");
    for (std::size_t i = 1; i < grid_db.size(); ++i) {
        if (!(grid_db[i] > grid_db[i - 1]))
            throw std::invalid_argument("ber_sweep: grid must be strictly increasing");
    }
    BerCurve curve;
    curve.codec_label = chain.label();
    curve.points.reserve(grid_db.size());
    for (std::size_t i = 0; i < grid_db.size(); ++i)
        curve.points.push_back(simulate_ber_point(chain, grid_db[i], budget, derive_seed(seed, i)));
    return curve;
}

double ebn0_at_ber(const BerCurve& curve, double target_ber) {
    if (!(target_ber > 0.0) || !(target_ber < 1.0))
        throw std::invalid_argument("ebn0_at_ber: target must lie in (0, 1)");
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const BerPoint& a = curve.points[i - 1];
        const BerPoint& b = curve.points[i];
        if (a.ber <= 0.0 || b.ber <= 0.0) continue;  // log interpolation needs positive BER
        const bool brackets = (a.ber >= target_ber && target_ber >= b.ber) ||
                              (a.ber <= target_ber && target_ber <= b.ber);
        if (!brackets) continue;
        if (a.ber == b.ber) return a.ebn0_db;
        const double la = std::log10(a.ber), lb = std::log10(b.ber);
        const double f = (std::log10(target_ber) - la) / (lb - la);
        return a.ebn0_db + f * (b.ebn0_db - a.ebn0_db);
    }
    throw std::runtime_error("coding gain: target BER " + format_double(target_ber) +
                             " not bracketed by curve '" + curve.codec_label + "'");
}

GainResult coding_gain_at(const BerCurve& coded, const BerCurve& uncoded, double target_ber) {
    GainResult r;
    r.codec_label = coded.codec_label;
    r.target_ber = target_ber;
    r.ebn0_uncoded_db = ebn0_at_ber(uncoded, target_ber);
    r.ebn0_coded_db = ebn0_at_ber(coded, target_ber);
    r.gain_db = r.ebn0_uncoded_db - r.ebn0_coded_db;
    return r;
}

std::string ber_curve_csv(const BerCurve& curve) {
    std::string out = "ebn0_db,ber,bits,errors,codec\n";
    for (const BerPoint& p : curve.points) {
        out += format_double(p.ebn0_db);
        out += ',';
        out += format_double(p.ber);
        out += ',';
        out += std::to_string(p.bits);
        out += ',';
        out += std::to_string(p.errors);
        out += ',';
        out += curve.codec_label;
        out += '\n';
    }
    return out;
}

std::string gain_results_csv(const std::vector<GainResult>& results) {
    std::string out = "codec,target_ber,ebn0_uncoded_db,ebn0_coded_db,gain_db\n";
    for (const GainResult& g : results) {
        out += g.codec_label;
        out += ',';
        out += format_double(g.target_ber);
        out += ',';
        out += format_double(g.ebn0_uncoded_db);
        out += ',';
        out += format_double(g.ebn0_coded_db);
        out += ',';
        out += format_double(g.gain_db);
        out += '\n';
    }
    return out;
}

}  // namespace ecclink
