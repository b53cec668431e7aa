#include "ecclink/policy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "ecclink/csv.hpp"

namespace ecclink {

std::optional<double> critical_distance_m(const CodecProfile& profile,
                                          const LinkBudgetParams& params) {
    params.validate();
    if (profile.gain_db < 0.0)
        throw std::invalid_argument("critical_distance_m: coding gain must be nonnegative");
    if (profile.decoder_energy_j_per_bit < 0.0)
        throw std::invalid_argument("critical_distance_m: decoder energy must be nonnegative");
    if (profile.decoder_energy_j_per_bit == 0.0) return 0.0;

    const double keep = 1.0 - std::pow(10.0, -profile.gain_db / 10.0);  // saved power fraction
    if (keep <= 0.0) return std::nullopt;  // no gain, decoder cost never amortized

    const double lambda = params.wavelength_m();
    const double four_pi = 4.0 * std::numbers::pi;
    const double num = profile.decoder_energy_j_per_bit * params.info_rate_bps * lambda * lambda;
    const double den = required_snr(params) * noise_power_w(params) * four_pi * four_pi * keep;
    return std::sqrt(num / den);
}

PolicyTable PolicyTable::build(const std::vector<CodecProfile>& profiles,
                               const LinkBudgetParams& params, double boost_margin_db) {
    if (profiles.size() != 3)
        throw std::invalid_argument("PolicyTable: exactly three codec profiles required, got " +
                                    std::to_string(profiles.size()));
    if (boost_margin_db < 0.0)
        throw std::invalid_argument("PolicyTable: boost margin must be nonnegative");
    std::set<std::string> labels;
    for (const CodecProfile& p : profiles) labels.insert(p.label);
    if (labels.size() != 3)
        throw std::invalid_argument("PolicyTable: codec labels must be distinct");

    PolicyTable table;
    table.boost_margin_db_ = boost_margin_db;
    for (const CodecProfile& p : profiles) {
        const auto dcr = critical_distance_m(p, params);
        if (!dcr)
            throw std::invalid_argument("PolicyTable: codec '" + p.label +
                                        "' never amortizes its decoder energy (gain 0)");
        table.entries_.push_back({p, *dcr});
    }
    std::sort(table.entries_.begin(), table.entries_.end(),
              [](const Entry& a, const Entry& b) { return a.profile.gain_db < b.profile.gain_db; });

    for (std::size_t i = 1; i < table.entries_.size(); ++i) {
        const Entry& lo = table.entries_[i - 1];
        const Entry& hi = table.entries_[i];
        if (!(hi.profile.gain_db > lo.profile.gain_db))
            throw std::invalid_argument("PolicyTable: gains must be strictly increasing, '" +
                                        lo.profile.label + "' vs '" + hi.profile.label + "'");
        if (!(hi.critical_distance_m > lo.critical_distance_m))
            throw std::invalid_argument(
                "PolicyTable: critical distances must be strictly increasing, '" +
                lo.profile.label + "' (" + format_double(lo.critical_distance_m) + " m) vs '" +
                hi.profile.label + "' (" + format_double(hi.critical_distance_m) + " m)");
    }
    return table;
}

Selection PolicyTable::select(double distance_m, const LinkBudgetParams& params) const {
    if (distance_m < 0.0 || !std::isfinite(distance_m))
        throw std::invalid_argument("PolicyTable::select: distance must be nonnegative and finite");
    if (entries_.empty()) throw std::logic_error("PolicyTable::select: empty table");

    const Entry* chosen = nullptr;
    bool boosted = false;
    for (const Entry& e : entries_) {
        if (distance_m <= e.critical_distance_m) {
            chosen = &e;
            break;
        }
    }
    if (chosen == nullptr) {
        chosen = &entries_.back();  // past every band: strongest codec, boosted
        boosted = true;
    }

    Selection sel;
    sel.codec_label = chosen->profile.label;
    sel.gain_db = chosen->profile.gain_db;
    sel.code_rate = chosen->profile.code_rate;
    sel.decoder_energy_j_per_bit = chosen->profile.decoder_energy_j_per_bit;
    sel.tx_power_w = coded_tx_power_w(distance_m, chosen->profile.gain_db, params);
    if (boosted) sel.tx_power_w *= db_to_linear(boost_margin_db_);
    sel.boosted = boosted;
    return sel;
}

std::string policy_csv(const PolicyTable& table) {
    std::string out = "codec,gain_db,decoder_energy_j,critical_distance_m\n";
    for (const PolicyTable::Entry& e : table.entries()) {
        out += e.profile.label;
        out += ',';
        out += format_double(e.profile.gain_db);
        out += ',';
        out += format_double(e.profile.decoder_energy_j_per_bit);
        out += ',';
        out += format_double(e.critical_distance_m);
        out += '\n';
    }
    return out;
}

}  // namespace ecclink
