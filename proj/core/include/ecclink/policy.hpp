#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecclink/link_budget.hpp"

namespace ecclink {

struct CodecProfile {
    std::string label;  // "RS", "CC-Hard" or "CC-Soft"
    double gain_db = 0.0;
    double code_rate = 1.0;
    double decoder_energy_j_per_bit = 0.0;
};

// Distance where the codec's transmit-energy saving per bit equals its
// decoder energy per bit, from
//   d = sqrt( E_dec * R * lambda^2 / (S/N * N * (4 pi)^2 * (1 - 10^(-G/10))) ).
// Zero decoder energy gives 0 (coding pays from the first meter); zero gain
// with nonzero decoder energy never breaks even and yields an empty optional.
std::optional<double> critical_distance_m(const CodecProfile& profile,
                                          const LinkBudgetParams& params);

struct Selection {
    std::string codec_label;
    double gain_db = 0.0;
    double code_rate = 1.0;
    double decoder_energy_j_per_bit = 0.0;
    double tx_power_w = 0.0;
    bool boosted = false;
};

// Distance-banded codec choice: each codec owns distances up to its critical
// distance, ties resolve to the lower-gain codec, and beyond the last band the
// strongest codec transmits with an extra power margin.
class PolicyTable {
public:
    struct Entry {
        CodecProfile profile;
        double critical_distance_m = 0.0;
    };

    // profiles must carry exactly the three distinct labels; gains and the
    // derived critical distances must both be strictly increasing
    static PolicyTable build(const std::vector<CodecProfile>& profiles,
                             const LinkBudgetParams& params, double boost_margin_db = 0.0);

    const std::vector<Entry>& entries() const { return entries_; }
    double boost_margin_db() const { return boost_margin_db_; }

    Selection select(double distance_m, const LinkBudgetParams& params) const;

private:
    std::vector<Entry> entries_;  // ascending gain and critical distance
    double boost_margin_db_ = 0.0;
};

// header: codec,gain_db,decoder_energy_j,critical_distance_m
std::string policy_csv(const PolicyTable& table);

}  // namespace ecclink
