#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecclink/link_budget.hpp"
#include "ecclink/policy.hpp"

namespace ecclink {

enum class Scheme { adaptive, fixed_rs, fixed_cch, fixed_ccs, uncoded };

inline constexpr std::array<Scheme, 5> kAllSchemes = {
    Scheme::adaptive, Scheme::fixed_rs, Scheme::fixed_cch, Scheme::fixed_ccs, Scheme::uncoded};

std::string_view to_string(Scheme scheme);

struct SimConfig {
    double area_width_m = 100.0;
    double area_height_m = 100.0;
    unsigned node_count = 500;
    unsigned rounds = 100;
    std::uint64_t seed = 1;
    bool static_deployment = false;     // keep the round-1 positions for every round
    bool account_rate_expansion = false;  // charge coded energy per info bit at R * code_rate

    void validate() const;
};

// Nodes drawn uniformly over the area; the sink sits at the (0, 0) corner.
struct Deployment {
    double area_width_m = 0.0;
    double area_height_m = 0.0;
    unsigned node_count = 0;
    double sink_x_m = 0.0;
    double sink_y_m = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> x_m;
    std::vector<double> y_m;
};

Deployment deploy(const SimConfig& config);

struct RoundRecord {
    unsigned round = 0;  // 1-based
    unsigned node = 0;   // 0-based
    double distance_m = 0.0;
    Scheme scheme = Scheme::uncoded;
    std::string codec_label;
    bool boosted = false;
    double tx_power_w = 0.0;
    double energy_uncoded_j = 0.0;
    double energy_coded_j = 0.0;
    double saving_j = 0.0;      // energy_uncoded_j - energy_coded_j
    double net_saving_j = 0.0;  // saving_j - decoder energy per bit
};

// One round for one scheme. Positions are redrawn per (seed, round, node)
// unless the config pins the deployment, so every scheme sees identical
// node placements and rounds can run in any order.
std::vector<RoundRecord> run_round(const Deployment& deployment, unsigned round,
                                   Scheme scheme, const PolicyTable& policy,
                                   const LinkBudgetParams& params, const SimConfig& config);

struct SchemeSeries {
    Scheme scheme = Scheme::uncoded;
    std::vector<double> mean_tx_power_w;       // per round
    std::vector<double> mean_saving_j;         // per round, gross
    std::vector<double> cum_mean_saving_j;     // running mean over rounds, gross
    std::vector<double> cum_mean_net_saving_j;
    double final_gross_saving_j = 0.0;
    double final_net_saving_j = 0.0;
};

struct SimReport {
    SimConfig sim;
    std::vector<SchemeSeries> series;   // one per scheme in kAllSchemes order
    std::vector<RoundRecord> records;   // every (scheme, round, node) record
};

SimReport run_simulation(const SimConfig& config, const LinkBudgetParams& params,
                         const PolicyTable& policy);

struct SchemeRank {
    Scheme scheme = Scheme::uncoded;
    double final_net_saving_j = 0.0;
    unsigned rank = 0;  // 1 = best
};

// Adaptive and the three fixed schemes ranked by final net saving, descending.
// Throws when the report does not cover all four.
std::vector<SchemeRank> compare_schemes(const SimReport& report);

// header: round,mean_txpower_dbm,mean_saving_j_per_bit,cum_mean_saving_j_per_bit
std::string scheme_csv(const SchemeSeries& series);

// header: scheme,final_net_saving_j_per_bit,rank
std::string comparison_csv(const std::vector<SchemeRank>& ranks);

// per-record dump, one line per (scheme, round, node)
std::string detail_csv(const std::vector<RoundRecord>& records);

}  // namespace ecclink
