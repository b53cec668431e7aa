#include "ecclink/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "ecclink/csv.hpp"
#include "ecclink/rng.hpp"

namespace ecclink {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::adaptive: return "adaptive";
        case Scheme::fixed_rs: return "fixed-RS";
        case Scheme::fixed_cch: return "fixed-CCH";
        case Scheme::fixed_ccs: return "fixed-CCS";
        case Scheme::uncoded: return "uncoded";
    }
    return "?";
}

void SimConfig::validate() const {
    if (!(area_width_m > 0.0) || !(area_height_m > 0.0))
        throw std::invalid_argument("SimConfig: area dimensions must be positive");
    if (node_count == 0) throw std::invalid_argument("SimConfig: node_count must be >= 1");
    if (rounds == 0) throw std::invalid_argument("SimConfig: rounds must be >= 1");
}

namespace {

// Position of one node for one round; round 0 is the initial deployment.
std::pair<double, double> node_position(std::uint64_t seed, unsigned round, unsigned node,
                                        double width, double height) {
    std::mt19937_64 rng(derive_seed(seed, round, node));
    std::uniform_real_distribution<double> ux(0.0, width), uy(0.0, height);
    const double x = ux(rng);
    const double y = uy(rng);
    return {x, y};
}

const PolicyTable::Entry& entry_by_label(const PolicyTable& policy, std::string_view label) {
    for (const PolicyTable::Entry& e : policy.entries())
        if (e.profile.label == label) return e;
    throw std::invalid_argument("simulation: policy table lacks codec '" + std::string(label) + "'");
}

}  // namespace

Deployment deploy(const SimConfig& config) {
    config.validate();
    Deployment d;
    d.area_width_m = config.area_width_m;
    d.area_height_m = config.area_height_m;
    d.node_count = config.node_count;
    d.seed = config.seed;
    d.x_m.resize(config.node_count);
    d.y_m.resize(config.node_count);
    for (unsigned i = 0; i < config.node_count; ++i) {
        const auto [x, y] = node_position(config.seed, 0, i, d.area_width_m, d.area_height_m);
        d.x_m[i] = x;
        d.y_m[i] = y;
    }
    return d;
}

std::vector<RoundRecord> run_round(const Deployment& deployment, unsigned round,
                                   Scheme scheme, const PolicyTable& policy,
                                   const LinkBudgetParams& params, const SimConfig& config) {
    if (round == 0) throw std::invalid_argument("run_round: rounds are numbered from 1");

    std::vector<RoundRecord> records;
    records.reserve(deployment.node_count);
    for (unsigned i = 0; i < deployment.node_count; ++i) {
        double x = deployment.x_m[i], y = deployment.y_m[i];
        if (!config.static_deployment) {
            const auto pos = node_position(deployment.seed, round, i, deployment.area_width_m,
                                           deployment.area_height_m);
            x = pos.first;
            y = pos.second;
        }
        const double d = std::hypot(x - deployment.sink_x_m, y - deployment.sink_y_m);

        RoundRecord rec;
        rec.round = round;
        rec.node = i;
        rec.distance_m = d;
        rec.scheme = scheme;

        if (scheme == Scheme::uncoded) {
            rec.codec_label = "uncoded";
            rec.tx_power_w = uncoded_tx_power_w(d, params);
            rec.energy_uncoded_j = tx_energy_per_bit_j(rec.tx_power_w, params);
            rec.energy_coded_j = rec.energy_uncoded_j;
            rec.saving_j = 0.0;
            rec.net_saving_j = 0.0;
        } else {
            Selection sel;
            if (scheme == Scheme::adaptive) {
                sel = policy.select(d, params);
            } else {
                const char* label = scheme == Scheme::fixed_rs    ? "RS"
                                    : scheme == Scheme::fixed_cch ? "CC-Hard"
                                                                  : "CC-Soft";
                const PolicyTable::Entry& e = entry_by_label(policy, label);
                sel.codec_label = e.profile.label;
                sel.gain_db = e.profile.gain_db;
                sel.code_rate = e.profile.code_rate;
                sel.decoder_energy_j_per_bit = e.profile.decoder_energy_j_per_bit;
                sel.tx_power_w = coded_tx_power_w(d, e.profile.gain_db, params);
                sel.boosted = false;
            }
            const double divisor = config.account_rate_expansion ? sel.code_rate : 1.0;
            rec.codec_label = sel.codec_label;
            rec.boosted = sel.boosted;
            rec.tx_power_w = sel.tx_power_w;
            rec.energy_uncoded_j = tx_energy_per_bit_j(uncoded_tx_power_w(d, params), params);
            rec.energy_coded_j = tx_energy_per_bit_j(sel.tx_power_w, params, divisor);
            rec.saving_j = energy_saving_j(rec.energy_uncoded_j, rec.energy_coded_j);
            rec.net_saving_j = rec.saving_j - sel.decoder_energy_j_per_bit;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

SimReport run_simulation(const SimConfig& config, const LinkBudgetParams& params,
                         const PolicyTable& policy) {
    config.validate();
    params.validate();

    SimReport report;
    report.sim = config;
    const Deployment deployment = deploy(config);

    for (Scheme scheme : kAllSchemes) {
        SchemeSeries series;
        series.scheme = scheme;
        series.mean_tx_power_w.reserve(config.rounds);
        series.mean_saving_j.reserve(config.rounds);
        series.cum_mean_saving_j.reserve(config.rounds);
        series.cum_mean_net_saving_j.reserve(config.rounds);

        double total_saving = 0.0, total_net = 0.0;
        std::uint64_t total_records = 0;
        for (unsigned round = 1; round <= config.rounds; ++round) {
            const auto records = run_round(deployment, round, scheme, policy, params, config);
            double sum_power = 0.0, sum_saving = 0.0, sum_net = 0.0;
            for (const RoundRecord& r : records) {
                sum_power += r.tx_power_w;
                sum_saving += r.saving_j;
                sum_net += r.net_saving_j;
            }
            const double n = static_cast<double>(records.size());
            series.mean_tx_power_w.push_back(sum_power / n);
            series.mean_saving_j.push_back(sum_saving / n);
            total_saving += sum_saving;
            total_net += sum_net;
            total_records += records.size();
            series.cum_mean_saving_j.push_back(total_saving / static_cast<double>(total_records));
            series.cum_mean_net_saving_j.push_back(total_net / static_cast<double>(total_records));

            report.records.insert(report.records.end(), records.begin(), records.end());
        }
        series.final_gross_saving_j = series.cum_mean_saving_j.back();
        series.final_net_saving_j = series.cum_mean_net_saving_j.back();
        report.series.push_back(std::move(series));
    }
    return report;
}

std::vector<SchemeRank> compare_schemes(const SimReport& report) {
    std::vector<SchemeRank> ranks;
    for (Scheme s : {Scheme::adaptive, Scheme::fixed_rs, Scheme::fixed_cch, Scheme::fixed_ccs}) {
        const auto it = std::find_if(report.series.begin(), report.series.end(),
                                     [s](const SchemeSeries& ss) { return ss.scheme == s; });
        if (it == report.series.end())
            throw std::invalid_argument("compare_schemes: report lacks scheme '" +
                                        std::string(to_string(s)) + "'");
        ranks.push_back({s, it->final_net_saving_j, 0});
    }
    std::sort(ranks.begin(), ranks.end(), [](const SchemeRank& a, const SchemeRank& b) {
        return a.final_net_saving_j > b.final_net_saving_j;
    });
    for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i].rank = static_cast<unsigned>(i + 1);
    return ranks;
}

std::string scheme_csv(const SchemeSeries& series) {
    std::string out = "round,mean_txpower_dbm,mean_saving_j_per_bit,cum_mean_saving_j_per_bit\n";
    for (std::size_t i = 0; i < series.mean_tx_power_w.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_double(dbm_from_watts(series.mean_tx_power_w[i]));
        out += ',';
        out += format_double(series.mean_saving_j[i]);
        out += ',';
        out += format_double(series.cum_mean_saving_j[i]);
        out += '\n';
    }
    return out;
}

std::string comparison_csv(const std::vector<SchemeRank>& ranks) {
    std::string out = "scheme,final_net_saving_j_per_bit,rank\n";
    for (const SchemeRank& r : ranks) {
        out += to_string(r.scheme);
        out += ',';
        out += format_double(r.final_net_saving_j);
        out += ',';
        out += std::to_string(r.rank);
        out += '\n';
    }
    return out;
}

std::string detail_csv(const std::vector<RoundRecord>& records) {
    std::string out =
        "scheme,round,node,distance_m,codec,boosted,tx_power_w,"
        "energy_uncoded_j_per_bit,energy_coded_j_per_bit,saving_j_per_bit,net_saving_j_per_bit\n";
    for (const RoundRecord& r : records) {
        out += to_string(r.scheme);
        out += ',';
        out += std::to_string(r.round);
        out += ',';
        out += std::to_string(r.node);
        out += ',';
        out += format_double(r.distance_m);
        out += ',';
        out += r.codec_label;
        out += ',';
        out += r.boosted ? '1' : '0';
        out += ',';
        out += format_double(r.tx_power_w);
        out += ',';
        out += format_double(r.energy_uncoded_j);
        out += ',';
        out += format_double(r.energy_coded_j);
        out += ',';
        out += format_double(r.saving_j);
        out += ',';
        out += format_double(r.net_saving_j);
        out += '\n';
    }
    return out;
}

}  // namespace ecclink
