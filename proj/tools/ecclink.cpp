// Command-line front end: BER sweeps, coding-gain measurement, critical
// distances, and the field simulation, all driven by one flat config file.

#include <cctype>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ecclink/ber_lab.hpp"
#include "ecclink/config.hpp"
#include "ecclink/csv.hpp"
#include "ecclink/policy.hpp"
#include "ecclink/rng.hpp"
#include "ecclink/simulation.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir = "out";
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "Path to a key = value config file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", args.seed, "Override the config seed");
    cmd->add_option("--out", args.out_dir, "Output directory (created if absent)");
}

ecclink::Config load_config(const CommonArgs& args) {
    ecclink::Config cfg = args.config_path.empty()
                              ? ecclink::Config{}
                              : ecclink::parse_config_file(args.config_path);
    if (args.seed) cfg.seed = *args.seed;
    return cfg;
}

std::filesystem::path prepare_out_dir(const CommonArgs& args) {
    const std::filesystem::path dir(args.out_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::vector<std::unique_ptr<ecclink::TransmissionChain>> all_chains(const ecclink::Config& cfg) {
    std::vector<std::unique_ptr<ecclink::TransmissionChain>> chains;
    chains.push_back(ecclink::make_uncoded_chain());
    chains.push_back(ecclink::make_rs_chain(cfg.rs_spec()));
    chains.push_back(ecclink::make_conv_chain(cfg.conv_spec(), /*soft=*/false));
    chains.push_back(ecclink::make_conv_chain(cfg.conv_spec(), /*soft=*/true));
    return chains;
}

std::string curve_file_name(const std::string& label) {
    std::string name = label;
    for (char& c : name) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (c == '-' || c == ' ') c = '_';
    }
    return "ber_" + name + ".csv";
}

ecclink::TrialBudget budget_from(const ecclink::Config& cfg) {
    return {cfg.ber_min_bits, cfg.ber_min_errors, cfg.ber_max_bits};
}

int run_ber(const CommonArgs& args) {
    const ecclink::Config cfg = load_config(args);
    const auto out = prepare_out_dir(args);
    const auto grid = cfg.ber_grid();
    const auto budget = budget_from(cfg);
    std::size_t tag = 0;
    for (const auto& chain : all_chains(cfg)) {
        const ecclink::BerCurve curve =
            ecclink::ber_sweep(*chain, grid, budget, ecclink::derive_seed(cfg.seed, 1000, tag++));
        ecclink::write_file_atomic(out / curve_file_name(curve.codec_label),
                                   ecclink::ber_curve_csv(curve));
    }
    return 0;
}

int run_gain(const CommonArgs& args) {
    const ecclink::Config cfg = load_config(args);
    const auto out = prepare_out_dir(args);
    const auto grid = cfg.ber_grid();
    const auto budget = budget_from(cfg);

    std::vector<ecclink::BerCurve> curves;
    std::size_t tag = 0;
    for (const auto& chain : all_chains(cfg)) {
        curves.push_back(
            ecclink::ber_sweep(*chain, grid, budget, ecclink::derive_seed(cfg.seed, 1000, tag++)));
        ecclink::write_file_atomic(out / curve_file_name(curves.back().codec_label),
                                   ecclink::ber_curve_csv(curves.back()));
    }
    std::vector<ecclink::GainResult> gains;
    for (std::size_t i = 1; i < curves.size(); ++i)
        gains.push_back(ecclink::coding_gain_at(curves[i], curves[0], cfg.target_ber));
    ecclink::write_file_atomic(out / "gains.csv", ecclink::gain_results_csv(gains));
    return 0;
}

int run_dcr(const CommonArgs& args) {
    const ecclink::Config cfg = load_config(args);
    const auto out = prepare_out_dir(args);
    const auto params = cfg.link_budget_params();
    const auto table = ecclink::PolicyTable::build(cfg.codec_profiles(), params, cfg.boost_margin_db);
    ecclink::write_file_atomic(out / "dcr.csv", ecclink::policy_csv(table));
    return 0;
}

ecclink::SimReport simulate_from(const ecclink::Config& cfg) {
    const auto params = cfg.link_budget_params();
    const auto table = ecclink::PolicyTable::build(cfg.codec_profiles(), params, cfg.boost_margin_db);
    return ecclink::run_simulation(cfg.sim_config(), params, table);
}

int run_simulate(const CommonArgs& args) {
    const ecclink::Config cfg = load_config(args);
    const auto out = prepare_out_dir(args);
    const ecclink::SimReport report = simulate_from(cfg);
    for (const ecclink::SchemeSeries& series : report.series) {
        const std::string name = "sim_" + std::string(ecclink::to_string(series.scheme)) + ".csv";
        ecclink::write_file_atomic(out / name, ecclink::scheme_csv(series));
    }
    ecclink::write_file_atomic(out / "sim_detail.csv", ecclink::detail_csv(report.records));
    return 0;
}

int run_compare(const CommonArgs& args) {
    const ecclink::Config cfg = load_config(args);
    const auto out = prepare_out_dir(args);
    const ecclink::SimReport report = simulate_from(cfg);
    ecclink::write_file_atomic(out / "comparison.csv",
                               ecclink::comparison_csv(ecclink::compare_schemes(report)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link energy toolkit: BER sweeps, coding gains, critical distances and field simulation"};
    app.require_subcommand(1);

    CommonArgs args;
    int (*handler)(const CommonArgs&) = nullptr;

    auto* ber = app.add_subcommand("ber", "Monte-Carlo BER sweep for every transmit chain");
    add_common_options(ber, args);
    ber->callback([&] { handler = run_ber; });

    auto* gain = app.add_subcommand("gain", "Coding gains at the target BER");
    add_common_options(gain, args);
    gain->callback([&] { handler = run_gain; });

    auto* dcr = app.add_subcommand("dcr", "Critical distances for the configured codecs");
    add_common_options(dcr, args);
    dcr->callback([&] { handler = run_dcr; });

    auto* sim = app.add_subcommand("simulate", "Field simulation of every transmission scheme");
    add_common_options(sim, args);
    sim->callback([&] { handler = run_simulate; });

    auto* cmp = app.add_subcommand("compare", "Rank schemes by final net energy saving");
    add_common_options(cmp, args);
    cmp->callback([&] { handler = run_compare; });

    CLI11_PARSE(app, argc, argv);

    try {
        return handler(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
