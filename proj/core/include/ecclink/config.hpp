#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ecclink/convolutional.hpp"
#include "ecclink/link_budget.hpp"
#include "ecclink/policy.hpp"
#include "ecclink/reed_solomon.hpp"
#include "ecclink/simulation.hpp"

namespace ecclink {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key = value configuration. Every key has a default matching the
// shipped configs/default.cfg; an empty file therefore parses to the
// defaults. The seed never comes from entropy: it is this value, the file,
// or the --seed flag.
struct Config {
    // link budget
    double frequency_hz = 2.45e9;
    double spectral_efficiency = 0.0030;
    double ebn0_db = 6.76;
    double noise_figure_db = 5.0;
    double boltzmann_jk = kBoltzmann;
    double temperature_k = 290.0;
    double bandwidth_hz = 2.0e6;
    double data_rate_bps = 250e3;
    std::optional<double> snr_override = 0.0202;  // "none" in the file clears it

    // codec specs
    unsigned rs_symbol_bits = 5;
    unsigned rs_n = 31;
    unsigned rs_k = 21;
    unsigned rs_field_polynomial = 0;  // 0 = standard polynomial for the field size
    unsigned rs_first_root = 1;
    unsigned conv_constraint_length = 7;
    std::vector<unsigned> conv_generators = {0171, 0133};

    // policy inputs: coding gains measured at target_ber with the default
    // codec specs, and per-bit decoder energies
    double gain_rs_db = 1.4;
    double gain_cch_db = 2.0;
    double gain_ccs_db = 4.1;
    double decoder_energy_rs_j = 7.3e-15;
    double decoder_energy_cch_j = 1.6e-14;
    double decoder_energy_ccs_j = 4.0e-14;
    double boost_margin_db = 0.0;

    // BER lab
    double target_ber = 1e-3;
    double ber_grid_start_db = 0.0;
    double ber_grid_stop_db = 8.0;
    double ber_grid_step_db = 1.0;
    std::uint64_t ber_min_bits = 1'000'000;
    std::uint64_t ber_min_errors = 500;
    std::uint64_t ber_max_bits = 20'000'000;

    // deployment and simulation
    double area_width_m = 100.0;
    double area_height_m = 100.0;
    unsigned nodes = 500;
    unsigned rounds = 100;
    unsigned frame_bytes = 127;  // per-bit metrics do not depend on it
    std::uint64_t seed = 1;
    bool account_rate_expansion = false;
    bool static_deployment = false;

    LinkBudgetParams link_budget_params() const;
    RsSpec rs_spec() const;
    ConvSpec conv_spec() const;
    std::vector<CodecProfile> codec_profiles() const;  // RS, CC-Hard, CC-Soft
    SimConfig sim_config() const;
    std::vector<double> ber_grid() const;

    void validate() const;  // range checks; messages name the offending key
};

// Rejects unknown keys; parse and range errors name the key and line.
Config parse_config_text(std::string_view text, std::string_view source_name = "<config>");
Config parse_config_file(const std::filesystem::path& path);

}  // namespace ecclink
