#include "ecclink/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace ecclink {

LinkBudgetParams Config::link_budget_params() const {
    LinkBudgetParams p;
    p.carrier_frequency_hz = frequency_hz;
    p.spectral_efficiency = spectral_efficiency;
    p.ebn0_db = ebn0_db;
    p.noise_factor = db_to_linear(noise_figure_db);
    p.boltzmann_jk = boltzmann_jk;
    p.temperature_k = temperature_k;
    p.bandwidth_hz = bandwidth_hz;
    p.info_rate_bps = data_rate_bps;
    p.snr_override = snr_override;
    return p;
}

RsSpec Config::rs_spec() const {
    RsSpec s;
    s.symbol_bits = rs_symbol_bits;
    s.n = rs_n;
    s.k = rs_k;
    s.field_polynomial = rs_field_polynomial;
    s.first_root = rs_first_root;
    return s;
}

ConvSpec Config::conv_spec() const {
    ConvSpec s;
    s.constraint_length = conv_constraint_length;
    s.generators = conv_generators;
    s.terminated = true;
    return s;
}

std::vector<CodecProfile> Config::codec_profiles() const {
    const RsSpec rs = rs_spec();
    const ConvSpec conv = conv_spec();
    return {
        {"RS", gain_rs_db, rs.code_rate(), decoder_energy_rs_j},
        {"CC-Hard", gain_cch_db, conv.code_rate(), decoder_energy_cch_j},
        {"CC-Soft", gain_ccs_db, conv.code_rate(), decoder_energy_ccs_j},
    };
}

SimConfig Config::sim_config() const {
    SimConfig s;
    s.area_width_m = area_width_m;
    s.area_height_m = area_height_m;
    s.node_count = nodes;
    s.rounds = rounds;
    s.seed = seed;
    s.static_deployment = static_deployment;
    s.account_rate_expansion = account_rate_expansion;
    return s;
}

std::vector<double> Config::ber_grid() const {
    std::vector<double> grid;
    for (double v = ber_grid_start_db; v <= ber_grid_stop_db + 1e-9; v += ber_grid_step_db)
        grid.push_back(v);
    return grid;
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

void Config::validate() const {
    require(frequency_hz > 0, "frequency_hz: must be positive");
    require(spectral_efficiency > 0, "spectral_efficiency: must be positive");
    require(std::isfinite(ebn0_db), "ebn0_db: must be finite");
    require(std::isfinite(noise_figure_db), "noise_figure_db: must be finite");
    require(boltzmann_jk > 0, "boltzmann_jk: must be positive");
    require(temperature_k > 0, "temperature_k: must be positive");
    require(bandwidth_hz > 0, "bandwidth_hz: must be positive");
    require(data_rate_bps > 0, "data_rate_bps: must be positive");
    require(!snr_override || *snr_override > 0, "snr_override: must be positive or none");
    rs_spec().validate();
    conv_spec().validate();
    require(gain_rs_db >= 0, "gain_rs_db: must be nonnegative");
    require(gain_cch_db >= 0, "gain_cch_db: must be nonnegative");
    require(gain_ccs_db >= 0, "gain_ccs_db: must be nonnegative");
    require(decoder_energy_rs_j >= 0, "decoder_energy_rs_j: must be nonnegative");
    require(decoder_energy_cch_j >= 0, "decoder_energy_cch_j: must be nonnegative");
    require(decoder_energy_ccs_j >= 0, "decoder_energy_ccs_j: must be nonnegative");
    require(boost_margin_db >= 0, "boost_margin_db: must be nonnegative");
    require(target_ber > 0 && target_ber < 1, "target_ber: must lie in (0, 1)");
    require(ber_grid_step_db > 0, "ber_grid_step_db: must be positive");
    require(ber_grid_stop_db >= ber_grid_start_db,
            "ber_grid_stop_db: must be >= ber_grid_start_db");
    require(ber_min_bits >= 10'000, "ber_min_bits: must be >= 10000");
    require(ber_min_errors >= 1, "ber_min_errors: must be >= 1");
    require(ber_max_bits >= ber_min_bits, "ber_max_bits: must be >= ber_min_bits");
    require(area_width_m > 0, "area_width_m: must be positive");
    require(area_height_m > 0, "area_height_m: must be positive");
    require(nodes >= 1, "nodes: must be >= 1");
    require(rounds >= 1, "rounds: must be >= 1");
    require(frame_bytes >= 1, "frame_bytes: must be >= 1");
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

struct ParseContext {
    std::string source;
    std::size_t line = 0;
    std::string key;

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError(source + ":" + std::to_string(line) + ": key '" + key + "': " + what);
    }
};

double parse_double(std::string_view v, const ParseContext& ctx) {
    double out = 0.0;
    const char* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end) ctx.fail("expected a number, got '" + std::string(v) + "'");
    return out;
}

long long parse_int(std::string_view v, const ParseContext& ctx) {
    long long out = 0;
    const char* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end)
        ctx.fail("expected an integer, got '" + std::string(v) + "'");
    return out;
}

unsigned parse_unsigned(std::string_view v, const ParseContext& ctx, long long min_value) {
    const long long x = parse_int(v, ctx);
    if (x < min_value) ctx.fail("must be >= " + std::to_string(min_value));
    return static_cast<unsigned>(x);
}

std::uint64_t parse_u64(std::string_view v, const ParseContext& ctx, long long min_value) {
    const long long x = parse_int(v, ctx);
    if (x < min_value) ctx.fail("must be >= " + std::to_string(min_value));
    return static_cast<std::uint64_t>(x);
}

bool parse_bool(std::string_view v, const ParseContext& ctx) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    ctx.fail("expected true or false, got '" + std::string(v) + "'");
}

std::vector<unsigned> parse_octal_list(std::string_view v, const ParseContext& ctx) {
    std::vector<unsigned> out;
    std::size_t start = 0;
    while (start <= v.size()) {
        std::size_t comma = v.find(',', start);
        if (comma == std::string_view::npos) comma = v.size();
        const std::string_view item = trim(v.substr(start, comma - start));
        if (item.empty()) ctx.fail("empty entry in octal list");
        unsigned value = 0;
        const char* end = item.data() + item.size();
        const auto res = std::from_chars(item.data(), end, value, 8);
        if (res.ec != std::errc() || res.ptr != end)
            ctx.fail("expected an octal integer, got '" + std::string(item) + "'");
        out.push_back(value);
        if (comma == v.size()) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Config parse_config_text(std::string_view text, std::string_view source_name) {
    Config cfg;
    ParseContext ctx;
    ctx.source = std::string(source_name);

    using Setter = std::function<void(std::string_view, const ParseContext&)>;
    const std::map<std::string, Setter, std::less<>> setters = {
        {"frequency_hz", [&](auto v, auto& c) { cfg.frequency_hz = parse_double(v, c); }},
        {"spectral_efficiency", [&](auto v, auto& c) { cfg.spectral_efficiency = parse_double(v, c); }},
        {"ebn0_db", [&](auto v, auto& c) { cfg.ebn0_db = parse_double(v, c); }},
        {"noise_figure_db", [&](auto v, auto& c) { cfg.noise_figure_db = parse_double(v, c); }},
        {"boltzmann_jk", [&](auto v, auto& c) { cfg.boltzmann_jk = parse_double(v, c); }},
        {"temperature_k", [&](auto v, auto& c) { cfg.temperature_k = parse_double(v, c); }},
        {"bandwidth_hz", [&](auto v, auto& c) { cfg.bandwidth_hz = parse_double(v, c); }},
        {"data_rate_bps", [&](auto v, auto& c) { cfg.data_rate_bps = parse_double(v, c); }},
        {"snr_override",
         [&](auto v, auto& c) {
             if (v == "none")
                 cfg.snr_override.reset();
             else
                 cfg.snr_override = parse_double(v, c);
         }},
        {"rs_symbol_bits", [&](auto v, auto& c) { cfg.rs_symbol_bits = parse_unsigned(v, c, 2); }},
        {"rs_n", [&](auto v, auto& c) { cfg.rs_n = parse_unsigned(v, c, 3); }},
        {"rs_k", [&](auto v, auto& c) { cfg.rs_k = parse_unsigned(v, c, 1); }},
        {"rs_field_polynomial", [&](auto v, auto& c) { cfg.rs_field_polynomial = parse_unsigned(v, c, 0); }},
        {"rs_first_root", [&](auto v, auto& c) { cfg.rs_first_root = parse_unsigned(v, c, 0); }},
        {"conv_constraint_length",
         [&](auto v, auto& c) { cfg.conv_constraint_length = parse_unsigned(v, c, 2); }},
        {"conv_generators_octal", [&](auto v, auto& c) { cfg.conv_generators = parse_octal_list(v, c); }},
        {"gain_rs_db", [&](auto v, auto& c) { cfg.gain_rs_db = parse_double(v, c); }},
        {"gain_cch_db", [&](auto v, auto& c) { cfg.gain_cch_db = parse_double(v, c); }},
        {"gain_ccs_db", [&](auto v, auto& c) { cfg.gain_ccs_db = parse_double(v, c); }},
        {"decoder_energy_rs_j", [&](auto v, auto& c) { cfg.decoder_energy_rs_j = parse_double(v, c); }},
        {"decoder_energy_cch_j", [&](auto v, auto& c) { cfg.decoder_energy_cch_j = parse_double(v, c); }},
        {"decoder_energy_ccs_j", [&](auto v, auto& c) { cfg.decoder_energy_ccs_j = parse_double(v, c); }},
        {"boost_margin_db", [&](auto v, auto& c) { cfg.boost_margin_db = parse_double(v, c); }},
        {"target_ber", [&](auto v, auto& c) { cfg.target_ber = parse_double(v, c); }},
        {"ber_grid_start_db", [&](auto v, auto& c) { cfg.ber_grid_start_db = parse_double(v, c); }},
        {"ber_grid_stop_db", [&](auto v, auto& c) { cfg.ber_grid_stop_db = parse_double(v, c); }},
        {"ber_grid_step_db", [&](auto v, auto& c) { cfg.ber_grid_step_db = parse_double(v, c); }},
        {"ber_min_bits", [&](auto v, auto& c) { cfg.ber_min_bits = parse_u64(v, c, 1); }},
        {"ber_min_errors", [&](auto v, auto& c) { cfg.ber_min_errors = parse_u64(v, c, 1); }},
        {"ber_max_bits", [&](auto v, auto& c) { cfg.ber_max_bits = parse_u64(v, c, 1); }},
        {"area_width_m", [&](auto v, auto& c) { cfg.area_width_m = parse_double(v, c); }},
        {"area_height_m", [&](auto v, auto& c) { cfg.area_height_m = parse_double(v, c); }},
        {"nodes", [&](auto v, auto& c) { cfg.nodes = parse_unsigned(v, c, 1); }},
        {"rounds", [&](auto v, auto& c) { cfg.rounds = parse_unsigned(v, c, 1); }},
        {"frame_bytes", [&](auto v, auto& c) { cfg.frame_bytes = parse_unsigned(v, c, 1); }},
        {"seed", [&](auto v, auto& c) { cfg.seed = parse_u64(v, c, 0); }},
        {"account_rate_expansion", [&](auto v, auto& c) { cfg.account_rate_expansion = parse_bool(v, c); }},
        {"static_deployment", [&](auto v, auto& c) { cfg.static_deployment = parse_bool(v, c); }},
    };

    std::istringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++ctx.line;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            ctx.key = std::string(line);
            ctx.fail("expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        ctx.key = std::string(key);
        if (key.empty()) ctx.fail("empty key");
        const auto it = setters.find(key);
        if (it == setters.end()) ctx.fail("unknown key");
        if (value.empty()) ctx.fail("empty value");
        it->second(value, ctx);
    }

    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(ctx.source + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(ctx.source + ": " + e.what());
    }
    return cfg;
}

Config parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

}  // namespace ecclink
