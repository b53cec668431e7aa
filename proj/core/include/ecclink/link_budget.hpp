#pragma once

#include <cmath>
#include <optional>

namespace ecclink {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_from_watts(double watts) { return 10.0 * std::log10(watts * 1e3); }

// Free-space link parameters. All internal math is in watts and joules;
// decibel values appear only at the configuration and CSV edges.
struct LinkBudgetParams {
    double carrier_frequency_hz = 2.45e9;
    double spectral_efficiency = 0.0030;  // eta = R/B
    double ebn0_db = 6.76;                // required Eb/N0 when no override is set
    double noise_factor = 3.1622776601683795;  // linear; 10^(NF_dB/10)
    double boltzmann_jk = kBoltzmann;
    double temperature_k = 290.0;
    double bandwidth_hz = 2.0e6;
    double info_rate_bps = 250e3;
    std::optional<double> snr_override;  // linear; wins over eta * 10^(ebn0_db/10)

    double wavelength_m() const { return kSpeedOfLight / carrier_frequency_hz; }

    void validate() const;  // throws std::invalid_argument naming the field
};

// thermal noise power referred to the receiver input: m * K * T * B
double noise_power_w(const LinkBudgetParams& p);

// required S/N: the override when present, else eta * 10^(ebn0_db/10)
double required_snr(const LinkBudgetParams& p);

// transmit power that closes the uncoded link at the given distance:
// S/N * noise power * (4 pi d / lambda)^2
double uncoded_tx_power_w(double distance_m, const LinkBudgetParams& p);

// uncoded power shrunk by the codec's coding gain
double coded_tx_power_w(double distance_m, double gain_db, const LinkBudgetParams& p);

// energy per information bit for a given transmit power; rate_divisor > 1
// charges the rate expansion of a codec (R * code_rate effective info rate)
double tx_energy_per_bit_j(double power_w, const LinkBudgetParams& p, double rate_divisor = 1.0);

double energy_saving_j(double energy_uncoded_j, double energy_coded_j);

// Per-distance energy bookkeeping for one codec choice.
struct EnergyRecord {
    double tx_power_uncoded_w = 0.0;
    double tx_power_coded_w = 0.0;
    double energy_uncoded_j = 0.0;
    double energy_coded_j = 0.0;
    double saving_j = 0.0;
};

// rate_divisor applies to the coded leg only (uncoded energy always P/R)
EnergyRecord energy_record(double distance_m, double gain_db, const LinkBudgetParams& p,
                           double rate_divisor = 1.0);

}  // namespace ecclink
