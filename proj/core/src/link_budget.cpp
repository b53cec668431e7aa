#include "ecclink/link_budget.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace ecclink {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("LinkBudgetParams: ") + name + " must be positive and finite");
}

}  // namespace

void LinkBudgetParams::validate() const {
    check_positive(carrier_frequency_hz, "carrier_frequency_hz");
    check_positive(spectral_efficiency, "spectral_efficiency");
    if (!std::isfinite(ebn0_db))
        throw std::invalid_argument("LinkBudgetParams: ebn0_db must be finite");
    check_positive(noise_factor, "noise_factor");
    check_positive(boltzmann_jk, "boltzmann_jk");
    check_positive(temperature_k, "temperature_k");
    check_positive(bandwidth_hz, "bandwidth_hz");
    check_positive(info_rate_bps, "info_rate_bps");
    if (snr_override && !(*snr_override > 0.0))
        throw std::invalid_argument("LinkBudgetParams: snr_override must be positive");
}

double noise_power_w(const LinkBudgetParams& p) {
    return p.noise_factor * p.boltzmann_jk * p.temperature_k * p.bandwidth_hz;
}

double required_snr(const LinkBudgetParams& p) {
    if (p.snr_override) return *p.snr_override;
    return p.spectral_efficiency * db_to_linear(p.ebn0_db);
}

double uncoded_tx_power_w(double distance_m, const LinkBudgetParams& p) {
    if (distance_m < 0.0 || !std::isfinite(distance_m))
        throw std::invalid_argument("uncoded_tx_power_w: distance must be nonnegative and finite");
    const double path = 4.0 * std::numbers::pi * distance_m / p.wavelength_m();
    return required_snr(p) * noise_power_w(p) * path * path;
}

double coded_tx_power_w(double distance_m, double gain_db, const LinkBudgetParams& p) {
    if (gain_db < 0.0)
        throw std::invalid_argument("coded_tx_power_w: coding gain must be nonnegative");
    return uncoded_tx_power_w(distance_m, p) / db_to_linear(gain_db);
}

double tx_energy_per_bit_j(double power_w, const LinkBudgetParams& p, double rate_divisor) {
    if (power_w < 0.0) throw std::invalid_argument("tx_energy_per_bit_j: power must be nonnegative");
    if (!(rate_divisor > 0.0))
        throw std::invalid_argument("tx_energy_per_bit_j: rate_divisor must be positive");
    return power_w / (p.info_rate_bps * rate_divisor);
}

double energy_saving_j(double energy_uncoded_j, double energy_coded_j) {
    return energy_uncoded_j - energy_coded_j;
}

EnergyRecord energy_record(double distance_m, double gain_db, const LinkBudgetParams& p,
                           double rate_divisor) {
    EnergyRecord r;
    r.tx_power_uncoded_w = uncoded_tx_power_w(distance_m, p);
    r.tx_power_coded_w = r.tx_power_uncoded_w / db_to_linear(gain_db);
    r.energy_uncoded_j = tx_energy_per_bit_j(r.tx_power_uncoded_w, p);
    r.energy_coded_j = tx_energy_per_bit_j(r.tx_power_coded_w, p, rate_divisor);
    r.saving_j = energy_saving_j(r.energy_uncoded_j, r.energy_coded_j);
    return r;
}

}  // namespace ecclink
