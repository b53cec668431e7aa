#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ecclink/ber_lab.hpp"
#include "ecclink/channel.hpp"
#include "ecclink/convolutional.hpp"
#include "ecclink/policy.hpp"
#include "ecclink/reed_solomon.hpp"
#include "ecclink/simulation.hpp"

namespace {

ecclink::Bits random_bits(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ecclink::Bits out(count);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng() & 1u);
    return out;
}

std::vector<ecclink::Symbol> random_symbols(const ecclink::RsSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> sym(0, (1u << spec.symbol_bits) - 1);
    std::vector<ecclink::Symbol> out(spec.k);
    for (auto& s : out) s = static_cast<ecclink::Symbol>(sym(rng));
    return out;
}

void bm_rs_encode(benchmark::State& state) {
    const ecclink::ReedSolomon rs{ecclink::RsSpec{}};
    const auto msg = random_symbols(rs.spec(), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rs.encode(msg));
    state.SetItemsProcessed(state.iterations() * rs.spec().k);
}
BENCHMARK(bm_rs_encode);

void bm_rs_decode_two_errors(benchmark::State& state) {
    const ecclink::ReedSolomon rs{ecclink::RsSpec{}};
    auto word = rs.encode(random_symbols(rs.spec(), 2));
    word[4] ^= 9;
    word[17] ^= 21;
    for (auto _ : state) benchmark::DoNotOptimize(rs.decode(word));
    state.SetItemsProcessed(state.iterations() * rs.spec().k);
}
BENCHMARK(bm_rs_decode_two_errors);

void bm_viterbi_hard(benchmark::State& state) {
    const ecclink::ConvolutionalCode cc{ecclink::ConvSpec{}};
    const auto coded = cc.encode(random_bits(1024, 3));
    for (auto _ : state) benchmark::DoNotOptimize(cc.decode_hard(coded));
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(bm_viterbi_hard);

void bm_viterbi_soft(benchmark::State& state) {
    const ecclink::ConvolutionalCode cc{ecclink::ConvSpec{}};
    ecclink::SoftWord rx = ecclink::bpsk_modulate(cc.encode(random_bits(1024, 4)));
    std::mt19937_64 rng(5);
    ecclink::add_awgn(rx, ecclink::awgn_sigma(4.0, 0.5), rng);
    for (auto _ : state) benchmark::DoNotOptimize(cc.decode_soft(rx));
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(bm_viterbi_soft);

void bm_awgn_channel(benchmark::State& state) {
    const ecclink::SoftWord symbols = ecclink::bpsk_modulate(random_bits(8192, 6));
    std::uint64_t seed = 7;
    for (auto _ : state)
        benchmark::DoNotOptimize(ecclink::awgn_channel(symbols, 4.0, 1.0, seed++));
    state.SetItemsProcessed(state.iterations() * 8192);
}
BENCHMARK(bm_awgn_channel);

void bm_simulation_round(benchmark::State& state) {
    ecclink::LinkBudgetParams lb;
    lb.snr_override = 0.0202;
    const auto table = ecclink::PolicyTable::build(
        {
            {"RS", 1.8, 21.0 / 31.0, 9.0e-15},
            {"CC-Hard", 2.6, 0.5, 2.0e-14},
            {"CC-Soft", 4.4, 0.5, 4.2e-14},
        },
        lb);
    ecclink::SimConfig cfg;
    const auto deployment = ecclink::deploy(cfg);
    unsigned round = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ecclink::run_round(deployment, round, ecclink::Scheme::adaptive, table, lb, cfg));
        round = round % cfg.rounds + 1;
    }
    state.SetItemsProcessed(state.iterations() * cfg.node_count);
}
BENCHMARK(bm_simulation_round);

}  // namespace

BENCHMARK_MAIN();
