#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecclink/simulation.hpp"

using ecclink::Deployment;
using ecclink::LinkBudgetParams;
using ecclink::PolicyTable;
using ecclink::RoundRecord;
using ecclink::Scheme;
using ecclink::SimConfig;
using ecclink::SimReport;

namespace {

LinkBudgetParams bench_params() {
    LinkBudgetParams p;
    p.snr_override = 0.0202;
    return p;
}

PolicyTable bench_policy(double boost_margin_db = 0.0) {
    return PolicyTable::build(
        {
            {"RS", 1.8, 21.0 / 31.0, 9.0e-15},
            {"CC-Hard", 2.6, 0.5, 2.0e-14},
            {"CC-Soft", 4.4, 0.5, 4.2e-14},
        },
        bench_params(), boost_margin_db);
}

SimConfig small_config() {
    SimConfig c;
    c.node_count = 50;
    c.rounds = 10;
    c.seed = 7;
    return c;
}

}  // namespace

TEST_CASE("scheme names match the CSV vocabulary") {
    CHECK(ecclink::to_string(Scheme::adaptive) == "adaptive");
    CHECK(ecclink::to_string(Scheme::fixed_rs) == "fixed-RS");
    CHECK(ecclink::to_string(Scheme::fixed_cch) == "fixed-CCH");
    CHECK(ecclink::to_string(Scheme::fixed_ccs) == "fixed-CCS");
    CHECK(ecclink::to_string(Scheme::uncoded) == "uncoded");
}

TEST_CASE("degenerate configurations are rejected") {
    SimConfig c = small_config();
    c.node_count = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.rounds = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = small_config();
    c.area_width_m = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("deployment is deterministic per seed and stays inside the area") {
    const SimConfig c = small_config();
    const Deployment a = ecclink::deploy(c);
    const Deployment b = ecclink::deploy(c);
    REQUIRE(a.x_m.size() == c.node_count);
    CHECK(a.x_m == b.x_m);
    CHECK(a.y_m == b.y_m);
    for (unsigned i = 0; i < c.node_count; ++i) {
        CHECK(a.x_m[i] >= 0.0);
        CHECK(a.x_m[i] <= c.area_width_m);
        CHECK(a.y_m[i] >= 0.0);
        CHECK(a.y_m[i] <= c.area_height_m);
    }

    SimConfig other = c;
    other.seed = 8;
    const Deployment d = ecclink::deploy(other);
    CHECK(a.x_m != d.x_m);
}

TEST_CASE("mean sink distance of a large uniform deployment matches quadrature") {
    // E[sqrt(x^2 + y^2)] over the unit square, scaled to 100 m, is 76.5196 m
    SimConfig c;
    c.node_count = 100'000;
    c.rounds = 1;
    c.seed = 31;
    const Deployment d = ecclink::deploy(c);
    double sum = 0.0;
    for (unsigned i = 0; i < c.node_count; ++i) sum += std::hypot(d.x_m[i], d.y_m[i]);
    const double mean = sum / static_cast<double>(c.node_count);
    CHECK(mean == doctest::Approx(76.51957164642127).epsilon(0.01));
}

TEST_CASE("rounds are numbered from one") {
    const SimConfig c = small_config();
    const Deployment d = ecclink::deploy(c);
    CHECK_THROWS_AS(
        ecclink::run_round(d, 0, Scheme::uncoded, bench_policy(), bench_params(), c),
        std::invalid_argument);
}

TEST_CASE("the uncoded scheme saves nothing by definition") {
    const SimConfig c = small_config();
    const Deployment d = ecclink::deploy(c);
    const auto records =
        ecclink::run_round(d, 1, Scheme::uncoded, bench_policy(), bench_params(), c);
    REQUIRE(records.size() == c.node_count);
    for (const RoundRecord& r : records) {
        CHECK(r.codec_label == "uncoded");
        CHECK(r.saving_j == 0.0);
        CHECK(r.net_saving_j == 0.0);
        CHECK(r.energy_uncoded_j == r.energy_coded_j);
        CHECK(r.round == 1);
    }
}

TEST_CASE("every record satisfies the bookkeeping identities") {
    const SimConfig c = small_config();
    const Deployment d = ecclink::deploy(c);
    const PolicyTable policy = bench_policy();
    const LinkBudgetParams lb = bench_params();
    for (Scheme s : {Scheme::adaptive, Scheme::fixed_rs, Scheme::fixed_ccs}) {
        for (const RoundRecord& r : ecclink::run_round(d, 3, s, policy, lb, c)) {
            CHECK(r.saving_j == r.energy_uncoded_j - r.energy_coded_j);
            CHECK(r.energy_uncoded_j ==
                  doctest::Approx(ecclink::tx_energy_per_bit_j(ecclink::uncoded_tx_power_w(r.distance_m, lb), lb))
                      .epsilon(1e-12));
            CHECK(r.tx_power_w > 0.0);
        }
    }
}

TEST_CASE("adaptive rounds pick codecs by distance band") {
    const SimConfig c = small_config();
    const Deployment d = ecclink::deploy(c);
    const PolicyTable policy = bench_policy();
    const LinkBudgetParams lb = bench_params();
    const auto records = ecclink::run_round(d, 1, Scheme::adaptive, policy, lb, c);
    for (const RoundRecord& r : records) {
        const auto sel = policy.select(r.distance_m, lb);
        CHECK(r.codec_label == sel.codec_label);
        CHECK(r.boosted == sel.boosted);
        CHECK(r.tx_power_w == sel.tx_power_w);
    }
    // a 100 m square with ~55 m bands must use more than one codec
    const auto has = [&](const char* label) {
        return std::any_of(records.begin(), records.end(),
                           [&](const RoundRecord& r) { return r.codec_label == label; });
    };
    CHECK(has("CC-Soft"));
    CHECK((has("RS") || has("CC-Hard")));
}

TEST_CASE("a pinned deployment keeps nodes still and a mobile one moves them") {
    SimConfig c = small_config();
    c.static_deployment = true;
    const Deployment d = ecclink::deploy(c);
    const PolicyTable policy = bench_policy();
    const LinkBudgetParams lb = bench_params();

    const auto r1 = ecclink::run_round(d, 1, Scheme::uncoded, policy, lb, c);
    const auto r2 = ecclink::run_round(d, 2, Scheme::uncoded, policy, lb, c);
    for (unsigned i = 0; i < c.node_count; ++i) CHECK(r1[i].distance_m == r2[i].distance_m);

    c.static_deployment = false;
    const auto m1 = ecclink::run_round(d, 1, Scheme::uncoded, policy, lb, c);
    const auto m2 = ecclink::run_round(d, 2, Scheme::uncoded, policy, lb, c);
    bool moved = false;
    for (unsigned i = 0; i < c.node_count; ++i) moved = moved || m1[i].distance_m != m2[i].distance_m;
    CHECK(moved);
}

TEST_CASE("charging rate expansion scales coded energy by the inverse code rate") {
    SimConfig off = small_config();
    SimConfig on = small_config();
    on.account_rate_expansion = true;
    const Deployment d = ecclink::deploy(off);
    const PolicyTable policy = bench_policy();
    const LinkBudgetParams lb = bench_params();

    const auto base = ecclink::run_round(d, 1, Scheme::fixed_rs, policy, lb, off);
    const auto charged = ecclink::run_round(d, 1, Scheme::fixed_rs, policy, lb, on);
    const double rate = 21.0 / 31.0;
    for (unsigned i = 0; i < off.node_count; ++i) {
        CHECK(charged[i].energy_coded_j ==
              doctest::Approx(base[i].energy_coded_j / rate).epsilon(1e-12));
        CHECK(charged[i].energy_uncoded_j == base[i].energy_uncoded_j);
        CHECK(charged[i].saving_j < base[i].saving_j);
    }
}

TEST_CASE("a full run reports every scheme over every round") {
    const SimConfig c = small_config();
    const SimReport report = ecclink::run_simulation(c, bench_params(), bench_policy());
    REQUIRE(report.series.size() == ecclink::kAllSchemes.size());
    for (std::size_t i = 0; i < report.series.size(); ++i) {
        const auto& s = report.series[i];
        CHECK(s.scheme == ecclink::kAllSchemes[i]);
        CHECK(s.mean_tx_power_w.size() == c.rounds);
        CHECK(s.mean_saving_j.size() == c.rounds);
        CHECK(s.cum_mean_saving_j.size() == c.rounds);
        CHECK(s.cum_mean_net_saving_j.size() == c.rounds);
        CHECK(s.final_gross_saving_j == s.cum_mean_saving_j.back());
        CHECK(s.final_net_saving_j == s.cum_mean_net_saving_j.back());
    }
    CHECK(report.records.size() ==
          std::size_t{ecclink::kAllSchemes.size()} * c.rounds * c.node_count);
}

TEST_CASE("the same seed reproduces the whole report") {
    const SimConfig c = small_config();
    const SimReport a = ecclink::run_simulation(c, bench_params(), bench_policy());
    const SimReport b = ecclink::run_simulation(c, bench_params(), bench_policy());
    REQUIRE(a.series.size() == b.series.size());
    for (std::size_t i = 0; i < a.series.size(); ++i) {
        CHECK(a.series[i].mean_tx_power_w == b.series[i].mean_tx_power_w);
        CHECK(a.series[i].cum_mean_net_saving_j == b.series[i].cum_mean_net_saving_j);
    }
}

TEST_CASE("uncoded transmit power tops every coded scheme in every round") {
    const SimConfig c = small_config();
    const SimReport report = ecclink::run_simulation(c, bench_params(), bench_policy());
    const auto& uncoded = report.series.back();
    REQUIRE(uncoded.scheme == Scheme::uncoded);
    for (const auto& s : report.series) {
        if (s.scheme == Scheme::uncoded) continue;
        for (unsigned r = 0; r < c.rounds; ++r)
            CHECK(uncoded.mean_tx_power_w[r] > s.mean_tx_power_w[r]);
    }
}

TEST_CASE("the comparison ranks the four coded schemes by final net saving") {
    const SimConfig c = small_config();
    const SimReport report = ecclink::run_simulation(c, bench_params(), bench_policy());
    const auto ranks = ecclink::compare_schemes(report);
    REQUIRE(ranks.size() == 4);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        CHECK(ranks[i].rank == i + 1);
        if (i > 0) CHECK(ranks[i - 1].final_net_saving_j >= ranks[i].final_net_saving_j);
        CHECK(ranks[i].scheme != Scheme::uncoded);
    }

    SimReport broken = report;
    broken.series.erase(broken.series.begin() + 1);  // drop fixed-RS
    CHECK_THROWS_WITH_AS(ecclink::compare_schemes(broken),
                         "compare_schemes: report lacks scheme 'fixed-RS'",
                         std::invalid_argument);
}

TEST_CASE("CSV emitters carry the documented headers and row counts") {
    SimConfig c = small_config();
    c.rounds = 3;
    const SimReport report = ecclink::run_simulation(c, bench_params(), bench_policy());

    const std::string sc = ecclink::scheme_csv(report.series[0]);
    CHECK(sc.rfind("round,mean_txpower_dbm,mean_saving_j_per_bit,cum_mean_saving_j_per_bit\n", 0) ==
          0);
    CHECK(std::count(sc.begin(), sc.end(), '\n') == 1 + 3);
    CHECK(sc.find("\n1,") != std::string::npos);

    const std::string cc = ecclink::comparison_csv(ecclink::compare_schemes(report));
    CHECK(cc.rfind("scheme,final_net_saving_j_per_bit,rank\n", 0) == 0);
    CHECK(std::count(cc.begin(), cc.end(), '\n') == 1 + 4);

    const std::string dc = ecclink::detail_csv(report.records);
    CHECK(dc.rfind("scheme,round,node,distance_m,codec,boosted,tx_power_w,"
                   "energy_uncoded_j_per_bit,energy_coded_j_per_bit,saving_j_per_bit,"
                   "net_saving_j_per_bit\n",
                   0) == 0);
    CHECK(std::count(dc.begin(), dc.end(), '\n') ==
          1 + static_cast<long>(report.records.size()));
}
