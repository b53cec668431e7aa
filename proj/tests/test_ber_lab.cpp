#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecclink/ber_lab.hpp"
#include "ecclink/rng.hpp"

using ecclink::BerCurve;
using ecclink::BerPoint;
using ecclink::TrialBudget;

namespace {

// curve sampled from the analytic BER, optionally shifted left by `gain_db`
BerCurve synthetic_curve(const std::string& label, double gain_db,
                         double start = 0.0, double stop = 10.0) {
    BerCurve c;
    c.codec_label = label;
    for (double x = start; x <= stop + 1e-9; x += 1.0)
        c.points.push_back({x, ecclink::analytic_uncoded_ber(x + gain_db), 1, 0});
    return c;
}

}  // namespace

TEST_CASE("analytic BER matches the Q-function landmarks") {
    CHECK(ecclink::analytic_uncoded_ber(0.0) ==
          doctest::Approx(0.07864960352514257).epsilon(1e-12));
    CHECK(ecclink::analytic_uncoded_ber(6.76) ==
          doctest::Approx(0.001035883572825652).epsilon(1e-12));
    CHECK(ecclink::analytic_uncoded_ber(8.0) ==
          doctest::Approx(0.00019090777407599314).epsilon(1e-12));
    CHECK(ecclink::analytic_uncoded_ber(20.0) < 1e-20);
}

TEST_CASE("uncoded Monte-Carlo point lands near the analytic value") {
    const auto chain = ecclink::make_uncoded_chain();
    const TrialBudget budget{200'000, 200, 4'000'000};
    const BerPoint point = ecclink::simulate_ber_point(*chain, 4.0, budget, 11);
    const double expected = ecclink::analytic_uncoded_ber(4.0);
    CHECK(point.bits >= budget.min_bits);
    CHECK(point.errors >= budget.min_errors);
    CHECK(point.ber == doctest::Approx(expected).epsilon(0.10));
}

TEST_CASE("points are deterministic per seed") {
    const auto chain = ecclink::make_uncoded_chain();
    const TrialBudget budget{50'000, 50, 1'000'000};
    const BerPoint a = ecclink::simulate_ber_point(*chain, 2.0, budget, 99);
    const BerPoint b = ecclink::simulate_ber_point(*chain, 2.0, budget, 99);
    CHECK(a.errors == b.errors);
    CHECK(a.bits == b.bits);
}

TEST_CASE("estimation error shrinks with a bigger budget") {
    const auto chain = ecclink::make_uncoded_chain();
    const double expected = ecclink::analytic_uncoded_ber(3.0);
    const BerPoint small =
        ecclink::simulate_ber_point(*chain, 3.0, {20'000, 10, 100'000}, 5);
    const BerPoint large =
        ecclink::simulate_ber_point(*chain, 3.0, {2'000'000, 1000, 20'000'000}, 5);
    CHECK(std::abs(large.ber - expected) < std::abs(small.ber - expected));
}

TEST_CASE("a sweep produces one point per grid entry, independent of order") {
    const auto chain = ecclink::make_uncoded_chain();
    const TrialBudget budget{20'000, 20, 200'000};
    const std::vector<double> grid = {0.0, 2.0, 4.0};
    const BerCurve curve = ecclink::ber_sweep(*chain, grid, budget, 7);
    REQUIRE(curve.points.size() == 3);
    CHECK(curve.codec_label == "uncoded");
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(curve.points[i].ebn0_db == grid[i]);
    // single-point evaluation with the derived seed reproduces the middle point
    const BerPoint middle =
        ecclink::simulate_ber_point(*chain, 2.0, budget, ecclink::derive_seed(7, 1));
    CHECK(middle.errors == curve.points[1].errors);

    CHECK_THROWS_AS(ecclink::ber_sweep(*chain, {}, budget, 7), std::invalid_argument);
    CHECK_THROWS_AS(ecclink::ber_sweep(*chain, {1.0, 1.0}, budget, 7), std::invalid_argument);
}

TEST_CASE("identical curves have zero gain") {
    const BerCurve u = synthetic_curve("uncoded", 0.0);
    const auto g = ecclink::coding_gain_at(u, u, 1e-3);
    CHECK(g.gain_db == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("a 2 dB shifted curve reads back 2 dB of gain") {
    const BerCurve u = synthetic_curve("uncoded", 0.0);
    const BerCurve c = synthetic_curve("CC-Hard", 2.0);
    const auto g = ecclink::coding_gain_at(c, u, 1e-3);
    CHECK(g.codec_label == "CC-Hard");
    CHECK(g.gain_db == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(g.ebn0_uncoded_db - g.ebn0_coded_db == g.gain_db);
}

TEST_CASE("a fractional shift reads back within interpolation error") {
    // 1.5 dB puts the two crossings on differently curved segments, so the
    // log-linear interpolation residual stays but must be well under 0.01 dB
    const BerCurve u = synthetic_curve("uncoded", 0.0, 1.0, 9.0);
    const BerCurve c = synthetic_curve("RS", 1.5, 1.0, 9.0);
    const auto g = ecclink::coding_gain_at(c, u, 1e-3);
    CHECK(g.gain_db == doctest::Approx(1.5).epsilon(0.005));
}

TEST_CASE("an unbracketed target names the curve") {
    const BerCurve u = synthetic_curve("uncoded", 0.0, 0.0, 4.0);  // BER stays above 1e-2
    CHECK_THROWS_WITH_AS(ecclink::ebn0_at_ber(u, 1e-9),
                         "coding gain: target BER 1e-09 not bracketed by curve 'uncoded'",
                         std::runtime_error);
    CHECK_THROWS_AS(ecclink::ebn0_at_ber(u, 2.0), std::invalid_argument);
}

TEST_CASE("curve CSV carries the documented header and the codec label") {
    BerCurve c;
    c.codec_label = "RS";
    c.points = {{0.0, 0.25, 1000, 250}, {1.0, 0.125, 2000, 250}};
    const std::string csv = ecclink::ber_curve_csv(c);
    CHECK(csv == "ebn0_db,ber,bits,errors,codec\n"
                 "0,0.25,1000,250,RS\n"
                 "1,0.125,2000,250,RS\n");
}
