#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "mcurve/errors.hpp"
#include "mcurve/risk_indices.hpp"

using namespace mcurve;

namespace {

CivilDate D(const char* s) { return CivilDate::parse(s); }

PanelQuotes panel(const std::vector<double>& spreads) {
    PanelQuotes p{D("2011-12-30"), {}};
    for (std::size_t i = 0; i < spreads.size(); ++i) p.spreads["bank" + std::to_string(100 + i)] = spreads[i];
    return p;
}

// Sort, cut round-half-up(15% of N) from each end, average the rest.
double brute_force_15(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = (15 * v.size() + 50) / 100;
    double sum = 0.0;
    for (std::size_t i = k; i + k < v.size(); ++i) sum += v[i];
    return sum / double(v.size() - 2 * k);
}

}  // namespace

TEST_CASE("trim counts") {
    CHECK(trim_count(20, 0.15) == 3);
    CHECK(trim_count(42, 0.15) == 6);
    CHECK(trim_count(30, 0.15) == 5);  // 4.5 rounds up
    CHECK(trim_count(3, 0.15) == 0);
    CHECK(trim_count(10, 0.0) == 0);
    for (std::size_t n = 1; n <= 200; ++n) CHECK(trim_count(n, 0.15) == (15 * n + 50) / 100);
}

TEST_CASE("trimmed mean examples") {
    std::vector<double> ramp(20);
    std::iota(ramp.begin(), ramp.end(), 1.0);
    const IndexPoint p = trimmed_mean_index(panel(ramp));
    CHECK(p.value == 10.5);
    CHECK(p.contributors == 14);
    CHECK(p.date == D("2011-12-30"));

    for (std::size_t n : {3u, 7u, 42u}) CHECK(trimmed_mean_index(panel(std::vector<double>(n, 0.0123))).value == 0.0123);
    CHECK(trimmed_mean_index(panel(std::vector<double>(42, 0.01))).contributors == 30);

    CHECK(trimmed_mean_index(panel({1.0, 2.0, 6.0}), 0.0).value == 3.0);
    CHECK_THROWS_AS(trimmed_mean_index(panel({1.0, 2.0})), InsufficientDataError);
    CHECK_THROWS_AS(trimmed_mean_index(panel({1.0, 2.0, 3.0}), 0.5), DomainError);
    CHECK_THROWS_AS(trimmed_mean_index(panel({1.0, 2.0, 3.0}), -0.1), DomainError);
    // 0.49 of 4 quotes trims two from each end.
    CHECK_THROWS_AS(trimmed_mean_index(panel({1.0, 2.0, 3.0, 4.0}), 0.49), InsufficientDataError);
}

TEST_CASE("trimmed mean matches the brute-force oracle") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> size(3, 60);
    std::uniform_real_distribution<double> spread(0.001, 0.05);
    std::uniform_int_distribution<int> coarse(1, 8);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<double> v(size(rng));
        // Every other panel is drawn from a few levels so ties are common.
        for (auto& x : v) x = trial % 2 ? spread(rng) : coarse(rng) * 1e-3;
        const IndexPoint p = trimmed_mean_index(panel(v));
        const double oracle = brute_force_15(v);
        CHECK(std::abs(p.value - oracle) <= 1e-15 * oracle);

        std::vector<double> sorted = v;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t k = trim_count(v.size(), 0.15);
        CHECK(p.value >= sorted[k]);
        CHECK(p.value <= sorted[v.size() - 1 - k]);

        std::shuffle(v.begin(), v.end(), rng);
        CHECK(trimmed_mean_index(panel(v)).value == p.value);
    }
}

TEST_CASE("a new maximum cannot lower the index") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> spread(0.001, 0.05);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> v(3 + trial % 50);
        for (auto& x : v) x = spread(rng);
        const double before = trimmed_mean_index(panel(v)).value;
        const std::size_t k = trim_count(v.size(), 0.15);
        v.push_back(*std::max_element(v.begin(), v.end()) + 0.01);
        if (trim_count(v.size(), 0.15) == k) CHECK(trimmed_mean_index(panel(v)).value >= before);
    }
}

TEST_CASE("liquidity surplus") {
    EcbSnapshot s;
    s.deposit_facility_amount = 100;
    s.current_account_amount = 250;
    s.required_reserves = 200;
    CHECK(liquidity_surplus_index(s).value == 150.0);
    s.current_account_amount = 150;
    CHECK(liquidity_surplus_index(s).value == 100.0);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> amount(0.0, 5e11), bump(0.0, 1e10);
    for (int i = 0; i < 1000; ++i) {
        EcbSnapshot a;
        a.deposit_facility_amount = amount(rng);
        a.current_account_amount = amount(rng);
        a.required_reserves = amount(rng);
        const double base = liquidity_surplus_index(a).value;
        EcbSnapshot b = a;
        b.deposit_facility_amount += bump(rng);
        CHECK(liquidity_surplus_index(b).value >= base);
        b = a;
        b.current_account_amount += bump(rng);
        CHECK(liquidity_surplus_index(b).value >= base);
        b = a;
        b.required_reserves -= std::min(bump(rng), b.required_reserves);
        CHECK(liquidity_surplus_index(b).value >= base);
    }
}

TEST_CASE("corridor") {
    EcbSnapshot s;
    s.date = D("2011-12-30");
    s.deposit_facility_rate = 0.0025;
    s.eonia_fixing = 0.0040;
    s.marginal_lending_rate = 0.0175;
    CHECK(corridor_check(s).inside);
    s.eonia_fixing = s.deposit_facility_rate;
    CHECK(corridor_check(s).inside);
    s.eonia_fixing = 0.02;
    const CorridorCheck out = corridor_check(s);
    CHECK_FALSE(out.inside);
    CHECK(out.detail.find("marginal lending") != std::string::npos);
    CHECK(out.detail.find("2011-12-30") != std::string::npos);

    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> rate(-0.005, 0.06);
    for (int i = 0; i < 5000; ++i) {
        s.deposit_facility_rate = rate(rng);
        s.marginal_lending_rate = s.deposit_facility_rate + std::abs(rate(rng));
        s.eonia_fixing = rate(rng);
        const bool expected = s.deposit_facility_rate <= s.eonia_fixing && s.eonia_fixing <= s.marginal_lending_rate;
        CHECK(corridor_check(s).inside == expected);
    }
}

TEST_CASE("moving average") {
    DatedSeries ramp;
    for (int i = 1; i <= 40; ++i) ramp.push_back({D("2011-01-03").add_days(i), double(i)});
    const DatedSeries ma = moving_average(ramp, 20);
    REQUIRE(ma.size() == 21);
    CHECK(ma.front().value == 10.5);
    CHECK(ma.front().date == ramp[19].date);
    CHECK(ma.back().value == 30.5);

    DatedSeries constant = ramp;
    for (auto& p : constant) p.value = 483e9;
    for (const auto& p : moving_average(constant, 20)) CHECK(p.value == 483e9);
    CHECK(moving_average(ramp, 1) == ramp);
    CHECK(moving_average(ramp, 41).empty());
    CHECK_THROWS_AS(moving_average(ramp, 0), DomainError);
}

TEST_CASE("index csv") {
    std::ostringstream out;
    write_index_series(out, {{D("2011-12-30"), 0.0123456, 30}}, 100.0, 4);
    CHECK(out.str() == "date,value,contributors\n2011-12-30,1.2346,30\n");
}
