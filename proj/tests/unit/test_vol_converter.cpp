#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "market.hpp"
#include "mcurve/errors.hpp"
#include "mcurve/vol_converter.hpp"

using namespace mcurve;

namespace {

Period P(const char* s) { return Period::parse(s); }

SwaptionGrid load_grid(const std::string& name) {
    std::ifstream in(testkit::data_path(name));
    REQUIRE(in.good());
    return read_swaption_grid(in);
}

// A * E|S_T - F| for a lognormal S_T with mean F, by composite Simpson over the standard
// normal driver, split at the kink.
double straddle_by_quadrature(double f, double vol, double t, double annuity) {
    const double s = vol * std::sqrt(t);
    const double kink = s / 2.0;
    auto integrand = [&](double z) {
        const double st = f * std::exp(s * z - s * s / 2.0);
        return std::abs(st - f) * std::exp(-z * z / 2.0) / std::sqrt(2.0 * M_PI);
    };
    auto simpson = [&](double a, double b) {
        const int n = 20000;
        const double h = (b - a) / n;
        double sum = integrand(a) + integrand(b);
        for (int i = 1; i < n; ++i) sum += integrand(a + i * h) * (i % 2 ? 4.0 : 2.0);
        return sum * h / 3.0;
    };
    return annuity * (simpson(-12.0, kink) + simpson(kink, 12.0 + kink));
}

}  // namespace

TEST_CASE("normal cdf") {
    CHECK(normal_cdf(0.0) == 0.5);
    CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-14));
    CHECK(normal_cdf(-1.0) + normal_cdf(1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("ATM straddle premium") {
    CHECK(black_atm_straddle_premium(0.03, 0.0, 1.0, 1.0) == 0.0);
    const double p = black_atm_straddle_premium(0.03, 0.20, 1.0, 1.0);
    CHECK(p == doctest::Approx(2 * 0.03 * (2 * normal_cdf(0.1) - 1)).epsilon(1e-14));
    CHECK(p == doctest::Approx(0.0047794).epsilon(1e-5));
    CHECK(p == doctest::Approx(straddle_by_quadrature(0.03, 0.20, 1.0, 1.0)).epsilon(1e-9));
    for (double vol : {0.05, 0.6, 1.2}) {
        for (double t : {0.1, 5.0, 30.0}) {
            CHECK(black_atm_straddle_premium(0.025, vol, t, 4.2) ==
                  doctest::Approx(straddle_by_quadrature(0.025, vol, t, 4.2)).epsilon(1e-8));
        }
    }
    double prev = -1.0;
    for (int i = 0; i <= 300; ++i) {
        const double v = black_atm_straddle_premium(0.02, i * 0.01, 2.0, 1.8);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(black_atm_straddle_premium(0.03, -0.1, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(black_atm_straddle_premium(0.03, 0.1, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(black_atm_straddle_premium(0.03, 0.1, 1.0, 0.0), DomainError);
}

TEST_CASE("implied vol inversion") {
    CHECK(implied_vol_from_premium(0.0, 0.03, 1.0, 1.0) == 0.0);
    const double p = black_atm_straddle_premium(0.02, 0.595, 1.0, 0.98);
    CHECK(std::abs(implied_vol_from_premium(p, 0.02, 1.0, 0.98) - 0.595) < 1e-8);

    const double near_sup = 0.999 * 2 * 0.98 * 0.02;
    const double big = implied_vol_from_premium(near_sup, 0.02, 1.0, 0.98);
    CHECK(std::isfinite(big));
    CHECK(big > 5.0);

    CHECK_THROWS_AS(implied_vol_from_premium(2 * 0.98 * 0.02, 0.02, 1.0, 0.98), InversionError);
    CHECK_THROWS_AS(implied_vol_from_premium(-1e-6, 0.02, 1.0, 0.98), InversionError);
    CHECK_THROWS_AS(implied_vol_from_premium(1e-3, 0.0, 1.0, 0.98), InversionError);

    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> vols(0.01, 1.2), expiries(1.0 / 12, 30.0), fwd(0.002, 0.08),
        annuity(0.05, 25.0);
    for (int i = 0; i < 20000; ++i) {
        const double v = vols(rng), t = expiries(rng), f = fwd(rng), a = annuity(rng);
        const double prem = black_atm_straddle_premium(f, v, t, a);
        const double back = implied_vol_from_premium(prem, f, t, a);
        CHECK(std::abs(back - v) < 1e-8);
        CHECK(std::abs(black_atm_straddle_premium(f, back, t, a) - prem) < 1e-12 * a);
    }
}

TEST_CASE("spot from forward premium") {
    CHECK(spot_from_forward_premium(1753e-4, 1.0) == 1753e-4);
    CHECK(spot_from_forward_premium(spot_from_forward_premium(0.1, 0.9), 0.8) ==
          doctest::Approx(spot_from_forward_premium(0.1, 0.9 * 0.8)).epsilon(1e-15));
    CHECK_THROWS_AS(spot_from_forward_premium(0.1, 0.0), DomainError);
    CHECK_THROWS_AS(spot_from_forward_premium(0.1, 1.01), DomainError);
}

TEST_CASE("2012-05-31 swaption grids") {
    const SwaptionGrid fwd = load_grid("swaptions_2012-05-31_forward_premia.csv");
    const SwaptionGrid eonia = load_grid("swaptions_2012-05-31_spot_premia_eonia.csv");
    const SwaptionGrid euribor = load_grid("swaptions_2012-05-31_spot_premia_euribor.csv");
    const SwaptionGrid vols = load_grid("swaptions_2012-05-31_vols.csv");
    CHECK(fwd.kind == GridKind::ForwardPremium);
    CHECK(eonia.kind == GridKind::SpotPremium);
    CHECK(vols.kind == GridKind::Volatility);
    REQUIRE(fwd.expiries.size() == 17);
    REQUIRE(fwd.tenors.size() == 14);
    CHECK(fwd.expiries[6] == P("18M"));
    CHECK(fwd.tenors.back() == P("30Y"));
    CHECK(vols.values[5][0] == doctest::Approx(0.844).epsilon(1e-15));

    // 10Y x 10Y: 1753 forward, 1549 Eonia spot, 1486 Euribor spot.
    const double f = fwd.values[12][9], a = eonia.values[12][9], b = euribor.values[12][9];
    CHECK(f == doctest::Approx(0.1753).epsilon(1e-15));
    CHECK(a / f == doctest::Approx(0.8836).epsilon(1e-4));
    CHECK(b / f == doctest::Approx(0.8477).epsilon(1e-4));

    // Eonia spot premia sit between Euribor spot and forward premia, up to the half basis
    // point the panels are printed to.
    for (std::size_t i = 0; i < fwd.expiries.size(); ++i) {
        for (std::size_t j = 0; j < fwd.tenors.size(); ++j) {
            CHECK(eonia.values[i][j] >= euribor.values[i][j] - 0.5e-4);
            CHECK(eonia.values[i][j] <= fwd.values[i][j]);
            if (fwd.expiries[i].approximate_days() >= 365) CHECK(eonia.values[i][j] >= euribor.values[i][j]);
        }
    }

    std::ostringstream out;
    write_swaption_grid(out, fwd);
    std::istringstream in(out.str());
    const SwaptionGrid again = read_swaption_grid(in);
    CHECK(again.kind == fwd.kind);
    CHECK(again.expiries == fwd.expiries);
    CHECK(again.tenors == fwd.tenors);
    for (std::size_t i = 0; i < fwd.expiries.size(); ++i) {
        for (std::size_t j = 0; j < fwd.tenors.size(); ++j) CHECK(again.values[i][j] == fwd.values[i][j]);
    }
}

TEST_CASE("grid parsing errors") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_swaption_grid(in);
    };
    CHECK_NOTHROW(parse("# kind=volatility\nexpiry,1Y\n1Y Opt,40\n"));
    CHECK_THROWS_AS(parse("expiry,1Y\n1Y,40\n"), ParseError);
    CHECK_THROWS_AS(parse("# kind=smile\nexpiry,1Y\n1Y,40\n"), ParseError);
    CHECK_THROWS_AS(parse("# kind=volatility\nexpiry,1Y\n1Y,40,41\n"), ParseError);
    CHECK_THROWS_AS(parse("# kind=volatility\ntenor,1Y\n1Y,40\n"), ParseError);
}

TEST_CASE("premium duality across discount curves") {
    std::mt19937_64 rng(31);
    const CivilDate asof = CivilDate::parse("2012-05-31");
    const SwapConventions conv;
    const SwaptionGrid fwd = load_grid("swaptions_2012-05-31_forward_premia.csv");
    for (int trial = 0; trial < 5; ++trial) {
        const auto truth = testkit::random_truth(rng, asof);
        // Eonia discounting against discounting on the Euribor 6M curve itself.
        const Curve& ois = truth.discount;
        const Curve euribor_disc = truth.fwd6m.with_role(CurveRole::discounting());
        for (std::size_t i = 0; i < fwd.expiries.size(); i += 3) {
            for (std::size_t j = 0; j < fwd.tenors.size(); j += 4) {
                // The synthetic curves run 31 years.
                if (*fwd.expiries[i].months() + *fwd.tenors[j].months() > 12 * 30) continue;
                const double p = fwd.values[i][j];
                const auto ua = swaption_underlying(fwd.expiries[i], fwd.tenors[j], P("6M"), truth.fwd6m, ois, conv);
                const auto ub =
                    swaption_underlying(fwd.expiries[i], fwd.tenors[j], P("6M"), truth.fwd6m, euribor_disc, conv);
                CHECK(ua.forward_annuity() == doctest::Approx(ua.spot_annuity / ua.discount_to_expiry).epsilon(1e-15));
                if (!(p < 2 * ua.forward_annuity() * ua.forward_rate) || !(p < 2 * ub.forward_annuity() * ub.forward_rate)) {
                    continue;
                }
                for (const auto* u : {&ua, &ub}) {
                    const double spot = spot_from_forward_premium(p, u->discount_to_expiry);
                    const double vol = implied_vol_from_premium(spot, u->forward_rate, u->expiry_time, u->spot_annuity);
                    const double back =
                        black_atm_straddle_premium(u->forward_rate, vol, u->expiry_time, u->spot_annuity) / u->discount_to_expiry;
                    CHECK(std::abs(back - p) < 1e-10);
                }
                // Lower OIS rates mean larger discount factors and larger spot premia.
                CHECK(ua.discount_to_expiry >= ub.discount_to_expiry);
                CHECK(spot_from_forward_premium(p, ua.discount_to_expiry) >= spot_from_forward_premium(p, ub.discount_to_expiry));
            }
        }
    }
}

TEST_CASE("grid conversion") {
    const CivilDate asof = CivilDate::parse("2012-05-31");
    const auto truth = testkit::single_curve_truth(asof, testkit::ZeroShape{0.03, -0.02, 2.0, 0.0});
    SwaptionGrid g{GridKind::ForwardPremium, {P("1Y"), P("5Y")}, {P("2Y"), P("10Y")}, {}};
    std::vector<std::vector<double>> vols{{0.40, 0.35}, {0.30, 0.25}};
    for (std::size_t i = 0; i < 2; ++i) {
        auto& row = g.values.emplace_back();
        for (std::size_t j = 0; j < 2; ++j) {
            const auto u = swaption_underlying(g.expiries[i], g.tenors[j], P("6M"), truth.fwd6m, truth.discount);
            row.push_back(black_atm_straddle_premium(u.forward_rate, vols[i][j], u.expiry_time, u.forward_annuity()));
        }
    }
    const GridConversion c = convert_forward_premia(g, P("6M"), truth.fwd6m, truth.discount);
    CHECK(c.spot_premia.kind == GridKind::SpotPremium);
    CHECK(c.vols.kind == GridKind::Volatility);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(std::abs(c.vols.values[i][j] - vols[i][j]) < 1e-8);
            CHECK(c.spot_premia.values[i][j] < g.values[i][j]);
        }
    }
    SwaptionGrid wrong = g;
    wrong.kind = GridKind::Volatility;
    CHECK_THROWS_AS(convert_forward_premia(wrong, P("6M"), truth.fwd6m, truth.discount), ConfigurationError);
    SwaptionGrid absurd = g;
    absurd.values[0][0] = 1.0;
    CHECK_THROWS_AS(convert_forward_premia(absurd, P("6M"), truth.fwd6m, truth.discount), InversionError);
}
