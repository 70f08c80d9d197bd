#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "mcurve/bootstrap.hpp"
#include "mcurve/curve.hpp"
#include "mcurve/market_data.hpp"
#include "mcurve/pricing.hpp"

namespace testkit {

using namespace mcurve;

inline std::string data_path(const std::string& name) { return std::string(MCURVE_DATA_DIR) + "/" + name; }

/// Zero rate z(t) = a + b*(1 - exp(-t/c))/(t/c) + s, a Nelson-Siegel-like shape.
struct ZeroShape {
    double level = 0.02;
    double slope = -0.01;
    double scale = 2.0;
    double spread = 0.0;

    double operator()(double t) const {
        const double x = t / scale;
        const double decay = x < 1e-12 ? 1.0 : (1.0 - std::exp(-x)) / x;
        return level + slope * decay + spread;
    }
};

/// Dense monthly curve out to 31 years from a zero-rate shape.
inline Curve dense_curve(CivilDate asof, CurveRole role, const ZeroShape& z) {
    std::vector<Pillar> pillars;
    for (int m = 1; m <= 12 * 31; ++m) {
        const CivilDate d = asof.add_months(m);
        const double t = year_fraction(asof, d, DayCount::Act365Fixed);
        pillars.push_back({d, std::exp(-z(t) * t)});
    }
    return Curve(asof, role, std::move(pillars), DayCount::Act365Fixed);
}

struct MarketTruth {
    CivilDate asof;
    Curve discount;
    Curve fwd3m;
    Curve fwd6m;
};

inline const std::vector<std::string>& ois_keys() {
    static const std::vector<std::string> k{"1W", "2W", "1M", "2M", "3M", "6M", "9M", "1Y", "2Y",
                                            "3Y", "4Y", "5Y", "7Y", "10Y", "15Y", "20Y", "30Y"};
    return k;
}
inline const std::vector<std::string>& swap_keys() {
    static const std::vector<std::string> k{"2Y", "3Y", "4Y", "5Y", "7Y", "10Y", "15Y", "20Y", "30Y"};
    return k;
}
inline const std::vector<std::string>& fra3m_keys() {
    static const std::vector<std::string> k{"1Mx4M", "2Mx5M", "3Mx6M", "6Mx9M", "9Mx12M", "12Mx15M", "15Mx18M", "18Mx21M"};
    return k;
}
inline const std::vector<std::string>& fra6m_keys() {
    static const std::vector<std::string> k{"1Mx7M", "2Mx8M", "3Mx9M", "4Mx10M", "5Mx11M", "6Mx12M", "9Mx15M", "12Mx18M"};
    return k;
}

/// Quotes implied by a set of true curves under the default conventions.
inline QuoteSet quotes_from(const MarketTruth& m, const SwapConventions& conv = {}) {
    QuoteSet q(m.asof);
    const CivilDate spot = spot_date(m.asof, conv);
    auto rate = [&](const Curve& c, CivilDate a, CivilDate b) { return simple_forward(c, a, b, DayCount::Act360); };
    auto rolled = [&](const Period& p) { return add_tenor(spot, p, conv.calendar, conv.bdc); };
    auto unadjusted = [&](const Period& p) { return add_tenor(spot, p, conv.calendar, BusinessDayConvention::Unadjusted); };

    for (const auto& k : ois_keys()) {
        const Period p = Period::parse(k);
        const bool single = !p.months() || *p.months() <= 12;
        const double r = single ? rate(m.discount, spot, rolled(p))
                                : forward_par_rate(spot, unadjusted(p), Period::parse("ON"), m.discount, m.discount, conv);
        q.insert({InstrumentRef(QuoteKind::Ois, k), r, m.asof});
    }
    struct Block {
        const Curve& curve;
        const char* tenor;
        const std::vector<std::string>& fras;
    };
    for (const Block& b : {Block{m.fwd3m, "3M", fra3m_keys()}, Block{m.fwd6m, "6M", fra6m_keys()}}) {
        const Period tenor = Period::parse(b.tenor);
        q.insert({InstrumentRef(QuoteKind::Deposit, b.tenor), rate(b.curve, spot, rolled(tenor)), m.asof});
        for (const auto& k : b.fras) {
            const FraPeriod f = FraPeriod::parse(k);
            q.insert({InstrumentRef(QuoteKind::Fra, k, b.tenor), rate(b.curve, rolled(f.start), rolled(f.end)), m.asof});
        }
        for (const auto& k : swap_keys()) {
            const double r = forward_par_rate(spot, unadjusted(Period::parse(k)), tenor, b.curve, m.discount, conv);
            q.insert({InstrumentRef(QuoteKind::Swap, k, b.tenor), r, m.asof});
        }
    }
    return q;
}

/// Random multi-curve truth: an OIS shape with Euribor 3M and 6M curves spread above it.
inline MarketTruth random_truth(std::mt19937_64& rng, CivilDate asof) {
    std::uniform_real_distribution<double> level(-0.005, 0.06), slope(-0.03, 0.03), scale(0.5, 8.0),
        spread(0.0, 0.015);
    const ZeroShape ois{level(rng), slope(rng), scale(rng), 0.0};
    ZeroShape s3 = ois, s6 = ois;
    s3.spread = spread(rng);
    s6.spread = s3.spread + spread(rng) / 2.0;
    return {asof, dense_curve(asof, CurveRole::discounting(), ois),
            dense_curve(asof, CurveRole::forwarding(Period::parse("3M")), s3),
            dense_curve(asof, CurveRole::forwarding(Period::parse("6M")), s6)};
}

/// Single-curve world: every index forwards off the discount curve.
inline MarketTruth single_curve_truth(CivilDate asof, const ZeroShape& z) {
    const Curve d = dense_curve(asof, CurveRole::discounting(), z);
    return {asof, d, d.with_role(CurveRole::forwarding(Period::parse("3M"))),
            d.with_role(CurveRole::forwarding(Period::parse("6M")))};
}

struct BuiltCurves {
    Curve discount;
    Curve fwd3m;
    Curve fwd6m;

    CurveSet set() const {
        CurveSet s;
        s.add(discount);
        s.add(fwd3m);
        s.add(fwd6m);
        return s;
    }
};

inline BuiltCurves bootstrap_all(const QuoteSet& q, const SwapConventions& conv = {}) {
    const Period p3 = Period::parse("3M"), p6 = Period::parse("6M");
    Curve d = bootstrap_discount(q, ois_recipe(q, conv));
    Curve f3 = bootstrap_forward(p3, q, d, tenor_recipe(p3, q, conv));
    Curve f6 = bootstrap_forward(p6, q, d, tenor_recipe(p6, q, conv));
    return {d, f3, f6};
}

}  // namespace testkit
