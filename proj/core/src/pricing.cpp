#include "mcurve/pricing.hpp"

#include <ostream>

#include "mcurve/errors.hpp"
#include "mcurve/solver.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

SwapLeg make_fixed_leg(Schedule schedule, double rate, DayCount dc, double notional, int sign) {
    return SwapLeg{std::move(schedule), FixedCoupon{rate}, dc, notional, sign};
}

SwapLeg make_floating_leg(Schedule schedule, Period tenor, DayCount dc, double notional, int sign, double spread) {
    if (!tenor.is_overnight() && !(schedule.frequency() == tenor)) {
        throw ConfigurationError("floating leg on " + tenor.to_string() + " has a " +
                                 schedule.frequency().to_string() + " schedule");
    }
    return SwapLeg{std::move(schedule), FloatingIndex{tenor, spread}, dc, notional, sign};
}

namespace {

void require_discounting(const Curve& c) {
    if (c.role().kind != CurveKind::Discounting) {
        throw ConfigurationError("expected a discounting curve, got " + c.role().to_string());
    }
}

void require_coverage(const Curve& c, CivilDate end) {
    if (end > c.last_date()) {
        throw CoverageError(c.role().to_string() + " curve ends " + c.last_date().iso() + ", needed to " + end.iso());
    }
}

}  // namespace

double float_leg_pv(const SwapLeg& leg, const Curve& forwarding, const Curve& discounting) {
    const auto* index = std::get_if<FloatingIndex>(&leg.index);
    if (!index) throw ConfigurationError("float_leg_pv called on a fixed leg");
    require_discounting(discounting);
    const CurveRole& role = forwarding.role();
    const bool fits = index->tenor.is_overnight() ? role.kind == CurveKind::Discounting ||
                                                        role == CurveRole::forwarding(index->tenor)
                                                  : role == CurveRole::forwarding(index->tenor);
    if (!fits) {
        throw ConfigurationError("leg on " + index->tenor.to_string() + " cannot forward off " + role.to_string());
    }

    const auto& dates = leg.schedule.dates();
    double sum = 0.0;
    for (std::size_t i = 1; i < dates.size(); ++i) {
        const double tau = year_fraction(dates[i - 1], dates[i], leg.day_count);
        const double fwd = simple_forward(forwarding, dates[i - 1], dates[i], leg.day_count);
        sum += discounting.discount(dates[i]) * (fwd + index->spread) * tau;
    }
    return leg.sign * leg.notional * sum;
}

double fixed_leg_annuity(const SwapLeg& leg, const Curve& discounting) {
    if (!leg.is_fixed()) throw ConfigurationError("fixed_leg_annuity called on a floating leg");
    require_discounting(discounting);
    const auto& dates = leg.schedule.dates();
    double sum = 0.0;
    for (std::size_t i = 1; i < dates.size(); ++i) {
        sum += discounting.discount(dates[i]) * year_fraction(dates[i - 1], dates[i], leg.day_count);
    }
    return leg.notional * sum;
}

double fixed_leg_pv(const SwapLeg& leg, const Curve& discounting) {
    return leg.sign * std::get<FixedCoupon>(leg.index).rate * fixed_leg_annuity(leg, discounting);
}

CivilDate spot_date(CivilDate asof, const SwapConventions& conv) {
    return conv.calendar.advance_business_days(asof, conv.spot_lag);
}

Schedule floating_schedule(CivilDate start, CivilDate end, const Period& tenor, const SwapConventions& conv) {
    const Period freq = tenor.is_overnight() ? conv.fixed_frequency : tenor;
    return build_schedule(start, end, freq, conv.calendar, conv.bdc);
}

Schedule fixed_schedule(CivilDate start, CivilDate end, const SwapConventions& conv) {
    return build_schedule(start, end, conv.fixed_frequency, conv.calendar, conv.bdc);
}

double forward_par_rate(CivilDate start, CivilDate end, const Period& tenor, const Curve& forwarding,
                        const Curve& discounting, const SwapConventions& conv) {
    const SwapLeg fixed = make_fixed_leg(fixed_schedule(start, end, conv), 0.0, conv.fixed_day_count);
    const SwapLeg floating = make_floating_leg(floating_schedule(start, end, tenor, conv), tenor, conv.float_day_count);
    require_coverage(forwarding, floating.schedule.end());
    require_coverage(discounting, fixed.schedule.end());
    return float_leg_pv(floating, forwarding, discounting) / fixed_leg_annuity(fixed, discounting);
}

double swap_par_rate(const Period& tenor, const Period& maturity, const Curve& forwarding, const Curve& discounting,
                     const SwapConventions& conv) {
    const CivilDate start = spot_date(discounting.asof(), conv);
    const CivilDate end = add_tenor(start, maturity, conv.calendar, BusinessDayConvention::Unadjusted);
    return forward_par_rate(start, end, tenor, forwarding, discounting, conv);
}

BasisSpread basis_swap_spread(const Period& short_tenor, const Period& long_tenor, const Period& maturity,
                              const CurveSet& curves, const SwapConventions& conv, SpreadAnnuity annuity) {
    const Curve& disc = curves.discount();
    const Curve& fwd_short = curves.forwarding(short_tenor);
    const Curve& fwd_long = curves.forwarding(long_tenor);

    BasisSpread out;
    out.par_difference = swap_par_rate(long_tenor, maturity, fwd_long, disc, conv) -
                         swap_par_rate(short_tenor, maturity, fwd_short, disc, conv);

    const CivilDate start = spot_date(disc.asof(), conv);
    const CivilDate end = add_tenor(start, maturity, conv.calendar, BusinessDayConvention::Unadjusted);
    const SwapLeg long_leg =
        make_floating_leg(floating_schedule(start, end, long_tenor, conv), long_tenor, conv.float_day_count);
    const double long_pv = float_leg_pv(long_leg, fwd_long, disc);
    const Schedule short_sched = floating_schedule(start, end, short_tenor, conv);
    const Schedule fixed_sched = fixed_schedule(start, end, conv);

    auto mismatch = [&](double s) {
        if (annuity == SpreadAnnuity::ShortLeg) {
            const SwapLeg leg = make_floating_leg(short_sched, short_tenor, conv.float_day_count, 1.0, +1, s);
            return float_leg_pv(leg, fwd_short, disc) - long_pv;
        }
        const SwapLeg leg = make_floating_leg(short_sched, short_tenor, conv.float_day_count);
        const SwapLeg spread_leg = make_fixed_leg(fixed_sched, s, conv.fixed_day_count);
        return float_leg_pv(leg, fwd_short, disc) + fixed_leg_pv(spread_leg, disc) - long_pv;
    };
    const auto root = find_root(mismatch, {-0.01, 0.01}, RootSolverOptions{1e-16, 400, 12});
    if (!root) {
        throw CalibrationError("BASIS," + maturity.to_string() + "," + short_tenor.to_string() + "/" +
                                   long_tenor.to_string(),
                               "added spread not bracketed");
    }
    out.added_spread = root->root;
    return out;
}

BasisMatrix basis_matrix(const std::vector<Period>& maturities, const std::vector<std::pair<Period, Period>>& pairs,
                         const CurveSet& curves, const SwapConventions& conv) {
    BasisMatrix m{maturities, pairs, {}};
    for (const auto& maturity : maturities) {
        auto& row = m.values.emplace_back();
        for (const auto& [short_tenor, long_tenor] : pairs) {
            row.push_back(basis_swap_spread(short_tenor, long_tenor, maturity, curves, conv).par_difference);
        }
    }
    return m;
}

void write_basis_matrix(std::ostream& out, const BasisMatrix& m) {
    out << "maturity";
    for (const auto& [s, l] : m.pairs) out << ',' << s.to_string() << '/' << l.to_string();
    out << '\n';
    for (std::size_t i = 0; i < m.maturities.size(); ++i) {
        out << m.maturities[i].to_string();
        for (double v : m.values[i]) out << ',' << text::format_fixed(v * 1e4, 4);
        out << '\n';
    }
}

}  // namespace mcurve
