#include "mcurve/csa_engine.hpp"

#include <cmath>
#include <ostream>

#include "mcurve/errors.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

MarginationStep margination_step(double prev_balance, double rc, double dtau, double target_npv) {
    if (!(dtau > 0.0)) throw OrderingError("margination period has no accrual");
    const double accrued = prev_balance * (1.0 + rc * dtau);
    return {accrued, target_npv - accrued};
}

namespace {

void require_increasing(const DatedSeries& s, const char* what) {
    if (s.empty()) throw AlignmentError(std::string(what) + " is empty");
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i - 1].date < s[i].date)) {
            throw AlignmentError(std::string(what) + " dates not increasing at " + s[i].date.iso());
        }
    }
}

}  // namespace

CollateralAccount simulate_margination(const DatedSeries& npv_path, const DatedSeries& rc_fixings, DayCount dc) {
    require_increasing(npv_path, "NPV path");
    require_increasing(rc_fixings, "collateral fixings");
    if (npv_path.size() != rc_fixings.size()) {
        throw AlignmentError("NPV path has " + std::to_string(npv_path.size()) + " dates, fixings have " +
                             std::to_string(rc_fixings.size()));
    }
    CollateralAccount acc;
    acc.day_count = dc;
    for (std::size_t i = 0; i < npv_path.size(); ++i) {
        if (npv_path[i].date != rc_fixings[i].date) {
            throw AlignmentError("NPV date " + npv_path[i].date.iso() + " has fixing date " + rc_fixings[i].date.iso());
        }
        MarginationStep step{0.0, npv_path[i].value};
        if (i > 0) {
            step = margination_step(acc.balances.back(), rc_fixings[i - 1].value,
                                    year_fraction(npv_path[i - 1].date, npv_path[i].date, dc), npv_path[i].value);
        }
        acc.dates.push_back(npv_path[i].date);
        acc.rc_fixings.push_back(rc_fixings[i].value);
        acc.accrued.push_back(step.accrued);
        acc.transfers.push_back(step.transfer);
        // Perfect collateralisation: the post-transfer balance is the NPV itself.
        acc.balances.push_back(npv_path[i].value);
    }
    return acc;
}

DatedSeries deterministic_npv_path(double payoff, const DatedSeries& rc_fixings, DayCount dc) {
    require_increasing(rc_fixings, "collateral fixings");
    DatedSeries path(rc_fixings.size());
    path.back() = {rc_fixings.back().date, payoff};
    for (std::size_t i = rc_fixings.size() - 1; i > 0; --i) {
        const double tau = year_fraction(rc_fixings[i - 1].date, rc_fixings[i].date, dc);
        path[i - 1] = {rc_fixings[i - 1].date, path[i].value / (1.0 + rc_fixings[i - 1].value * tau)};
    }
    return path;
}

Curve collateral_curve(const DatedSeries& rc_fixings, DayCount dc) {
    require_increasing(rc_fixings, "collateral fixings");
    std::vector<Pillar> pillars;
    double df = 1.0;
    for (std::size_t i = 1; i < rc_fixings.size(); ++i) {
        df /= 1.0 + rc_fixings[i - 1].value * year_fraction(rc_fixings[i - 1].date, rc_fixings[i].date, dc);
        pillars.push_back({rc_fixings[i].date, df});
    }
    // Act/365 keeps pillar times strictly increasing whatever the accrual convention.
    return Curve(rc_fixings.front().date, CurveRole::discounting(), std::move(pillars), DayCount::Act365Fixed);
}

double csa_discount_pv(double payoff, CivilDate payment, CivilDate t, const Curve& rc_curve) {
    if (rc_curve.role().kind != CurveKind::Discounting) {
        throw ConfigurationError("CSA discounting needs a discounting curve, got " + rc_curve.role().to_string());
    }
    if (payment < t) throw OrderingError("payment " + payment.iso() + " precedes valuation " + t.iso());
    // Dividing by the accrual factor keeps the one-period case exact (104 at 4% gives 100).
    return payoff / (rc_curve.discount(t) / rc_curve.discount(payment));
}

double funding_discount_pv(double payoff, CivilDate payment, CivilDate t, const FundingSpec& funding,
                           const CurveSet& curves, DayCount dc) {
    if (std::holds_alternative<CsaFunding>(funding)) return csa_discount_pv(payoff, payment, t, curves.discount());
    const auto& spec = std::get<UnsecuredFunding>(funding);
    if (!std::isfinite(spec.spread)) throw DomainError("funding spread must be finite");
    if (payment < t) throw OrderingError("payment " + payment.iso() + " precedes valuation " + t.iso());
    const Curve& curve = curves.get(spec.curve);

    std::vector<CivilDate> grid{t};
    for (const auto& p : curve.pillars()) {
        if (p.date > t && p.date < payment) grid.push_back(p.date);
    }
    if (payment > t) grid.push_back(payment);
    double growth = 1.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        // 1 + (F + spread) * tau, with F * tau taken straight from the discount ratio.
        const double tau = year_fraction(grid[i - 1], grid[i], dc);
        growth *= curve.discount(grid[i - 1]) / curve.discount(grid[i]) + spec.spread * tau;
    }
    return payoff / growth;
}

void write_collateral_ledger(std::ostream& out, const CollateralAccount& a) {
    out << "date,rc_fixing_pct,accrued,transfer,balance\n";
    for (std::size_t i = 0; i < a.dates.size(); ++i) {
        out << a.dates[i].iso() << ',' << text::format_fixed(a.rc_fixings[i] * 100.0, 6) << ','
            << text::format_fixed(a.accrued[i], 6) << ',' << text::format_fixed(a.transfers[i], 6) << ','
            << text::format_fixed(a.balances[i], 6) << '\n';
    }
}

}  // namespace mcurve
