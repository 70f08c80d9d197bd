#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "mcurve/curve.hpp"
#include "mcurve/date.hpp"
#include "mcurve/daycount.hpp"

namespace mcurve {

struct MarginationStep {
    double accrued = 0.0;
    double transfer = 0.0;
};

/// Accrues the previous balance at the collateral rate and re-targets it to `target_npv`.
MarginationStep margination_step(double prev_balance, double rc, double dtau, double target_npv);

/// Collateral ledger of one deal. Entry i holds the fixing observed at dates[i] (it accrues
/// over the next period), the balance accrued into dates[i], the transfer, and the balance after it.
struct CollateralAccount {
    DayCount day_count = DayCount::Act360;
    std::vector<CivilDate> dates;
    std::vector<double> rc_fixings;
    std::vector<double> accrued;
    std::vector<double> transfers;
    std::vector<double> balances;

    double initial_balance() const { return balances.front(); }
};

/// Perfect collateralisation of an NPV path. Both series must share the same strictly
/// increasing dates (AlignmentError otherwise).
CollateralAccount simulate_margination(const DatedSeries& npv_path, const DatedSeries& rc_fixings,
                                       DayCount dc = DayCount::Act360);

/// NPV of a single payoff at the last date, rolled back through the fixings:
/// V_n = payoff, V_{i-1} = V_i / (1 + R_c(T_{i-1}) * dT_i).
DatedSeries deterministic_npv_path(double payoff, const DatedSeries& rc_fixings, DayCount dc = DayCount::Act360);

/// Discounting curve from per-period collateral fixings, with pillars at every date after the first.
Curve collateral_curve(const DatedSeries& rc_fixings, DayCount dc = DayCount::Act360);

/// payoff * P_d(t, T). Throws ConfigurationError unless `rc_curve` is a discounting curve.
double csa_discount_pv(double payoff, CivilDate payment, CivilDate t, const Curve& rc_curve);

/// Collateralised: discount on the CSA (discounting) curve.
struct CsaFunding {};
/// Uncollateralised: borrow on a money-market curve plus a spread.
struct UnsecuredFunding {
    std::string curve;
    double spread = 0.0;
};
using FundingSpec = std::variant<CsaFunding, UnsecuredFunding>;

/// payoff / prod_i (1 + (F_i + spread) * tau_i) over the funding curve's pillar grid between
/// t and the payment date. Throws ConfigurationError for an unknown curve, DomainError for a
/// non-finite spread.
double funding_discount_pv(double payoff, CivilDate payment, CivilDate t, const FundingSpec& funding,
                           const CurveSet& curves, DayCount dc = DayCount::Act360);

/// `date,rc_fixing_pct,accrued,transfer,balance`.
void write_collateral_ledger(std::ostream& out, const CollateralAccount& account);

}  // namespace mcurve
