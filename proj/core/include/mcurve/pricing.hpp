#pragma once

#include <iosfwd>
#include <utility>
#include <variant>
#include <vector>

#include "mcurve/calendar.hpp"
#include "mcurve/curve.hpp"
#include "mcurve/daycount.hpp"
#include "mcurve/schedule.hpp"

namespace mcurve {

struct FixedCoupon {
    double rate = 0.0;
};

struct FloatingIndex {
    Period tenor;
    /// Added to every projected forward (basis-swap spread leg).
    double spread = 0.0;
};

/// One leg of a swap. `sign` is +1 for a leg received, -1 for a leg paid.
struct SwapLeg {
    Schedule schedule;
    std::variant<FixedCoupon, FloatingIndex> index;
    DayCount day_count = DayCount::Act360;
    double notional = 1.0;
    int sign = +1;

    bool is_fixed() const noexcept { return std::holds_alternative<FixedCoupon>(index); }
};

SwapLeg make_fixed_leg(Schedule schedule, double rate, DayCount dc, double notional = 1.0, int sign = +1);

/// Throws ConfigurationError when the schedule frequency differs from the index tenor.
/// Overnight legs are exempt: their coupons compound the daily fixings over any accrual period.
SwapLeg make_floating_leg(Schedule schedule, Period tenor, DayCount dc, double notional = 1.0, int sign = +1,
                          double spread = 0.0);

/// sign * N * sum_i P_d(T_i) * (F_i + spread) * tau_i, with F_i the simple forward of the
/// forwarding curve over each accrual period.
/// Throws ConfigurationError when the leg is fixed or the curve roles do not fit its index.
double float_leg_pv(const SwapLeg& leg, const Curve& forwarding, const Curve& discounting);

/// N * sum_i P_d(T_i) * tau_i. Throws ConfigurationError for a floating leg.
double fixed_leg_annuity(const SwapLeg& leg, const Curve& discounting);

/// sign * rate * annuity.
double fixed_leg_pv(const SwapLeg& leg, const Curve& discounting);

/// Market conventions for swap construction. Defaults are the EUR money-market ones.
struct SwapConventions {
    Calendar calendar = Calendar::target();
    int spot_lag = 2;
    BusinessDayConvention bdc = BusinessDayConvention::ModifiedFollowing;
    Period fixed_frequency{1, TimeUnit::Years};
    DayCount fixed_day_count = DayCount::Act360;
    DayCount float_day_count = DayCount::Act360;
};

/// asof + spot_lag business days.
CivilDate spot_date(CivilDate asof, const SwapConventions& conv);

/// Floating schedule for a tenor: the tenor itself, or the fixed frequency for overnight legs.
Schedule floating_schedule(CivilDate start, CivilDate end, const Period& tenor, const SwapConventions& conv);
Schedule fixed_schedule(CivilDate start, CivilDate end, const SwapConventions& conv);

/// Par rate of a swap over [start, end]: floating PV over fixed-leg annuity.
/// Throws CoverageError if `end` lies beyond the last pillar of either curve.
double forward_par_rate(CivilDate start, CivilDate end, const Period& tenor, const Curve& forwarding,
                        const Curve& discounting, const SwapConventions& conv);

/// Spot-starting par rate; the swap runs from spot to spot + maturity (unadjusted end).
double swap_par_rate(const Period& tenor, const Period& maturity, const Curve& forwarding, const Curve& discounting,
                     const SwapConventions& conv);

/// Whose schedule pays the basis spread in the added-spread formulation.
enum class SpreadAnnuity {
    ShortLeg,  ///< the shorter-tenor floating leg's schedule and day count
    FixedLeg,  ///< the fixed-leg schedule and day count shared with the par rates
};

struct BasisSpread {
    /// par(long) - par(short): the quoting convention.
    double par_difference = 0.0;
    /// s such that PV(short leg + s) = PV(long leg), solved by root finding.
    double added_spread = 0.0;
};

/// Spread between the long-tenor and short-tenor swaps of the same maturity. Either tenor may be
/// overnight, which forwards off the discounting curve. Antisymmetric in the tenor pair.
BasisSpread basis_swap_spread(const Period& short_tenor, const Period& long_tenor, const Period& maturity,
                              const CurveSet& curves, const SwapConventions& conv,
                              SpreadAnnuity annuity = SpreadAnnuity::ShortLeg);

struct BasisMatrix {
    std::vector<Period> maturities;
    std::vector<std::pair<Period, Period>> pairs;
    /// values[row = maturity][column = pair], as rate fractions (par difference).
    std::vector<std::vector<double>> values;
};

BasisMatrix basis_matrix(const std::vector<Period>& maturities, const std::vector<std::pair<Period, Period>>& pairs,
                         const CurveSet& curves, const SwapConventions& conv);

/// `maturity,<short>/<long>,...` with spreads in basis points to 4 decimals.
void write_basis_matrix(std::ostream& out, const BasisMatrix& m);

}  // namespace mcurve
