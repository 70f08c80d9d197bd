#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcurve/curve.hpp"
#include "mcurve/market_data.hpp"
#include "mcurve/pricing.hpp"

namespace mcurve {

/// Which quotes build a curve, in pillar order, and under which conventions.
struct BootstrapRecipe {
    std::string name;
    CurveRole target = CurveRole::discounting();
    std::vector<InstrumentRef> instruments;
    SwapConventions conventions;
};

/// OIS quotes of `q`, ordered by maturity, building the discounting curve.
BootstrapRecipe ois_recipe(const QuoteSet& q, const SwapConventions& conv = {});

/// Deposit of the tenor, FRAs and swaps indexed to it, ordered by maturity.
BootstrapRecipe tenor_recipe(const Period& tenor, const QuoteSet& q, const SwapConventions& conv = {});

/// "eonia"/"ois" or "euribor<tenor>" (e.g. "euribor6m"). Throws ConfigurationError for unknown names.
BootstrapRecipe recipe_by_name(std::string_view name, const QuoteSet& q, const SwapConventions& conv = {});

/// A quote turned into the dated instrument it calibrates.
struct CalibrationInstrument {
    InstrumentRef id;
    double quote = 0.0;
    CivilDate start;
    /// Adjusted final date; the curve pillar sits here.
    CivilDate maturity;
    /// Unadjusted end used to generate swap schedules.
    CivilDate unadjusted_end;
    /// Index tenor of FRAs and swaps; overnight for OIS.
    Period index_tenor;

    /// The instrument's rate implied by `target` (and `discounting` for swaps against a
    /// forwarding curve). Uses the recipe conventions.
    double implied_rate(const Curve& target, const Curve* discounting, const SwapConventions& conv) const;
};

/// Dates each recipe instrument. Throws ConfigurationError for missing quotes or unsupported kinds.
std::vector<CalibrationInstrument> calibration_instruments(const QuoteSet& q, const BootstrapRecipe& r);

/// OIS discounting curve. Single-coupon OIS (<= 1Y) are closed form, longer OIS (annual fixed
/// coupons vs. a telescoping floating leg) are solved one pillar at a time.
/// Throws CalibrationError naming the instrument on failure.
Curve bootstrap_discount(const QuoteSet& q, const BootstrapRecipe& r);

/// Forwarding curve of `tenor`: the tenor deposit, then FRAs, then swaps discounted on `discount`.
Curve bootstrap_forward(const Period& tenor, const QuoteSet& q, const Curve& discount, const BootstrapRecipe& r);

}  // namespace mcurve
