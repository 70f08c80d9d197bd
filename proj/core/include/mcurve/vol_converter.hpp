#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "mcurve/curve.hpp"
#include "mcurve/date.hpp"
#include "mcurve/pricing.hpp"

namespace mcurve {

double normal_cdf(double x);

/// Payer plus receiver swaption struck at the forward: 2*A*F*(2*Phi(vol*sqrt(T)/2) - 1).
/// Throws DomainError for negative vol, non-positive expiry or annuity.
double black_atm_straddle_premium(double forward_rate, double vol, double expiry, double annuity);

/// Inverse of black_atm_straddle_premium in vol, by bisection to the resolution of a double.
/// Throws InversionError unless 0 <= premium < 2*A*F.
double implied_vol_from_premium(double premium, double forward_rate, double expiry, double annuity);

/// factor * forward premium. Throws DomainError unless factor is in (0, 1].
double spot_from_forward_premium(double forward_premium, double discount_to_expiry);

enum class GridKind { ForwardPremium, SpotPremium, Volatility };

std::string_view to_string(GridKind k);
GridKind parse_grid_kind(std::string_view text);

/// Expiry x swap-tenor surface. Premia are fractions of notional, vols fractions.
struct SwaptionGrid {
    GridKind kind = GridKind::ForwardPremium;
    std::vector<Period> expiries;
    std::vector<Period> tenors;
    /// values[expiry][tenor]
    std::vector<std::vector<double>> values;
};

/// `# kind=<kind>` line, header `expiry,<tenor>,...`, one row per expiry. Premia are in basis
/// points of notional and vols in percent in the file. Expiry labels may carry a trailing "Opt".
/// Throws ParseError.
SwaptionGrid read_swaption_grid(std::istream& in);
void write_swaption_grid(std::ostream& out, const SwaptionGrid& g);

/// Forward swap rate and annuities of the swap underlying an expiry x tenor swaption.
struct SwaptionUnderlying {
    CivilDate expiry;
    double expiry_time = 0.0;
    double forward_rate = 0.0;
    double spot_annuity = 0.0;
    double discount_to_expiry = 1.0;

    /// Annuity as seen at expiry, spot annuity / P(expiry).
    double forward_annuity() const { return spot_annuity / discount_to_expiry; }
};

/// Expiry = spot + expiry period rolled; the swap starts there and runs `tenor` on the forwarding
/// curve's index, discounted on `discounting`. Expiry time is ACT/365 from the curve as-of.
SwaptionUnderlying swaption_underlying(const Period& expiry, const Period& tenor, const Period& index,
                                       const Curve& forwarding, const Curve& discounting,
                                       const SwapConventions& conv = {});

struct GridConversion {
    SwaptionGrid spot_premia;
    SwaptionGrid vols;
};

/// Spot premia and implied vols of a forward-premium grid under one discounting curve.
/// Throws ConfigurationError if the grid is not forward premia, InversionError per cell.
GridConversion convert_forward_premia(const SwaptionGrid& forward, const Period& index, const Curve& forwarding,
                                      const Curve& discounting, const SwapConventions& conv = {});

}  // namespace mcurve
