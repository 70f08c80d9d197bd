#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mcurve/date.hpp"
#include "mcurve/daycount.hpp"
#include "mcurve/market_data.hpp"
#include "mcurve/pricing.hpp"

namespace mcurve {

/// Forward F over [tau1, tau2] implied by two simple rates from a common start:
/// (1 + r_short*tau1)(1 + F*tau12) = 1 + r_long*tau2. Throws OrderingError if tau12 <= 0.
double implied_forward(double r_short, double tau1, double r_long, double tau2, double tau12);

/// Euribor forward from two deposits struck at `t`. Requires t < T1 < T2 (OrderingError).
double implied_forward_from_deposits(double r_short, CivilDate T1, double r_long, CivilDate T2, CivilDate t,
                                     DayCount dc = DayCount::Act360);

/// Eonia forward from two single-coupon OIS struck at `t`. Same algebra as the deposit case.
double implied_forward_from_ois(double r_short, CivilDate T1, double r_long, CivilDate T2, CivilDate t,
                                DayCount dc = DayCount::Act360);

enum class FraPanel { Eonia, Euribor };

std::string_view to_string(FraPanel p);

struct ReplicationRow {
    FraPanel panel = FraPanel::Euribor;
    std::string key;
    Period tenor;
    CivilDate start;
    CivilDate end;
    double quote = 0.0;
    double replica = 0.0;
    /// Non-empty when a leg quote was missing; quote/replica are then meaningless.
    std::string error;

    bool ok() const noexcept { return error.empty(); }
    /// (replica - quote) in basis points.
    double diff_bps() const noexcept { return (replica - quote) * 1e4; }
};

/// One row per FRA quote, ordered by panel, tenor, start, end. Overnight-indexed FRAs replicate
/// from OIS quotes, all others from deposits. A blank FRA tenor is the length of its period.
/// Dates: spot + n months, rolled with the convention's calendar and business-day rule.
std::vector<ReplicationRow> replication_report(const QuoteSet& q, const SwapConventions& conv = {});

/// `key,tenor,quote_pct,replica_pct,diff_bps` for rows without errors.
void write_replication_report(std::ostream& out, const std::vector<ReplicationRow>& rows);

struct BasisPoint {
    CivilDate date;
    std::string long_key;
    std::string short_key;
    double spread = 0.0;
};

struct NamedSeries {
    std::string key;
    std::map<CivilDate, double> values;
};

struct BasisSeries {
    std::vector<BasisPoint> points;
    std::size_t dropped_long_only = 0;
    std::size_t dropped_short_only = 0;
};

/// long - short on the shared dates.
BasisSeries basis_series(const NamedSeries& long_rate, const NamedSeries& short_rate);

}  // namespace mcurve
