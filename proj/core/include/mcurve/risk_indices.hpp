#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mcurve/date.hpp"
#include "mcurve/market_data.hpp"

namespace mcurve {

/// 5Y CDS spreads of the contributor banks on one date, as rate fractions.
struct PanelQuotes {
    CivilDate date;
    std::map<std::string, double> spreads;
};

/// CDS quotes of a quote set keyed by bank.
PanelQuotes panel_from_quotes(const QuoteSet& q);

struct IndexPoint {
    CivilDate date;
    double value = 0.0;
    std::size_t contributors = 0;
};

/// Number of quotes removed from each tail: round(tail * n), halves rounded up.
std::size_t trim_count(std::size_t n, double tail_fraction);

/// Mean of the panel after dropping trim_count quotes from each end of the sorted spreads.
/// Throws DomainError unless tail_fraction is in [0, 0.5), InsufficientDataError with fewer
/// than 3 quotes or nothing left after trimming.
IndexPoint trimmed_mean_index(const PanelQuotes& p, double tail_fraction = 0.15);

/// Deposit-facility holdings plus current-account holdings in excess of required reserves.
IndexPoint liquidity_surplus_index(const EcbSnapshot& s);

struct CorridorCheck {
    bool inside = true;
    std::string detail;
};

/// deposit facility rate <= Eonia <= marginal lending rate, boundaries admitted.
CorridorCheck corridor_check(const EcbSnapshot& s);

/// Trailing mean over `window` observations; the first window-1 dates are omitted and a
/// window longer than the series yields nothing. Throws DomainError for window 0.
DatedSeries moving_average(const DatedSeries& series, std::size_t window);

/// `date,value,contributors` with value multiplied by `scale`.
void write_index_series(std::ostream& out, const std::vector<IndexPoint>& points, double scale = 1.0,
                        int decimals = 6);

}  // namespace mcurve
