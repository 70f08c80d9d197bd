#include "mcurve/risk_indices.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "mcurve/errors.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

PanelQuotes panel_from_quotes(const QuoteSet& q) {
    PanelQuotes p;
    if (q.asof()) p.date = *q.asof();
    for (const Quote* c : q.of_kind(QuoteKind::Cds)) p.spreads.emplace(c->id.key, c->value);
    return p;
}

std::size_t trim_count(std::size_t n, double tail_fraction) {
    // The epsilon keeps products such as 0.15 * 30 = 4.4999999... rounding like their decimal value.
    return std::size_t(std::floor(tail_fraction * double(n) + 0.5 + 1e-9));
}

IndexPoint trimmed_mean_index(const PanelQuotes& p, double tail_fraction) {
    if (!(tail_fraction >= 0.0 && tail_fraction < 0.5)) throw DomainError("tail fraction must lie in [0, 0.5)");
    const std::size_t n = p.spreads.size();
    if (n < 3) throw InsufficientDataError("trimmed mean on " + p.date.iso() + " needs at least 3 quotes, got " + std::to_string(n));
    const std::size_t k = trim_count(n, tail_fraction);
    if (2 * k >= n) throw InsufficientDataError("trimming " + std::to_string(k) + " per tail leaves no quotes");

    std::vector<double> v;
    v.reserve(n);
    for (const auto& [bank, spread] : p.spreads) v.push_back(spread);
    std::sort(v.begin(), v.end());
    // Averaging offsets from the lowest retained quote keeps tied panels exact, and the clamp
    // keeps rounding from pushing the mean past the highest retained quote.
    const std::size_t m = n - 2 * k;
    double offsets = 0.0;
    for (std::size_t i = k; i < n - k; ++i) offsets += v[i] - v[k];
    return {p.date, std::min(v[k] + offsets / double(m), v[n - k - 1]), m};
}

IndexPoint liquidity_surplus_index(const EcbSnapshot& s) {
    const double excess = std::max(s.current_account_amount - s.required_reserves, 0.0);
    return {s.date, s.deposit_facility_amount + excess, 1};
}

CorridorCheck corridor_check(const EcbSnapshot& s) {
    auto pct = [](double r) { return text::format_general(r * 100.0, 10) + "%"; };
    if (s.eonia_fixing < s.deposit_facility_rate) {
        return {false, s.date.iso() + ": Eonia " + pct(s.eonia_fixing) + " below deposit facility " +
                           pct(s.deposit_facility_rate)};
    }
    if (s.eonia_fixing > s.marginal_lending_rate) {
        return {false, s.date.iso() + ": Eonia " + pct(s.eonia_fixing) + " above marginal lending " +
                           pct(s.marginal_lending_rate)};
    }
    return {};
}

DatedSeries moving_average(const DatedSeries& series, std::size_t window) {
    if (window == 0) throw DomainError("moving-average window must be at least 1");
    DatedSeries out;
    if (window > series.size()) return out;
    out.reserve(series.size() - window + 1);
    for (std::size_t i = window - 1; i < series.size(); ++i) {
        // Summed afresh per window so rounding does not drift along long series.
        double sum = 0.0;
        for (std::size_t j = i + 1 - window; j <= i; ++j) sum += series[j].value;
        out.push_back({series[i].date, sum / double(window)});
    }
    return out;
}

void write_index_series(std::ostream& out, const std::vector<IndexPoint>& points, double scale, int decimals) {
    out << "date,value,contributors\n";
    for (const auto& p : points) {
        out << p.date.iso() << ',' << text::format_fixed(p.value * scale, decimals) << ',' << p.contributors << '\n';
    }
}

}  // namespace mcurve
