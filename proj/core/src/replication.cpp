#include "mcurve/replication.hpp"

#include <algorithm>
#include <ostream>
#include <tuple>

#include "mcurve/calendar.hpp"
#include "mcurve/errors.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

double implied_forward(double r_short, double tau1, double r_long, double tau2, double tau12) {
    if (!(tau12 > 0.0)) throw OrderingError("forward period has no accrual");
    return ((1.0 + r_long * tau2) / (1.0 + r_short * tau1) - 1.0) / tau12;
}

namespace {

double dated_forward(double r_short, CivilDate T1, double r_long, CivilDate T2, CivilDate t, DayCount dc) {
    if (!(t < T1 && T1 < T2)) {
        throw OrderingError("need t < T1 < T2, got " + t.iso() + ", " + T1.iso() + ", " + T2.iso());
    }
    return implied_forward(r_short, year_fraction(t, T1, dc), r_long, year_fraction(t, T2, dc),
                           year_fraction(T1, T2, dc));
}

}  // namespace

double implied_forward_from_deposits(double r_short, CivilDate T1, double r_long, CivilDate T2, CivilDate t,
                                     DayCount dc) {
    return dated_forward(r_short, T1, r_long, T2, t, dc);
}

double implied_forward_from_ois(double r_short, CivilDate T1, double r_long, CivilDate T2, CivilDate t, DayCount dc) {
    return dated_forward(r_short, T1, r_long, T2, t, dc);
}

std::string_view to_string(FraPanel p) { return p == FraPanel::Eonia ? "eonia" : "euribor"; }

std::vector<ReplicationRow> replication_report(const QuoteSet& q, const SwapConventions& conv) {
    std::vector<ReplicationRow> rows;
    if (!q.asof()) return rows;
    const CivilDate spot = spot_date(*q.asof(), conv);

    for (const Quote* fra : q.of_kind(QuoteKind::Fra)) {
        const FraPeriod p = FraPeriod::parse(fra->id.key);
        ReplicationRow row;
        row.key = fra->id.key;
        row.tenor = fra->underlying_tenor().value_or(Period{*p.end.months() - *p.start.months(), TimeUnit::Months});
        row.panel = row.tenor.is_overnight() ? FraPanel::Eonia : FraPanel::Euribor;
        row.start = add_tenor(spot, p.start, conv.calendar, conv.bdc);
        row.end = add_tenor(spot, p.end, conv.calendar, conv.bdc);
        row.quote = fra->value;

        const QuoteKind leg = row.panel == FraPanel::Eonia ? QuoteKind::Ois : QuoteKind::Deposit;
        const Quote* short_leg = q.find(leg, p.start.to_string());
        const Quote* long_leg = q.find(leg, p.end.to_string());
        if (!short_leg || !long_leg) {
            row.error = "missing " + std::string(to_code(leg)) + " " + (short_leg ? p.end : p.start).to_string() +
                        " quote for FRA " + row.key;
        } else {
            row.replica = dated_forward(short_leg->value, row.start, long_leg->value, row.end, spot,
                                        conv.float_day_count);
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const ReplicationRow& a, const ReplicationRow& b) {
        return std::tie(a.panel, a.tenor, a.start, a.end) < std::tie(b.panel, b.tenor, b.start, b.end);
    });
    return rows;
}

void write_replication_report(std::ostream& out, const std::vector<ReplicationRow>& rows) {
    out << "key,tenor,quote_pct,replica_pct,diff_bps\n";
    for (const auto& r : rows) {
        if (!r.ok()) continue;
        out << r.key << ',' << r.tenor.to_string() << ',' << text::format_fixed(r.quote * 100.0, 4) << ','
            << text::format_fixed(r.replica * 100.0, 4) << ',' << text::format_fixed(r.diff_bps(), 1) << '\n';
    }
}

BasisSeries basis_series(const NamedSeries& long_rate, const NamedSeries& short_rate) {
    BasisSeries out;
    auto l = long_rate.values.begin();
    auto s = short_rate.values.begin();
    while (l != long_rate.values.end() || s != short_rate.values.end()) {
        if (s == short_rate.values.end() || (l != long_rate.values.end() && l->first < s->first)) {
            ++out.dropped_long_only;
            ++l;
        } else if (l == long_rate.values.end() || s->first < l->first) {
            ++out.dropped_short_only;
            ++s;
        } else {
            out.points.push_back({l->first, long_rate.key, short_rate.key, l->second - s->second});
            ++l;
            ++s;
        }
    }
    return out;
}

}  // namespace mcurve
