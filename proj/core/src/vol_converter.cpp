#include "mcurve/vol_converter.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>

#include "mcurve/calendar.hpp"
#include "mcurve/errors.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

namespace {

// 2*Phi(x) - 1 without the cancellation near zero.
double centered_mass(double x) { return std::erf(x / std::numbers::sqrt2); }

}  // namespace

double black_atm_straddle_premium(double forward_rate, double vol, double expiry, double annuity) {
    if (!(vol >= 0.0)) throw DomainError("volatility must be non-negative");
    if (!(expiry > 0.0)) throw DomainError("expiry must be positive");
    if (!(annuity > 0.0)) throw DomainError("annuity must be positive");
    return 2.0 * annuity * forward_rate * centered_mass(vol * std::sqrt(expiry) / 2.0);
}

double implied_vol_from_premium(double premium, double forward_rate, double expiry, double annuity) {
    if (!(expiry > 0.0) || !(annuity > 0.0) || !(forward_rate > 0.0)) {
        throw InversionError("inversion needs positive forward, expiry and annuity");
    }
    const double supremum = 2.0 * annuity * forward_rate;
    if (!(premium >= 0.0) || !(premium < supremum)) {
        throw InversionError("premium " + text::format_general(premium, 10) + " outside [0, " +
                             text::format_general(supremum, 10) + ")");
    }
    if (premium == 0.0) return 0.0;

    auto price = [&](double v) { return black_atm_straddle_premium(forward_rate, v, expiry, annuity); };
    double lo = 0.0;
    double hi = 1.0;
    while (price(hi) < premium) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) throw InversionError("premium too close to its supremum to invert");
    }
    for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (price(mid) < premium ? lo : hi) = mid;
    }
    return std::abs(price(lo) - premium) <= std::abs(price(hi) - premium) ? lo : hi;
}

double spot_from_forward_premium(double forward_premium, double discount_to_expiry) {
    if (!(discount_to_expiry > 0.0 && discount_to_expiry <= 1.0)) {
        throw DomainError("discount factor to expiry must lie in (0, 1]");
    }
    return forward_premium * discount_to_expiry;
}

std::string_view to_string(GridKind k) {
    switch (k) {
        case GridKind::ForwardPremium: return "forward_premium";
        case GridKind::SpotPremium: return "spot_premium";
        case GridKind::Volatility: return "volatility";
    }
    return {};
}

GridKind parse_grid_kind(std::string_view text) {
    const std::string t = text::trim(text);
    for (GridKind k : {GridKind::ForwardPremium, GridKind::SpotPremium, GridKind::Volatility}) {
        if (t == to_string(k)) return k;
    }
    throw ParseError(0, "unknown grid kind '" + t + "'");
}

namespace {

double file_scale(GridKind k) { return k == GridKind::Volatility ? 1e-2 : 1e-4; }

Period parse_expiry(std::string_view label) {
    std::string t = text::upper(text::trim(label));
    if (t.ends_with("OPT")) t = text::trim(std::string_view(t).substr(0, t.size() - 3));
    return Period::parse(t);
}

}  // namespace

SwaptionGrid read_swaption_grid(std::istream& in) {
    SwaptionGrid g;
    bool have_kind = false;
    bool have_header = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = text::trim(line);
        if (t.empty()) continue;
        try {
            if (t.front() == '#') {
                for (const auto& token : text::split(t.substr(1), ' ')) {
                    if (token.starts_with("kind=")) {
                        g.kind = parse_grid_kind(token.substr(5));
                        have_kind = true;
                    }
                }
                continue;
            }
            const auto fields = text::split(t, ',');
            if (!have_header) {
                if (fields.size() < 2 || text::trim(fields[0]) != "expiry") {
                    throw ParseError(0, "expected header 'expiry,<tenor>,...'");
                }
                for (std::size_t i = 1; i < fields.size(); ++i) g.tenors.push_back(Period::parse(text::trim(fields[i])));
                have_header = true;
                continue;
            }
            if (fields.size() != g.tenors.size() + 1) {
                throw ParseError(0, "expected " + std::to_string(g.tenors.size() + 1) + " fields");
            }
            g.expiries.push_back(parse_expiry(fields[0]));
            auto& row = g.values.emplace_back();
            for (std::size_t i = 1; i < fields.size(); ++i) row.push_back(text::parse_double(fields[i]) * file_scale(g.kind));
        } catch (const ParseError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_kind) throw ParseError(0, "grid lacks a '# kind=...' line");
    if (!have_header) throw ParseError(0, "grid lacks a header row");
    return g;
}

void write_swaption_grid(std::ostream& out, const SwaptionGrid& g) {
    out << "# kind=" << to_string(g.kind) << '\n';
    out << "expiry";
    for (const auto& t : g.tenors) out << ',' << t.to_string();
    out << '\n';
    const int decimals = g.kind == GridKind::Volatility ? 4 : 3;
    for (std::size_t i = 0; i < g.expiries.size(); ++i) {
        out << g.expiries[i].to_string();
        for (double v : g.values[i]) out << ',' << text::format_fixed(v / file_scale(g.kind), decimals);
        out << '\n';
    }
}

SwaptionUnderlying swaption_underlying(const Period& expiry, const Period& tenor, const Period& index,
                                       const Curve& forwarding, const Curve& discounting,
                                       const SwapConventions& conv) {
    const CivilDate asof = discounting.asof();
    const CivilDate spot = spot_date(asof, conv);
    SwaptionUnderlying u;
    u.expiry = add_tenor(spot, expiry, conv.calendar, conv.bdc);
    u.expiry_time = year_fraction(asof, u.expiry, DayCount::Act365Fixed);
    const CivilDate end = add_tenor(u.expiry, tenor, conv.calendar, BusinessDayConvention::Unadjusted);
    u.forward_rate = forward_par_rate(u.expiry, end, index, forwarding, discounting, conv);
    u.spot_annuity = fixed_leg_annuity(make_fixed_leg(fixed_schedule(u.expiry, end, conv), 0.0, conv.fixed_day_count),
                                       discounting);
    u.discount_to_expiry = discounting.discount(u.expiry);
    return u;
}

GridConversion convert_forward_premia(const SwaptionGrid& forward, const Period& index, const Curve& forwarding,
                                      const Curve& discounting, const SwapConventions& conv) {
    if (forward.kind != GridKind::ForwardPremium) {
        throw ConfigurationError("expected a forward-premium grid, got " + std::string(to_string(forward.kind)));
    }
    GridConversion out{{GridKind::SpotPremium, forward.expiries, forward.tenors, {}},
                       {GridKind::Volatility, forward.expiries, forward.tenors, {}}};
    for (std::size_t i = 0; i < forward.expiries.size(); ++i) {
        auto& spot_row = out.spot_premia.values.emplace_back();
        auto& vol_row = out.vols.values.emplace_back();
        for (std::size_t j = 0; j < forward.tenors.size(); ++j) {
            const auto u = swaption_underlying(forward.expiries[i], forward.tenors[j], index, forwarding, discounting, conv);
            const double premium = forward.values[i][j];
            spot_row.push_back(spot_from_forward_premium(premium, u.discount_to_expiry));
            try {
                vol_row.push_back(implied_vol_from_premium(premium, u.forward_rate, u.expiry_time, u.forward_annuity()));
            } catch (const InversionError& e) {
                throw InversionError(forward.expiries[i].to_string() + "x" + forward.tenors[j].to_string() + ": " + e.what());
            }
        }
    }
    return out;
}

}  // namespace mcurve
