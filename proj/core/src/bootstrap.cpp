#include "mcurve/bootstrap.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>

#include "mcurve/errors.hpp"
#include "mcurve/solver.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

namespace {

constexpr Period kOvernight{1, TimeUnit::Days};

// Approximate maturity, used only to order recipe instruments.
int sort_days(const Quote& q) {
    if (q.id.kind == QuoteKind::Fra) return FraPeriod::parse(q.id.key).end.approximate_days();
    return Period::parse(q.id.key).approximate_days();
}

// Underlying tenor of an FRA: its tenor column, or the length of its accrual period.
Period fra_tenor(const Quote& q) {
    if (auto t = q.underlying_tenor()) return *t;
    const FraPeriod p = FraPeriod::parse(q.id.key);
    return Period{*p.end.months() - *p.start.months(), TimeUnit::Months};
}

bool single_coupon_ois(const InstrumentRef& id) {
    const auto m = Period::parse(id.key).months();
    return !m || *m <= 12;
}

BootstrapRecipe ordered(std::string name, CurveRole target, std::vector<const Quote*> quotes,
                        const SwapConventions& conv) {
    std::stable_sort(quotes.begin(), quotes.end(),
                     [](const Quote* a, const Quote* b) { return sort_days(*a) < sort_days(*b); });
    BootstrapRecipe r{std::move(name), target, {}, conv};
    for (const Quote* q : quotes) r.instruments.push_back(q->id);
    return r;
}

}  // namespace

BootstrapRecipe ois_recipe(const QuoteSet& q, const SwapConventions& conv) {
    return ordered("eonia", CurveRole::discounting(), q.of_kind(QuoteKind::Ois), conv);
}

BootstrapRecipe tenor_recipe(const Period& tenor, const QuoteSet& q, const SwapConventions& conv) {
    std::vector<const Quote*> picked;
    for (const Quote* d : q.of_kind(QuoteKind::Deposit)) {
        if (Period::parse(d->id.key) == tenor) picked.push_back(d);
    }
    for (const Quote* f : q.of_kind(QuoteKind::Fra)) {
        if (fra_tenor(*f) == tenor) picked.push_back(f);
    }
    for (const Quote* s : q.of_kind(QuoteKind::Swap)) {
        if (s->underlying_tenor() == tenor) picked.push_back(s);
    }
    std::string name = "euribor" + tenor.to_string();
    for (char& c : name) c = char(std::tolower(static_cast<unsigned char>(c)));
    return ordered(std::move(name), CurveRole::forwarding(tenor), std::move(picked), conv);
}

BootstrapRecipe recipe_by_name(std::string_view name, const QuoteSet& q, const SwapConventions& conv) {
    const std::string n = text::upper(text::trim(name));
    if (n == "EONIA" || n == "OIS") return ois_recipe(q, conv);
    constexpr std::string_view prefix = "EURIBOR";
    if (n.starts_with(prefix) && n.size() > prefix.size()) {
        try {
            return tenor_recipe(Period::parse(std::string_view(n).substr(prefix.size())), q, conv);
        } catch (const ParseError&) {
        }
    }
    throw ConfigurationError("unknown bootstrap recipe '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

double CalibrationInstrument::implied_rate(const Curve& target, const Curve* discounting,
                                           const SwapConventions& conv) const {
    switch (id.kind) {
        case QuoteKind::Deposit:
        case QuoteKind::Fra: return simple_forward(target, start, maturity, conv.float_day_count);
        case QuoteKind::Ois:
            if (single_coupon_ois(id)) return simple_forward(target, start, maturity, conv.fixed_day_count);
            return forward_par_rate(start, unadjusted_end, kOvernight, target, target, conv);
        case QuoteKind::Swap:
            if (!discounting) throw ConfigurationError(id.label() + " needs a discounting curve");
            return forward_par_rate(start, unadjusted_end, index_tenor, target, *discounting, conv);
        default: throw ConfigurationError(id.label() + " is not a curve instrument");
    }
}

std::vector<CalibrationInstrument> calibration_instruments(const QuoteSet& q, const BootstrapRecipe& r) {
    if (!q.asof()) throw ConfigurationError("recipe " + r.name + " applied to an empty quote set");
    const auto& conv = r.conventions;
    const CivilDate spot = spot_date(*q.asof(), conv);
    std::vector<CalibrationInstrument> out;
    for (const auto& id : r.instruments) {
        const Quote& quote = q.at(id);
        CalibrationInstrument inst{id, quote.value, spot, spot, spot, kOvernight};
        try {
        switch (id.kind) {
            case QuoteKind::Deposit:
            case QuoteKind::Ois: {
                const Period p = Period::parse(id.key);
                inst.unadjusted_end = add_tenor(spot, p, conv.calendar, BusinessDayConvention::Unadjusted);
                inst.maturity = add_tenor(spot, p, conv.calendar, conv.bdc);
                if (id.kind == QuoteKind::Deposit) inst.index_tenor = p;
                if (id.kind == QuoteKind::Ois && !single_coupon_ois(id)) {
                    inst.maturity = fixed_schedule(spot, inst.unadjusted_end, conv).end();
                }
                break;
            }
            case QuoteKind::Fra: {
                const FraPeriod p = FraPeriod::parse(id.key);
                inst.start = add_tenor(spot, p.start, conv.calendar, conv.bdc);
                inst.maturity = add_tenor(spot, p.end, conv.calendar, conv.bdc);
                inst.unadjusted_end = add_tenor(spot, p.end, conv.calendar, BusinessDayConvention::Unadjusted);
                inst.index_tenor = fra_tenor(quote);
                break;
            }
            case QuoteKind::Swap: {
                const auto tenor = quote.underlying_tenor();
                inst.index_tenor = tenor ? *tenor : r.target.tenor;
                inst.unadjusted_end = add_tenor(spot, Period::parse(id.key), conv.calendar, BusinessDayConvention::Unadjusted);
                inst.maturity = fixed_schedule(spot, inst.unadjusted_end, conv).end();
                break;
            }
            default: throw ConfigurationError(id.label() + " cannot calibrate a curve");
        }
        } catch (const ScheduleError& e) {
            throw CalibrationError(id.label(), e.what());
        }
        out.push_back(inst);
    }
    return out;
}

namespace {

Curve bootstrap(const QuoteSet& q, const BootstrapRecipe& r, const Curve* discount) {
    const auto instruments = calibration_instruments(q, r);
    const auto& conv = r.conventions;
    const CivilDate asof = *q.asof();
    const CivilDate spot = spot_date(asof, conv);
    const bool self_discounting = r.target.kind == CurveKind::Discounting;

    std::vector<Pillar> pillars;
    // Nothing is quoted over the spot lag: the curve is flat there.
    if (spot > asof) pillars.push_back({spot, 1.0});

    for (const auto& inst : instruments) {
        const bool allowed = self_discounting ? inst.id.kind == QuoteKind::Ois
                                              : inst.id.kind == QuoteKind::Deposit || inst.id.kind == QuoteKind::Fra ||
                                                    inst.id.kind == QuoteKind::Swap;
        if (!allowed) throw CalibrationError(inst.id.label(), "not usable for a " + r.target.to_string() + " curve");
        const CivilDate last = pillars.empty() ? asof : pillars.back().date;
        if (inst.maturity <= last) {
            throw CalibrationError(inst.id.label(), "maturity " + inst.maturity.iso() +
                                                        " overlaps an earlier instrument ending " + last.iso());
        }

        const Curve partial(asof, r.target, pillars, conv.float_day_count);
        const bool single_period = inst.id.kind == QuoteKind::Deposit || inst.id.kind == QuoteKind::Fra ||
                                   (inst.id.kind == QuoteKind::Ois && single_coupon_ois(inst.id));
        if (single_period && inst.start <= last) {
            const DayCount dc = inst.id.kind == QuoteKind::Ois ? conv.fixed_day_count : conv.float_day_count;
            const double df = partial.discount(inst.start) / (1.0 + inst.quote * year_fraction(inst.start, inst.maturity, dc));
            if (!(df > 0.0) || !std::isfinite(df)) throw CalibrationError(inst.id.label(), "implies a non-positive discount factor");
            pillars.push_back({inst.maturity, df});
            continue;
        }

        const double t = partial.time(inst.maturity);
        auto trial = [&](double zero) {
            auto with = pillars;
            with.push_back({inst.maturity, std::exp(-zero * t)});
            return Curve(asof, r.target, std::move(with), conv.float_day_count);
        };
        auto residual = [&](double zero) {
            const Curve c = trial(zero);
            return inst.implied_rate(c, self_discounting ? &c : discount, conv) - inst.quote;
        };
        const RootSolverOptions options{1e-14, 400, 8};
        // Carrying the previous zero rate forward is exact for flat quotes.
        const double guess = pillars.empty() ? 0.0 : partial.zero_rate(pillars.back().date);
        double zero = guess;
        if (std::abs(residual(guess)) > options.residual_tolerance) {
            std::optional<RootResult> root;
            try {
                root = find_root(residual, {-0.05, 0.50}, options);
            } catch (const DomainError& e) {
                // Bracket expansion walked into degenerate discount factors.
                throw CalibrationError(inst.id.label(), std::string("root not bracketed: ") + e.what());
            }
            if (!root) throw CalibrationError(inst.id.label(), "root not bracketed");
            zero = root->root;
        }
        pillars.push_back({inst.maturity, std::exp(-zero * t)});
    }
    return Curve(asof, r.target, std::move(pillars), conv.float_day_count);
}

}  // namespace

Curve bootstrap_discount(const QuoteSet& q, const BootstrapRecipe& r) {
    if (r.target.kind != CurveKind::Discounting) {
        throw ConfigurationError("recipe " + r.name + " does not build a discounting curve");
    }
    return bootstrap(q, r, nullptr);
}

Curve bootstrap_forward(const Period& tenor, const QuoteSet& q, const Curve& discount, const BootstrapRecipe& r) {
    if (!(r.target == CurveRole::forwarding(tenor))) {
        throw ConfigurationError("recipe " + r.name + " builds " + r.target.to_string() + ", not forwarding:" +
                                 tenor.to_string());
    }
    if (discount.role().kind != CurveKind::Discounting) {
        throw ConfigurationError("forwarding bootstrap needs a discounting curve, got " + discount.role().to_string());
    }
    if (!q.asof() || discount.asof() != *q.asof()) {
        throw ConfigurationError("discount curve as-of " + discount.asof().iso() + " does not match the quotes");
    }
    return bootstrap(q, r, &discount);
}

}  // namespace mcurve
