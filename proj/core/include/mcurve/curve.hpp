#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mcurve/date.hpp"
#include "mcurve/daycount.hpp"

namespace mcurve {

enum class CurveKind { Discounting, Forwarding };

/// What a curve is used for. Forwarding curves are tied to one index tenor.
struct CurveRole {
    CurveKind kind = CurveKind::Discounting;
    Period tenor{};

    static CurveRole discounting() { return {CurveKind::Discounting, Period{}}; }
    static CurveRole forwarding(Period tenor) { return {CurveKind::Forwarding, tenor}; }

    /// "discounting" or "forwarding:6M".
    std::string to_string() const;
    /// Throws ParseError.
    static CurveRole parse(std::string_view text);

    friend bool operator==(const CurveRole& a, const CurveRole& b) {
        return a.kind == b.kind && (a.kind == CurveKind::Discounting || a.tenor == b.tenor);
    }
};

struct Pillar {
    CivilDate date;
    double discount = 1.0;

    friend bool operator==(const Pillar&, const Pillar&) = default;
};

/// Discount-factor term structure anchored at P(asof, asof) = 1.
///
/// Between pillars ln P is linear in time (piecewise-flat instantaneous forwards), time being
/// the curve's day-count fraction from the as-of date. Beyond the last pillar the last
/// continuously-compounded zero rate is held flat. Forwarding curves hold pseudo-discount factors
/// so the same forward formula serves both roles.
class Curve {
public:
    /// Throws OrderingError unless pillar dates are strictly increasing and after `asof`;
    /// DomainError unless every factor is finite and positive.
    Curve(CivilDate asof, CurveRole role, std::vector<Pillar> pillars, DayCount day_count = DayCount::Act365Fixed);

    CivilDate asof() const noexcept { return asof_; }
    const CurveRole& role() const noexcept { return role_; }
    const std::vector<Pillar>& pillars() const noexcept { return pillars_; }
    DayCount day_count() const noexcept { return day_count_; }

    /// Last pillar date, or the as-of date for an empty curve.
    CivilDate last_date() const noexcept { return pillars_.empty() ? asof_ : pillars_.back().date; }

    /// P(asof, d). Throws OrderingError for d < asof.
    double discount(CivilDate d) const;

    /// Year fraction from the as-of date under the curve's day count.
    double time(CivilDate d) const;

    /// Continuously-compounded zero rate to `d` (0 at the as-of date).
    double zero_rate(CivilDate d) const;

    /// Same pillars under another role.
    Curve with_role(CurveRole role) const;

    friend bool operator==(const Curve&, const Curve&) = default;

private:
    CivilDate asof_;
    CurveRole role_;
    std::vector<Pillar> pillars_;
    DayCount day_count_;
    std::vector<double> times_;
    std::vector<double> log_discounts_;
};

/// Free-function form of Curve::discount.
double discount_factor(const Curve& c, CivilDate d);

/// Simply-compounded forward over [t1, t2]: (P(t1)/P(t2) - 1) / tau(t1, t2).
/// Throws OrderingError unless asof <= t1 < t2.
double simple_forward(const Curve& c, CivilDate t1, CivilDate t2, DayCount dc);

/// Writes `# role=<role> asof=<date>`, a `date,discount_factor` header and one row per pillar
/// with 15 significant digits.
void write_curve(std::ostream& out, const Curve& c);
/// Reads the dump format back (day count ACT/365F unless given). Throws ParseError.
Curve read_curve(std::istream& in, DayCount day_count = DayCount::Act365Fixed);

/// Named curves. The discounting curve is registered as "discounting", forwarding curves as
/// "forwarding:<tenor>"; other names are free-form (funding curves and the like).
class CurveSet {
public:
    void add(const Curve& c);
    void add(std::string name, const Curve& c);

    bool contains(std::string_view name) const;
    /// Throws ConfigurationError if absent.
    const Curve& get(std::string_view name) const;

    const Curve& discount() const;
    /// The overnight tenor forwards off the discounting curve.
    const Curve& forwarding(const Period& tenor) const;

    const std::map<std::string, Curve, std::less<>>& curves() const noexcept { return curves_; }

private:
    std::map<std::string, Curve, std::less<>> curves_;
};

}  // namespace mcurve
