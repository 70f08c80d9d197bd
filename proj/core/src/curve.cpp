#include "mcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "mcurve/errors.hpp"
#include "mcurve/text.hpp"

namespace mcurve {

std::string CurveRole::to_string() const {
    if (kind == CurveKind::Discounting) return "discounting";
    return "forwarding:" + tenor.to_string();
}

CurveRole CurveRole::parse(std::string_view text) {
    const std::string t = text::trim(text);
    if (t == "discounting") return discounting();
    constexpr std::string_view prefix = "forwarding:";
    if (t.starts_with(prefix)) return forwarding(Period::parse(std::string_view(t).substr(prefix.size())));
    throw ParseError(0, "unknown curve role '" + t + "'");
}

Curve::Curve(CivilDate asof, CurveRole role, std::vector<Pillar> pillars, DayCount day_count)
    : asof_(asof), role_(role), pillars_(std::move(pillars)), day_count_(day_count) {
    times_.reserve(pillars_.size() + 1);
    log_discounts_.reserve(pillars_.size() + 1);
    times_.push_back(0.0);
    log_discounts_.push_back(0.0);
    CivilDate previous = asof_;
    for (const auto& p : pillars_) {
        if (!(p.date > previous)) {
            throw OrderingError("curve pillar " + p.date.iso() + " does not follow " + previous.iso());
        }
        if (!std::isfinite(p.discount) || p.discount <= 0.0) {
            throw DomainError("curve pillar " + p.date.iso() + " has non-positive discount factor");
        }
        const double t = year_fraction(asof_, p.date, day_count_);
        if (!(t > times_.back())) throw OrderingError("curve pillar " + p.date.iso() + " adds no time under " + mcurve::to_string(day_count_));
        times_.push_back(t);
        log_discounts_.push_back(std::log(p.discount));
        previous = p.date;
    }
}

double Curve::time(CivilDate d) const { return year_fraction(asof_, d, day_count_); }

double Curve::discount(CivilDate d) const {
    if (d < asof_) throw OrderingError("discount date " + d.iso() + " precedes curve as-of " + asof_.iso());
    if (d == asof_) return 1.0;
    for (const auto& p : pillars_) {
        if (p.date == d) return p.discount;
    }
    const double t = time(d);
    if (pillars_.empty()) return 1.0;
    if (t >= times_.back()) return std::exp(log_discounts_.back() * t / times_.back());
    const auto hi = std::size_t(std::upper_bound(times_.begin(), times_.end(), t) - times_.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    return std::exp(log_discounts_[lo] + w * (log_discounts_[hi] - log_discounts_[lo]));
}

double Curve::zero_rate(CivilDate d) const {
    const double t = time(d);
    if (t <= 0.0) return 0.0;
    return -std::log(discount(d)) / t;
}

Curve Curve::with_role(CurveRole role) const {
    Curve out = *this;
    out.role_ = role;
    return out;
}

double discount_factor(const Curve& c, CivilDate d) { return c.discount(d); }

double simple_forward(const Curve& c, CivilDate t1, CivilDate t2, DayCount dc) {
    if (!(t1 < t2)) throw OrderingError("forward start " + t1.iso() + " is not before end " + t2.iso());
    const double tau = year_fraction(t1, t2, dc);
    if (tau <= 0.0) throw OrderingError("forward period " + t1.iso() + " to " + t2.iso() + " has no accrual");
    return (c.discount(t1) / c.discount(t2) - 1.0) / tau;
}

void write_curve(std::ostream& out, const Curve& c) {
    out << "# role=" << c.role().to_string() << " asof=" << c.asof().iso() << '\n';
    out << "date,discount_factor\n";
    for (const auto& p : c.pillars()) out << p.date.iso() << ',' << text::format_general(p.discount, 15) << '\n';
}

Curve read_curve(std::istream& in, DayCount day_count) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<CurveRole> role;
    std::optional<CivilDate> asof;
    bool header = false;
    std::vector<Pillar> pillars;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = text::trim(line);
        if (t.empty()) continue;
        try {
            if (t.front() == '#') {
                for (const auto& token : text::split(t.substr(1), ' ')) {
                    if (token.starts_with("role=")) role = CurveRole::parse(token.substr(5));
                    if (token.starts_with("asof=")) asof = CivilDate::parse(token.substr(5));
                }
                continue;
            }
            if (!header) {
                if (t != "date,discount_factor") throw ParseError(0, "expected header 'date,discount_factor'");
                header = true;
                continue;
            }
            const auto fields = text::split(t, ',');
            if (fields.size() != 2) throw ParseError(0, "expected 2 fields");
            pillars.push_back({CivilDate::parse(text::trim(fields[0])), text::parse_double(fields[1])});
        } catch (const ParseError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!role || !asof) throw ParseError(0, "curve dump lacks '# role=... asof=...' line");
    try {
        return Curve(*asof, *role, std::move(pillars), day_count);
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

void CurveSet::add(const Curve& c) { add(c.role().to_string(), c); }

void CurveSet::add(std::string name, const Curve& c) { curves_.insert_or_assign(std::move(name), c); }

bool CurveSet::contains(std::string_view name) const { return curves_.find(name) != curves_.end(); }

const Curve& CurveSet::get(std::string_view name) const {
    auto it = curves_.find(name);
    if (it == curves_.end()) throw ConfigurationError("no curve named '" + std::string(name) + "'");
    return it->second;
}

const Curve& CurveSet::discount() const { return get("discounting"); }

const Curve& CurveSet::forwarding(const Period& tenor) const {
    if (tenor.is_overnight()) return discount();
    return get(CurveRole::forwarding(tenor).to_string());
}

}  // namespace mcurve
