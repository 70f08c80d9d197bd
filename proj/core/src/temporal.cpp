#include <algorithm>
#include <cctype>

#include "mcurve/calendar.hpp"
#include "mcurve/daycount.hpp"
#include "mcurve/errors.hpp"
#include "mcurve/schedule.hpp"

namespace mcurve {

namespace {

std::string upper(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(char(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Day counts

DayCount parse_day_count(std::string_view text) {
    const auto s = upper(text);
    if (s == "ACT/360" || s == "A360") return DayCount::Act360;
    if (s == "ACT/365F" || s == "ACT/365-FIXED" || s == "ACT/365" || s == "A365F") return DayCount::Act365Fixed;
    if (s == "30E/360" || s == "30/360E") return DayCount::Thirty360E;
    throw ParseError(0, "unknown day count '" + std::string(text) + "'");
}

std::string to_string(DayCount dc) {
    switch (dc) {
        case DayCount::Act360: return "ACT/360";
        case DayCount::Act365Fixed: return "ACT/365F";
        case DayCount::Thirty360E: return "30E/360";
    }
    return {};
}

double year_fraction(CivilDate d1, CivilDate d2, DayCount dc) {
    if (d1 > d2) throw OrderingError("year_fraction: " + d1.iso() + " is after " + d2.iso());
    switch (dc) {
        case DayCount::Act360: return (d2 - d1) / 360.0;
        case DayCount::Act365Fixed: return (d2 - d1) / 365.0;
        case DayCount::Thirty360E: {
            const int day1 = std::min<int>(int(d1.day()), 30);
            const int day2 = std::min<int>(int(d2.day()), 30);
            const int days = 360 * (d2.year() - d1.year()) + 30 * (int(d2.month()) - int(d1.month())) + (day2 - day1);
            return days / 360.0;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Calendars

BusinessDayConvention parse_business_day_convention(std::string_view text) {
    const auto s = upper(text);
    if (s == "UNADJUSTED" || s == "NONE") return BusinessDayConvention::Unadjusted;
    if (s == "FOLLOWING" || s == "F") return BusinessDayConvention::Following;
    if (s == "MODIFIED-FOLLOWING" || s == "MODIFIEDFOLLOWING" || s == "MF") return BusinessDayConvention::ModifiedFollowing;
    throw ParseError(0, "unknown business day convention '" + std::string(text) + "'");
}

std::string to_string(BusinessDayConvention bdc) {
    switch (bdc) {
        case BusinessDayConvention::Unadjusted: return "unadjusted";
        case BusinessDayConvention::Following: return "following";
        case BusinessDayConvention::ModifiedFollowing: return "modified-following";
    }
    return {};
}

CivilDate easter_sunday(int year) {
    const int a = year % 19;
    const int b = year / 100;
    const int c = year % 100;
    const int d = b / 4;
    const int e = b % 4;
    const int f = (b + 8) / 25;
    const int g = (b - f + 1) / 3;
    const int h = (19 * a + b - d - g + 15) % 30;
    const int i = c / 4;
    const int k = c % 4;
    const int l = (32 + 2 * e + 2 * i - h - k) % 7;
    const int m = (a + 11 * h + 22 * l) / 451;
    const int month = (h + l - 7 * m + 114) / 31;
    const int day = (h + l - 7 * m + 114) % 31 + 1;
    return CivilDate(year, unsigned(month), unsigned(day));
}

Calendar::Calendar(std::string name, std::set<CivilDate> holidays)
    : Calendar(std::move(name), std::move(holidays), false) {}

Calendar::Calendar(std::string name, std::set<CivilDate> holidays, bool target_rules)
    : name_(std::move(name)), holidays_(std::move(holidays)), target_rules_(target_rules) {}

Calendar Calendar::target() { return Calendar("TARGET", {}, true); }

Calendar Calendar::weekends_only() { return Calendar("WEEKENDS", {}, false); }

Calendar Calendar::by_name(std::string_view name) {
    const auto s = upper(name);
    if (s == "TARGET" || s == "TARGET2") return target();
    if (s == "WEEKENDS" || s == "WEEKENDSONLY" || s == "NONE") return weekends_only();
    throw ConfigurationError("unknown calendar '" + std::string(name) + "'");
}

bool Calendar::is_business_day(CivilDate d) const {
    if (d.is_weekend() || holidays_.contains(d)) return false;
    if (!target_rules_) return true;
    const unsigned m = d.month();
    const unsigned day = d.day();
    if ((m == 1 && day == 1) || (m == 5 && day == 1) || (m == 12 && (day == 25 || day == 26))) return false;
    const CivilDate easter = easter_sunday(d.year());
    return d != easter.add_days(-2) && d != easter.add_days(1);
}

CivilDate Calendar::adjust(CivilDate d, BusinessDayConvention bdc) const {
    if (bdc == BusinessDayConvention::Unadjusted) return d;
    CivilDate out = d;
    while (!is_business_day(out)) out = out.add_days(1);
    if (bdc == BusinessDayConvention::ModifiedFollowing && out.month() != d.month()) {
        out = d;
        while (!is_business_day(out)) out = out.add_days(-1);
    }
    return out;
}

CivilDate Calendar::advance_business_days(CivilDate d, int n) const {
    if (n == 0) return adjust(d, BusinessDayConvention::Following);
    const int step = n > 0 ? 1 : -1;
    CivilDate out = d;
    for (int left = n > 0 ? n : -n; left > 0;) {
        out = out.add_days(step);
        if (is_business_day(out)) --left;
    }
    return out;
}

int Calendar::business_days_between(CivilDate from, CivilDate to) const {
    int count = 0;
    for (CivilDate d = from.add_days(1); d <= to; d = d.add_days(1)) {
        if (is_business_day(d)) ++count;
    }
    return count;
}

CivilDate add_tenor(CivilDate d, const Period& tenor, const Calendar& cal, BusinessDayConvention bdc) {
    switch (tenor.unit) {
        case TimeUnit::Days:
            if (tenor.length == 0) return cal.adjust(d, bdc);
            return cal.advance_business_days(d, tenor.length);
        case TimeUnit::Weeks: return cal.adjust(d.add_days(7 * tenor.length), bdc);
        case TimeUnit::Months:
        case TimeUnit::Years: return cal.adjust(d.add_months(*tenor.months()), bdc);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Schedules

Schedule build_schedule(CivilDate start, CivilDate end, const Period& freq, const Calendar& cal,
                        BusinessDayConvention bdc) {
    if (!(start < end)) throw ScheduleError("schedule start " + start.iso() + " is not before end " + end.iso());
    if (freq.length <= 0) throw ScheduleError("schedule frequency must be positive, got " + freq.to_string());

    Schedule s;
    s.frequency_ = freq;
    s.convention_ = bdc;

    auto nth = [&](int k) -> CivilDate {
        switch (freq.unit) {
            case TimeUnit::Days: return cal.advance_business_days(start, k * freq.length);
            case TimeUnit::Weeks: return start.add_days(7 * k * freq.length);
            default: return start.add_months(k * *freq.months());
        }
    };

    s.unadjusted_.push_back(start);
    for (int k = 1;; ++k) {
        const CivilDate d = nth(k);
        if (d > end) {
            throw ScheduleError("span " + start.iso() + " to " + end.iso() + " is not a whole number of " +
                                freq.to_string() + " periods");
        }
        s.unadjusted_.push_back(d);
        if (d == end) break;
    }

    s.dates_.reserve(s.unadjusted_.size());
    for (CivilDate d : s.unadjusted_) s.dates_.push_back(cal.adjust(d, bdc));
    for (std::size_t i = 1; i < s.dates_.size(); ++i) {
        if (!(s.dates_[i - 1] < s.dates_[i])) {
            throw ScheduleError("adjusted dates collide at " + s.dates_[i].iso());
        }
    }
    return s;
}

}  // namespace mcurve
