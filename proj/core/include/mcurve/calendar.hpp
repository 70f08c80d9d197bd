#pragma once

#include <set>
#include <string>
#include <string_view>

#include "mcurve/date.hpp"

namespace mcurve {

enum class BusinessDayConvention { Unadjusted, Following, ModifiedFollowing };

/// Accepts "unadjusted", "following", "modified-following" (case-insensitive). Throws ParseError.
BusinessDayConvention parse_business_day_convention(std::string_view text);
std::string to_string(BusinessDayConvention bdc);

/// Gregorian Easter Sunday (anonymous computus).
CivilDate easter_sunday(int year);

/// Saturday/Sunday weekend plus a holiday rule. Immutable once built.
class Calendar {
public:
    /// TARGET2: New Year, Good Friday, Easter Monday, 1 May, 25 and 26 December.
    static Calendar target();
    static Calendar weekends_only();

    /// Throws ParseError for unknown names. Known: TARGET, WEEKENDS.
    static Calendar by_name(std::string_view name);

    /// Weekends plus an explicit holiday list.
    Calendar(std::string name, std::set<CivilDate> holidays);

    const std::string& name() const noexcept { return name_; }

    bool is_business_day(CivilDate d) const;
    bool is_holiday(CivilDate d) const { return !is_business_day(d); }

    CivilDate adjust(CivilDate d, BusinessDayConvention bdc) const;

    /// Moves n business days (backwards when n < 0). For n == 0 a non-business day rolls forward.
    CivilDate advance_business_days(CivilDate d, int n) const;

    /// Business days in (from, to].
    int business_days_between(CivilDate from, CivilDate to) const;

private:
    Calendar(std::string name, std::set<CivilDate> holidays, bool target_rules);

    std::string name_;
    std::set<CivilDate> holidays_;
    bool target_rules_ = false;
};

/// Adds a tenor. Day tenors count business days (the result is then always a business day);
/// week/month/year tenors move on the civil calendar and are adjusted by `bdc`.
CivilDate add_tenor(CivilDate d, const Period& tenor, const Calendar& cal, BusinessDayConvention bdc);

}  // namespace mcurve
