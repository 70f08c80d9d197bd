#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcurve {

/// Proleptic Gregorian calendar date stored as a day serial (days since 1970-01-01).
class CivilDate {
public:
    constexpr CivilDate() = default;

    /// Throws DomainError if the triple is not a valid Gregorian date.
    CivilDate(int year, unsigned month, unsigned day);

    static constexpr CivilDate from_serial(int serial) noexcept {
        CivilDate d;
        d.serial_ = serial;
        return d;
    }

    /// Parses YYYY-MM-DD. Throws ParseError.
    static CivilDate parse(std::string_view iso);

    constexpr int serial() const noexcept { return serial_; }

    int year() const noexcept;
    unsigned month() const noexcept;
    unsigned day() const noexcept;

    std::chrono::weekday weekday() const noexcept;
    bool is_weekend() const noexcept;
    bool is_end_of_month() const noexcept;

    /// YYYY-MM-DD.
    std::string iso() const;

    constexpr CivilDate add_days(int n) const noexcept { return from_serial(serial_ + n); }

    /// Calendar month arithmetic; the day is clamped to the target month's length.
    CivilDate add_months(int n) const;

    friend constexpr auto operator<=>(CivilDate, CivilDate) = default;
    friend constexpr int operator-(CivilDate a, CivilDate b) noexcept { return a.serial_ - b.serial_; }

private:
    std::chrono::year_month_day ymd() const noexcept;

    int serial_ = 0;
};

enum class TimeUnit { Days, Weeks, Months, Years };

/// A tenor such as 1D, 2W, 6M or 5Y. `ON` parses as 1D.
struct Period {
    int length = 0;
    TimeUnit unit = TimeUnit::Days;

    /// Throws ParseError.
    static Period parse(std::string_view text);

    /// Canonical text: whole years render as `nY`, other month counts as `nM`.
    /// "ON" for one day, whole years as "nY", other months as "nM".
    std::string to_string() const;

    /// Month count for month/year periods.
    std::optional<int> months() const noexcept;

    bool is_overnight() const noexcept { return unit == TimeUnit::Days && length == 1; }

    /// Rough length in days; only used to order tenors.
    int approximate_days() const noexcept;

    /// Equality is semantic: 12M == 1Y, 7D == 1W.
    friend bool operator==(const Period& a, const Period& b) noexcept;
    friend std::strong_ordering operator<=>(const Period& a, const Period& b) noexcept;
};

struct DatedValue {
    CivilDate date;
    double value = 0.0;

    friend bool operator==(const DatedValue&, const DatedValue&) = default;
};
using DatedSeries = std::vector<DatedValue>;

}  // namespace mcurve
