#include "mcurve/date.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <tuple>

#include "mcurve/errors.hpp"

namespace mcurve {

namespace ch = std::chrono;

CivilDate::CivilDate(int year, unsigned month, unsigned day) {
    const ch::year_month_day ymd{ch::year{year}, ch::month{month}, ch::day{day}};
    if (!ymd.ok()) {
        throw DomainError("invalid calendar date " + std::to_string(year) + "-" + std::to_string(month) + "-" +
                          std::to_string(day));
    }
    serial_ = ch::sys_days{ymd}.time_since_epoch().count();
}

CivilDate CivilDate::parse(std::string_view iso) {
    auto fail = [&] { return ParseError(0, "expected YYYY-MM-DD, got '" + std::string(iso) + "'"); };
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') throw fail();
    int y = 0;
    unsigned m = 0, d = 0;
    auto num = [&](std::size_t pos, std::size_t len, auto& out) {
        const char* first = iso.data() + pos;
        auto [ptr, ec] = std::from_chars(first, first + len, out);
        if (ec != std::errc{} || ptr != first + len) throw fail();
    };
    num(0, 4, y);
    num(5, 2, m);
    num(8, 2, d);
    try {
        return CivilDate(y, m, d);
    } catch (const DomainError&) {
        throw fail();
    }
}

ch::year_month_day CivilDate::ymd() const noexcept { return ch::year_month_day{ch::sys_days{ch::days{serial_}}}; }

int CivilDate::year() const noexcept { return int(ymd().year()); }
unsigned CivilDate::month() const noexcept { return unsigned(ymd().month()); }
unsigned CivilDate::day() const noexcept { return unsigned(ymd().day()); }

ch::weekday CivilDate::weekday() const noexcept { return ch::weekday{ch::sys_days{ch::days{serial_}}}; }

bool CivilDate::is_weekend() const noexcept {
    const auto wd = weekday();
    return wd == ch::Saturday || wd == ch::Sunday;
}

bool CivilDate::is_end_of_month() const noexcept { return add_days(1).month() != month(); }

std::string CivilDate::iso() const {
    const auto d = ymd();
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(d.year()), unsigned(d.month()), unsigned(d.day()));
    return buf;
}

CivilDate CivilDate::add_months(int n) const {
    const auto d = ymd();
    const ch::year_month ym = ch::year_month{d.year(), d.month()} + ch::months{n};
    const ch::day last = ch::year_month_day_last{ym.year(), ch::month_day_last{ym.month()}}.day();
    const ch::day day = d.day() > last ? last : d.day();
    return CivilDate(int(ym.year()), unsigned(ym.month()), unsigned(day));
}

Period Period::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(char(std::toupper(static_cast<unsigned char>(c))));
    }
    if (s == "ON" || s == "O/N") return Period{1, TimeUnit::Days};
    if (s.size() < 2) throw ParseError(0, "invalid period '" + std::string(text) + "'");
    int length = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size() - 1, length);
    if (ec != std::errc{} || ptr != s.data() + s.size() - 1 || length < 0) {
        throw ParseError(0, "invalid period '" + std::string(text) + "'");
    }
    switch (s.back()) {
        case 'D': return Period{length, TimeUnit::Days};
        case 'W': return Period{length, TimeUnit::Weeks};
        case 'M': return Period{length, TimeUnit::Months};
        case 'Y': return Period{length, TimeUnit::Years};
        default: throw ParseError(0, "invalid period unit in '" + std::string(text) + "'");
    }
}

std::optional<int> Period::months() const noexcept {
    switch (unit) {
        case TimeUnit::Months: return length;
        case TimeUnit::Years: return 12 * length;
        default: return std::nullopt;
    }
}

std::string Period::to_string() const {
    switch (unit) {
        case TimeUnit::Days: return length == 1 ? "ON" : std::to_string(length) + "D";
        case TimeUnit::Weeks: return std::to_string(length) + "W";
        case TimeUnit::Months:
        case TimeUnit::Years: {
            const int m = *months();
            if (m != 0 && m % 12 == 0) return std::to_string(m / 12) + "Y";
            return std::to_string(m) + "M";
        }
    }
    return {};
}

int Period::approximate_days() const noexcept {
    switch (unit) {
        case TimeUnit::Days: return length;
        case TimeUnit::Weeks: return 7 * length;
        case TimeUnit::Months: return 30 * length;
        case TimeUnit::Years: return 360 * length;
    }
    return 0;
}

namespace {

// (is-month-based, count in days or months)
std::pair<bool, int> canonical(const Period& p) {
    if (auto m = p.months()) return {true, *m};
    return {false, p.unit == TimeUnit::Weeks ? 7 * p.length : p.length};
}

}  // namespace

bool operator==(const Period& a, const Period& b) noexcept { return canonical(a) == canonical(b); }

std::strong_ordering operator<=>(const Period& a, const Period& b) noexcept {
    const auto ca = canonical(a);
    const auto cb = canonical(b);
    return std::tuple(a.approximate_days(), ca.first, ca.second) <=>
           std::tuple(b.approximate_days(), cb.first, cb.second);
}

}  // namespace mcurve
