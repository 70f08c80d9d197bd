#include <doctest.h>

#include <random>

#include "mcurve/calendar.hpp"
#include "mcurve/daycount.hpp"
#include "mcurve/errors.hpp"
#include "mcurve/schedule.hpp"

using namespace mcurve;

namespace {

CivilDate D(const char* iso) { return CivilDate::parse(iso); }

// Independent TARGET oracle: the closing days listed explicitly per year.
bool target_holiday_oracle(CivilDate d) {
    static const std::set<std::string> easter_related{
        "2010-04-02", "2010-04-05", "2011-04-22", "2011-04-25", "2012-04-06", "2012-04-09",
        "2013-03-29", "2013-04-01", "2014-04-18", "2014-04-21", "2015-04-03", "2015-04-06",
        "2016-03-25", "2016-03-28", "2017-04-14", "2017-04-17", "2018-03-30", "2018-04-02",
        "2019-04-19", "2019-04-22", "2020-04-10", "2020-04-13", "2021-04-02", "2021-04-05",
        "2022-04-15", "2022-04-18", "2023-04-07", "2023-04-10", "2024-03-29", "2024-04-01",
        "2025-04-18", "2025-04-21"};
    if (d.is_weekend()) return true;
    const unsigned m = d.month(), day = d.day();
    if ((m == 1 && day == 1) || (m == 5 && day == 1) || (m == 12 && (day == 25 || day == 26))) return true;
    return easter_related.count(d.iso()) > 0;
}

}  // namespace

TEST_CASE("civil dates") {
    CHECK(D("2012-02-29").add_months(12) == D("2013-02-28"));
    CHECK(D("2012-01-31").add_months(1) == D("2012-02-29"));
    CHECK(D("2012-01-03") - D("2011-12-30") == 4);
    CHECK(D("2011-12-30").iso() == "2011-12-30");
    CHECK_THROWS_AS(CivilDate(2011, 2, 30), DomainError);
    CHECK_THROWS_AS(D("2011-02-30"), ParseError);
    CHECK_THROWS_AS(D("2011/02/03"), ParseError);
    CHECK(CivilDate::from_serial(D("1999-07-14").serial()) == D("1999-07-14"));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> serial(-20000, 40000);
    for (int i = 0; i < 2000; ++i) {
        const CivilDate a = CivilDate::from_serial(serial(rng));
        CHECK(CivilDate::parse(a.iso()) == a);
        CHECK(CivilDate(a.year(), a.month(), a.day()) == a);
        CHECK((a.add_days(1) > a));
    }
}

TEST_CASE("periods") {
    CHECK(Period::parse("12M") == Period::parse("1Y"));
    CHECK(Period::parse("12M").to_string() == "1Y");
    CHECK(Period::parse("18M").to_string() == "18M");
    CHECK(Period::parse("ON").is_overnight());
    CHECK(Period::parse("O/N") == Period::parse("1D"));
    CHECK(Period::parse("3M") < Period::parse("6M"));
    CHECK_THROWS_AS(Period::parse("6Q"), ParseError);
    CHECK_THROWS_AS(Period::parse(""), ParseError);
}

TEST_CASE("year fractions") {
    CHECK(year_fraction(D("2011-12-30"), D("2011-12-30"), DayCount::Act360) == 0.0);
    CHECK(year_fraction(D("2012-01-03"), D("2012-07-03"), DayCount::Act360) == doctest::Approx(182.0 / 360.0).epsilon(1e-15));
    CHECK(year_fraction(D("2012-01-30"), D("2012-07-30"), DayCount::Thirty360E) == 0.5);
    CHECK(year_fraction(D("2012-01-31"), D("2012-02-29"), DayCount::Thirty360E) == doctest::Approx(29.0 / 360.0));
    CHECK(year_fraction(D("2012-01-01"), D("2012-12-31"), DayCount::Act365Fixed) == doctest::Approx(365.0 / 365.0));
    CHECK(year_fraction(D("2011-01-01"), D("2011-12-27"), DayCount::Act360) == 1.0);
    CHECK_THROWS_AS(year_fraction(D("2012-01-02"), D("2012-01-01"), DayCount::Act360), OrderingError);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> serial(10000, 20000), gap(0, 4000);
    for (DayCount dc : {DayCount::Act360, DayCount::Act365Fixed}) {
        for (int i = 0; i < 500; ++i) {
            const CivilDate a = CivilDate::from_serial(serial(rng));
            const CivilDate b = a.add_days(gap(rng));
            const CivilDate c = b.add_days(gap(rng));
            CHECK(year_fraction(a, b, dc) + year_fraction(b, c, dc) == doctest::Approx(year_fraction(a, c, dc)).epsilon(1e-14));
            const int shift = gap(rng);
            CHECK(year_fraction(a.add_days(shift), b.add_days(shift), dc) == year_fraction(a, b, dc));
        }
    }
    CHECK(parse_day_count("ACT/360") == DayCount::Act360);
    CHECK(parse_day_count("30E/360") == DayCount::Thirty360E);
    CHECK_THROWS_AS(parse_day_count("ACT/ACT-ISDA"), ParseError);
}

TEST_CASE("TARGET calendar") {
    const Calendar cal = Calendar::target();
    CHECK(easter_sunday(2012) == D("2012-04-08"));
    CHECK(easter_sunday(2011) == D("2011-04-24"));
    CHECK(easter_sunday(2000) == D("2000-04-23"));
    for (CivilDate d = D("2010-01-01"); d <= D("2025-12-31"); d = d.add_days(1)) {
        REQUIRE_MESSAGE(cal.is_holiday(d) == target_holiday_oracle(d), d.iso());
    }
    CHECK(cal.advance_business_days(D("2011-12-30"), 2) == D("2012-01-03"));
    CHECK(cal.advance_business_days(D("2012-01-03"), 0) == D("2012-01-03"));
    CHECK(add_tenor(D("2012-01-31"), Period::parse("1M"), cal, BusinessDayConvention::ModifiedFollowing) == D("2012-02-29"));
    CHECK(add_tenor(D("2012-03-30"), Period::parse("1Y"), cal, BusinessDayConvention::ModifiedFollowing) == D("2013-03-28"));
    CHECK(add_tenor(D("2012-03-30"), Period::parse("1Y"), cal, BusinessDayConvention::Following) == D("2013-04-02"));
    CHECK(add_tenor(D("2011-12-30"), Period::parse("2D"), cal, BusinessDayConvention::Following) == D("2012-01-03"));
    CHECK(cal.business_days_between(D("2011-12-30"), D("2012-01-03")) == 2);
    CHECK(Calendar::by_name("TARGET").name() == "TARGET");
    CHECK_THROWS_AS(Calendar::by_name("NYSE"), ConfigurationError);
}

TEST_CASE("business-day adjustment properties") {
    const Calendar cal = Calendar::target();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> serial(14000, 20000), months(1, 120);
    for (int i = 0; i < 3000; ++i) {
        const CivilDate d = CivilDate::from_serial(serial(rng));
        const Period p{months(rng), TimeUnit::Months};
        const CivilDate raw = add_tenor(d, p, cal, BusinessDayConvention::Unadjusted);
        const CivilDate f = add_tenor(d, p, cal, BusinessDayConvention::Following);
        const CivilDate mf = add_tenor(d, p, cal, BusinessDayConvention::ModifiedFollowing);
        CHECK(f >= raw);
        CHECK(cal.is_business_day(f));
        CHECK(cal.is_business_day(mf));
        CHECK(mf.month() == raw.month());
        if (cal.is_business_day(d)) CHECK(cal.advance_business_days(d, 0) == d);
    }
}

TEST_CASE("schedules") {
    const Calendar cal = Calendar::target();
    const auto mf = BusinessDayConvention::ModifiedFollowing;
    const CivilDate spot = D("2012-01-03");
    const Schedule q = build_schedule(spot, spot.add_months(12), Period::parse("3M"), cal, mf);
    CHECK(q.periods() == 4);
    CHECK(q.dates().size() == 5);
    CHECK(q.start() == spot);
    CHECK(build_schedule(spot, spot.add_months(6), Period::parse("6M"), cal, mf).periods() == 1);
    CHECK_THROWS_AS(build_schedule(spot, spot.add_months(12), Period::parse("5M"), cal, mf), ScheduleError);
    CHECK_THROWS_AS(build_schedule(spot, spot, Period::parse("3M"), cal, mf), ScheduleError);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> serial(14000, 20000), count(1, 40);
    for (const char* f : {"1M", "3M", "6M", "1Y"}) {
        const Period freq = Period::parse(f);
        for (int i = 0; i < 200; ++i) {
            const CivilDate start = cal.adjust(CivilDate::from_serial(serial(rng)), BusinessDayConvention::Following);
            const int n = count(rng);
            const Schedule s = build_schedule(start, start.add_months(n * *freq.months()), freq, cal, mf);
            REQUIRE(s.periods() == std::size_t(n));
            double sum = 0.0;
            for (std::size_t k = 1; k < s.dates().size(); ++k) {
                CHECK(s.dates()[k] > s.dates()[k - 1]);
                CHECK(cal.is_business_day(s.dates()[k]));
                CHECK(s.unadjusted_dates()[k] == start.add_months(int(k) * *freq.months()));
                sum += year_fraction(s.dates()[k - 1], s.dates()[k], DayCount::Act360);
            }
            CHECK(sum == doctest::Approx(year_fraction(s.start(), s.end(), DayCount::Act360)).epsilon(1e-13));
        }
    }
}
