#pragma once

#include <string>
#include <string_view>

#include "mcurve/date.hpp"

namespace mcurve {

enum class DayCount { Act360, Act365Fixed, Thirty360E };

/// Accepts "ACT/360", "ACT/365F" (or "ACT/365-FIXED"), "30E/360". Throws ParseError.
DayCount parse_day_count(std::string_view text);
std::string to_string(DayCount dc);

/// Accrual fraction between two dates. Throws OrderingError when d1 > d2.
double year_fraction(CivilDate d1, CivilDate d2, DayCount dc);

}  // namespace mcurve
