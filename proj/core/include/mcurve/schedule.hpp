#pragma once

#include <cstddef>
#include <vector>

#include "mcurve/calendar.hpp"
#include "mcurve/date.hpp"

namespace mcurve {

/// Ordered accrual dates T_0 < T_1 < ... < T_n generated at a fixed frequency.
class Schedule {
public:
    const std::vector<CivilDate>& dates() const noexcept { return dates_; }
    const std::vector<CivilDate>& unadjusted_dates() const noexcept { return unadjusted_; }
    const Period& frequency() const noexcept { return frequency_; }
    BusinessDayConvention convention() const noexcept { return convention_; }

    std::size_t periods() const noexcept { return dates_.size() - 1; }
    CivilDate start() const { return dates_.front(); }
    CivilDate end() const { return dates_.back(); }

private:
    friend Schedule build_schedule(CivilDate, CivilDate, const Period&, const Calendar&, BusinessDayConvention);

    Schedule() = default;

    std::vector<CivilDate> dates_;
    std::vector<CivilDate> unadjusted_;
    Period frequency_;
    BusinessDayConvention convention_ = BusinessDayConvention::Unadjusted;
};

/// Unadjusted dates are start + k*freq (measured from start, so month ends do not drift).
/// The span must be an exact multiple of `freq`; otherwise ScheduleError.
/// A day frequency steps in business days.
Schedule build_schedule(CivilDate start, CivilDate end, const Period& freq, const Calendar& cal,
                        BusinessDayConvention bdc);

}  // namespace mcurve
