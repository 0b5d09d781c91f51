#pragma once

#include <cstddef>
#include <vector>

#include "mhw/calendar.hpp"
#include "mhw/date.hpp"
#include "mhw/daycount.hpp"

namespace mhw {

// One swap leg: rolled payment dates and the accrual year fraction of each
// period. accruals[i] covers [pay_dates[i-1], pay_dates[i]] (start for i = 0).
struct LegSchedule {
  Date start;
  std::vector<Date> pay_dates;
  std::vector<double> accruals;
  DayCount day_count = DayCount::Act360;

  Date end() const { return pay_dates.back(); }
  std::size_t size() const { return pay_dates.size(); }

  // Accrual start of period i.
  Date period_start(std::size_t i) const { return i == 0 ? start : pay_dates[i - 1]; }

  void validate() const;
};

// Generates payment dates stepping backward from `end` by `frequency_months`,
// then applies the business-day rule. `start` and `end` are unrolled anchors;
// their distance must be a whole number of periods.
LegSchedule build_schedule(Date start, Date end, int frequency_months, DayCount dc,
                           BusinessDayRule roll = BusinessDayRule::ModifiedFollowing);

}  // namespace mhw
