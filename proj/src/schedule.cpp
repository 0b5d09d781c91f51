#include "mhw/schedule.hpp"

#include "mhw/errors.hpp"

namespace mhw {

void LegSchedule::validate() const {
  if (pay_dates.empty()) throw ScheduleError("schedule has no payment dates");
  if (pay_dates.size() != accruals.size()) throw ScheduleError("schedule size mismatch");
  Date prev = start;
  for (std::size_t i = 0; i < pay_dates.size(); ++i) {
    if (pay_dates[i] <= prev) {
      throw ScheduleError("schedule dates not strictly increasing at " + pay_dates[i].to_string());
    }
    if (accruals[i] <= 0.0) {
      throw ScheduleError("non-positive accrual at " + pay_dates[i].to_string());
    }
    prev = pay_dates[i];
  }
}

LegSchedule build_schedule(Date start, Date end, int frequency_months, DayCount dc,
                           BusinessDayRule roll) {
  if (start >= end) throw ScheduleError("schedule start must precede end");
  if (frequency_months <= 0) throw ScheduleError("frequency must be positive");
  const int months = months_between(start, end);
  if (months <= 0 || months % frequency_months != 0 ||
      add_months(end, -months) != start) {
    throw ScheduleError("interval " + start.to_string() + " to " + end.to_string() +
                        " is not a whole number of " + std::to_string(frequency_months) +
                        "-month periods");
  }
  const int periods = months / frequency_months;

  LegSchedule leg;
  leg.day_count = dc;
  leg.start = adjust(start, roll);
  leg.pay_dates.reserve(periods);
  leg.accruals.reserve(periods);
  for (int k = periods - 1; k >= 0; --k) {
    leg.pay_dates.push_back(adjust(add_months(end, -k * frequency_months), roll));
  }
  Date prev = leg.start;
  for (const Date& d : leg.pay_dates) {
    leg.accruals.push_back(year_fraction(prev, d, dc));
    prev = d;
  }
  leg.validate();
  return leg;
}

}  // namespace mhw
