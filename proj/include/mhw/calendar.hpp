#pragma once

#include "mhw/date.hpp"

namespace mhw {

enum class BusinessDayRule {
  Unadjusted,
  Following,
  ModifiedFollowing,
  Preceding,
};

// TARGET holiday set: weekends, New Year's Day, Good Friday, Easter Monday,
// Labour Day, Christmas Day and the following holiday (Dec 26).
bool is_target_business_day(Date d);

Date easter_sunday(int year);

Date adjust(Date d, BusinessDayRule rule);

// Shifts by n TARGET business days (n may be negative).
Date add_business_days(Date d, int n);

}  // namespace mhw
