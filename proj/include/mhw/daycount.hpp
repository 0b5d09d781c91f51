#pragma once

#include <string>
#include <string_view>

#include "mhw/date.hpp"

namespace mhw {

enum class DayCount {
  Act360,
  Act365,
  Thirty360,  // 30/360 bond basis
};

// Year fraction between d1 <= d2 under the given convention.
double year_fraction(Date d1, Date d2, DayCount dc);

DayCount parse_day_count(std::string_view name);
std::string to_string(DayCount dc);

}  // namespace mhw
