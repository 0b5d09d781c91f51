#include "mhw/daycount.hpp"

#include <algorithm>

#include "mhw/errors.hpp"

namespace mhw {

double year_fraction(Date d1, Date d2, DayCount dc) {
  if (d1 > d2) {
    throw DomainError("year_fraction: " + d1.to_string() + " is after " + d2.to_string());
  }
  switch (dc) {
    case DayCount::Act360:
      return days_between(d1, d2) / 360.0;
    case DayCount::Act365:
      return days_between(d1, d2) / 365.0;
    case DayCount::Thirty360: {
      const int dd1 = std::min(d1.day, 30);
      const int dd2 = (d2.day == 31 && dd1 == 30) ? 30 : d2.day;
      return ((d2.year - d1.year) * 360 + (d2.month - d1.month) * 30 + (dd2 - dd1)) / 360.0;
    }
  }
  throw DomainError("unknown day count");
}

DayCount parse_day_count(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "act/360" || s == "act360") return DayCount::Act360;
  if (s == "act/365" || s == "act365") return DayCount::Act365;
  if (s == "30/360" || s == "thirty360" || s == "30e360") return DayCount::Thirty360;
  throw ConfigError("unknown day count '" + std::string(name) + "'");
}

std::string to_string(DayCount dc) {
  switch (dc) {
    case DayCount::Act360: return "Act/360";
    case DayCount::Act365: return "Act/365";
    case DayCount::Thirty360: return "30/360";
  }
  return "?";
}

}  // namespace mhw
