#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace mhw {

// Gregorian calendar date without time-of-day.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;

  bool valid() const;

  // Days since 1970-01-01 (negative before the epoch).
  int serial() const;
  static Date from_serial(int days);

  // 0 = Monday .. 6 = Sunday.
  int weekday() const;

  static bool is_leap_year(int year);
  static int days_in_month(int year, int month);

  // ISO-8601, YYYY-MM-DD.
  static Date parse(std::string_view text);
  std::string to_string() const;
};

Date add_days(Date d, int n);

// Calendar-month shift; day-of-month is clamped to the target month length.
Date add_months(Date d, int n);
Date add_years(Date d, int n);

// Signed day count d2 - d1.
int days_between(Date d1, Date d2);

// Whole calendar months from d1 to d2 ignoring the day-of-month.
int months_between(Date d1, Date d2);

}  // namespace mhw
