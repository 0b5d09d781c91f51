#include "mhw/calendar.hpp"

#include "mhw/errors.hpp"

namespace mhw {

// Anonymous Gregorian computus.
Date easter_sunday(int year) {
  const int a = year % 19;
  const int b = year / 100;
  const int c = year % 100;
  const int d = b / 4;
  const int e = b % 4;
  const int f = (b + 8) / 25;
  const int g = (b - f + 1) / 3;
  const int h = (19 * a + b - d - g + 15) % 30;
  const int i = c / 4;
  const int k = c % 4;
  const int l = (32 + 2 * e + 2 * i - h - k) % 7;
  const int m = (a + 11 * h + 22 * l) / 451;
  const int month = (h + l - 7 * m + 114) / 31;
  const int day = (h + l - 7 * m + 114) % 31 + 1;
  return Date{year, month, day};
}

bool is_target_business_day(Date d) {
  if (d.weekday() >= 5) return false;
  if ((d.month == 1 && d.day == 1) || (d.month == 5 && d.day == 1) ||
      (d.month == 12 && (d.day == 25 || d.day == 26))) {
    return false;
  }
  const int easter = easter_sunday(d.year).serial();
  const int s = d.serial();
  return s != easter - 2 && s != easter + 1;
}

Date adjust(Date d, BusinessDayRule rule) {
  switch (rule) {
    case BusinessDayRule::Unadjusted:
      return d;
    case BusinessDayRule::Following: {
      while (!is_target_business_day(d)) d = add_days(d, 1);
      return d;
    }
    case BusinessDayRule::ModifiedFollowing: {
      Date rolled = adjust(d, BusinessDayRule::Following);
      if (rolled.month != d.month) rolled = adjust(d, BusinessDayRule::Preceding);
      return rolled;
    }
    case BusinessDayRule::Preceding: {
      while (!is_target_business_day(d)) d = add_days(d, -1);
      return d;
    }
  }
  throw DomainError("unknown business-day rule");
}

Date add_business_days(Date d, int n) {
  const int step = n >= 0 ? 1 : -1;
  for (int left = n * step; left > 0; --left) {
    do {
      d = add_days(d, step);
    } while (!is_target_business_day(d));
  }
  return d;
}

}  // namespace mhw
