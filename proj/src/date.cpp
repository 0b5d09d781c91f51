#include "mhw/date.hpp"

#include <charconv>
#include <cstdio>

#include "mhw/errors.hpp"

namespace mhw {

bool Date::is_leap_year(int y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int Date::days_in_month(int y, int m) {
  static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap_year(y)) return 29;
  return lengths[m - 1];
}

bool Date::valid() const {
  return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

// Days-from-civil / civil-from-days (Howard Hinnant's algorithms).
int Date::serial() const {
  const int y = year - (month <= 2);
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2u) / 5u + day - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int>(doe) - 719468;
}

Date Date::from_serial(int days) {
  days += 719468;
  const int era = (days >= 0 ? days : days - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(days - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int y = static_cast<int>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return Date{y + (m <= 2), static_cast<int>(m), static_cast<int>(d)};
}

int Date::weekday() const {
  // 1970-01-01 was a Thursday.
  int w = (serial() + 3) % 7;
  return w < 0 ? w + 7 : w;
}

Date Date::parse(std::string_view text) {
  auto fail = [&] { throw DataError("invalid date '" + std::string(text) + "', expected YYYY-MM-DD"); };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') fail();
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail();
    return v;
  };
  Date d{to_int(text.substr(0, 4)), to_int(text.substr(5, 2)), to_int(text.substr(8, 2))};
  if (!d.valid()) fail();
  return d;
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

Date add_days(Date d, int n) { return Date::from_serial(d.serial() + n); }

Date add_months(Date d, int n) {
  int m = d.month - 1 + n;
  int y = d.year + (m >= 0 ? m / 12 : (m - 11) / 12);
  m = m - (y - d.year) * 12 + 1;
  return Date{y, m, std::min(d.day, Date::days_in_month(y, m))};
}

Date add_years(Date d, int n) { return add_months(d, 12 * n); }

int days_between(Date d1, Date d2) { return d2.serial() - d1.serial(); }

int months_between(Date d1, Date d2) {
  return (d2.year - d1.year) * 12 + (d2.month - d1.month);
}

}  // namespace mhw
