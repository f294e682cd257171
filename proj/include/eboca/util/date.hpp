#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace eboca::util {

// ISO-8601 calendar date (YYYY-MM-DD), always a real day of the proleptic
// Gregorian calendar.
class Date {
 public:
  // Throws InvalidArgument for anything that is not a valid calendar date.
  static Date parse(std::string_view text);
  static std::optional<Date> try_parse(std::string_view text) noexcept;

  int year() const noexcept { return year_; }
  unsigned month() const noexcept { return month_; }
  unsigned day() const noexcept { return day_; }

  std::string to_string() const;

  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  Date(int y, unsigned m, unsigned d) : year_(y), month_(m), day_(d) {}
  int year_;
  unsigned month_;
  unsigned day_;
};

}  // namespace eboca::util
