// dates.hpp
// Minimal calendar date type. Dates are stored as a day count since
// 1970-01-01, which makes ordering and day arithmetic trivial and keeps
// the trading-calendar code free of time-zone concerns.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace signet {

class Date {
public:
    Date() = default;
    Date(int year, int month, int day);

    // Parses ISO-8601 "YYYY-MM-DD". Throws ParseError on anything else.
    static Date parse(std::string_view iso);

    static Date from_day_number(std::int32_t days) {
        Date d;
        d.days_ = days;
        return d;
    }

    std::string to_string() const;

    std::int32_t day_number() const { return days_; }
    Date plus_days(int n) const { return from_day_number(days_ + n); }

    auto operator<=>(const Date&) const = default;

private:
    std::int32_t days_ = 0;  // days since 1970-01-01
};

}  // namespace signet
