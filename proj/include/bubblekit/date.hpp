#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace bubblekit {

/// Calendar date (proleptic Gregorian). Stored as year/month/day; comparisons
/// and arithmetic go through the serial day number (days since 1970-01-01).
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    Date() = default;
    Date(int y, int m, int d);

    /// Days since 1970-01-01 (can be negative).
    std::int64_t serial() const;

    static Date from_serial(std::int64_t days);

    /// Parses `YYYY-MM-DD` or `YYYY-MM` (day defaults to 1).
    /// Extra content after a full date (e.g. a time suffix) is ignored when
    /// separated by 'T' or space. Throws IngestError on anything else.
    static Date parse(const std::string& text);

    std::string to_string() const;  // ISO `YYYY-MM-DD`

    /// Start of the month `n` months after this date's month.
    Date add_months(int n) const;

    friend bool operator==(const Date& a, const Date& b) {
        return a.year == b.year && a.month == b.month && a.day == b.day;
    }
    friend std::strong_ordering operator<=>(const Date& a, const Date& b) {
        return a.serial() <=> b.serial();
    }
};

bool is_valid_date(int y, int m, int d);

}  // namespace bubblekit
