#include "bubblekit/date.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "bubblekit/errors.hpp"

namespace bubblekit {

namespace {

bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
    if (m == 2 && leap(y)) return 29;
    return lengths[static_cast<std::size_t>(m - 1)];
}

// Howard Hinnant's civil-days algorithm.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

bool parse_int(const char* first, const char* last, int& out) {
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && p == last;
}

}  // namespace

bool is_valid_date(int y, int m, int d) {
    return m >= 1 && m <= 12 && d >= 1 && d <= days_in_month(y, m);
}

Date::Date(int y, int m, int d) : year(y), month(m), day(d) {
    if (!is_valid_date(y, m, d))
        throw ValidationError("invalid calendar date " + to_string());
}

std::int64_t Date::serial() const { return days_from_civil(year, month, day); }

Date Date::from_serial(std::int64_t days) {
    Date out;
    civil_from_days(days, out.year, out.month, out.day);
    return out;
}

Date Date::parse(const std::string& text) {
    // Cut at a time separator if present.
    std::size_t end = text.find_first_of("T ");
    std::string core = text.substr(0, end);
    int y = 0, m = 0, d = 1;
    const char* s = core.data();
    bool ok = false;
    if (core.size() == 10 && core[4] == '-' && core[7] == '-') {
        ok = parse_int(s, s + 4, y) && parse_int(s + 5, s + 7, m) &&
             parse_int(s + 8, s + 10, d);
    } else if (core.size() == 7 && core[4] == '-') {
        ok = parse_int(s, s + 4, y) && parse_int(s + 5, s + 7, m);
    }
    if (!ok || !is_valid_date(y, m, d))
        throw IngestError("unparseable date: '" + text + "'");
    return Date(y, m, d);
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

Date Date::add_months(int n) const {
    int idx = year * 12 + (month - 1) + n;
    int y = idx / 12;
    int m = idx % 12;
    if (m < 0) {
        m += 12;
        y -= 1;
    }
    return Date(y, m + 1, 1);
}

}  // namespace bubblekit
