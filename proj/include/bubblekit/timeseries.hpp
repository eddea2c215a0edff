#pragma once

#include <istream>
#include <string>
#include <vector>

#include "bubblekit/date.hpp"

namespace bubblekit {

enum class Frequency { monthly, quarterly, biweekly, irregular };

std::string to_string(Frequency f);

/// Dated numeric observations. Timestamps are strictly increasing, values are
/// finite and the same length; both are immutable after construction.
struct TimeSeries {
    std::vector<Date> timestamps;
    std::vector<double> values;
    Frequency frequency = Frequency::irregular;
    std::string name;

    TimeSeries() = default;
    TimeSeries(std::vector<Date> ts, std::vector<double> vs, Frequency f,
               std::string n);

    std::size_t size() const { return timestamps.size(); }
    Date start() const { return timestamps.front(); }
    Date end() const { return timestamps.back(); }
};

/// Ordered evaluation grid; deterministic given (start, end, frequency).
struct Grid {
    std::vector<Date> timestamps;
    Frequency frequency = Frequency::irregular;

    std::size_t size() const { return timestamps.size(); }
};

/// Modal-gap frequency inference (28-31d monthly, 89-92d quarterly,
/// 13-17d biweekly, anything else irregular).
Frequency infer_frequency(const std::vector<Date>& timestamps);

/// Reads a dated value series from CSV. Rows are sorted by date; duplicate
/// dates reject the input. Dates accept ISO `YYYY-MM-DD` or `YYYY-MM`.
TimeSeries load_csv(std::istream& source, const std::string& date_column,
                    const std::string& value_column);

TimeSeries load_csv_file(const std::string& path, const std::string& date_column,
                         const std::string& value_column);

/// Two knots per calendar month (day 1 and day 15) covering [start, end].
Grid biweekly_grid(const Date& start, const Date& end);

/// Natural cubic spline (zero second derivative at both ends) through the
/// series knots, evaluated at the grid points. The time coordinate is days
/// since the first source knot. Grid points outside the source span throw.
TimeSeries cubic_spline(const TimeSeries& series, const Grid& grid);

/// Trailing mean of the previous w observations: output at source index t
/// (t >= w) is mean(values[t-w..t-1]); the first w positions are absent, so
/// the result starts at timestamps[w].
TimeSeries rolling_mean(const TimeSeries& series, int w);

}  // namespace bubblekit
