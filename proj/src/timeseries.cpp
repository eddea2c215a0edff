#include "bubblekit/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>

#include "bubblekit/csv.hpp"
#include "bubblekit/errors.hpp"

namespace bubblekit {

std::string to_string(Frequency f) {
    switch (f) {
        case Frequency::monthly: return "monthly";
        case Frequency::quarterly: return "quarterly";
        case Frequency::biweekly: return "biweekly";
        default: return "irregular";
    }
}

TimeSeries::TimeSeries(std::vector<Date> ts, std::vector<double> vs, Frequency f,
                       std::string n)
    : timestamps(std::move(ts)), values(std::move(vs)), frequency(f),
      name(std::move(n)) {
    if (timestamps.size() != values.size())
        throw ValidationError("series '" + name + "': " +
                              std::to_string(timestamps.size()) + " dates vs " +
                              std::to_string(values.size()) + " values");
    for (std::size_t i = 1; i < timestamps.size(); ++i) {
        if (!(timestamps[i - 1] < timestamps[i]))
            throw ValidationError("series '" + name +
                                  "': timestamps not strictly increasing at " +
                                  timestamps[i].to_string());
    }
    for (double v : values)
        if (!std::isfinite(v))
            throw ValidationError("series '" + name + "' contains a non-finite value");
}

Frequency infer_frequency(const std::vector<Date>& timestamps) {
    if (timestamps.size() < 2) return Frequency::irregular;
    std::map<std::int64_t, int> gap_counts;
    for (std::size_t i = 1; i < timestamps.size(); ++i)
        ++gap_counts[timestamps[i].serial() - timestamps[i - 1].serial()];
    std::int64_t modal = 0;
    int best = -1;
    for (const auto& [gap, count] : gap_counts) {
        if (count > best) {
            best = count;
            modal = gap;
        }
    }
    if (modal >= 28 && modal <= 31) return Frequency::monthly;
    if (modal >= 89 && modal <= 92) return Frequency::quarterly;
    if (modal >= 13 && modal <= 17) return Frequency::biweekly;
    return Frequency::irregular;
}

TimeSeries load_csv(std::istream& source, const std::string& date_column,
                    const std::string& value_column) {
    csv::Table table = csv::read(source);
    const int dcol = table.column(date_column);
    const int vcol = table.column(value_column);
    if (dcol < 0)
        throw IngestError("missing date column '" + date_column + "'");
    if (vcol < 0)
        throw IngestError("missing value column '" + value_column + "'");

    std::vector<std::pair<Date, double>> rows;
    rows.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& cells = table.rows[r];
        const std::string where = "row " + std::to_string(r + 1);
        if (static_cast<int>(cells.size()) <= std::max(dcol, vcol))
            throw IngestError("too few cells at " + where);
        Date d;
        try {
            d = Date::parse(cells[static_cast<std::size_t>(dcol)]);
        } catch (const IngestError& e) {
            throw IngestError(std::string(e.what()) + " at " + where);
        }
        rows.emplace_back(d, csv::parse_double(cells[static_cast<std::size_t>(vcol)], where));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first == rows[i - 1].first)
            throw ValidationError("duplicate date " + rows[i].first.to_string());

    std::vector<Date> ts;
    std::vector<double> vs;
    ts.reserve(rows.size());
    vs.reserve(rows.size());
    for (auto& [d, v] : rows) {
        ts.push_back(d);
        vs.push_back(v);
    }
    Frequency f = infer_frequency(ts);
    return TimeSeries(std::move(ts), std::move(vs), f, value_column);
}

TimeSeries load_csv_file(const std::string& path, const std::string& date_column,
                         const std::string& value_column) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open file: " + path);
    TimeSeries s = load_csv(in, date_column, value_column);
    return s;
}

Grid biweekly_grid(const Date& start, const Date& end) {
    if (!(start < end))
        throw ArgumentError("biweekly_grid: start " + start.to_string() +
                            " must precede end " + end.to_string());
    Grid grid;
    grid.frequency = Frequency::biweekly;
    Date month_start(start.year, start.month, 1);
    for (Date m = month_start; m <= end; m = m.add_months(1)) {
        for (int day : {1, 15}) {
            Date knot(m.year, m.month, day);
            if (start <= knot && knot <= end) grid.timestamps.push_back(knot);
        }
    }
    return grid;
}

namespace {

// Second derivatives of the natural cubic spline through (x, y), via the
// standard tridiagonal system (Thomas algorithm); m[0] = m[n-1] = 0.
std::vector<double> natural_spline_m(const std::vector<double>& x,
                                     const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> m(n, 0.0);
    if (n < 3) return m;
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x[i] - x[i - 1];
        const double h1 = x[i + 1] - x[i];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
    }
    // Forward sweep over interior rows; sub-diagonal of row i is h0.
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double h0 = x[i] - x[i - 1];
        const double w = h0 / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
        if (i == 1) break;
    }
    return m;
}

}  // namespace

TimeSeries cubic_spline(const TimeSeries& series, const Grid& grid) {
    const std::size_t n = series.size();
    if (n < 4)
        throw DegenerateInputError("cubic_spline: need at least 4 source points, got " +
                                   std::to_string(n));
    const std::int64_t base = series.timestamps.front().serial();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = static_cast<double>(series.timestamps[i].serial() - base);
    const std::vector<double>& y = series.values;
    const std::vector<double> m = natural_spline_m(x, y);

    std::vector<double> out;
    out.reserve(grid.size());
    std::size_t seg = 0;
    for (const Date& g : grid.timestamps) {
        const double t = static_cast<double>(g.serial() - base);
        if (t < x.front() || t > x.back())
            throw ExtrapolationError("cubic_spline: grid point " + g.to_string() +
                                     " outside source span [" +
                                     series.start().to_string() + ", " +
                                     series.end().to_string() + "]");
        while (seg + 2 < n && x[seg + 1] < t) ++seg;
        const double h = x[seg + 1] - x[seg];
        const double a = (x[seg + 1] - t) / h;
        const double b = (t - x[seg]) / h;
        out.push_back(a * y[seg] + b * y[seg + 1] +
                      ((a * a * a - a) * m[seg] + (b * b * b - b) * m[seg + 1]) *
                          (h * h) / 6.0);
    }
    return TimeSeries(grid.timestamps, std::move(out), grid.frequency, series.name);
}

TimeSeries rolling_mean(const TimeSeries& series, int w) {
    const std::size_t n = series.size();
    if (w < 1) throw ArgumentError("rolling_mean: w must be >= 1");
    if (static_cast<std::size_t>(w) >= n)
        throw ArgumentError("rolling_mean: w = " + std::to_string(w) +
                            " >= series length " + std::to_string(n));
    std::vector<Date> ts(series.timestamps.begin() + w, series.timestamps.end());
    std::vector<double> vs;
    vs.reserve(n - static_cast<std::size_t>(w));
    for (std::size_t t = static_cast<std::size_t>(w); t < n; ++t) {
        double sum = 0.0;
        for (std::size_t i = t - static_cast<std::size_t>(w); i < t; ++i)
            sum += series.values[i];
        vs.push_back(sum / w);
    }
    return TimeSeries(std::move(ts), std::move(vs), series.frequency,
                      series.name + "_rm" + std::to_string(w));
}

}  // namespace bubblekit
