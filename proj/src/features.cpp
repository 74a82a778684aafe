#include "smellkit/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "smellkit/errors.hpp"
#include "smellkit/time_util.hpp"

namespace smellkit {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = 3.14159265358979323846;
}  // namespace

int FeatureTable::find(const std::string& name) const {
    for (std::size_t j = 0; j < names.size(); ++j)
        if (names[j] == name) return static_cast<int>(j);
    return -1;
}

std::vector<double> FeatureTable::row(std::size_t i) const {
    std::vector<double> out(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) out[j] = cols[j][i];
    return out;
}

FeatureTable resample_hourly(const std::vector<SensorReading>& readings,
                             const std::set<std::string>& channels,
                             const std::set<std::string>& stations) {
    if (channels.empty() || stations.empty())
        throw InputError("resample_hourly: channel/station filter is empty");

    // Bucket (t-3600, t] maps to hour index t/3600; equivalently the bucket of
    // a timestamp ts is ceil(ts / 3600).
    auto bucket_of = [](std::int64_t ts) {
        return floor_div(ts + kSecondsPerHour - 1, kSecondsPerHour);
    };

    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    bool any = false;
    for (const auto& r : readings) {
        if (!channels.count(r.channel) || !stations.count(r.station_id)) continue;
        any = true;
        const std::int64_t b = bucket_of(r.timestamp);
        lo = std::min(lo, b);
        hi = std::max(hi, b);
    }
    if (!any) throw InputError("resample_hourly: no readings match the filter");

    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    FeatureTable out;
    out.hours.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.hours[i] = lo + static_cast<std::int64_t>(i);

    // Column order: stations then channels, both in set (lexicographic) order.
    std::vector<std::pair<std::string, std::string>> keys;
    for (const auto& st : stations)
        for (const auto& ch : channels) keys.emplace_back(st, ch);

    std::map<std::pair<std::string, std::string>, std::size_t> col_of;
    for (const auto& key : keys) {
        col_of[key] = out.cols.size();
        out.names.push_back(key.first + "." + key.second);
        out.cols.emplace_back(n, kNaN);
    }

    std::vector<std::vector<double>> sums(keys.size(), std::vector<double>(n, 0.0));
    std::vector<std::vector<std::int64_t>> cnts(keys.size(), std::vector<std::int64_t>(n, 0));
    for (const auto& r : readings) {
        if (r.missing) continue;
        auto it = col_of.find({r.station_id, r.channel});
        if (it == col_of.end()) continue;
        const std::size_t i = static_cast<std::size_t>(bucket_of(r.timestamp) - lo);
        sums[it->second][i] += r.value;
        cnts[it->second][i] += 1;
    }
    for (std::size_t j = 0; j < keys.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (cnts[j][i] > 0) out.cols[j][i] = sums[j][i] / static_cast<double>(cnts[j][i]);
    return out;
}

WindComponents decompose_wind(double direction_deg) {
    if (!(direction_deg >= 0.0 && direction_deg < 360.0))
        throw InputError("decompose_wind: direction " + std::to_string(direction_deg) +
                         " outside [0, 360)");
    const double rad = direction_deg * kPi / 180.0;
    return WindComponents{std::cos(rad), std::sin(rad)};
}

FeatureTable decompose_wind_columns(const FeatureTable& table) {
    FeatureTable out;
    out.hours = table.hours;
    const std::string suffix = ".wind_dir";
    for (std::size_t j = 0; j < table.names.size(); ++j) {
        const std::string& name = table.names[j];
        const bool is_wind = name.size() >= suffix.size() &&
                             name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
        if (!is_wind) {
            out.names.push_back(name);
            out.cols.push_back(table.cols[j]);
            continue;
        }
        std::vector<double> cx(table.hours.size(), kNaN), cy(table.hours.size(), kNaN);
        for (std::size_t i = 0; i < table.hours.size(); ++i) {
            const double d = table.cols[j][i];
            if (std::isnan(d)) continue;
            const WindComponents w = decompose_wind(d);
            cx[i] = w.x;
            cy[i] = w.y;
        }
        out.names.push_back(name + "_cos");
        out.cols.push_back(std::move(cx));
        out.names.push_back(name + "_sin");
        out.cols.push_back(std::move(cy));
    }
    return out;
}

FeatureTable add_lags(const FeatureTable& table, int lag_hours) {
    if (lag_hours < 1) throw InputError("add_lags: lag_hours must be >= 1");
    FeatureTable out = table;
    const std::size_t n = table.n_rows();
    const std::size_t base = table.n_cols();
    for (std::size_t j = 0; j < base; ++j) {
        for (int k = 1; k <= lag_hours; ++k) {
            std::vector<double> shifted(n, kNaN);
            for (std::size_t i = static_cast<std::size_t>(k); i < n; ++i)
                shifted[i] = table.cols[j][i - static_cast<std::size_t>(k)];
            out.names.push_back(table.names[j] + ".lag" + std::to_string(k));
            out.cols.push_back(std::move(shifted));
        }
    }
    return out;
}

FeatureTable add_calendar(const FeatureTable& table, int utc_offset_hours) {
    if (table.n_rows() == 0) throw InputError("add_calendar: empty table");
    FeatureTable out = table;
    const std::size_t n = table.n_rows();
    std::vector<double> dow(n), hod(n), dom(n);
    for (std::size_t i = 0; i < n; ++i) {
        const LocalClock lc = local_clock(table.hours[i], utc_offset_hours);
        dow[i] = lc.day_of_week;
        hod[i] = lc.hour_of_day;
        dom[i] = lc.day_of_month;
    }
    out.names.push_back("day_of_week");
    out.cols.push_back(std::move(dow));
    out.names.push_back("hour_of_day");
    out.cols.push_back(std::move(hod));
    out.names.push_back("day_of_month");
    out.cols.push_back(std::move(dom));
    return out;
}

CyclicalTime cyclical_time(int hour, int month) {
    if (hour < 0 || hour > 23) throw InputError("cyclical_time: hour outside 0..23");
    if (month < 1 || month > 12) throw InputError("cyclical_time: month outside 1..12");
    CyclicalTime c;
    c.xh = std::cos(kPi * hour / 12.0);
    c.yh = std::sin(kPi * hour / 12.0);
    c.xm = std::cos(kPi * month / 6.0);
    c.ym = std::sin(kPi * month / 6.0);
    return c;
}

std::pair<FeatureTable, ScaleStats> fit_impute_standardize(const FeatureTable& train) {
    if (train.n_rows() < 2) throw InputError("fit_impute_standardize: need >= 2 rows");
    FeatureTable out = train;
    ScaleStats stats;
    const std::size_t n = train.n_rows();
    for (std::size_t j = 0; j < train.n_cols(); ++j) {
        double sum = 0.0;
        std::size_t observed = 0;
        for (double v : train.cols[j]) {
            if (std::isnan(v)) continue;
            sum += v;
            ++observed;
        }
        if (observed == 0)
            throw InputError("fit_impute_standardize: column '" + train.names[j] +
                             "' is entirely missing");
        const double mean = sum / static_cast<double>(observed);
        // Population variance of the imputed column. Imputing the mean keeps
        // the mean, so only observed values contribute to the spread.
        double ss = 0.0;
        for (double v : train.cols[j]) {
            if (std::isnan(v)) continue;
            ss += (v - mean) * (v - mean);
        }
        double sd = std::sqrt(ss / static_cast<double>(n));
        if (sd == 0.0) sd = 1.0;
        for (double& v : out.cols[j]) {
            if (std::isnan(v)) v = mean;
            v = (v - mean) / sd;
        }
        stats.per_column[train.names[j]] = {mean, sd};
    }
    out.standardization = stats;
    return {std::move(out), std::move(stats)};
}

FeatureTable apply_stats(const FeatureTable& table, const ScaleStats& stats) {
    if (table.n_cols() != stats.per_column.size())
        throw InputError("apply_stats: column sets differ (" + std::to_string(table.n_cols()) +
                         " columns vs " + std::to_string(stats.per_column.size()) + " stats)");
    FeatureTable out = table;
    for (std::size_t j = 0; j < table.n_cols(); ++j) {
        auto it = stats.per_column.find(table.names[j]);
        if (it == stats.per_column.end())
            throw InputError("apply_stats: no stats for column '" + table.names[j] + "'");
        const auto [mean, sd] = it->second;
        for (double& v : out.cols[j]) {
            if (std::isnan(v)) v = mean;
            v = (v - mean) / sd;
        }
    }
    out.standardization = stats;
    return out;
}

FeatureTable build_interactions(const FeatureTable& table,
                                const std::vector<std::string>& base_columns) {
    std::set<std::string> seen;
    for (const auto& name : base_columns)
        if (!seen.insert(name).second)
            throw InputError("build_interactions: duplicate base column '" + name + "'");

    std::vector<int> idx;
    for (const auto& name : base_columns) {
        int j = table.find(name);
        if (j < 0) throw InputError("build_interactions: unknown column '" + name + "'");
        idx.push_back(j);
    }

    FeatureTable out;
    out.hours = table.hours;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        out.names.push_back(base_columns[a]);
        out.cols.push_back(table.cols[static_cast<std::size_t>(idx[a])]);
    }
    const std::size_t n = table.n_rows();
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a; b < idx.size(); ++b) {
            const auto& ca = table.cols[static_cast<std::size_t>(idx[a])];
            const auto& cb = table.cols[static_cast<std::size_t>(idx[b])];
            std::vector<double> prod(n);
            for (std::size_t i = 0; i < n; ++i) prod[i] = ca[i] * cb[i];
            out.names.push_back(base_columns[a] + "*" + base_columns[b]);
            out.cols.push_back(std::move(prod));
        }
    }
    return out;
}

std::string write_feature_table_csv(const FeatureTable& table) {
    std::ostringstream os;
    os.precision(17);
    os << "epoch_hour";
    for (const auto& name : table.names) os << ',' << name;
    os << '\n';
    for (std::size_t i = 0; i < table.n_rows(); ++i) {
        os << table.hours[i];
        for (std::size_t j = 0; j < table.n_cols(); ++j) {
            os << ',';
            if (!std::isnan(table.cols[j][i])) os << table.cols[j][i];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace smellkit
