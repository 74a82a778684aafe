#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smellkit/ingest.hpp"

namespace smellkit {

/// Per-column impute/standardize statistics fitted on training data.
/// `mean` doubles as the imputation value; `std` is the population standard
/// deviation of the imputed column (1 for constant columns).
struct ScaleStats {
    std::map<std::string, std::pair<double, double>> per_column;  // name -> (mean, std)
};

/// Hourly predictor matrix: one row per consecutive epoch hour, one named
/// column per feature. Missing cells are NaN until imputation.
struct FeatureTable {
    std::vector<std::int64_t> hours;             // strictly increasing, step 1
    std::vector<std::string> names;              // column names, order fixed
    std::vector<std::vector<double>> cols;       // cols[j].size() == hours.size()
    std::optional<ScaleStats> standardization;   // present after standardizing

    std::size_t n_rows() const { return hours.size(); }
    std::size_t n_cols() const { return cols.size(); }
    int find(const std::string& name) const;     // -1 when absent
    std::vector<double> row(std::size_t i) const;
};

struct WindComponents {
    double x;  // cosine component
    double y;  // sine component
};

/// Mean of readings per (station, channel) over each hour bucket (t-1h, t],
/// indexed by the bucket's ending epoch hour. Hours with no readings for a
/// column are NaN. Columns are named `station.channel`.
FeatureTable resample_hourly(const std::vector<SensorReading>& readings,
                             const std::set<std::string>& channels,
                             const std::set<std::string>& stations);

/// Unit-circle decomposition of a direction in degrees, [0, 360).
WindComponents decompose_wind(double direction_deg);

/// Replaces every `station.wind_dir` column with `station.wind_dir_cos` and
/// `station.wind_dir_sin`. NaN directions stay NaN in both components.
FeatureTable decompose_wind_columns(const FeatureTable& table);

/// Appends `c.lag{k}` for each existing column c and k in 1..lag_hours; the
/// first k rows of a lag-k column are NaN.
FeatureTable add_lags(const FeatureTable& table, int lag_hours);

/// Appends integer columns day_of_week (0=Monday), hour_of_day, day_of_month
/// computed from the epoch hour shifted by a fixed UTC offset.
FeatureTable add_calendar(const FeatureTable& table, int utc_offset_hours);

struct CyclicalTime {
    double xh, yh;  // cos/sin of hour of day
    double xm, ym;  // cos/sin of month of year
};

/// XH = cos(pi*hour/12), YH = sin(pi*hour/12), XM = cos(pi*month/6),
/// YM = sin(pi*month/6). hour in 0..23, month in 1..12.
CyclicalTime cyclical_time(int hour, int month);

/// Imputes each column's missing cells with its observed mean, then centers
/// and scales to zero mean / unit population variance. Constant columns are
/// centered and divided by 1. Throws if a column is entirely missing.
std::pair<FeatureTable, ScaleStats> fit_impute_standardize(const FeatureTable& train);

/// Applies training-fitted stats to another table (impute with training mean,
/// standardize with training mean/std). Column sets must match exactly.
FeatureTable apply_stats(const FeatureTable& table, const ScaleStats& stats);

/// Keeps `base_columns` and appends every unordered pairwise product column
/// `a*b` (a <= b in the given order, squares included). Output column count is
/// B + B(B+1)/2.
FeatureTable build_interactions(const FeatureTable& table,
                                const std::vector<std::string>& base_columns);

std::string write_feature_table_csv(const FeatureTable& table);

}  // namespace smellkit
