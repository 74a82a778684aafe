#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace smellkit {

/// One citizen odor observation: a 1..5 severity rating at a timestamp, tagged
/// with a 5-digit zipcode and optional free text.
struct SmellReport {
    std::int64_t timestamp = 0;  // epoch seconds, UTC
    std::string zipcode;
    int rating = 0;  // 1..5
    std::string description;
    std::string symptom;
    std::string comment;

    bool operator==(const SmellReport&) const = default;
};

/// One sensor observation for a (station, channel) pair. `missing` marks an
/// explicitly empty value field; `value` is meaningless when missing is set.
struct SensorReading {
    std::int64_t timestamp = 0;  // epoch seconds, UTC
    std::string station_id;
    std::string channel;  // e.g. H2S, PM25, SO2, wind_dir, wind_speed, wind_dir_std
    double value = 0.0;
    bool missing = false;

    bool operator==(const SensorReading&) const = default;
};

struct DatasetSummary {
    std::int64_t report_count = 0;
    std::int64_t reading_count = 0;
    std::int64_t time_min = 0;  // epoch seconds over the union of both inputs
    std::int64_t time_max = 0;
    std::map<std::string, double> missing_ratio_per_channel;
};

/// Parses `timestamp,zipcode,rating,description,symptom,comment` rows.
/// Throws InputError naming the line on any malformed row.
std::vector<SmellReport> parse_smell_reports(std::istream& csv_source);

/// Parses `timestamp,station_id,channel,value` rows. An empty value field is
/// the only missing marker; "NaN"/"null" are parse errors. wind_dir values
/// must lie in [0, 360).
std::vector<SensorReading> parse_sensor_readings(std::istream& csv_source);

DatasetSummary summarize(const std::vector<SmellReport>& reports,
                         const std::vector<SensorReading>& readings);

std::string write_smell_reports_csv(const std::vector<SmellReport>& reports);
std::string write_sensor_readings_csv(const std::vector<SensorReading>& readings);

}  // namespace smellkit
