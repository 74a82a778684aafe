#include "smellkit/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "smellkit/csv.hpp"
#include "smellkit/errors.hpp"

namespace smellkit {

namespace {

[[noreturn]] void bad_row(std::size_t line, const std::string& why) {
    throw InputError("line " + std::to_string(line) + ": " + why);
}

std::int64_t parse_i64(const std::string& s, std::size_t line, const char* what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        bad_row(line, std::string("non-integer ") + what + " '" + s + "'");
    return v;
}

double parse_double(const std::string& s, std::size_t line, const char* what) {
    if (s.empty()) bad_row(line, std::string("empty ") + what);
    // strtod accepts "nan"/"inf"; the schema does not.
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
              c == '.' || c == 'e' || c == 'E'))
            bad_row(line, std::string("non-numeric ") + what + " '" + s + "'");
    }
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) bad_row(line, std::string("non-numeric ") + what + " '" + s + "'");
        return v;
    } catch (const std::exception&) {
        bad_row(line, std::string("non-numeric ") + what + " '" + s + "'");
    }
}

bool is_five_digit_zip(const std::string& s) {
    if (s.size() != 5) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::vector<SmellReport> parse_smell_reports(std::istream& csv_source) {
    static const std::vector<std::string> header = {"timestamp", "zipcode",     "rating",
                                                    "description", "symptom",   "comment"};
    auto rows = csv::read_all(csv_source, header);
    std::vector<SmellReport> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.fields.size() != 6)
            bad_row(row.line, "expected 6 columns, got " + std::to_string(row.fields.size()));
        SmellReport r;
        r.timestamp = parse_i64(row.fields[0], row.line, "timestamp");
        if (r.timestamp <= 0) bad_row(row.line, "timestamp must be positive");
        r.zipcode = row.fields[1];
        if (!is_five_digit_zip(r.zipcode))
            bad_row(row.line, "zipcode '" + r.zipcode + "' is not five digits");
        std::int64_t rating = parse_i64(row.fields[2], row.line, "rating");
        if (rating < 1 || rating > 5)
            bad_row(row.line, "rating " + std::to_string(rating) + " outside 1..5");
        r.rating = static_cast<int>(rating);
        r.description = row.fields[3];
        r.symptom = row.fields[4];
        r.comment = row.fields[5];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SensorReading> parse_sensor_readings(std::istream& csv_source) {
    static const std::vector<std::string> header = {"timestamp", "station_id", "channel", "value"};
    auto rows = csv::read_all(csv_source, header);
    std::vector<SensorReading> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.fields.size() != 4)
            bad_row(row.line, "expected 4 columns, got " + std::to_string(row.fields.size()));
        SensorReading r;
        r.timestamp = parse_i64(row.fields[0], row.line, "timestamp");
        if (r.timestamp <= 0) bad_row(row.line, "timestamp must be positive");
        r.station_id = row.fields[1];
        r.channel = row.fields[2];
        if (row.fields[3].empty()) {
            r.missing = true;
            r.value = std::numeric_limits<double>::quiet_NaN();
        } else {
            r.value = parse_double(row.fields[3], row.line, "value");
            if (!std::isfinite(r.value)) bad_row(row.line, "value is not finite");
            if (r.channel == "wind_dir" && (r.value < 0.0 || r.value >= 360.0))
                bad_row(row.line, "wind_dir value " + row.fields[3] + " outside [0, 360)");
        }
        out.push_back(std::move(r));
    }
    return out;
}

DatasetSummary summarize(const std::vector<SmellReport>& reports,
                         const std::vector<SensorReading>& readings) {
    if (reports.empty() && readings.empty()) throw InputError("empty dataset");
    DatasetSummary s;
    s.report_count = static_cast<std::int64_t>(reports.size());
    s.reading_count = static_cast<std::int64_t>(readings.size());
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& r : reports) {
        lo = std::min(lo, r.timestamp);
        hi = std::max(hi, r.timestamp);
    }
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> counts;  // channel -> (missing, total)
    for (const auto& r : readings) {
        lo = std::min(lo, r.timestamp);
        hi = std::max(hi, r.timestamp);
        auto& c = counts[r.channel];
        if (r.missing) ++c.first;
        ++c.second;
    }
    s.time_min = lo;
    s.time_max = hi;
    for (const auto& [channel, c] : counts)
        s.missing_ratio_per_channel[channel] =
            static_cast<double>(c.first) / static_cast<double>(c.second);
    return s;
}

std::string write_smell_reports_csv(const std::vector<SmellReport>& reports) {
    std::string out = "timestamp,zipcode,rating,description,symptom,comment\n";
    for (const auto& r : reports) {
        out += csv::format_row({std::to_string(r.timestamp), r.zipcode, std::to_string(r.rating),
                                r.description, r.symptom, r.comment});
        out += '\n';
    }
    return out;
}

std::string write_sensor_readings_csv(const std::vector<SensorReading>& readings) {
    std::string out = "timestamp,station_id,channel,value\n";
    for (const auto& r : readings) {
        std::string value;
        if (!r.missing) {
            std::ostringstream os;
            os.precision(17);
            os << r.value;
            value = os.str();
        }
        out += csv::format_row({std::to_string(r.timestamp), r.station_id, r.channel, value});
        out += '\n';
    }
    return out;
}

}  // namespace smellkit
