#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "smellkit/ingest.hpp"

namespace smellkit {

/// Per-hour smell-event labels. `scores[i]` is the sum of qualifying ratings
/// over [hours[i], hours[i] + horizon); `classes[i]` is 1 iff the score
/// strictly exceeds score_threshold.
struct EventLabels {
    std::vector<std::int64_t> hours;  // consecutive epoch hours
    std::vector<double> scores;
    std::vector<int> classes;
    int horizon_hours = 8;
    int rating_threshold = 2;
    double score_threshold = 40.0;
};

/// A maximal run of positive hours, inclusive on both ends.
struct EventInterval {
    std::int64_t start;  // epoch hour
    std::int64_t end;    // epoch hour, >= start

    bool operator==(const EventInterval&) const = default;
};

/// Confidence score per hour on an explicit hour axis: the sum of ratings of
/// reports with rating > rating_threshold, zipcode in the filter (empty set =
/// all), and timestamp in [hour, hour + horizon) hours.
EventLabels confidence_scores_on(const std::vector<std::int64_t>& hours,
                                 const std::vector<SmellReport>& reports,
                                 const std::set<std::string>& zipcodes, int horizon_hours = 8,
                                 int rating_threshold = 2);

/// Same, with the hour axis derived from the filtered reports' own time span.
EventLabels confidence_scores(const std::vector<SmellReport>& reports,
                              const std::set<std::string>& zipcodes, int horizon_hours = 8,
                              int rating_threshold = 2);

/// Fills `classes` with 1 where score > score_threshold (strict).
EventLabels binarize(EventLabels labels, double score_threshold = 40.0);

/// Merges maximal runs of 1s over consecutive hours into inclusive intervals.
std::vector<EventInterval> merge_events(const std::vector<std::int64_t>& hours,
                                        const std::vector<int>& classes);

/// Expands intervals back onto an hour axis (inverse of merge_events).
std::vector<int> expand_events(const std::vector<std::int64_t>& hours,
                               const std::vector<EventInterval>& intervals);

/// Post-hoc trigger: true iff at least min_reports reports with rating >
/// rating_threshold fall in (window_end - 3600, window_end].
bool detect_posthoc_event(const std::vector<SmellReport>& reports, std::int64_t window_end,
                          int min_reports, int rating_threshold = 2);

/// Number of reports (any rating) within the local day that contains
/// `day_anchor` under the given fixed UTC offset.
std::int64_t daily_summary(const std::vector<SmellReport>& reports, std::int64_t day_anchor,
                           int utc_offset_hours);

std::string write_event_labels_csv(const EventLabels& labels);
std::string write_intervals_csv(const std::vector<EventInterval>& intervals);

}  // namespace smellkit
