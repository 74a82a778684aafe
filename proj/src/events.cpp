#include "smellkit/events.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "smellkit/errors.hpp"
#include "smellkit/time_util.hpp"

namespace smellkit {

EventLabels confidence_scores_on(const std::vector<std::int64_t>& hours,
                                 const std::vector<SmellReport>& reports,
                                 const std::set<std::string>& zipcodes, int horizon_hours,
                                 int rating_threshold) {
    if (horizon_hours < 1) throw InputError("confidence_scores: horizon must be >= 1");
    EventLabels out;
    out.hours = hours;
    out.scores.assign(hours.size(), 0.0);
    out.classes.assign(hours.size(), 0);
    out.horizon_hours = horizon_hours;
    out.rating_threshold = rating_threshold;
    if (hours.empty()) return out;

    const std::int64_t first = hours.front();
    for (const auto& r : reports) {
        if (r.rating <= rating_threshold) continue;
        if (!zipcodes.empty() && !zipcodes.count(r.zipcode)) continue;
        // Report at ts contributes to every hour t with t <= ts < t + horizon.
        const std::int64_t h = floor_div(r.timestamp, kSecondsPerHour);
        for (std::int64_t t = h - horizon_hours + 1; t <= h; ++t) {
            const std::int64_t i = t - first;
            if (i < 0 || i >= static_cast<std::int64_t>(hours.size())) continue;
            out.scores[static_cast<std::size_t>(i)] += r.rating;
        }
    }
    return out;
}

EventLabels confidence_scores(const std::vector<SmellReport>& reports,
                              const std::set<std::string>& zipcodes, int horizon_hours,
                              int rating_threshold) {
    if (horizon_hours < 1) throw InputError("confidence_scores: horizon must be >= 1");
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    bool any = false;
    for (const auto& r : reports) {
        if (!zipcodes.empty() && !zipcodes.count(r.zipcode)) continue;
        any = true;
        const std::int64_t h = floor_div(r.timestamp, kSecondsPerHour);
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    if (!any) throw InputError("confidence_scores: no reports after zipcode filtering");
    std::vector<std::int64_t> hours;
    for (std::int64_t t = lo; t <= hi; ++t) hours.push_back(t);
    return confidence_scores_on(hours, reports, zipcodes, horizon_hours, rating_threshold);
}

EventLabels binarize(EventLabels labels, double score_threshold) {
    labels.score_threshold = score_threshold;
    labels.classes.resize(labels.scores.size());
    for (std::size_t i = 0; i < labels.scores.size(); ++i)
        labels.classes[i] = labels.scores[i] > score_threshold ? 1 : 0;
    return labels;
}

std::vector<EventInterval> merge_events(const std::vector<std::int64_t>& hours,
                                        const std::vector<int>& classes) {
    if (hours.size() != classes.size())
        throw InputError("merge_events: hours/classes length mismatch");
    std::vector<EventInterval> out;
    for (std::size_t i = 0; i < classes.size();) {
        if (classes[i] != 1) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < classes.size() && classes[j + 1] == 1 && hours[j + 1] == hours[j] + 1) ++j;
        out.push_back(EventInterval{hours[i], hours[j]});
        i = j + 1;
    }
    return out;
}

std::vector<int> expand_events(const std::vector<std::int64_t>& hours,
                               const std::vector<EventInterval>& intervals) {
    std::vector<int> classes(hours.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < hours.size(); ++i) {
        while (k < intervals.size() && intervals[k].end < hours[i]) ++k;
        if (k < intervals.size() && intervals[k].start <= hours[i] && hours[i] <= intervals[k].end)
            classes[i] = 1;
    }
    return classes;
}

bool detect_posthoc_event(const std::vector<SmellReport>& reports, std::int64_t window_end,
                          int min_reports, int rating_threshold) {
    if (min_reports < 1) throw InputError("detect_posthoc_event: min_reports must be >= 1");
    int count = 0;
    for (const auto& r : reports) {
        if (r.rating <= rating_threshold) continue;
        if (r.timestamp > window_end - kSecondsPerHour && r.timestamp <= window_end) ++count;
    }
    return count >= min_reports;
}

std::int64_t daily_summary(const std::vector<SmellReport>& reports, std::int64_t day_anchor,
                           int utc_offset_hours) {
    const std::int64_t start = local_day_start(day_anchor, utc_offset_hours);
    std::int64_t count = 0;
    for (const auto& r : reports)
        if (r.timestamp >= start && r.timestamp < start + 86400) ++count;
    return count;
}

std::string write_event_labels_csv(const EventLabels& labels) {
    std::ostringstream os;
    os.precision(17);
    os << "epoch_hour,score,class\n";
    for (std::size_t i = 0; i < labels.hours.size(); ++i)
        os << labels.hours[i] << ',' << labels.scores[i] << ',' << labels.classes[i] << '\n';
    return os.str();
}

std::string write_intervals_csv(const std::vector<EventInterval>& intervals) {
    std::string out = "start_hour,end_hour\n";
    for (const auto& iv : intervals)
        out += std::to_string(iv.start) + "," + std::to_string(iv.end) + "\n";
    return out;
}

}  // namespace smellkit
