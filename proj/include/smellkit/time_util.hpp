#pragma once

#include <cstdint>

namespace smellkit {

struct CivilDate {
    int year;
    int month;  // 1..12
    int day;    // 1..31
};

/// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(int year, int month, int day);

/// Inverse of days_from_civil.
CivilDate civil_from_days(std::int64_t days);

/// Weekday with Monday = 0 .. Sunday = 6. Day 0 (1970-01-01) is a Thursday.
int weekday_from_days(std::int64_t days);

constexpr std::int64_t kSecondsPerHour = 3600;
constexpr std::int64_t kHoursPerDay = 24;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - floor_div(a, b) * b;
}

/// Epoch-hour index of an epoch-seconds timestamp (floor).
inline std::int64_t epoch_hour(std::int64_t epoch_seconds) {
    return floor_div(epoch_seconds, kSecondsPerHour);
}

struct LocalClock {
    int year;
    int month;        // 1..12
    int day_of_month; // 1..31
    int day_of_week;  // 0 = Monday .. 6 = Sunday
    int hour_of_day;  // 0..23
};

/// Calendar fields of an epoch hour shifted by a fixed UTC offset.
LocalClock local_clock(std::int64_t epoch_hour, int utc_offset_hours);

/// Epoch seconds of local midnight for the local day containing `epoch_seconds`.
std::int64_t local_day_start(std::int64_t epoch_seconds, int utc_offset_hours);

}  // namespace smellkit
