#include "smellkit/time_util.hpp"

namespace smellkit {

// Proleptic Gregorian <-> day count, via the era decomposition
// (Howard Hinnant's chrono date algorithms).
std::int64_t days_from_civil(int year, int month, int day) {
    year -= month <= 2;
    const std::int64_t era = (year >= 0 ? year : year - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(year - era * 400);              // [0, 399]
    const unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;                // [0, 146096]
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t days) {
    days += 719468;
    const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(days - era * 146097);           // [0, 146096]
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);              // [0, 365]
    const unsigned mp = (5 * doy + 2) / 153;                                   // [0, 11]
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;                           // [1, 31]
    const unsigned m = mp + (mp < 10 ? 3 : -9);                                // [1, 12]
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

int weekday_from_days(std::int64_t days) {
    return static_cast<int>(floor_mod(days + 3, 7));
}

LocalClock local_clock(std::int64_t epoch_hour, int utc_offset_hours) {
    const std::int64_t shifted = epoch_hour + utc_offset_hours;
    const std::int64_t day = floor_div(shifted, kHoursPerDay);
    const CivilDate cd = civil_from_days(day);
    LocalClock out;
    out.year = cd.year;
    out.month = cd.month;
    out.day_of_month = cd.day;
    out.day_of_week = weekday_from_days(day);
    out.hour_of_day = static_cast<int>(floor_mod(shifted, kHoursPerDay));
    return out;
}

std::int64_t local_day_start(std::int64_t epoch_seconds, int utc_offset_hours) {
    const std::int64_t offset = static_cast<std::int64_t>(utc_offset_hours) * kSecondsPerHour;
    const std::int64_t local = epoch_seconds + offset;
    return floor_div(local, 86400) * 86400 - offset;
}

}  // namespace smellkit
