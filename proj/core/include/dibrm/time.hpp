#pragma once
// UTC timestamp handling. All model arithmetic runs on whole seconds since
// the Unix epoch; calendar days are UTC days.

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace dibrm {

using UtcSeconds = std::int64_t;

inline constexpr std::int64_t kSecondsPerDay = 86400;

// UTC calendar day containing t (works for pre-epoch instants too).
std::chrono::sys_days day_of(UtcSeconds t);

UtcSeconds start_of_day(std::chrono::sys_days d);

// Last inclusive second of the day, 23:59:59.
UtcSeconds end_of_day(std::chrono::sys_days d);

// Accepts ISO-8601: "2018-06-06T10:00:00Z", a space instead of 'T',
// fractional seconds (truncated), "+hh:mm"/"-hh:mm"/"+hhmm"/"+hh" offsets,
// a bare date (midnight), and no zone at all (treated as UTC).
UtcSeconds parse_timestamp(std::string_view text);

// Normalized form: "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(UtcSeconds t);

// "YYYY-MM-DD" only.
std::chrono::sys_days parse_day(std::string_view text);
std::string format_day(std::chrono::sys_days d);

}  // namespace dibrm
