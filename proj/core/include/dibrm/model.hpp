#pragma once
// DIBRM update rules. Each interaction contributes a fixed basic value plus
// a streak-driven cumulative bonus; previously accumulated trust decays by
// beta for every whole activity period elapsed since the last interaction.

#include "dibrm/time.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dibrm {

// What happens to the activity streak when a gap of one or more whole
// periods is observed: kReset restarts it at 1, kCumulative keeps counting.
enum class StreakMode { kReset, kCumulative };

StreakMode parse_streak_mode(std::string_view text);
std::string_view to_string(StreakMode mode);

struct ModelParams {
    double alpha = 1.0;    // weight of the cumulative part, >= 0
    double beta = 0.9;     // forgetting factor, in [0, 1]; 1 disables decay
    double ta_days = 1.0;  // activity period length in days, > 0, fractional ok
    std::map<std::string, double> base_values = {{"post", 4.0}, {"comment", 2.0}};
    StreakMode streak_mode = StreakMode::kReset;

    std::int64_t ta_seconds() const;  // ta_days rounded to whole seconds, >= 1
    void validate() const;            // throws ValidationError on a bad field
};

struct InteractionEvent {
    std::string event_id;  // unique within a stream, used for tie-breaks
    std::int64_t user_id = 0;
    UtcSeconds timestamp = 0;
    std::string kind;           // key into ModelParams::base_values
    std::int64_t vote = 0;      // read by reference scorers only, never by DIBRM

    friend bool operator==(const InteractionEvent&, const InteractionEvent&) = default;
};

struct UserTrustState {
    std::int64_t user_id = 0;
    std::optional<UtcSeconds> last_timestamp;
    std::int64_t activity_streak = 0;  // A_n
    double trust = 0.0;                // T_n
    double historical = 0.0;           // sum of T_1..T_n, never decreases
    std::int64_t event_count = 0;
};

// Whole periods between two instants: floor((t_now - t_prev) / t_a).
// Throws ValidationError("non-monotonic timestamps") if t_now < t_prev.
std::int64_t periods_elapsed(UtcSeconds t_now, UtcSeconds t_prev, std::int64_t ta_seconds);

// Cumulative part of one interaction: i_b * alpha * (1 - 1/(a_n + 1)).
// Lives in [0, i_b*alpha) and grows with the streak.
double cumulative_value(double i_b, double alpha, std::int64_t a_n);

// Trust recurrence: prev_trust * beta^delta + i_n.
double update_trust(double prev_trust, std::int64_t delta, double beta, double i_n);

// Streak update given the elapsed whole periods. Always returns >= 1.
std::int64_t update_streak(std::int64_t a_prev, std::int64_t delta, StreakMode mode);

// One DIBRM step. A user's events must arrive in (timestamp, event_id)
// order; equal timestamps are fine. Throws ValidationError on an unmapped
// kind or an out-of-order timestamp.
UserTrustState process_event(const UserTrustState& state, const InteractionEvent& event,
                             const ModelParams& params);

// Trust as it would read at instant t with no interaction in between:
// trust * beta^periods_elapsed(t, last_timestamp). Empty state reads 0.
// Does not mutate the state. Throws if t precedes the last interaction.
double decayed_trust_at(const UserTrustState& state, UtcSeconds t, const ModelParams& params);

// Folds a sorted event stream into final per-user states.
std::unordered_map<std::int64_t, UserTrustState> process_stream(
    const std::vector<InteractionEvent>& events, const ModelParams& params);

}  // namespace dibrm
