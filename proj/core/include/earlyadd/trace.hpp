// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "earlyadd/delay_profile.hpp"
#include "earlyadd/term.hpp"

namespace earlyadd {

enum class Action : std::uint8_t { Release, Combine };

// Release: `output` is the term moved from the pending set to the released
// set (inputs holds just its id). Combine: `inputs` are the consumed term
// ids in ascending bit position and `output` is the merged term.
struct TraceEvent {
    int iteration = 0;
    Action action = Action::Release;
    std::vector<TermId> inputs;
    Term output;
};

// Ordered record of release and combine events for one scheduling run.
// Terms 0..width-1 are the initial single-bit terms (bit 0 is the carry
// prefix); a width-1 profile produces no events at all.
struct ScheduleTrace {
    int width = 0;
    std::vector<TraceEvent> events;
    Time final_time = 0;
};

// Re-simulates the event list and checks the trace invariants: live ranges
// always partition [0, width-1], every term is produced once and consumed at
// most once, combines touch only released adjacent terms with
// ready = max(inputs) + 1, releases pick the minimum pending ready time, and
// the run ends with a single term covering the full range whose ready time
// equals final_time. Returns the first violation found, nullopt if clean.
// With a profile given, additionally checks that initial terms carry the
// profile's arrival times and every term's ready covers its range's arrivals.
std::optional<std::string> replay_trace(const ScheduleTrace& trace,
                                        const DelayProfile* dp = nullptr);

} // namespace earlyadd
