// SPDX-License-Identifier: Apache-2.0
//
// Earliest-first carry-combination schedulers.
//
// Both algorithms view the adder as a position-ordered list of live terms
// whose bit ranges partition [0, N-1]. A term becomes *released* once its
// signals are available; combining 2..r adjacent released terms produces a
// wider term one normalized operator delay after its latest input.
//
// gef_schedule: per iteration, release every pending term tying the minimum
// ready time, then sweep the released terms left-to-right combining adjacent
// pairs; new terms go back to the pending set.
//
// igef_schedule: keeps combined terms in the released working set and always
// commits the cheapest available combine window (ties: window containing the
// carry prefix, then wider, then lower position). Windows of three terms are
// realized as two cascaded ternary operators charged one time unit.
#pragma once

#include <vector>

#include "earlyadd/delay_profile.hpp"
#include "earlyadd/term.hpp"
#include "earlyadd/trace.hpp"

namespace earlyadd {

enum class Algorithm : std::uint8_t { Gef, Igef };

struct SchedulerConfig {
    int blocking_factor = 3; // max terms merged per combine step, 2 or 3
    bool carry_priority = true;
    Algorithm algorithm = Algorithm::Igef;
};

// Position-ordered live terms. Consecutive entries always cover abutting bit
// ranges, so "adjacent" means consecutive here.
class LiveSet {
public:
    struct Entry {
        Term term;
        bool released = false;
    };

    const std::vector<Entry>& entries() const { return entries_; }
    int width() const { return width_; }

    // True once a single term spans [0, width-1].
    bool complete() const;

    // Moves every pending term tying the minimum pending ready time into the
    // released set; returns their ids in ascending bit position.
    // Throws NothingToRelease when no pending term remains.
    std::vector<TermId> release_min();

    // Merges `size` consecutive entries starting at `first` into one term
    // with ready = max(member ready) + 1. The result keeps the first
    // member's kind and is released iff release_output is set.
    Term combine_at(int first, int size, bool release_output);

    friend LiveSet init_terms(const DelayProfile& dp);

private:
    std::vector<Entry> entries_;
    int width_ = 0;
    TermId next_id_ = 0;
};

// One live term per bit, all pending: bit 0 is a carry prefix (its carry
// needs no operator), the rest are single-bit block pairs.
LiveSet init_terms(const DelayProfile& dp);

// A run of 2..blocking_factor consecutive released terms.
struct Window {
    int first = 0; // index into LiveSet::entries()
    int size = 0;
    int lo = 0;
    Time completion = 0; // max member ready + 1
    bool has_carry_prefix = false;
};

// Every combinable window, in ascending (position, size) order.
std::vector<Window> candidate_windows(const LiveSet& live, const SchedulerConfig& cfg);

ScheduleTrace gef_schedule(const DelayProfile& dp);
ScheduleTrace igef_schedule(const DelayProfile& dp, const SchedulerConfig& cfg = {});

} // namespace earlyadd
