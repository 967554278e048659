// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/scheduler.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "earlyadd/errors.hpp"

namespace earlyadd {

bool LiveSet::complete() const {
    return entries_.size() == 1 && entries_.front().term.covers_all(width_);
}

std::vector<TermId> LiveSet::release_min() {
    Time min_ready = std::numeric_limits<Time>::max();
    bool any = false;
    for (const Entry& e : entries_) {
        if (!e.released) {
            min_ready = std::min(min_ready, e.term.ready);
            any = true;
        }
    }
    if (!any) {
        throw NothingToRelease();
    }
    std::vector<TermId> ids;
    for (Entry& e : entries_) {
        if (!e.released && e.term.ready == min_ready) {
            e.released = true;
            ids.push_back(e.term.id);
        }
    }
    return ids;
}

Term LiveSet::combine_at(int first, int size, bool release_output) {
    assert(size >= 2 && first >= 0 && first + size <= static_cast<int>(entries_.size()));
    const auto begin = entries_.begin() + first;
    Term merged;
    merged.id = next_id_++;
    merged.kind = begin->term.kind; // carry prefix only ever sits leftmost
    merged.lo = begin->term.lo;
    merged.hi = (begin + size - 1)->term.hi;
    Time latest = 0;
    for (int k = 0; k < size; ++k) {
        latest = std::max(latest, (begin + k)->term.ready);
    }
    merged.ready = latest + 1;
    entries_.erase(begin + 1, begin + size);
    entries_[static_cast<std::size_t>(first)] = Entry{merged, release_output};
    return merged;
}

LiveSet init_terms(const DelayProfile& dp) {
    LiveSet live;
    live.width_ = dp.width();
    live.entries_.reserve(static_cast<std::size_t>(dp.width()));
    for (int i = 0; i < dp.width(); ++i) {
        Term t;
        t.id = live.next_id_++;
        t.kind = (i == 0) ? TermKind::CarryPrefix : TermKind::BlockPair;
        t.lo = i;
        t.hi = i;
        t.ready = dp.arrival(i);
        live.entries_.push_back({t, false});
    }
    return live;
}

std::vector<Window> candidate_windows(const LiveSet& live, const SchedulerConfig& cfg) {
    const auto& entries = live.entries();
    const int n = static_cast<int>(entries.size());
    std::vector<Window> windows;
    for (int s = 0; s < n; ++s) {
        if (!entries[static_cast<std::size_t>(s)].released) {
            continue;
        }
        Time latest = entries[static_cast<std::size_t>(s)].term.ready;
        for (int m = 2; m <= cfg.blocking_factor && s + m <= n; ++m) {
            const LiveSet::Entry& tail = entries[static_cast<std::size_t>(s + m - 1)];
            if (!tail.released) {
                break; // longer windows from s would cross the same pending term
            }
            latest = std::max(latest, tail.term.ready);
            Window w;
            w.first = s;
            w.size = m;
            w.lo = entries[static_cast<std::size_t>(s)].term.lo;
            w.completion = latest + 1;
            w.has_carry_prefix =
                entries[static_cast<std::size_t>(s)].term.kind == TermKind::CarryPrefix;
            windows.push_back(w);
        }
    }
    return windows;
}

namespace {

TraceEvent release_event(int iteration, const Term& term) {
    TraceEvent ev;
    ev.iteration = iteration;
    ev.action = Action::Release;
    ev.inputs = {term.id};
    ev.output = term;
    return ev;
}

TraceEvent combine_event(int iteration, std::vector<TermId> inputs, const Term& out) {
    TraceEvent ev;
    ev.iteration = iteration;
    ev.action = Action::Combine;
    ev.inputs = std::move(inputs);
    ev.output = out;
    return ev;
}

const Term& term_by_id(const LiveSet& live, TermId id) {
    for (const auto& e : live.entries()) {
        if (e.term.id == id) {
            return e.term;
        }
    }
    assert(false);
    return live.entries().front().term;
}

} // namespace

ScheduleTrace gef_schedule(const DelayProfile& dp) {
    ScheduleTrace trace;
    trace.width = dp.width();
    LiveSet live = init_terms(dp);
    int iteration = 0;
    while (!live.complete()) {
        for (TermId id : live.release_min()) {
            trace.events.push_back(release_event(iteration, term_by_id(live, id)));
        }
        // Left-to-right pairing sweep over released terms; results are
        // pending again until a later release.
        int first = 0;
        while (first + 1 < static_cast<int>(live.entries().size())) {
            const auto& e = live.entries();
            if (e[static_cast<std::size_t>(first)].released &&
                e[static_cast<std::size_t>(first + 1)].released) {
                std::vector<TermId> inputs = {e[static_cast<std::size_t>(first)].term.id,
                                              e[static_cast<std::size_t>(first + 1)].term.id};
                Term out = live.combine_at(first, 2, false);
                trace.events.push_back(combine_event(iteration, std::move(inputs), out));
            }
            ++first;
        }
        ++iteration;
    }
    trace.final_time = live.entries().front().term.ready;
    return trace;
}

ScheduleTrace igef_schedule(const DelayProfile& dp, const SchedulerConfig& cfg) {
    ScheduleTrace trace;
    trace.width = dp.width();
    LiveSet live = init_terms(dp);
    int iteration = -1;
    while (!live.complete()) {
        std::vector<Window> windows = candidate_windows(live, cfg);
        if (windows.empty()) {
            ++iteration;
            for (TermId id : live.release_min()) {
                trace.events.push_back(release_event(iteration, term_by_id(live, id)));
            }
            continue;
        }
        const Window* best = &windows.front();
        for (const Window& w : windows) {
            if (w.completion != best->completion) {
                if (w.completion < best->completion) best = &w;
                continue;
            }
            if (cfg.carry_priority && w.has_carry_prefix != best->has_carry_prefix) {
                if (w.has_carry_prefix) best = &w;
                continue;
            }
            if (w.size != best->size) {
                if (w.size > best->size) best = &w;
                continue;
            }
            if (w.lo < best->lo) best = &w;
        }
        std::vector<TermId> inputs;
        for (int k = 0; k < best->size; ++k) {
            inputs.push_back(
                live.entries()[static_cast<std::size_t>(best->first + k)].term.id);
        }
        Term out = live.combine_at(best->first, best->size, true);
        trace.events.push_back(combine_event(iteration, std::move(inputs), out));
    }
    trace.final_time = live.entries().front().term.ready;
    return trace;
}

} // namespace earlyadd
