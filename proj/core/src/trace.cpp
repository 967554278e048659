// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/trace.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace earlyadd {

namespace {

constexpr Time kUnknownReady = std::numeric_limits<Time>::min();

struct LiveEntry {
    TermId id;
    TermKind kind;
    int lo;
    int hi;
    Time ready; // kUnknownReady until learned from the trace or profile
    bool released;
};

std::string describe(const Term& t) {
    std::ostringstream os;
    os << "term " << t.id << " [" << t.lo << ".." << t.hi << "]@" << t.ready;
    return os.str();
}

} // namespace

std::optional<std::string> replay_trace(const ScheduleTrace& trace, const DelayProfile* dp) {
    const int width = trace.width;
    if (width < 1) {
        return "trace width must be at least 1";
    }
    if (dp && dp->width() != width) {
        return "trace width does not match profile width";
    }

    // Every term's ready time and release status is knowable up front: leaves
    // from the profile or their own release event, combined terms from the
    // combine event that produces them.
    std::map<TermId, Time> known_ready;
    std::set<TermId> has_release;
    for (int i = 0; i < width; ++i) {
        if (dp) {
            known_ready[static_cast<TermId>(i)] = dp->arrival(i);
        }
    }
    for (const TraceEvent& ev : trace.events) {
        if (ev.action == Action::Release) {
            if (!has_release.insert(ev.output.id).second) {
                return "double release of " + describe(ev.output);
            }
            auto [it, inserted] = known_ready.emplace(ev.output.id, ev.output.ready);
            if (!inserted && it->second != ev.output.ready) {
                return "release ready disagrees with known time for " + describe(ev.output);
            }
        } else {
            known_ready.emplace(ev.output.id, ev.output.ready);
        }
    }

    std::vector<LiveEntry> live;
    live.reserve(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        const TermId id = static_cast<TermId>(i);
        const auto it = known_ready.find(id);
        live.push_back({id, i == 0 ? TermKind::CarryPrefix : TermKind::BlockPair, i, i,
                        it == known_ready.end() ? kUnknownReady : it->second, false});
    }
    std::set<TermId> produced;
    std::set<TermId> consumed;
    for (int i = 0; i < width; ++i) {
        produced.insert(static_cast<TermId>(i));
    }

    auto find_live = [&](TermId id) -> int {
        for (std::size_t k = 0; k < live.size(); ++k) {
            if (live[k].id == id) {
                return static_cast<int>(k);
            }
        }
        return -1;
    };
    auto partition_ok = [&]() -> bool {
        if (live.empty() || live.front().lo != 0 || live.back().hi != width - 1) {
            return false;
        }
        for (std::size_t k = 1; k < live.size(); ++k) {
            if (live[k].lo != live[k - 1].hi + 1) {
                return false;
            }
        }
        return true;
    };

    int last_iteration = 0;
    for (const TraceEvent& ev : trace.events) {
        if (ev.iteration < last_iteration) {
            return "iteration numbers must be non-decreasing";
        }
        last_iteration = ev.iteration;

        if (ev.action == Action::Release) {
            const Term& t = ev.output;
            const int k = find_live(t.id);
            if (k < 0) {
                return consumed.count(t.id) ? "release of consumed " + describe(t)
                                            : "release of unknown " + describe(t);
            }
            LiveEntry& e = live[static_cast<std::size_t>(k)];
            if (e.released) {
                return "double release of " + describe(t);
            }
            if (e.lo != t.lo || e.hi != t.hi || e.kind != t.kind) {
                return "release data mismatch for " + describe(t);
            }
            if (e.ready != kUnknownReady && e.ready != t.ready) {
                return "release ready mismatch for " + describe(t);
            }
            // Releases must pick (one of) the minimum pending ready times.
            Time min_pending = std::numeric_limits<Time>::max();
            for (const LiveEntry& other : live) {
                if (!other.released && other.ready != kUnknownReady) {
                    min_pending = std::min(min_pending, other.ready);
                }
            }
            if (t.ready != min_pending) {
                return "non-minimal release of " + describe(t);
            }
            e.ready = t.ready;
            e.released = true;
        } else {
            if (ev.inputs.size() < 2) {
                return "combine needs at least two inputs";
            }
            std::vector<int> idx;
            for (TermId id : ev.inputs) {
                const int k = find_live(id);
                if (k < 0) {
                    if (consumed.count(id)) {
                        return "double consumption of term " + std::to_string(id);
                    }
                    return "combine of unknown term " + std::to_string(id);
                }
                if (!live[static_cast<std::size_t>(k)].released) {
                    return "combine of unreleased term " + std::to_string(id);
                }
                idx.push_back(k);
            }
            std::sort(idx.begin(), idx.end());
            if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
                return "double consumption of term within one combine";
            }
            for (std::size_t k = 1; k < idx.size(); ++k) {
                if (idx[k] != idx[k - 1] + 1) {
                    return "combine of non-adjacent terms producing " + describe(ev.output);
                }
            }
            const LiveEntry& first = live[static_cast<std::size_t>(idx.front())];
            const LiveEntry& last = live[static_cast<std::size_t>(idx.back())];
            const Term& out = ev.output;
            if (out.lo != first.lo || out.hi != last.hi) {
                return "combine range mismatch for " + describe(out);
            }
            if (out.kind != first.kind) {
                return "combine kind mismatch for " + describe(out);
            }
            Time latest = kUnknownReady;
            for (int k : idx) {
                latest = std::max(latest, live[static_cast<std::size_t>(k)].ready);
            }
            if (latest == kUnknownReady || out.ready != latest + 1) {
                return "ready mismatch for " + describe(out) + " (inputs max " +
                       std::to_string(latest) + ")";
            }
            if (dp) {
                for (int bit = out.lo; bit <= out.hi; ++bit) {
                    if (out.ready < dp->arrival(bit)) {
                        return "ready below arrival of bit " + std::to_string(bit) + " for " +
                               describe(out);
                    }
                }
            }
            if (!produced.insert(out.id).second) {
                return "duplicate production of " + describe(out);
            }
            for (TermId id : ev.inputs) {
                consumed.insert(id);
            }
            LiveEntry merged{out.id, out.kind, out.lo, out.hi, out.ready,
                             // Terms with no release event of their own stay in the
                             // released working set from birth.
                             has_release.count(out.id) == 0};
            live.erase(live.begin() + idx.front() + 1, live.begin() + idx.back() + 1);
            live[static_cast<std::size_t>(idx.front())] = merged;
        }
        if (!partition_ok()) {
            return "partition violation after event affecting " + describe(ev.output);
        }
    }

    if (live.size() != 1 || live.front().lo != 0 || live.front().hi != width - 1) {
        return std::string("incomplete coverage at end of trace");
    }
    const Time end_ready = live.front().ready == kUnknownReady
                               ? (dp ? dp->arrival(0) : trace.final_time)
                               : live.front().ready;
    if (trace.final_time != end_ready) {
        return "final_time mismatch: trace says " + std::to_string(trace.final_time) +
               ", replay ends at " + std::to_string(end_ready);
    }
    return std::nullopt;
}

} // namespace earlyadd
