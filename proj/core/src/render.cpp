// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace earlyadd {

namespace {

struct RenderTerm {
    int hi;
    Time ready;
    bool starred;
};

struct IterationRow {
    int iteration;
    std::vector<RenderTerm> pending;
    std::vector<RenderTerm> shown; // released terms plus this iteration's output terms
};

std::string cell_text(const RenderTerm& t) {
    return std::to_string(t.ready) + (t.starred ? "*" : "");
}

} // namespace

std::string emit_trace(const ScheduleTrace& trace) {
    std::ostringstream out;
    if (trace.width == 1 || trace.events.empty()) {
        out << "final_time = " << trace.final_time << "\n";
        return out.str();
    }

    struct LiveTerm {
        int lo, hi;
        Time ready;
        bool released;
        int born_iteration;
    };
    // Leaf ready times come from their release events.
    std::map<TermId, Time> leaf_ready;
    std::set<TermId> has_release;
    for (const TraceEvent& ev : trace.events) {
        if (ev.action == Action::Release) {
            has_release.insert(ev.output.id);
            leaf_ready[ev.output.id] = ev.output.ready;
        }
    }
    std::map<TermId, LiveTerm> live;
    for (int i = 0; i < trace.width; ++i) {
        const TermId id = static_cast<TermId>(i);
        const auto it = leaf_ready.find(id);
        live[id] = {i, i, it == leaf_ready.end() ? 0 : it->second, false, -1};
    }

    std::vector<IterationRow> rows;
    std::size_t at = 0;
    while (at < trace.events.size()) {
        const int iteration = trace.events[at].iteration;
        for (; at < trace.events.size() && trace.events[at].iteration == iteration; ++at) {
            const TraceEvent& ev = trace.events[at];
            if (ev.action == Action::Release) {
                live[ev.output.id].released = true;
            } else {
                for (TermId id : ev.inputs) {
                    live.erase(id);
                }
                live[ev.output.id] = {ev.output.lo, ev.output.hi, ev.output.ready,
                                      has_release.count(ev.output.id) == 0, iteration};
            }
        }
        IterationRow row;
        row.iteration = iteration;
        for (const auto& [id, t] : live) {
            const bool born_now = t.born_iteration == iteration;
            if (t.released || born_now) {
                row.shown.push_back({t.hi, t.ready, born_now});
            } else {
                row.pending.push_back({t.hi, t.ready, false});
            }
        }
        rows.push_back(std::move(row));
    }

    int cell_width = 2;
    for (const IterationRow& row : rows) {
        for (const auto* list : {&row.pending, &row.shown}) {
            for (const RenderTerm& t : *list) {
                cell_width = std::max(cell_width, static_cast<int>(cell_text(t).size()));
            }
        }
    }
    for (int bit = 0; bit < trace.width; ++bit) {
        cell_width = std::max(cell_width, static_cast<int>(std::to_string(bit).size()));
    }

    auto pad = [&](const std::string& s) {
        return std::string(static_cast<std::size_t>(cell_width) - s.size(), ' ') + s;
    };
    auto line = [&](const std::vector<RenderTerm>& terms) {
        std::vector<std::string> cells(static_cast<std::size_t>(trace.width),
                                       std::string(static_cast<std::size_t>(cell_width), ' '));
        for (const RenderTerm& t : terms) {
            cells[static_cast<std::size_t>(t.hi)] = pad(cell_text(t));
        }
        std::string s;
        for (const std::string& c : cells) {
            s += ' ';
            s += c;
        }
        return s;
    };

    out << " it L |";
    for (int bit = 0; bit < trace.width; ++bit) {
        out << ' ' << pad(std::to_string(bit));
    }
    out << "\n";
    for (const IterationRow& row : rows) {
        std::string label = std::to_string(row.iteration);
        out << std::string(3 - std::min<std::size_t>(3, label.size()), ' ') << label << " P |"
            << line(row.pending) << "\n";
        out << "    T |" << line(row.shown) << "\n";
    }
    out << "final_time = " << trace.final_time << "\n";
    return out.str();
}

} // namespace earlyadd
