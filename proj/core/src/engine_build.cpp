// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>

#include "builder_common.hpp"
#include "earlyadd/engine.hpp"
#include "earlyadd/errors.hpp"

namespace earlyadd {

using detail::input_g;
using detail::input_r;
using detail::kNoNode;

namespace {

// Live value of a term while rebuilding: a carry prefix owns one carry node,
// a block owns a (generate, alive) node pair.
struct TermSignals {
    bool is_carry = false;
    NodeId g_or_c = 0;
    NodeId r = 0;
    int lo = 0;
    int hi = 0;
};

} // namespace

Netlist build_netlist(const ScheduleTrace& trace) {
    if (auto violation = replay_trace(trace)) {
        throw IncompleteTrace("trace rejected: " + *violation);
    }
    const int width = trace.width;
    Netlist net(width);
    detail::emit_operand_inputs(net);

    std::map<TermId, TermSignals> signals;
    for (int i = 0; i < width; ++i) {
        const TermId id = static_cast<TermId>(i);
        if (i == 0) {
            signals[id] = {true, input_g(0), kNoNode, 0, 0};
        } else {
            signals[id] = {false, input_g(i), input_r(i), i, i};
        }
    }
    std::vector<NodeId> boundary(static_cast<std::size_t>(width), kNoNode);
    boundary[0] = input_g(0);

    for (const TraceEvent& ev : trace.events) {
        if (ev.action != Action::Combine) {
            continue;
        }
        std::vector<TermSignals> members;
        members.reserve(ev.inputs.size());
        for (TermId id : ev.inputs) {
            members.push_back(signals.at(id));
        }
        std::sort(members.begin(), members.end(),
                  [](const TermSignals& a, const TermSignals& b) { return a.lo < b.lo; });

        // A window of three is realized as two cascaded operators charged one
        // normalized unit in total: the second stage gets latency 0.
        TermSignals acc = members.front();
        for (std::size_t k = 1; k < members.size(); ++k) {
            const int latency = (k == 1) ? 1 : 0;
            const TermSignals& m = members[k];
            if (acc.is_carry) {
                const NodeId c =
                    net.add_gate(NodeFn::TernaryNabla, {acc.g_or_c, m.g_or_c, m.r}, latency);
                boundary[static_cast<std::size_t>(m.hi)] = c;
                acc = {true, c, kNoNode, acc.lo, m.hi};
            } else {
                const NodeId g =
                    net.add_gate(NodeFn::TernaryNabla, {acc.g_or_c, m.g_or_c, m.r}, latency);
                const NodeId r = net.add_gate(NodeFn::And, {acc.r, m.r}, latency);
                acc = {false, g, r, acc.lo, m.hi};
            }
        }
        signals[ev.output.id] = acc;
    }

    detail::finish_carries_and_sums(net, boundary);
    return net;
}

} // namespace earlyadd
