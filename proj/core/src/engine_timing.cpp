// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <string>

#include "earlyadd/engine.hpp"
#include "earlyadd/errors.hpp"

namespace earlyadd {

TimingReport timing_analyze(const Netlist& net, const DelayProfile& dp) {
    if (dp.width() != net.width()) {
        throw WidthMismatch("profile width " + std::to_string(dp.width()) +
                            " does not match netlist width " + std::to_string(net.width()));
    }
    TimingReport report;
    const auto& nodes = net.nodes();
    report.node_ready.resize(nodes.size());
    report.operator_count = 0;
    for (const Node& n : nodes) {
        Time ready = 0;
        if (is_input_fn(n.fn)) {
            ready = dp.arrival(n.bit);
        } else {
            for (NodeId in : n.inputs) {
                ready = std::max(ready, report.node_ready[in]);
            }
            ready += n.latency;
        }
        report.node_ready[n.id] = ready;
        if (is_ternary_fn(n.fn)) {
            ++report.operator_count;
        }
    }

    const int width = net.width();
    report.carry_times.resize(static_cast<std::size_t>(width));
    report.sum_times.resize(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        report.carry_times[static_cast<std::size_t>(i)] =
            report.node_ready[net.carries()[static_cast<std::size_t>(i)]];
        report.sum_times[static_cast<std::size_t>(i)] =
            report.node_ready[net.sums()[static_cast<std::size_t>(i)]];
    }
    report.final_carry_time = report.node_ready[net.carry_out()];
    report.last_sum_time = report.sum_times.back();

    // Backtrack from the carry-out through the latest-ready inputs, ties to
    // the lower node id.
    std::vector<NodeId> path;
    NodeId at = net.carry_out();
    path.push_back(at);
    while (!net.node(at).inputs.empty()) {
        const Node& n = net.node(at);
        NodeId pick = n.inputs.front();
        for (NodeId in : n.inputs) {
            if (report.node_ready[in] > report.node_ready[pick] ||
                (report.node_ready[in] == report.node_ready[pick] && in < pick)) {
                pick = in;
            }
        }
        at = pick;
        path.push_back(at);
    }
    report.critical_path.assign(path.rbegin(), path.rend());
    return report;
}

} // namespace earlyadd
