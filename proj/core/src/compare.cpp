// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/compare.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "earlyadd/algorithms.hpp"
#include "earlyadd/errors.hpp"

namespace earlyadd {

VerificationFailed::VerificationFailed(std::string algorithm, Counterexample ce, int width)
    : std::runtime_error("verification failed for " + algorithm + ": " + ce.to_string(width)),
      algorithm_(std::move(algorithm)), ce_(ce) {}

namespace {

int spine_depth(const Netlist& net) {
    // Most ternary operators on any input-to-carry-out path.
    std::vector<int> depth(net.nodes().size(), 0);
    for (const Node& n : net.nodes()) {
        int d = 0;
        for (NodeId in : n.inputs) {
            d = std::max(d, depth[in]);
        }
        depth[n.id] = d + (is_ternary_fn(n.fn) ? 1 : 0);
    }
    return depth[net.carry_out()];
}

int combine_steps_of(const BuiltAdder& built, int width) {
    if (built.trace) {
        int combines = 0;
        for (const TraceEvent& ev : built.trace->events) {
            combines += ev.action == Action::Combine ? 1 : 0;
        }
        return combines;
    }
    return width - 1; // serial and tree structures merge N terms into one
}

} // namespace

std::vector<CompareRow> compare(const DelayProfile& dp, const std::vector<std::string>& algorithms,
                                const CompareOptions& opts) {
    std::vector<CompareRow> rows;
    for (const std::string& name : algorithms) {
        if (!is_algorithm(name)) {
            throw UnknownAlgorithm(name);
        }
        BuiltAdder built = build_adder(name, dp, opts.igef_blocking);
        if (auto ce = verify(built.net, dp.width(),
                             VerifyMode::random(opts.verify_count, opts.verify_seed))) {
            throw VerificationFailed(name, *ce, dp.width());
        }
        const TimingReport report = timing_analyze(built.net, dp);
        CompareRow row;
        row.algorithm = name;
        row.final_carry_time = report.final_carry_time;
        row.last_sum_time = report.last_sum_time;
        row.operator_count = report.operator_count;
        row.combine_steps = combine_steps_of(built, dp.width());
        row.spine_depth = spine_depth(built.net);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const CompareRow& a, const CompareRow& b) {
        if (a.final_carry_time != b.final_carry_time) {
            return a.final_carry_time < b.final_carry_time;
        }
        return a.algorithm < b.algorithm;
    });
    return rows;
}

std::string render_compare(const std::vector<CompareRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(18) << "algorithm" << std::right << std::setw(12)
        << "final_carry" << std::setw(10) << "last_sum" << std::setw(13) << "ternary_ops"
        << std::setw(15) << "combine_steps" << std::setw(13) << "spine_depth" << "\n";
    for (const CompareRow& r : rows) {
        out << std::left << std::setw(18) << r.algorithm << std::right << std::setw(12)
            << r.final_carry_time << std::setw(10) << r.last_sum_time << std::setw(13)
            << r.operator_count << std::setw(15) << r.combine_steps << std::setw(13)
            << r.spine_depth << "\n";
    }
    return out.str();
}

} // namespace earlyadd
