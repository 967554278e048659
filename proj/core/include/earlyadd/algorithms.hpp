// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "earlyadd/delay_profile.hpp"
#include "earlyadd/netlist.hpp"
#include "earlyadd/trace.hpp"

namespace earlyadd {

// Canonical generator names accepted by the CLI and compare():
// gef, igef, ripple, chain_csma_cca, chain_elma_cla1, chain_cla2, tree_cla2.
const std::vector<std::string>& algorithm_names();
bool is_algorithm(const std::string& name);
bool is_scheduler_algorithm(const std::string& name); // gef / igef

struct BuiltAdder {
    Netlist net;
    std::optional<ScheduleTrace> trace; // present for scheduler algorithms
};

// Builds the named adder for the profile's width. Scheduler algorithms use
// the profile's arrival times; baselines only use its width.
// Throws UnknownAlgorithm.
BuiltAdder build_adder(const std::string& name, const DelayProfile& dp, int igef_blocking = 3);

} // namespace earlyadd
