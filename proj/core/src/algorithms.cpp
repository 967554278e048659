// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/algorithms.hpp"

#include "earlyadd/baselines.hpp"
#include "earlyadd/engine.hpp"
#include "earlyadd/errors.hpp"
#include "earlyadd/scheduler.hpp"

namespace earlyadd {

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {
        "gef", "igef", "ripple", "chain_csma_cca", "chain_elma_cla1", "chain_cla2", "tree_cla2",
    };
    return names;
}

bool is_algorithm(const std::string& name) {
    for (const std::string& n : algorithm_names()) {
        if (n == name) {
            return true;
        }
    }
    return false;
}

bool is_scheduler_algorithm(const std::string& name) {
    return name == "gef" || name == "igef";
}

BuiltAdder build_adder(const std::string& name, const DelayProfile& dp, int igef_blocking) {
    if (name == "gef") {
        ScheduleTrace trace = gef_schedule(dp);
        Netlist net = build_netlist(trace);
        return {std::move(net), std::move(trace)};
    }
    if (name == "igef") {
        SchedulerConfig cfg;
        cfg.blocking_factor = igef_blocking;
        ScheduleTrace trace = igef_schedule(dp, cfg);
        Netlist net = build_netlist(trace);
        return {std::move(net), std::move(trace)};
    }
    if (name == "ripple") {
        return {build_ripple(dp.width()), std::nullopt};
    }
    if (name == "chain_csma_cca") {
        return {build_chain(BaselineKind::ChainCsmaCca, dp.width()), std::nullopt};
    }
    if (name == "chain_elma_cla1") {
        return {build_chain(BaselineKind::ChainElmaCla1, dp.width()), std::nullopt};
    }
    if (name == "chain_cla2") {
        return {build_chain(BaselineKind::ChainCla2, dp.width()), std::nullopt};
    }
    if (name == "tree_cla2") {
        return {build_tree_cla2(dp.width()), std::nullopt};
    }
    throw UnknownAlgorithm(name);
}

} // namespace earlyadd
