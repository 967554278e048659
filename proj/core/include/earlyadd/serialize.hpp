// SPDX-License-Identifier: Apache-2.0
//
// File formats: delay profiles ({"arrival":[...]}), netlists ({"width",
// "nodes", "outputs"}), and DOT export. All emitters are byte-deterministic.
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "earlyadd/delay_profile.hpp"
#include "earlyadd/engine.hpp"
#include "earlyadd/netlist.hpp"

namespace earlyadd {

DelayProfile load_profile(const std::filesystem::path& path);
DelayProfile profile_from_json(std::string_view text);
std::string profile_to_json(const DelayProfile& dp);

Netlist load_netlist(const std::filesystem::path& path);
Netlist netlist_from_json(std::string_view text);
std::string netlist_to_json(const Netlist& net);
void save_netlist(const Netlist& net, const std::filesystem::path& path);

// DOT digraph, nodes in id order; labels carry the function kind plus the
// output role (c_i/s_i/cout) and, when a timing report is given, the ready
// time.
std::string export_dot(const Netlist& net, const TimingReport* timing = nullptr);
void export_dot_file(const Netlist& net, const std::filesystem::path& path,
                     const TimingReport* timing = nullptr);

} // namespace earlyadd
