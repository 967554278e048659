// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "earlyadd/errors.hpp"

namespace earlyadd {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(std::string_view text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

NodeFn fn_from_name(const std::string& name) {
    static const std::map<std::string, NodeFn> table = {
        {"input_g", NodeFn::InputG},  {"input_r", NodeFn::InputR},
        {"input_p", NodeFn::InputP},  {"const0", NodeFn::Const0},
        {"const1", NodeFn::Const1},   {"and", NodeFn::And},
        {"or", NodeFn::Or},           {"xor", NodeFn::Xor},
        {"not", NodeFn::Not},         {"mux", NodeFn::TernaryMux},
        {"nabla", NodeFn::TernaryNabla}, {"delta", NodeFn::TernaryDelta},
    };
    const auto it = table.find(name);
    if (it == table.end()) {
        throw ParseError("unknown node function: " + name);
    }
    return it->second;
}

} // namespace

DelayProfile profile_from_json(std::string_view text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("arrival") || !j["arrival"].is_array()) {
        throw ParseError("profile must be an object with an \"arrival\" array");
    }
    std::vector<long long> raw;
    raw.reserve(j["arrival"].size());
    for (const auto& entry : j["arrival"]) {
        if (!entry.is_number_integer() && !entry.is_number_unsigned()) {
            throw ParseError("arrival entries must be integers");
        }
        raw.push_back(entry.get<long long>());
    }
    return validate_profile(raw);
}

DelayProfile load_profile(const std::filesystem::path& path) {
    return profile_from_json(read_file(path));
}

std::string profile_to_json(const DelayProfile& dp) {
    ordered_json j;
    j["arrival"] = ordered_json::array();
    for (Time t : dp.arrivals()) {
        j["arrival"].push_back(t);
    }
    return j.dump() + "\n";
}

std::string netlist_to_json(const Netlist& net) {
    ordered_json j;
    j["width"] = net.width();
    j["nodes"] = ordered_json::array();
    for (const Node& n : net.nodes()) {
        ordered_json node;
        node["id"] = n.id;
        node["fn"] = node_fn_name(n.fn);
        if (is_input_fn(n.fn)) {
            node["bit"] = n.bit;
        }
        node["inputs"] = n.inputs;
        if (node_arity(n.fn) > 0) {
            node["lat"] = n.latency;
        }
        j["nodes"].push_back(std::move(node));
    }
    j["outputs"]["carries"] = std::vector<NodeId>(net.carries().begin(), net.carries().end());
    j["outputs"]["sums"] = std::vector<NodeId>(net.sums().begin(), net.sums().end());
    j["outputs"]["carry_out"] = net.carry_out();
    return j.dump(1) + "\n";
}

Netlist netlist_from_json(std::string_view text) {
    const ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("width") || !j.contains("nodes") || !j.contains("outputs")) {
        throw ParseError("netlist must be an object with width, nodes and outputs");
    }
    if (!j["width"].is_number_integer() && !j["width"].is_number_unsigned()) {
        throw ParseError("width must be an integer");
    }
    const int width = j["width"].get<int>();
    if (width < 1) {
        throw NetlistError("netlist width must be at least 1");
    }
    Netlist net(width);
    if (!j["nodes"].is_array()) {
        throw ParseError("nodes must be an array");
    }
    for (const auto& node : j["nodes"]) {
        if (!node.is_object() || !node.contains("id") || !node.contains("fn")) {
            throw ParseError("each node needs an id and a function");
        }
        const NodeId id = node["id"].get<NodeId>();
        const NodeFn fn = fn_from_name(node["fn"].get<std::string>());
        NodeId actual = 0;
        if (is_input_fn(fn)) {
            if (!node.contains("bit")) {
                throw ParseError("input nodes need a bit index");
            }
            actual = net.add_input(fn, node["bit"].get<int>());
        } else if (fn == NodeFn::Const0 || fn == NodeFn::Const1) {
            actual = net.add_const(fn == NodeFn::Const1);
        } else {
            std::vector<NodeId> inputs;
            if (node.contains("inputs")) {
                inputs = node["inputs"].get<std::vector<NodeId>>();
            }
            const int latency = node.contains("lat") ? node["lat"].get<int>() : 1;
            actual = net.add_gate(fn, std::move(inputs), latency);
        }
        if (actual != id) {
            throw NetlistError("node ids must be dense and in declaration order");
        }
    }
    const auto& outputs = j["outputs"];
    if (!outputs.is_object() || !outputs.contains("carries") || !outputs.contains("sums") ||
        !outputs.contains("carry_out")) {
        throw ParseError("outputs must hold carries, sums and carry_out");
    }
    net.set_outputs(outputs["carries"].get<std::vector<NodeId>>(),
                    outputs["sums"].get<std::vector<NodeId>>(),
                    outputs["carry_out"].get<NodeId>());
    return net;
}

Netlist load_netlist(const std::filesystem::path& path) {
    return netlist_from_json(read_file(path));
}

void save_netlist(const Netlist& net, const std::filesystem::path& path) {
    write_file(path, netlist_to_json(net));
}

std::string export_dot(const Netlist& net, const TimingReport* timing) {
    // Output roles, used as label suffixes.
    std::map<NodeId, std::string> roles;
    for (int i = 0; i < net.width(); ++i) {
        roles[net.carries()[static_cast<std::size_t>(i)]] += " c" + std::to_string(i);
        roles[net.sums()[static_cast<std::size_t>(i)]] += " s" + std::to_string(i);
    }
    roles[net.carry_out()] += " cout";

    std::ostringstream out;
    out << "digraph netlist {\n";
    out << "  rankdir=LR;\n";
    for (const Node& n : net.nodes()) {
        out << "  n" << n.id << " [label=\"" << node_fn_name(n.fn);
        if (is_input_fn(n.fn)) {
            out << n.bit;
        }
        if (timing) {
            out << " t=" << timing->node_ready[n.id];
        }
        const auto role = roles.find(n.id);
        if (role != roles.end()) {
            out << "\\n" << role->second.substr(1);
        }
        out << "\"";
        if (is_input_fn(n.fn) || node_arity(n.fn) == 0) {
            out << " shape=box";
        }
        out << "];\n";
    }
    for (const Node& n : net.nodes()) {
        for (NodeId in : n.inputs) {
            out << "  n" << in << " -> n" << n.id << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

void export_dot_file(const Netlist& net, const std::filesystem::path& path,
                     const TimingReport* timing) {
    write_file(path, export_dot(net, timing));
}

} // namespace earlyadd
