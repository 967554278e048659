// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/netlist.hpp"

#include <string>

#include "earlyadd/errors.hpp"

namespace earlyadd {

int node_arity(NodeFn fn) {
    switch (fn) {
    case NodeFn::InputG:
    case NodeFn::InputR:
    case NodeFn::InputP:
    case NodeFn::Const0:
    case NodeFn::Const1:
        return 0;
    case NodeFn::Not:
        return 1;
    case NodeFn::And:
    case NodeFn::Or:
    case NodeFn::Xor:
        return 2;
    case NodeFn::TernaryMux:
    case NodeFn::TernaryNabla:
    case NodeFn::TernaryDelta:
        return 3;
    }
    return 0;
}

bool is_input_fn(NodeFn fn) {
    return fn == NodeFn::InputG || fn == NodeFn::InputR || fn == NodeFn::InputP;
}

bool is_ternary_fn(NodeFn fn) {
    return fn == NodeFn::TernaryMux || fn == NodeFn::TernaryNabla || fn == NodeFn::TernaryDelta;
}

const char* node_fn_name(NodeFn fn) {
    switch (fn) {
    case NodeFn::InputG: return "input_g";
    case NodeFn::InputR: return "input_r";
    case NodeFn::InputP: return "input_p";
    case NodeFn::Const0: return "const0";
    case NodeFn::Const1: return "const1";
    case NodeFn::And: return "and";
    case NodeFn::Or: return "or";
    case NodeFn::Xor: return "xor";
    case NodeFn::Not: return "not";
    case NodeFn::TernaryMux: return "mux";
    case NodeFn::TernaryNabla: return "nabla";
    case NodeFn::TernaryDelta: return "delta";
    }
    return "?";
}

Netlist::Netlist(int width) : width_(width) {
    if (width < 1) {
        throw NetlistError("netlist width must be at least 1");
    }
}

NodeId Netlist::add_input(NodeFn fn, int bit) {
    if (!is_input_fn(fn)) {
        throw NetlistError("add_input requires an input function");
    }
    if (bit < 0 || bit >= width_) {
        throw NetlistError("input bit out of range");
    }
    const NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({id, fn, bit, {}, 0});
    return id;
}

NodeId Netlist::add_const(bool value) {
    const NodeId id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({id, value ? NodeFn::Const1 : NodeFn::Const0, -1, {}, 0});
    return id;
}

NodeId Netlist::add_gate(NodeFn fn, std::vector<NodeId> inputs, int latency) {
    const NodeId id = static_cast<NodeId>(nodes_.size());
    if (node_arity(fn) != static_cast<int>(inputs.size()) || node_arity(fn) == 0) {
        throw NetlistError(std::string("arity mismatch for ") + node_fn_name(fn));
    }
    for (NodeId in : inputs) {
        if (in >= id) {
            throw NetlistError("gate may only reference earlier nodes");
        }
    }
    if (latency != 0 && latency != 1) {
        throw NetlistError("gate latency must be 0 or 1");
    }
    nodes_.push_back({id, fn, -1, std::move(inputs), latency});
    return id;
}

void Netlist::set_outputs(std::vector<NodeId> carries, std::vector<NodeId> sums,
                          NodeId carry_out) {
    carries_ = std::move(carries);
    sums_ = std::move(sums);
    carry_out_ = carry_out;
    check();
}

void Netlist::check() const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        if (n.id != static_cast<NodeId>(i)) {
            throw NetlistError("node ids must be dense and ordered");
        }
        if (static_cast<int>(n.inputs.size()) != node_arity(n.fn)) {
            throw NetlistError(std::string("arity mismatch for ") + node_fn_name(n.fn));
        }
        for (NodeId in : n.inputs) {
            if (in >= n.id) {
                throw NetlistError("node references violate topological order");
            }
        }
        if (is_input_fn(n.fn) && (n.bit < 0 || n.bit >= width_)) {
            throw NetlistError("input bit out of range");
        }
    }
    if (carries_.empty() && sums_.empty()) {
        return; // outputs not assigned yet
    }
    if (static_cast<int>(carries_.size()) != width_ || static_cast<int>(sums_.size()) != width_) {
        throw NetlistError("outputs must list one carry and one sum per bit");
    }
    const NodeId count = static_cast<NodeId>(nodes_.size());
    for (NodeId id : carries_) {
        if (id >= count) throw NetlistError("carry output references missing node");
    }
    for (NodeId id : sums_) {
        if (id >= count) throw NetlistError("sum output references missing node");
    }
    if (carry_out_ >= count) {
        throw NetlistError("carry-out references missing node");
    }
}

} // namespace earlyadd
