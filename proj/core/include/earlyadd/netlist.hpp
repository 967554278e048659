// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "earlyadd/types.hpp"

namespace earlyadd {

enum class NodeFn : std::uint8_t {
    InputG,
    InputR,
    InputP,
    Const0,
    Const1,
    And,
    Or,
    Xor,
    Not,
    TernaryMux,   // in0 ? in1 : in2
    TernaryNabla, // in1 | (in2 & in0)
    TernaryDelta, // in1 ^ (in2 & in0)
};

int node_arity(NodeFn fn);
bool is_input_fn(NodeFn fn);
bool is_ternary_fn(NodeFn fn);
const char* node_fn_name(NodeFn fn);

struct Node {
    NodeId id = 0;
    NodeFn fn = NodeFn::Const0;
    int bit = -1; // operand bit index for input nodes, -1 otherwise
    std::vector<NodeId> inputs;
    // Normalized delay charged by the node. Gates cost 1 except the second
    // stage of a three-term cascade, which is folded into the first stage.
    int latency = 0;
};

// Combinational DAG for an N-bit adder over per-bit g/r/p input nodes.
// Nodes are stored in creation order, which is also a topological order:
// a gate may only reference earlier node ids.
class Netlist {
public:
    explicit Netlist(int width);

    int width() const { return width_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(NodeId id) const { return nodes_[id]; }

    // c_0..c_{N-1} (c_i = carry out of bit i), s_0..s_{N-1}, carry-out node.
    std::span<const NodeId> carries() const { return carries_; }
    std::span<const NodeId> sums() const { return sums_; }
    NodeId carry_out() const { return carry_out_; }
    bool has_outputs() const { return !carries_.empty(); }

    NodeId add_input(NodeFn fn, int bit);
    NodeId add_const(bool value);
    NodeId add_gate(NodeFn fn, std::vector<NodeId> inputs, int latency = 1);
    void set_outputs(std::vector<NodeId> carries, std::vector<NodeId> sums, NodeId carry_out);

    // Full structural validation (arity, topological references, output
    // ranges); construction already enforces this, the loader relies on it.
    void check() const;

private:
    int width_;
    std::vector<Node> nodes_;
    std::vector<NodeId> carries_;
    std::vector<NodeId> sums_;
    NodeId carry_out_ = 0;
};

} // namespace earlyadd
