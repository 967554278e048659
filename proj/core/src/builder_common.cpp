// SPDX-License-Identifier: Apache-2.0
#include "builder_common.hpp"

#include <cassert>

namespace earlyadd::detail {

void emit_operand_inputs(Netlist& net) {
    for (int bit = 0; bit < net.width(); ++bit) {
        const NodeId g = net.add_input(NodeFn::InputG, bit);
        net.add_input(NodeFn::InputR, bit);
        net.add_input(NodeFn::InputP, bit);
        assert(g == input_g(bit));
        (void)g;
    }
}

void finish_carries_and_sums(Netlist& net, const std::vector<NodeId>& boundary) {
    const int width = net.width();
    std::vector<NodeId> carries(static_cast<std::size_t>(width));
    carries[0] = boundary[0];
    for (int i = 1; i < width; ++i) {
        const NodeId have = boundary[static_cast<std::size_t>(i)];
        carries[static_cast<std::size_t>(i)] =
            have != kNoNode
                ? have
                : net.add_gate(NodeFn::TernaryNabla,
                               {carries[static_cast<std::size_t>(i - 1)], input_g(i), input_r(i)});
    }
    std::vector<NodeId> sums(static_cast<std::size_t>(width));
    sums[0] = input_p(0);
    for (int i = 1; i < width; ++i) {
        sums[static_cast<std::size_t>(i)] =
            net.add_gate(NodeFn::Xor, {input_p(i), carries[static_cast<std::size_t>(i - 1)]});
    }
    const NodeId carry_out = carries[static_cast<std::size_t>(width - 1)];
    net.set_outputs(std::move(carries), std::move(sums), carry_out);
}

} // namespace earlyadd::detail
