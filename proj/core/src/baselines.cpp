// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/baselines.hpp"

#include <algorithm>

#include "builder_common.hpp"
#include "earlyadd/errors.hpp"

namespace earlyadd {

using detail::input_g;
using detail::input_p;
using detail::input_r;
using detail::kNoNode;

namespace {

// Serial application of one ternary operator per bit; every carry is a
// boundary carry, so no ripple completion is needed beyond the chain itself.
Netlist build_serial(NodeFn fn, bool second_arg_is_p, int width) {
    Netlist net(width);
    detail::emit_operand_inputs(net);
    std::vector<NodeId> boundary(static_cast<std::size_t>(width), kNoNode);
    boundary[0] = input_g(0);
    NodeId carry = input_g(0);
    for (int i = 1; i < width; ++i) {
        if (fn == NodeFn::TernaryMux) {
            carry = net.add_gate(fn, {carry, input_r(i), input_g(i)});
        } else {
            carry = net.add_gate(fn, {carry, input_g(i), second_arg_is_p ? input_p(i) : input_r(i)});
        }
        boundary[static_cast<std::size_t>(i)] = carry;
    }
    detail::finish_carries_and_sums(net, boundary);
    return net;
}

} // namespace

Netlist build_ripple(int width) {
    return build_serial(NodeFn::TernaryNabla, false, width);
}

Netlist build_chain(BaselineKind kind, int width) {
    switch (kind) {
    case BaselineKind::ChainCsmaCca:
        return build_serial(NodeFn::TernaryMux, false, width);
    case BaselineKind::ChainElmaCla1:
        return build_serial(NodeFn::TernaryNabla, true, width);
    case BaselineKind::ChainCla2:
        return build_serial(NodeFn::TernaryNabla, false, width);
    case BaselineKind::RippleCpa:
    case BaselineKind::TreeCla2:
        break;
    }
    throw UnknownKind("build_chain expects one of the chain kinds");
}

Netlist build_tree_cla2(int width) {
    Netlist net(width);
    detail::emit_operand_inputs(net);
    std::vector<NodeId> boundary(static_cast<std::size_t>(width), kNoNode);
    boundary[0] = input_g(0);

    struct TreeTerm {
        bool is_carry;
        NodeId g_or_c;
        NodeId r;
        int hi;
    };
    std::vector<TreeTerm> level;
    level.push_back({true, input_g(0), kNoNode, 0});
    for (int i = 1; i < width; ++i) {
        level.push_back({false, input_g(i), input_r(i), i});
    }

    // Pair neighbors level by level; an odd term is carried up unchanged.
    while (level.size() > 1) {
        std::vector<TreeTerm> next;
        next.reserve((level.size() + 1) / 2);
        std::size_t k = 0;
        for (; k + 1 < level.size(); k += 2) {
            const TreeTerm& lo = level[k];
            const TreeTerm& hi = level[k + 1];
            if (lo.is_carry) {
                const NodeId c = net.add_gate(NodeFn::TernaryNabla, {lo.g_or_c, hi.g_or_c, hi.r});
                boundary[static_cast<std::size_t>(hi.hi)] = c;
                next.push_back({true, c, kNoNode, hi.hi});
            } else {
                const NodeId g = net.add_gate(NodeFn::TernaryNabla, {lo.g_or_c, hi.g_or_c, hi.r});
                const NodeId r = net.add_gate(NodeFn::And, {lo.r, hi.r});
                next.push_back({false, g, r, hi.hi});
            }
        }
        if (k < level.size()) {
            next.push_back(level[k]);
        }
        level = std::move(next);
    }

    detail::finish_carries_and_sums(net, boundary);
    return net;
}

Netlist build_baseline(BaselineKind kind, int width) {
    switch (kind) {
    case BaselineKind::RippleCpa:
        return build_ripple(width);
    case BaselineKind::ChainCsmaCca:
    case BaselineKind::ChainElmaCla1:
    case BaselineKind::ChainCla2:
        return build_chain(kind, width);
    case BaselineKind::TreeCla2:
        return build_tree_cla2(width);
    }
    throw UnknownKind("unknown baseline kind");
}

TimingReport sum_timing_forms(BaselineKind kind, int width, const DelayProfile& dp) {
    const Netlist net = build_baseline(kind, width);
    return timing_analyze(net, dp);
}

std::vector<Time> csma_early_merge_sum_times(const DelayProfile& dp) {
    const int width = dp.width();
    std::vector<Time> carry(static_cast<std::size_t>(width));
    carry[0] = dp.arrival(0);
    for (int i = 1; i < width; ++i) {
        carry[static_cast<std::size_t>(i)] =
            std::max(carry[static_cast<std::size_t>(i - 1)], dp.arrival(i)) + 1;
    }
    std::vector<Time> sums(static_cast<std::size_t>(width));
    sums[0] = dp.arrival(0);
    if (width > 1) {
        sums[1] = std::max(carry[0], dp.arrival(1)) + 1;
    }
    for (int i = 2; i < width; ++i) {
        // p_i premixes with the last (r, g) pair one level before the final
        // select: one unit for the premix, one for the select.
        const Time premix = std::max(dp.arrival(i), dp.arrival(i - 1)) + 1;
        sums[static_cast<std::size_t>(i)] =
            std::max(carry[static_cast<std::size_t>(i - 2)], premix) + 1;
    }
    return sums;
}

} // namespace earlyadd
