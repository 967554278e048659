// SPDX-License-Identifier: Apache-2.0
//
// Shared construction helpers for netlist generators. All generators lay the
// operand inputs out first (g_i, r_i, p_i per bit, ascending), then grow the
// carry structure, then complete block-internal carries and sums.
#pragma once

#include <limits>
#include <vector>

#include "earlyadd/netlist.hpp"

namespace earlyadd::detail {

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

inline NodeId input_g(int bit) { return static_cast<NodeId>(3 * bit); }
inline NodeId input_r(int bit) { return static_cast<NodeId>(3 * bit + 1); }
inline NodeId input_p(int bit) { return static_cast<NodeId>(3 * bit + 2); }

void emit_operand_inputs(Netlist& net);

// boundary[i] holds the node carrying c_i where the carry structure produced
// it, kNoNode elsewhere; boundary[0] must be g_0. Missing carries are filled
// by rippling c_i = c_{i-1} nabla (g_i, r_i), sums are s_i = p_i ^ c_{i-1}
// with s_0 = p_0, and the outputs are assigned.
void finish_carries_and_sums(Netlist& net, const std::vector<NodeId>& boundary);

} // namespace earlyadd::detail
