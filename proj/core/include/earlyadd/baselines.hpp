// SPDX-License-Identifier: Apache-2.0
//
// Classical adder formulations used as timing and correctness baselines:
// the serial carry chain, the three ternary-operator chain variants, and a
// balanced-tree version of the generate/alive chain.
#pragma once

#include <vector>

#include "earlyadd/engine.hpp"
#include "earlyadd/netlist.hpp"

namespace earlyadd {

enum class BaselineKind : std::uint8_t {
    RippleCpa,
    ChainCsmaCca,  // mux chain over (r_i, g_i)
    ChainElmaCla1, // nabla chain over (g_i, p_i)
    ChainCla2,     // nabla chain over (g_i, r_i)
    TreeCla2,
};

// Serial carry chain c_i = g_i + r_i * c_{i-1} with c_0 = g_0. One ternary
// operator per bit; same structure as ChainCla2 under the normalized
// operator-delay model.
Netlist build_ripple(int width);

// Left-to-right serial application of the kind's ternary operator; sums are
// merged at the last step as p_i ^ c_{i-1}. Throws UnknownKind for the
// non-chain kinds.
Netlist build_chain(BaselineKind kind, int width);

// Balanced binary combine of the carry prefix and the N-1 single-bit pairs,
// ignoring arrival times; block-internal carries are completed by ripple.
Netlist build_tree_cla2(int width);

Netlist build_baseline(BaselineKind kind, int width);

// Timing of the kind's sum-path structure (carries from the chain/tree
// recurrence, sums merged at the last step).
TimingReport sum_timing_forms(BaselineKind kind, int width, const DelayProfile& dp);

// Conditional-sum early-merge variant: p_i joins the chain one level before
// the end, s_i = chain(c_{i-2}) mux (p_i^r_{i-1}, p_i^g_{i-1}). The exact
// per-bit indexing of this form varies across descriptions; reported for
// comparison, never used functionally.
std::vector<Time> csma_early_merge_sum_times(const DelayProfile& dp);

} // namespace earlyadd
