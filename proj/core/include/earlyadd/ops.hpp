// SPDX-License-Identifier: Apache-2.0
//
// Bit-level carry primitives and the three ternary operators used as the
// unit of normalized delay, plus their block-pair combination rules.
#pragma once

namespace earlyadd {

// Block generate/alive pair. For a single bit fed by operand bits a, b:
// g = a&b, r = a|b, so g implies r; combine_nabla preserves the implication.
struct BlockPair {
    bool g = false;
    bool r = false;

    friend bool operator==(BlockPair, BlockPair) = default;
};

// Generic ordered bit pair for the conditional (mux) and delta combination
// rules, where the components are not generate/alive signals.
struct BitPair {
    bool first = false;
    bool second = false;

    friend bool operator==(BitPair, BitPair) = default;
};

struct PrimitiveSignals {
    bool p = false; // a ^ b, sum path
    bool g = false; // a & b, generate
    bool r = false; // a | b, alive

    friend bool operator==(PrimitiveSignals, PrimitiveSignals) = default;
};

constexpr PrimitiveSignals primitive_signals(bool a, bool b) {
    return {a != b, a && b, a || b};
}

// Selector form: x ? b : c. With x = carry-in and (b, c) = (r_i, g_i) this is
// the conditional-sum carry step (carry-in 1 selects alive, 0 selects generate).
constexpr bool op_mux(bool x, bool b, bool c) {
    return x ? b : c;
}

// b | (c & a); symmetric in a and c. With (b, c) = (g_i, r_i) and a = carry-in
// this is the generate-dominant carry step g + r*cin.
constexpr bool op_nabla(bool a, bool b, bool c) {
    return b || (c && a);
}

// b ^ (c & a); symmetric in a and c.
constexpr bool op_delta(bool a, bool b, bool c) {
    return b != (c && a);
}

// Block combination of (generate, alive) pairs, lower bits on the left:
// out.g = upper.g + upper.r * lower.g, out.r = lower.r * upper.r.
// Satisfies the prefix property
//   op_nabla(c, out.g, out.r) ==
//   op_nabla(op_nabla(c, lower.g, lower.r), upper.g, upper.r)
// for every boolean assignment, and is associative.
constexpr BlockPair combine_nabla(BlockPair lower, BlockPair upper) {
    return {op_nabla(lower.g, upper.g, upper.r), lower.r && upper.r};
}

// Conditional-value combination: each component of the lower pair selects
// within the upper (value-if-one, value-if-zero) pair.
constexpr BitPair combine_mux(BitPair lower, BitPair upper) {
    return {op_mux(lower.first, upper.first, upper.second),
            op_mux(lower.second, upper.first, upper.second)};
}

constexpr BitPair combine_delta(BitPair lower, BitPair upper) {
    return {op_delta(lower.first, upper.first, upper.second), lower.second && upper.second};
}

} // namespace earlyadd
