// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "earlyadd/engine.hpp"
#include "earlyadd/errors.hpp"

namespace earlyadd {

void evaluate_words(const Netlist& net, std::span<const std::uint64_t> a_bits,
                    std::span<const std::uint64_t> b_bits, std::span<std::uint64_t> sum_bits_out,
                    std::uint64_t& carry_out, std::vector<std::uint64_t>& scratch) {
    const auto& nodes = net.nodes();
    scratch.resize(nodes.size());
    for (const Node& n : nodes) {
        std::uint64_t v = 0;
        switch (n.fn) {
        case NodeFn::InputG:
            v = a_bits[static_cast<std::size_t>(n.bit)] & b_bits[static_cast<std::size_t>(n.bit)];
            break;
        case NodeFn::InputR:
            v = a_bits[static_cast<std::size_t>(n.bit)] | b_bits[static_cast<std::size_t>(n.bit)];
            break;
        case NodeFn::InputP:
            v = a_bits[static_cast<std::size_t>(n.bit)] ^ b_bits[static_cast<std::size_t>(n.bit)];
            break;
        case NodeFn::Const0:
            v = 0;
            break;
        case NodeFn::Const1:
            v = ~0ull;
            break;
        case NodeFn::And:
            v = scratch[n.inputs[0]] & scratch[n.inputs[1]];
            break;
        case NodeFn::Or:
            v = scratch[n.inputs[0]] | scratch[n.inputs[1]];
            break;
        case NodeFn::Xor:
            v = scratch[n.inputs[0]] ^ scratch[n.inputs[1]];
            break;
        case NodeFn::Not:
            v = ~scratch[n.inputs[0]];
            break;
        case NodeFn::TernaryMux:
            v = (scratch[n.inputs[0]] & scratch[n.inputs[1]]) |
                (~scratch[n.inputs[0]] & scratch[n.inputs[2]]);
            break;
        case NodeFn::TernaryNabla:
            v = scratch[n.inputs[1]] | (scratch[n.inputs[2]] & scratch[n.inputs[0]]);
            break;
        case NodeFn::TernaryDelta:
            v = scratch[n.inputs[1]] ^ (scratch[n.inputs[2]] & scratch[n.inputs[0]]);
            break;
        }
        scratch[n.id] = v;
    }
    const auto sums = net.sums();
    for (int i = 0; i < net.width(); ++i) {
        sum_bits_out[static_cast<std::size_t>(i)] = scratch[sums[static_cast<std::size_t>(i)]];
    }
    carry_out = scratch[net.carry_out()];
}

EvalResult evaluate(const Netlist& net, std::uint64_t a, std::uint64_t b, int width) {
    if (width != net.width()) {
        throw WidthMismatch("operand width " + std::to_string(width) +
                            " does not match netlist width " + std::to_string(net.width()));
    }
    if (width > 63) {
        throw WidthMismatch("integer evaluation supports width <= 63");
    }
    const std::uint64_t limit = 1ull << width;
    if (a >= limit || b >= limit) {
        throw WidthMismatch("operand does not fit in " + std::to_string(width) + " bits");
    }
    std::vector<std::uint64_t> a_bits(static_cast<std::size_t>(width));
    std::vector<std::uint64_t> b_bits(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        a_bits[static_cast<std::size_t>(i)] = (a >> i) & 1u;
        b_bits[static_cast<std::size_t>(i)] = (b >> i) & 1u;
    }
    std::vector<std::uint64_t> sum_words(static_cast<std::size_t>(width));
    std::uint64_t carry_word = 0;
    std::vector<std::uint64_t> scratch;
    evaluate_words(net, a_bits, b_bits, sum_words, carry_word, scratch);

    EvalResult result;
    result.sum_bits.resize(static_cast<std::size_t>(width));
    std::uint64_t assembled = 0;
    for (int i = 0; i < width; ++i) {
        const bool bit = (sum_words[static_cast<std::size_t>(i)] & 1u) != 0;
        result.sum_bits[static_cast<std::size_t>(i)] = bit;
        assembled |= static_cast<std::uint64_t>(bit) << i;
    }
    result.carry_out = (carry_word & 1u) != 0;
    result.as_integer = assembled | (static_cast<std::uint64_t>(result.carry_out) << width);
    return result;
}

} // namespace earlyadd
