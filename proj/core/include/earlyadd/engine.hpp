// SPDX-License-Identifier: Apache-2.0
//
// Netlist construction from schedule traces, functional evaluation, unit
// delay timing analysis, and equivalence checking against integer addition.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "earlyadd/delay_profile.hpp"
#include "earlyadd/netlist.hpp"
#include "earlyadd/trace.hpp"

namespace earlyadd {

// Realizes a complete trace as a functional netlist: the combine events form
// the carry spine, per-bit carries missing from the spine are completed by
// rippling c_i = c_{i-1} nabla (g_i, r_i) inside blocks, and sums are
// s_i = p_i ^ c_{i-1} with s_0 = p_0. Throws IncompleteTrace.
Netlist build_netlist(const ScheduleTrace& trace);

struct EvalResult {
    std::vector<bool> sum_bits;
    bool carry_out = false;
    std::uint64_t as_integer = 0; // sum + (carry_out << width); width <= 63
};

// Drives the input nodes from the bits of a and b and evaluates the DAG.
// Throws WidthMismatch if width differs from the netlist or operands do not
// fit in width bits.
EvalResult evaluate(const Netlist& net, std::uint64_t a, std::uint64_t b, int width);

// 64 independent operand pairs per call, one per bit lane. sum_bits_out must
// hold net.width() words. Scratch grows to one word per node.
void evaluate_words(const Netlist& net, std::span<const std::uint64_t> a_bits,
                    std::span<const std::uint64_t> b_bits, std::span<std::uint64_t> sum_bits_out,
                    std::uint64_t& carry_out, std::vector<std::uint64_t>& scratch);

struct TimingReport {
    std::vector<Time> node_ready;  // indexed by node id
    std::vector<Time> carry_times; // c_0..c_{N-1}
    std::vector<Time> sum_times;   // s_0..s_{N-1}
    Time final_carry_time = 0;     // ready(c_{N-1})
    Time last_sum_time = 0;        // ready(s_{N-1})
    int operator_count = 0;        // ternary nodes in the netlist
    std::vector<NodeId> critical_path; // input -> carry-out, max-ready inputs,
                                       // ties to the lower node id
};

// Input nodes become ready at the profile's arrival time of their bit,
// constants at 0, gates at max(input ready) + latency.
TimingReport timing_analyze(const Netlist& net, const DelayProfile& dp);

struct Counterexample {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t got_sum_bits = 0;
    bool got_carry = false;
    std::uint64_t want_sum_bits = 0;
    bool want_carry = false;

    std::string to_string(int width) const;
};

struct VerifyMode {
    enum class Kind : std::uint8_t { Exhaustive, Random };
    Kind kind = Kind::Exhaustive;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    static VerifyMode exhaustive() { return {Kind::Exhaustive, 0, 0}; }
    static VerifyMode random(std::uint64_t count, std::uint64_t seed) {
        return {Kind::Random, count, seed};
    }
};

// Compares the netlist against a + b for every operand pair (exhaustive,
// width <= 12) or `count` seeded random pairs. Returns the first mismatch in
// scan order, nullopt when equivalent.
std::optional<Counterexample> verify(const Netlist& net, int width, VerifyMode mode);

} // namespace earlyadd
