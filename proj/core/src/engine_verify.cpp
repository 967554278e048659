// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <sstream>

#include "earlyadd/engine.hpp"
#include "earlyadd/errors.hpp"

namespace earlyadd {

namespace {

// Bit patterns of the low six bits of the lane index: lane l holds operand
// value base + l, so bit i of the operand alternates in blocks of 2^i.
constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

// Reference result, bitsliced: plain full-adder recurrence per lane. This is
// the independent oracle the netlist evaluation is compared against.
void reference_add(std::span<const std::uint64_t> a_bits, std::span<const std::uint64_t> b_bits,
                   std::span<std::uint64_t> sum_out, std::uint64_t& carry_out) {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a_bits.size(); ++i) {
        const std::uint64_t axb = a_bits[i] ^ b_bits[i];
        sum_out[i] = axb ^ carry;
        carry = (a_bits[i] & b_bits[i]) | (carry & axb);
    }
    carry_out = carry;
}

struct LaneBatch {
    std::vector<std::uint64_t> a_bits, b_bits;
    std::vector<std::uint64_t> got_sum, want_sum;
    std::uint64_t got_carry = 0, want_carry = 0;
    std::vector<std::uint64_t> scratch;

    explicit LaneBatch(int width)
        : a_bits(static_cast<std::size_t>(width)), b_bits(static_cast<std::size_t>(width)),
          got_sum(static_cast<std::size_t>(width)), want_sum(static_cast<std::size_t>(width)) {}
};

// Runs one 64-lane batch; on mismatch fills `out` with the lowest failing
// lane and returns true. `lane_mask` limits which lanes carry real pairs.
bool run_batch(const Netlist& net, LaneBatch& batch, std::uint64_t lane_mask,
               std::span<const std::uint64_t> a_of_lane, std::span<const std::uint64_t> b_of_lane,
               Counterexample& out) {
    evaluate_words(net, batch.a_bits, batch.b_bits, batch.got_sum, batch.got_carry,
                   batch.scratch);
    reference_add(batch.a_bits, batch.b_bits, batch.want_sum, batch.want_carry);

    std::uint64_t diff = (batch.got_carry ^ batch.want_carry) & lane_mask;
    for (std::size_t i = 0; i < batch.a_bits.size(); ++i) {
        diff |= (batch.got_sum[i] ^ batch.want_sum[i]) & lane_mask;
    }
    if (diff == 0) {
        return false;
    }
    int lane = 0;
    while (((diff >> lane) & 1u) == 0) {
        ++lane;
    }
    out.a = a_of_lane[static_cast<std::size_t>(lane)];
    out.b = b_of_lane[static_cast<std::size_t>(lane)];
    out.got_sum_bits = 0;
    out.want_sum_bits = 0;
    for (std::size_t i = 0; i < batch.a_bits.size(); ++i) {
        out.got_sum_bits |= ((batch.got_sum[i] >> lane) & 1u) << i;
        out.want_sum_bits |= ((batch.want_sum[i] >> lane) & 1u) << i;
    }
    out.got_carry = ((batch.got_carry >> lane) & 1u) != 0;
    out.want_carry = ((batch.want_carry >> lane) & 1u) != 0;
    return true;
}

std::optional<Counterexample> verify_exhaustive(const Netlist& net, int width) {
    const std::uint64_t operand_count = 1ull << width;
    const int lanes = operand_count < 64 ? static_cast<int>(operand_count) : 64;
    const std::uint64_t lane_mask =
        lanes == 64 ? ~0ull : ((1ull << lanes) - 1);

    LaneBatch batch(width);
    std::vector<std::uint64_t> a_of_lane(64), b_of_lane(64);
    Counterexample ce;
    for (std::uint64_t a = 0; a < operand_count; ++a) {
        for (int i = 0; i < width; ++i) {
            batch.a_bits[static_cast<std::size_t>(i)] =
                ((a >> i) & 1u) ? ~0ull : 0ull; // same a in every lane
        }
        for (std::uint64_t base = 0; base < operand_count;
             base += static_cast<std::uint64_t>(lanes)) {
            for (int i = 0; i < width; ++i) {
                // lane l carries b = base + l
                batch.b_bits[static_cast<std::size_t>(i)] =
                    i < 6 ? kLanePattern[i] : (((base >> i) & 1u) ? ~0ull : 0ull);
            }
            for (int l = 0; l < lanes; ++l) {
                a_of_lane[static_cast<std::size_t>(l)] = a;
                b_of_lane[static_cast<std::size_t>(l)] = base + static_cast<std::uint64_t>(l);
            }
            if (run_batch(net, batch, lane_mask, a_of_lane, b_of_lane, ce)) {
                return ce;
            }
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> verify_random(const Netlist& net, int width, std::uint64_t count,
                                            std::uint64_t seed) {
    // Plain masked draws from a fixed engine keep the pair sequence identical
    // on every platform.
    std::mt19937_64 gen(seed);
    const std::uint64_t mask = width == 64 ? ~0ull : ((1ull << width) - 1);

    LaneBatch batch(width);
    std::vector<std::uint64_t> a_of_lane(64), b_of_lane(64);
    Counterexample ce;
    std::uint64_t done = 0;
    while (done < count) {
        const int lanes = static_cast<int>(std::min<std::uint64_t>(64, count - done));
        const std::uint64_t lane_mask = lanes == 64 ? ~0ull : ((1ull << lanes) - 1);
        for (int l = 0; l < lanes; ++l) {
            a_of_lane[static_cast<std::size_t>(l)] = gen() & mask;
            b_of_lane[static_cast<std::size_t>(l)] = gen() & mask;
        }
        for (int i = 0; i < width; ++i) {
            std::uint64_t aw = 0, bw = 0;
            for (int l = 0; l < lanes; ++l) {
                aw |= ((a_of_lane[static_cast<std::size_t>(l)] >> i) & 1u) << l;
                bw |= ((b_of_lane[static_cast<std::size_t>(l)] >> i) & 1u) << l;
            }
            batch.a_bits[static_cast<std::size_t>(i)] = aw;
            batch.b_bits[static_cast<std::size_t>(i)] = bw;
        }
        if (run_batch(net, batch, lane_mask, a_of_lane, b_of_lane, ce)) {
            return ce;
        }
        done += static_cast<std::uint64_t>(lanes);
    }
    return std::nullopt;
}

} // namespace

std::string Counterexample::to_string(int width) const {
    std::ostringstream os;
    const std::uint64_t got = got_sum_bits | (static_cast<std::uint64_t>(got_carry) << width);
    const std::uint64_t want = want_sum_bits | (static_cast<std::uint64_t>(want_carry) << width);
    os << "a=" << a << " b=" << b << " got=" << got << " want=" << want;
    return os.str();
}

std::optional<Counterexample> verify(const Netlist& net, int width, VerifyMode mode) {
    if (width != net.width()) {
        throw WidthMismatch("verify width " + std::to_string(width) +
                            " does not match netlist width " + std::to_string(net.width()));
    }
    if (width > 63) {
        throw WidthMismatch("verification supports width <= 63");
    }
    if (mode.kind == VerifyMode::Kind::Exhaustive) {
        if (width > 12) {
            throw WidthTooLargeForExhaustive(width);
        }
        return verify_exhaustive(net, width);
    }
    return verify_random(net, width, mode.count, mode.seed);
}

} // namespace earlyadd
