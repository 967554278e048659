// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "earlyadd/types.hpp"

namespace earlyadd {

// A carry prefix covers [0..hi] and carries an actual carry signal c_hi.
// A block pair covers [lo..hi] with lo > 0 and carries a (generate, alive)
// signal pair for the block.
enum class TermKind : std::uint8_t { CarryPrefix, BlockPair };

// A live schedulable unit. Ids are assigned in creation order, which keeps
// every trace and derived artifact deterministic.
struct Term {
    TermId id = 0;
    TermKind kind = TermKind::BlockPair;
    int lo = 0;
    int hi = 0;
    Time ready = 0;

    bool covers_all(int width) const { return lo == 0 && hi == width - 1; }

    friend bool operator==(const Term&, const Term&) = default;
};

} // namespace earlyadd
