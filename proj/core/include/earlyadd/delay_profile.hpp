// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "earlyadd/types.hpp"

namespace earlyadd {

// Per-bit maximum arrival times of the two operands' bits, index 0 = LSB.
// Immutable once validated; entry i is when p_i, g_i and r_i become usable.
class DelayProfile {
public:
    int width() const { return static_cast<int>(arrival_.size()); }
    Time arrival(int bit) const { return arrival_[static_cast<std::size_t>(bit)]; }
    std::span<const Time> arrivals() const { return arrival_; }
    Time max_arrival() const;

    static DelayProfile zeros(int width);

    friend DelayProfile validate_profile(const std::vector<long long>& raw);

private:
    explicit DelayProfile(std::vector<Time> arrival) : arrival_(std::move(arrival)) {}

    std::vector<Time> arrival_;
};

// Throws EmptyProfile for a zero-length sequence and NegativeArrival(index)
// for the first negative entry.
DelayProfile validate_profile(const std::vector<long long>& raw);

} // namespace earlyadd
