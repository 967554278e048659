// SPDX-License-Identifier: Apache-2.0
#include "earlyadd/delay_profile.hpp"

#include <algorithm>

#include "earlyadd/errors.hpp"

namespace earlyadd {

Time DelayProfile::max_arrival() const {
    return *std::max_element(arrival_.begin(), arrival_.end());
}

DelayProfile DelayProfile::zeros(int width) {
    return validate_profile(std::vector<long long>(static_cast<std::size_t>(width), 0));
}

DelayProfile validate_profile(const std::vector<long long>& raw) {
    if (raw.empty()) {
        throw EmptyProfile();
    }
    std::vector<Time> arrival;
    arrival.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) {
            throw NegativeArrival(static_cast<int>(i));
        }
        arrival.push_back(static_cast<Time>(raw[i]));
    }
    return DelayProfile(std::move(arrival));
}

} // namespace earlyadd
