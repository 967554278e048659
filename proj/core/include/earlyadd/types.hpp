// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace earlyadd {

// Time is measured in normalized operator delays; all profile entries and
// gate latencies are small non-negative integers.
using Time = std::int32_t;
using TermId = std::uint32_t;
using NodeId = std::uint32_t;

} // namespace earlyadd
