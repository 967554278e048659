// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "earlyadd/trace.hpp"

namespace earlyadd {

// Renders a trace as a text table with one column per bit position and one
// P/T row pair per iteration: P holds pending term ready times at their high
// bit, T holds released terms plus the terms generated this iteration
// (marked with '*'). The last line is "final_time = <t>".
std::string emit_trace(const ScheduleTrace& trace);

} // namespace earlyadd
