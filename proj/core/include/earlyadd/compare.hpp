// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "earlyadd/delay_profile.hpp"
#include "earlyadd/engine.hpp"

namespace earlyadd {

struct CompareRow {
    std::string algorithm;
    Time final_carry_time = 0;
    Time last_sum_time = 0;
    int operator_count = 0; // ternary operators in the netlist
    int combine_steps = 0;  // combine events (schedulers) or merges (baselines)
    int spine_depth = 0;    // most ternary operators on any path to carry-out
};

class VerificationFailed : public std::runtime_error {
public:
    VerificationFailed(std::string algorithm, Counterexample ce, int width);
    const std::string& algorithm() const { return algorithm_; }
    const Counterexample& counterexample() const { return ce_; }

private:
    std::string algorithm_;
    Counterexample ce_;
};

struct CompareOptions {
    int igef_blocking = 3;
    std::uint64_t verify_count = 10000;
    std::uint64_t verify_seed = 1;
};

// Builds every named generator for the profile, random-verifies it, and
// reports one row each, sorted by final carry time then name.
// Throws UnknownAlgorithm or VerificationFailed.
std::vector<CompareRow> compare(const DelayProfile& dp, const std::vector<std::string>& algorithms,
                                const CompareOptions& opts = {});

std::string render_compare(const std::vector<CompareRow>& rows);

} // namespace earlyadd
