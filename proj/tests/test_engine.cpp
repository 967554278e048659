// SPDX-License-Identifier: Apache-2.0
#include <map>
#include <random>

#include <doctest.h>

#include "earlyadd/baselines.hpp"
#include "earlyadd/engine.hpp"
#include "earlyadd/errors.hpp"
#include "earlyadd/scheduler.hpp"
#include "earlyadd/serialize.hpp"

using namespace earlyadd;

namespace {

const DelayProfile kPaperDp = validate_profile({0, 1, 2, 2, 3, 3, 4, 5, 4, 3, 2, 1});

SchedulerConfig igef_cfg(int blocking) {
    SchedulerConfig cfg;
    cfg.blocking_factor = blocking;
    return cfg;
}

DelayProfile random_profile(std::mt19937_64& gen, int width, int max_arrival) {
    std::vector<long long> raw;
    for (int i = 0; i < width; ++i) {
        raw.push_back(static_cast<long long>(gen() % static_cast<std::uint64_t>(max_arrival + 1)));
    }
    return validate_profile(raw);
}

} // namespace

TEST_CASE("width-1 netlist needs no operators") {
    ScheduleTrace trace = gef_schedule(validate_profile({0}));
    const Netlist net = build_netlist(trace);
    CHECK(net.nodes().size() == 3); // g0, r0, p0
    for (const Node& n : net.nodes()) {
        CHECK(is_input_fn(n.fn));
    }
    const EvalResult one_one = evaluate(net, 1, 1, 1);
    CHECK(one_one.sum_bits == std::vector<bool>{false});
    CHECK(one_one.carry_out);
    CHECK(one_one.as_integer == 2);
    CHECK(verify(net, 1, VerifyMode::exhaustive()) == std::nullopt);
}

TEST_CASE("evaluate computes sums, carry and assembled integer") {
    const Netlist net = build_ripple(4);
    CHECK(evaluate(net, 11, 6, 4).as_integer == 17);
    CHECK(evaluate(net, 0, 0, 4).as_integer == 0);
    const EvalResult overflow = evaluate(net, 15, 1, 4);
    CHECK(overflow.carry_out);
    CHECK(overflow.as_integer == 16);
    for (bool bit : overflow.sum_bits) {
        CHECK_FALSE(bit);
    }
    CHECK_THROWS_AS(evaluate(net, 16, 0, 4), WidthMismatch);
    CHECK_THROWS_AS(evaluate(net, 1, 1, 5), WidthMismatch);
}

TEST_CASE("evaluation is pure") {
    const Netlist net = build_tree_cla2(6);
    const EvalResult first = evaluate(net, 21, 42, 6);
    const EvalResult second = evaluate(net, 21, 42, 6);
    CHECK(first.as_integer == second.as_integer);
    CHECK(first.sum_bits == second.sum_bits);
}

TEST_CASE("scheduler netlists pass the exhaustive oracle") {
    std::mt19937_64 gen(31337);
    for (int width = 1; width <= 8; ++width) {
        const DelayProfile dp = random_profile(gen, width, 6);
        for (const ScheduleTrace& trace : {gef_schedule(dp), igef_schedule(dp, igef_cfg(3))}) {
            const Netlist net = build_netlist(trace);
            CHECK(verify(net, width, VerifyMode::exhaustive()) == std::nullopt);
        }
    }
}

TEST_CASE("timing matches the published final carry times on the bundled profile") {
    const Netlist igef_net = build_netlist(igef_schedule(kPaperDp, igef_cfg(3)));
    CHECK(timing_analyze(igef_net, kPaperDp).final_carry_time == 6);
    const Netlist gef_net = build_netlist(gef_schedule(kPaperDp));
    CHECK(timing_analyze(gef_net, kPaperDp).final_carry_time == 7);
}

TEST_CASE("ternary operator count follows the combine structure") {
    const ScheduleTrace trace = igef_schedule(kPaperDp, igef_cfg(3));

    // Reconstruct term ranges to find the spine boundary bits: every member a
    // carry-prefix extension absorbs contributes one boundary carry at its
    // high bit. Remaining bits are completed by one ripple operator each.
    struct Range {
        int lo, hi;
        TermKind kind;
    };
    std::map<TermId, Range> ranges;
    for (int i = 0; i < trace.width; ++i) {
        ranges[static_cast<TermId>(i)] = {i, i,
                                          i == 0 ? TermKind::CarryPrefix : TermKind::BlockPair};
    }
    int size2 = 0, size3 = 0;
    std::vector<bool> boundary(static_cast<std::size_t>(trace.width), false);
    boundary[0] = true;
    for (const TraceEvent& ev : trace.events) {
        if (ev.action != Action::Combine) {
            continue;
        }
        (ev.inputs.size() == 3 ? size3 : size2) += 1;
        if (ev.output.kind == TermKind::CarryPrefix) {
            for (TermId id : ev.inputs) {
                const Range& r = ranges.at(id);
                if (r.lo != 0) {
                    boundary[static_cast<std::size_t>(r.hi)] = true;
                }
            }
        }
        ranges[ev.output.id] = {ev.output.lo, ev.output.hi, ev.output.kind};
    }
    int ripple_count = 0;
    for (int i = 1; i < trace.width; ++i) {
        ripple_count += boundary[static_cast<std::size_t>(i)] ? 0 : 1;
    }

    const Netlist net = build_netlist(trace);
    const TimingReport report = timing_analyze(net, kPaperDp);
    CHECK(report.operator_count == 2 * size3 + size2 + ripple_count);
}

TEST_CASE("timing consistency between trace and netlist") {
    std::mt19937_64 gen(4242);
    for (int round = 0; round < 120; ++round) {
        const int width = 1 + static_cast<int>(gen() % 32);
        const DelayProfile dp = random_profile(gen, width, 8);
        for (const ScheduleTrace& trace :
             {gef_schedule(dp), igef_schedule(dp, igef_cfg(3)), igef_schedule(dp, igef_cfg(2))}) {
            const Netlist net = build_netlist(trace);
            const TimingReport report = timing_analyze(net, dp);
            CHECK(report.final_carry_time == trace.final_time);
        }
    }
}

TEST_CASE("ripple completion carry times never decrease inside a block") {
    std::mt19937_64 gen(777);
    for (int round = 0; round < 40; ++round) {
        const int width = 2 + static_cast<int>(gen() % 24);
        const DelayProfile dp = random_profile(gen, width, 7);
        const Netlist net = build_netlist(igef_schedule(dp));
        const TimingReport report = timing_analyze(net, dp);
        for (int i = 1; i < width; ++i) {
            const Node& n = net.node(net.carries()[static_cast<std::size_t>(i)]);
            const bool is_ripple = n.fn == NodeFn::TernaryNabla && !n.inputs.empty() &&
                                   n.inputs[0] == net.carries()[static_cast<std::size_t>(i - 1)];
            if (is_ripple) {
                CHECK(report.carry_times[static_cast<std::size_t>(i)] >=
                      report.carry_times[static_cast<std::size_t>(i - 1)]);
            }
        }
    }
}

TEST_CASE("timing rejects mismatched widths") {
    const Netlist net = build_ripple(4);
    CHECK_THROWS_AS(timing_analyze(net, DelayProfile::zeros(5)), WidthMismatch);
}

TEST_CASE("critical path runs from an input to the carry-out") {
    const Netlist net = build_netlist(igef_schedule(kPaperDp));
    const TimingReport report = timing_analyze(net, kPaperDp);
    REQUIRE(!report.critical_path.empty());
    CHECK(report.critical_path.back() == net.carry_out());
    CHECK(net.node(report.critical_path.front()).inputs.empty());
    // each step must feed the next
    for (std::size_t i = 0; i + 1 < report.critical_path.size(); ++i) {
        const Node& next = net.node(report.critical_path[i + 1]);
        bool feeds = false;
        for (NodeId in : next.inputs) {
            feeds = feeds || in == report.critical_path[i];
        }
        CHECK(feeds);
    }
}

TEST_CASE("verify finds injected faults") {
    const Netlist good = build_netlist(igef_schedule(kPaperDp, igef_cfg(3)));
    // swap one nabla for a delta via the JSON form
    std::string text = netlist_to_json(good);
    const std::size_t at = text.find("\"nabla\"");
    REQUIRE(at != std::string::npos);
    text.replace(at, 7, "\"delta\"");
    const Netlist bad = netlist_from_json(text);
    const auto ce = verify(bad, 12, VerifyMode::exhaustive());
    REQUIRE(ce.has_value());
    const EvalResult got = evaluate(bad, ce->a, ce->b, 12);
    CHECK(got.as_integer != ce->a + ce->b);
    CHECK(ce->want_sum_bits == ((ce->a + ce->b) & 0xfffull));
}

TEST_CASE("random verification is deterministic") {
    const Netlist net = build_tree_cla2(32);
    CHECK(verify(net, 32, VerifyMode::random(100000, 42)) == std::nullopt);
    const Netlist sched = build_netlist(igef_schedule(DelayProfile::zeros(32)));
    CHECK(verify(sched, 32, VerifyMode::random(100000, 42)) == std::nullopt);
}

TEST_CASE("verify rejects oversized exhaustive requests") {
    const Netlist net = build_ripple(13);
    CHECK_THROWS_AS(verify(net, 13, VerifyMode::exhaustive()), WidthTooLargeForExhaustive);
    CHECK_THROWS_AS(verify(net, 12, VerifyMode::exhaustive()), WidthMismatch);
}

TEST_CASE("build_netlist rejects malformed traces") {
    ScheduleTrace broken;
    broken.width = 3;
    broken.final_time = 1;
    // no events: three live terms remain, coverage incomplete
    CHECK_THROWS_AS(build_netlist(broken), IncompleteTrace);
}
