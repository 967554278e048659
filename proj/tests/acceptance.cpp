// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: runs every release gate end to end and prints one
// pass/fail line per criterion. Usage:
//   earlyadd_acceptance <path-to-cli> <path-to-data-dir>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "earlyadd/algorithms.hpp"
#include "earlyadd/baselines.hpp"
#include "earlyadd/compare.hpp"
#include "earlyadd/engine.hpp"
#include "earlyadd/ops.hpp"
#include "earlyadd/render.hpp"
#include "earlyadd/scheduler.hpp"
#include "earlyadd/serialize.hpp"
#include "oracles.hpp"

using namespace earlyadd;

namespace {

std::string g_cli;
std::string g_data;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = g_cli + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        result.output = "popen failed";
        return result;
    }
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

SchedulerConfig igef_cfg(int blocking) {
    SchedulerConfig cfg;
    cfg.blocking_factor = blocking;
    return cfg;
}

DelayProfile random_profile(std::mt19937_64& gen, int width, int max_arrival) {
    std::vector<long long> raw;
    raw.reserve(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) {
        raw.push_back(static_cast<long long>(gen() % static_cast<std::uint64_t>(max_arrival + 1)));
    }
    return validate_profile(raw);
}

int ceil_log(int n, int base) {
    int levels = 0;
    long long reach = 1;
    while (reach < n) {
        reach *= base;
        ++levels;
    }
    return levels;
}

const DelayProfile& paper_dp() {
    static const DelayProfile dp = validate_profile({0, 1, 2, 2, 3, 3, 4, 5, 4, 3, 2, 1});
    return dp;
}

// ---- criteria ------------------------------------------------------------

bool criterion1(std::string& detail) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const RunResult gef = run_cli("trace --dp " + g_data + "/paper.json --algo gef");
    const RunResult igef = run_cli("trace --dp " + g_data + "/paper.json --algo igef");
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();

    const bool gef_ok = gef.exit_code == 0 && gef.output.find("final_time = 7") != std::string::npos;
    const bool igef_ok =
        igef.exit_code == 0 && igef.output.find("final_time = 6") != std::string::npos;
    std::ostringstream os;
    os << "cli gef final_time=7 " << (gef_ok ? "ok" : "MISSING") << ", cli igef final_time=6 "
       << (igef_ok ? "ok" : "MISSING") << ", " << seconds << "s";
    detail = os.str();
    return gef_ok && igef_ok && seconds < 1.0;
}

bool criterion2(std::string& detail) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const std::vector<Time> arrivals(paper_dp().arrivals().begin(), paper_dp().arrivals().end());
    const Time optimum = test::optimal_completion(arrivals, 2);
    const Time igef2 = igef_schedule(paper_dp(), igef_cfg(2)).final_time;
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    std::ostringstream os;
    os << "igef blocking 2 gives " << igef2 << ", exhaustive r=2 optimum " << optimum << ", "
       << seconds << "s";
    detail = os.str();
    return igef2 == 7 && optimum == 7 && seconds < 60.0;
}

bool criterion3(std::string& detail) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    long checked = 0;
    for (int width = 1; width <= 8; ++width) {
        const DelayProfile flat = DelayProfile::zeros(width);
        for (const std::string& name : algorithm_names()) {
            const BuiltAdder built = build_adder(name, flat);
            if (verify(built.net, width, VerifyMode::exhaustive())) {
                detail = name + " failed exhaustive at width " + std::to_string(width);
                return false;
            }
            ++checked;
        }
        std::mt19937_64 gen(static_cast<std::uint64_t>(width) * 1000003u);
        for (int round = 0; round < 50; ++round) {
            const DelayProfile dp = random_profile(gen, width, 9);
            for (const std::string& name : {std::string("gef"), std::string("igef")}) {
                const BuiltAdder built = build_adder(name, dp);
                if (verify(built.net, width, VerifyMode::exhaustive())) {
                    detail = name + " failed exhaustive on a random profile at width " +
                             std::to_string(width);
                    return false;
                }
                ++checked;
            }
        }
    }
    const RunResult cli = run_cli("verify --algo all --width 8 --mode exhaustive");
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    std::ostringstream os;
    os << checked << " netlists exhaustively verified, cli exit " << cli.exit_code << ", "
       << seconds << "s";
    detail = os.str();
    return cli.exit_code == 0 && seconds < 300.0;
}

bool criterion4(std::string& detail) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto bit = [](int word, int pos) { return ((word >> pos) & 1) != 0; };

    bool tables_ok = true;
    for (int w = 0; w < 8; ++w) {
        const bool a = bit(w, 0), b = bit(w, 1), c = bit(w, 2);
        tables_ok = tables_ok && op_mux(a, b, c) == ((a && b) || (!a && c)) &&
                    op_nabla(a, b, c) == (b || (c && a)) && op_delta(a, b, c) == (b != (c && a));
    }
    bool assoc_ok = true;
    for (int w = 0; w < 64; ++w) {
        const BlockPair x{bit(w, 0), bit(w, 1)}, y{bit(w, 2), bit(w, 3)}, z{bit(w, 4), bit(w, 5)};
        assoc_ok = assoc_ok &&
                   combine_nabla(combine_nabla(x, y), z) == combine_nabla(x, combine_nabla(y, z));
    }
    bool gr_ok = true;
    std::string gr_note;
    for (int w = 0; w < 16; ++w) {
        const BlockPair lower{bit(w, 0), bit(w, 1)}, upper{bit(w, 2), bit(w, 3)};
        if ((lower.g && !lower.r) || (upper.g && !upper.r)) {
            continue;
        }
        const BlockPair out = combine_nabla(lower, upper);
        if (out.g && !out.r && gr_ok) {
            gr_ok = false;
            std::ostringstream os;
            os << "counterexample (g=" << lower.g << ",r=" << lower.r << ") nabla (g=" << upper.g
               << ",r=" << upper.r << ") -> (g=" << out.g << ",r=" << out.r << ")";
            gr_note = os.str();
        }
    }
    bool carry_ok = true;
    for (int w = 0; w < 8; ++w) {
        const bool a = bit(w, 0), b = bit(w, 1), cin = bit(w, 2);
        const auto [p, g, r] = primitive_signals(a, b);
        const bool want = g || (r && cin);
        carry_ok = carry_ok && op_mux(cin, r, g) == want && op_nabla(cin, g, p) == want &&
                   op_nabla(cin, g, r) == want;
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    std::ostringstream os;
    os << "truth tables " << (tables_ok ? "ok" : "FAIL") << ", associativity "
       << (assoc_ok ? "ok" : "FAIL") << ", g<=r preservation "
       << (gr_ok ? "ok" : "FAIL (" + gr_note + ")") << ", carry forms "
       << (carry_ok ? "ok" : "FAIL") << ", " << seconds << "s";
    detail = os.str();
    return tables_ok && assoc_ok && gr_ok && carry_ok && seconds < 1.0;
}

struct Corpus {
    std::vector<DelayProfile> profiles;
};

const Corpus& corpus() {
    static const Corpus c = [] {
        Corpus c;
        std::mt19937_64 gen(20240801);
        c.profiles.reserve(10000);
        for (int round = 0; round < 10000; ++round) {
            const int width = 2 + static_cast<int>(gen() % 31);
            c.profiles.push_back(random_profile(gen, width, 9));
        }
        return c;
    }();
    return c;
}

bool criterion5(std::string& detail) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    std::mt19937_64 gen(555);
    long replay_checks = 0;
    bool bound_ok = true, replay_ok = true, deterministic_ok = true;
    bool mono_ok = true;
    std::string mono_note, replay_note;
    for (std::size_t idx = 0; idx < corpus().profiles.size(); ++idx) {
        const DelayProfile& dp = corpus().profiles[idx];
        const ScheduleTrace gef = gef_schedule(dp);
        const ScheduleTrace igef3 = igef_schedule(dp, igef_cfg(3));
        for (const ScheduleTrace* trace : {&gef, &igef3}) {
            bound_ok = bound_ok && trace->final_time >= dp.max_arrival() + 1;
            if (const auto violation = replay_trace(*trace, &dp)) {
                if (replay_ok) {
                    replay_note = *violation;
                }
                replay_ok = false;
            }
            ++replay_checks;
        }
        // monotonicity under a single-entry increase
        std::vector<long long> bumped(dp.arrivals().begin(), dp.arrivals().end());
        bumped[gen() % bumped.size()] += 1 + static_cast<long long>(gen() % 4);
        const DelayProfile dp2 = validate_profile(bumped);
        const bool gef_mono = gef_schedule(dp2).final_time >= gef.final_time;
        const bool igef_mono = igef_schedule(dp2, igef_cfg(3)).final_time >= igef3.final_time;
        if (!(gef_mono && igef_mono) && mono_ok) {
            mono_ok = false;
            std::ostringstream os;
            os << (gef_mono ? "igef" : "gef") << " at corpus index " << idx << ", profile [";
            for (int i = 0; i < dp.width(); ++i) {
                os << (i ? "," : "") << dp.arrival(i);
            }
            os << "] bumped to [";
            for (int i = 0; i < dp2.width(); ++i) {
                os << (i ? "," : "") << dp2.arrival(i);
            }
            os << "]";
            mono_note = os.str();
        }
        // byte determinism of rendered traces, netlists and reports
        deterministic_ok = deterministic_ok && emit_trace(gef_schedule(dp)) == emit_trace(gef) &&
                           emit_trace(igef_schedule(dp, igef_cfg(3))) == emit_trace(igef3);
        if (idx % 20 == 0) {
            deterministic_ok =
                deterministic_ok &&
                netlist_to_json(build_netlist(igef3)) == netlist_to_json(build_netlist(igef3));
            const auto rows = compare(dp, {"gef", "igef"}, {3, 256, 1});
            deterministic_ok = deterministic_ok &&
                               render_compare(rows) ==
                                   render_compare(compare(dp, {"gef", "igef"}, {3, 256, 1}));
        }
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    std::ostringstream os;
    os << corpus().profiles.size() << " profiles, " << replay_checks << " replays: lower bound "
       << (bound_ok ? "ok" : "FAIL") << ", monotonicity "
       << (mono_ok ? "ok" : "FAIL (" + mono_note + ")") << ", replay "
       << (replay_ok ? "ok" : "FAIL (" + replay_note + ")") << ", determinism "
       << (deterministic_ok ? "ok" : "FAIL") << ", " << seconds << "s";
    detail = os.str();
    return bound_ok && mono_ok && replay_ok && deterministic_ok;
}

bool criterion6(std::string& detail) {
    for (int width = 2; width <= 32; ++width) {
        const DelayProfile flat = DelayProfile::zeros(width);
        const Time gef = gef_schedule(flat).final_time;
        const Time igef3 = igef_schedule(flat, igef_cfg(3)).final_time;
        if (gef != ceil_log(width, 2)) {
            detail = "gef flat depth mismatch at width " + std::to_string(width);
            return false;
        }
        if (igef3 != ceil_log(width, 3)) {
            detail = "igef flat depth mismatch at width " + std::to_string(width);
            return false;
        }
        if (width <= 12) {
            const std::vector<Time> zeros(static_cast<std::size_t>(width), 0);
            if (test::optimal_completion(zeros, 2) != ceil_log(width, 2) ||
                test::optimal_completion(zeros, 3) != ceil_log(width, 3)) {
                detail = "oracle disputes flat depth at width " + std::to_string(width);
                return false;
            }
        }
    }
    detail = "gef = ceil(log2 N), igef = ceil(log3 N) for widths 2..32, oracle-confirmed <= 12";
    return true;
}

bool criterion7(std::string& detail) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    long checked = 0;
    for (const DelayProfile& dp : corpus().profiles) {
        for (const ScheduleTrace& trace : {gef_schedule(dp), igef_schedule(dp, igef_cfg(3))}) {
            const Netlist net = build_netlist(trace);
            if (timing_analyze(net, dp).final_carry_time != trace.final_time) {
                detail = "timing disagrees with trace final time";
                return false;
            }
            ++checked;
        }
    }
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    std::ostringstream os;
    os << checked << " netlists, " << seconds << "s";
    detail = os.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: earlyadd_acceptance <path-to-cli> <path-to-data-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_data = argv[2];

    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"criterion 1: paper trace reproduction (gef 7, igef 6)", criterion1},
        {"criterion 2: blocking-factor ablation (igef r=2 == exhaustive optimum 7)", criterion2},
        {"criterion 3: functional equivalence, widths 1..8 exhaustive", criterion3},
        {"criterion 4: operator-algebra properties", criterion4},
        {"criterion 5: scheduling properties on 10^4 random profiles", criterion5},
        {"criterion 6: uniform-profile depth", criterion6},
        {"criterion 7: timing-engine consistency", criterion7},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << " — " << detail << "\n";
        failures += ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
