// SPDX-License-Identifier: Apache-2.0
//
// earlyadd command line: schedule, synthesize, verify, compare and export
// adder netlists from per-bit arrival-time delay profiles.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "earlyadd/algorithms.hpp"
#include "earlyadd/baselines.hpp"
#include "earlyadd/compare.hpp"
#include "earlyadd/engine.hpp"
#include "earlyadd/errors.hpp"
#include "earlyadd/render.hpp"
#include "earlyadd/scheduler.hpp"
#include "earlyadd/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string dp_path;
    std::string algo;
    std::string algos_csv;
    std::string netlist_path;
    std::string output_path;
    std::string mode = "exhaustive";
    std::string format = "dot";
    int blocking = 3;
    int width = 0;
    std::uint64_t count = 10000;
    std::uint64_t seed = 42;
};

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(csv.substr(start));
            break;
        }
        parts.push_back(csv.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

void require_algorithm(const std::string& name) {
    if (!earlyadd::is_algorithm(name)) {
        throw earlyadd::UnknownAlgorithm(name);
    }
}

int run_synth(const Options& opt) {
    const earlyadd::DelayProfile dp = earlyadd::load_profile(opt.dp_path);
    require_algorithm(opt.algo);
    const earlyadd::BuiltAdder built = earlyadd::build_adder(opt.algo, dp, opt.blocking);
    earlyadd::save_netlist(built.net, opt.output_path);
    std::cout << "wrote " << opt.output_path << " (" << built.net.nodes().size() << " nodes)\n";
    return kExitOk;
}

int run_trace(const Options& opt) {
    const earlyadd::DelayProfile dp = earlyadd::load_profile(opt.dp_path);
    earlyadd::ScheduleTrace trace;
    if (opt.algo == "gef") {
        trace = earlyadd::gef_schedule(dp);
    } else if (opt.algo == "igef") {
        earlyadd::SchedulerConfig cfg;
        cfg.blocking_factor = opt.blocking;
        trace = earlyadd::igef_schedule(dp, cfg);
    } else {
        throw earlyadd::UnknownAlgorithm(opt.algo + " (trace needs gef or igef)");
    }
    std::cout << earlyadd::emit_trace(trace);
    return kExitOk;
}

int run_verify(const Options& opt) {
    std::vector<std::string> names;
    if (opt.algo == "all") {
        names = earlyadd::algorithm_names();
    } else {
        require_algorithm(opt.algo);
        names = {opt.algo};
    }
    earlyadd::DelayProfile dp = opt.dp_path.empty()
                                    ? earlyadd::DelayProfile::zeros(opt.width)
                                    : earlyadd::load_profile(opt.dp_path);
    if (!opt.dp_path.empty() && opt.width != 0 && opt.width != dp.width()) {
        throw earlyadd::WidthMismatch("--width disagrees with the profile width");
    }
    const earlyadd::VerifyMode mode = opt.mode == "exhaustive"
                                          ? earlyadd::VerifyMode::exhaustive()
                                          : earlyadd::VerifyMode::random(opt.count, opt.seed);
    for (const std::string& name : names) {
        const earlyadd::BuiltAdder built = earlyadd::build_adder(name, dp, opt.blocking);
        const auto ce = earlyadd::verify(built.net, dp.width(), mode);
        if (ce) {
            std::cerr << "FAIL " << name << " width=" << dp.width() << ": "
                      << ce->to_string(dp.width()) << "\n";
            return kExitVerificationFailed;
        }
        std::cout << "ok " << name << " width=" << dp.width() << " mode=" << opt.mode;
        if (opt.mode == "random") {
            std::cout << " count=" << opt.count << " seed=" << opt.seed;
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_compare(const Options& opt) {
    const earlyadd::DelayProfile dp = earlyadd::load_profile(opt.dp_path);
    std::vector<std::string> names =
        opt.algos_csv.empty() ? earlyadd::algorithm_names() : split_csv(opt.algos_csv);
    earlyadd::CompareOptions copts;
    copts.igef_blocking = opt.blocking;
    copts.verify_count = opt.count;
    copts.verify_seed = opt.seed;
    const auto rows = earlyadd::compare(dp, names, copts);
    std::cout << earlyadd::render_compare(rows);
    std::cout << "verified: " << copts.verify_count << " random pairs per algorithm, seed "
              << copts.verify_seed << "\n";
    for (const std::string& name : names) {
        if (name == "chain_csma_cca") {
            std::cout << "note: chain_csma_cca early-merge sum times:";
            for (earlyadd::Time t : earlyadd::csma_early_merge_sum_times(dp)) {
                std::cout << ' ' << t;
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_export(const Options& opt) {
    const earlyadd::Netlist net = earlyadd::load_netlist(opt.netlist_path);
    if (opt.format != "dot") {
        throw earlyadd::ParseError("unknown export format: " + opt.format);
    }
    if (opt.dp_path.empty()) {
        earlyadd::export_dot_file(net, opt.output_path);
    } else {
        const earlyadd::DelayProfile dp = earlyadd::load_profile(opt.dp_path);
        const earlyadd::TimingReport report = earlyadd::timing_analyze(net, dp);
        earlyadd::export_dot_file(net, opt.output_path, &report);
    }
    std::cout << "wrote " << opt.output_path << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"timing-driven adder synthesis from arrival-time delay profiles"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* synth = app.add_subcommand("synth", "schedule an adder and write its netlist");
    synth->add_option("--dp", opt.dp_path, "delay profile file")->required();
    synth->add_option("--algo", opt.algo, "generator name")->required();
    synth->add_option("--blocking", opt.blocking, "igef blocking factor")
        ->check(CLI::IsMember({2, 3}));
    synth->add_option("-o,--output", opt.output_path, "netlist output file")->required();

    CLI::App* trace = app.add_subcommand("trace", "print the schedule as a P/T table");
    trace->add_option("--dp", opt.dp_path, "delay profile file")->required();
    trace->add_option("--algo", opt.algo, "gef or igef")->required();
    trace->add_option("--blocking", opt.blocking, "igef blocking factor")
        ->check(CLI::IsMember({2, 3}));

    CLI::App* verify = app.add_subcommand("verify", "check a generator against integer addition");
    verify->add_option("--algo", opt.algo, "generator name or 'all'")->required();
    verify->add_option("--width", opt.width, "operand width in bits");
    verify->add_option("--dp", opt.dp_path, "delay profile file (default: all-zero arrivals)");
    verify->add_option("--mode", opt.mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--count", opt.count, "random pair count");
    verify->add_option("--seed", opt.seed, "random seed");
    verify->add_option("--blocking", opt.blocking, "igef blocking factor")
        ->check(CLI::IsMember({2, 3}));

    CLI::App* cmp = app.add_subcommand("compare", "run and rank generators on one profile");
    cmp->add_option("--dp", opt.dp_path, "delay profile file")->required();
    cmp->add_option("--algos", opt.algos_csv, "comma-separated generator names");
    cmp->add_option("--blocking", opt.blocking, "igef blocking factor")
        ->check(CLI::IsMember({2, 3}));
    cmp->add_option("--count", opt.count, "random pair count per algorithm");
    cmp->add_option("--seed", opt.seed, "random seed");

    CLI::App* exp = app.add_subcommand("export", "render a netlist file");
    exp->add_option("--netlist", opt.netlist_path, "netlist file")->required();
    exp->add_option("--format", opt.format, "output format (dot)");
    exp->add_option("--dp", opt.dp_path, "profile for ready-time labels");
    exp->add_option("-o,--output", opt.output_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (synth->parsed()) return run_synth(opt);
        if (trace->parsed()) return run_trace(opt);
        if (verify->parsed()) {
            if (opt.dp_path.empty() && opt.width < 1) {
                std::cerr << "verify needs --width or --dp\n";
                return kExitUsage;
            }
            return run_verify(opt);
        }
        if (cmp->parsed()) return run_compare(opt);
        if (exp->parsed()) return run_export(opt);
    } catch (const earlyadd::VerificationFailed& e) {
        std::cerr << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
