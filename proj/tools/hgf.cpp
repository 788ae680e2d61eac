// hgf: evaluate the special functions and metrics, run verification suites,
// and search for counterexamples. CSV goes to --out (default stdout), the
// human-readable summary to stderr.
//
// Exit codes: 0 success (or expected violations only), 1 unexpected
// violations or a numerical failure, 2 bad usage.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgf/errors.hpp"
#include "hgf/registry.hpp"
#include "hgf/scan.hpp"
#include "hgf/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct ScanFlags {
    std::string target;
    std::vector<std::string> positional;  // param=values overrides
    std::vector<std::string> grids;
    std::optional<long> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<std::string> out;
    std::optional<int> jobs;
    std::string config;
};

void add_scan_options(CLI::App* cmd, ScanFlags& f, const std::string& what) {
    cmd->add_option(what, f.target, what)->required();
    cmd->add_option("params", f.positional, "grid overrides as param=v1,v2,... or param=min:max:count[:log]");
    cmd->add_option("--grid", f.grids, "grid override <param>=<min>:<max>:<count>[:log]");
    cmd->add_option("--samples", f.samples, "random samples per parameter combination");
    cmd->add_option("--seed", f.seed, "64-bit RNG seed (fallback: HGF_SEED, then 42)");
    cmd->add_option("--tol", f.tol, "pass tolerance: margin >= -tol");
    cmd->add_option("--out", f.out, "CSV output path, '-' for stdout");
    cmd->add_option("--jobs", f.jobs, "worker threads (0: available parallelism)");
    cmd->add_option("--config", f.config, "key=value file; command-line flags take precedence");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || text.front() == '-') {
        throw hgf::DomainError("seed must be an unsigned 64-bit integer: '" + text + "'");
    }
    return v;
}

void add_grid(hgf::scan::ScanSpec& spec, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) throw hgf::DomainError("grid must be <param>=<spec>: " + assignment);
    spec.grids[trim(assignment.substr(0, eq))] = hgf::scan::Grid::parse(trim(assignment.substr(eq + 1)));
}

// Precedence: flags > config file > HGF_SEED (seed only) > built-in defaults.
hgf::scan::ScanSpec build_spec(const ScanFlags& f) {
    hgf::scan::ScanSpec spec;
    spec.suite = f.target;
    if (const char* env = std::getenv("HGF_SEED"); env && *env) spec.seed = parse_seed(env);

    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw hgf::DomainError("cannot read config file " + f.config);
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line.front() == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw hgf::DomainError("config line is not key=value: " + line);
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key == "samples") {
                spec.samples = std::stol(value);
            } else if (key == "seed") {
                spec.seed = parse_seed(value);
            } else if (key == "tol") {
                spec.tol = std::stod(value);
            } else if (key == "out") {
                spec.out = value;
            } else if (key == "jobs") {
                spec.jobs = std::stoi(value);
            } else if (key.rfind("grid.", 0) == 0) {
                add_grid(spec, key.substr(5) + "=" + value);
            } else {
                throw hgf::DomainError("unknown config key '" + key + "'");
            }
        }
    }

    for (const auto& g : f.positional) add_grid(spec, g);
    for (const auto& g : f.grids) add_grid(spec, g);
    if (f.samples) spec.samples = *f.samples;
    if (f.seed) spec.seed = *f.seed;
    if (f.tol) spec.tol = *f.tol;
    if (f.out) spec.out = *f.out;
    if (f.jobs) spec.jobs = *f.jobs;
    spec.validate();
    return spec;
}

void emit(const hgf::scan::Report& rep, const std::string& out) {
    if (out == "-") {
        hgf::scan::write_csv(std::cout, rep);
        std::cout.flush();
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw hgf::DomainError("cannot write " + out);
        hgf::scan::write_csv(file, rep);
    }
    const auto& s = rep.summary;
    std::cerr << rep.suite << ": evaluated " << rep.evaluated << ", rows " << s.total << ", passes " << s.passes
              << ", violations " << s.violations << ", min margin " << hgf::scan::format_real(s.min_margin)
              << "\n  expectation: " << rep.expectation << " -> " << (rep.expectation_met ? "met" : "NOT met")
              << "\n  seed " << rep.seed << ", tol " << hgf::scan::format_real(rep.tol) << '\n';
}

void print_list() {
    auto row = [](const std::string& left, const std::string& right) {
        std::printf("  %-34s %s\n", left.c_str(), right.c_str());
    };
    std::cout << "functions (eval):\n";
    for (const auto& f : hgf::registry::functions()) {
        std::string sig = f.name;
        for (const auto& p : f.params) sig += ' ' + p + '=';
        row(sig, f.description);
    }
    std::cout << "suites (verify):\n";
    for (const auto& s : hgf::scan::suites()) row(s.name, s.description);
    std::cout << "targets (search):\n";
    for (const auto& t : hgf::scan::search_targets()) row(t.name + " (" + t.alias + ")", t.description);
    std::cout.flush();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic-type metrics, quasiconformal special functions and inequality verification"};
    app.set_version_flag("--version", std::string("hgf ") + hgf::kVersion);
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list functions, suites and search targets");

    std::string fn_name;
    std::vector<std::string> fn_args;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a function: eval <function> key=value ...");
    eval_cmd->add_option("function", fn_name, "function name (see `hgf list`)")->required();
    eval_cmd->add_option("args", fn_args, "arguments as key=value; points as key=re,im");

    ScanFlags verify_flags;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite and write a CSV report");
    add_scan_options(verify_cmd, verify_flags, "suite");

    ScanFlags search_flags;
    auto* search_cmd = app.add_subcommand("search", "search for violating parameter tuples");
    add_scan_options(search_cmd, search_flags, "target");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (list_cmd->parsed()) {
            print_list();
            return kExitOk;
        }
        if (eval_cmd->parsed()) {
            try {
                const double value = hgf::registry::call(fn_name, hgf::registry::parse_args(fn_args));
                std::printf("%.15g\n", value);
                return kExitOk;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n\n" << eval_cmd->help();
                std::cerr << "run `hgf list` for the function registry\n";
                return kExitUsage;
            }
        }
        if (verify_cmd->parsed()) {
            const auto spec = build_spec(verify_flags);
            const auto rep = hgf::scan::run_suite(spec);
            emit(rep, spec.out);
            return rep.expectation_met ? kExitOk : kExitViolations;
        }
        if (search_cmd->parsed()) {
            const auto spec = build_spec(search_flags);
            emit(hgf::scan::run_search(spec), spec.out);
            return kExitOk;
        }
    } catch (const hgf::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad value: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: value out of range: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: numerical failure: " << e.what() << '\n';
        return kExitViolations;
    }
    return kExitUsage;
}
