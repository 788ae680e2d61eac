#pragma once

// Verification suites: parameter grids, seeded samples, parallel evaluation
// and CSV reports.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <ostream>
#include <string>
#include <vector>

#include "hgf/ineq.hpp"

namespace hgf::scan {

/// A one-dimensional list of parameter values with a printable description.
struct Grid {
    std::vector<double> values;
    std::string description;

    static Grid range(double min, double max, int count, bool log_spacing);
    static Grid list(std::vector<double> values);
    /// "min:max:count[:log]" or a comma-separated list "v1,v2,...".
    static Grid parse(const std::string& text);
};

struct ScanSpec {
    std::string suite;
    std::map<std::string, Grid> grids;  // overrides of the suite defaults
    std::optional<long> samples;
    std::uint64_t seed = 42;
    std::optional<double> tol;
    std::string out = "-";
    int jobs = 0;  // 0: hardware concurrency

    /// Throws DomainError on count < 1, tol <= 0 or jobs < 0.
    void validate() const;
};

struct Summary {
    std::size_t total = 0;
    std::size_t passes = 0;
    std::size_t violations = 0;
    double min_margin = 0.0;
    std::vector<ineq::Param> argmin;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::string grid_description;
    std::string version;
    std::string expectation;
    std::size_t evaluated = 0;  // rows evaluated; larger than rows.size() for searches
    std::vector<std::string> param_names;
    std::vector<ineq::IneqCase> rows;
    Summary summary;
    bool expectation_met = false;
};

/// Evaluation plan produced by a suite for a resolved spec.
struct Plan {
    std::vector<std::string> param_names;
    std::size_t size = 0;
    std::function<ineq::IneqCase(std::size_t)> eval;
    std::function<bool(const std::vector<ineq::IneqCase>&)> expect;
    std::string expectation;
};

struct Resolved {
    std::map<std::string, Grid> grids;
    long samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;

    const std::vector<double>& grid(const std::string& name) const;
};

struct Suite {
    std::string name;
    std::string description;
    std::map<std::string, Grid> default_grids;
    long default_samples = 0;
    double default_tol = ineq::kDefaultTol;
    std::function<Plan(const Resolved&)> plan;
};

const std::vector<Suite>& suites();
/// Throws DomainError for an unknown name.
const Suite& find_suite(const std::string& name);

/// A search runs a suite and keeps only its violating rows.
struct SearchTarget {
    std::string name;
    std::string alias;
    std::string suite;
    std::string description;
    std::map<std::string, Grid> default_overrides;
};

const std::vector<SearchTarget>& search_targets();
/// Matches name or alias; throws DomainError for an unknown target.
const SearchTarget& find_search_target(const std::string& name);

Resolved resolve(const Suite& suite, const ScanSpec& spec);
Summary summarize(const std::vector<ineq::IneqCase>& rows);

/// Runs a suite; rows are in canonical (plan index) order for any job count.
Report run_suite(const ScanSpec& spec);
/// Runs a search target: rows are the violating cases only.
Report run_search(const ScanSpec& spec);

void write_csv(std::ostream& os, const Report& report);
std::string format_real(double v);

/// Deterministic uniform doubles on [0,1) from a 64-bit Mersenne twister.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed);
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace hgf::scan
