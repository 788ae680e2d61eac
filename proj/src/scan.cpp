#include "hgf/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "hgf/errors.hpp"
#include "hgf/version.hpp"

namespace hgf::scan {

std::string format_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string short_real(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw DomainError("not a number: '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

}  // namespace

Grid Grid::range(double min, double max, int count, bool log_spacing) {
    if (count < 1) throw DomainError("grid count must be >= 1");
    if (!std::isfinite(min) || !std::isfinite(max) || max < min) throw DomainError("grid needs finite min <= max");
    if (log_spacing && !(min > 0.0)) throw DomainError("log-spaced grid needs min > 0");
    Grid g;
    g.values.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double s = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        double v = log_spacing ? std::exp(std::log(min) + s * (std::log(max) - std::log(min))) : min + s * (max - min);
        if (i == count - 1) v = max;
        if (i == 0) v = min;
        g.values.push_back(v);
    }
    g.description = short_real(min) + ":" + short_real(max) + ":" + std::to_string(count) + (log_spacing ? ":log" : "");
    return g;
}

Grid Grid::list(std::vector<double> values) {
    if (values.empty()) throw DomainError("grid list must not be empty");
    Grid g;
    g.description = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        g.description += (i ? "," : "") + short_real(values[i]);
    }
    g.description += "}";
    g.values = std::move(values);
    return g;
}

Grid Grid::parse(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3 && parts.size() != 4) throw DomainError("grid must be min:max:count[:log]: " + text);
        if (parts.size() == 4 && parts[3] != "log" && parts[3] != "linear") {
            throw DomainError("grid spacing must be 'log' or 'linear': " + text);
        }
        const double count = parse_real(parts[2]);
        if (count != std::floor(count) || count < 1 || count > 1e8) throw DomainError("grid count must be >= 1");
        return range(parse_real(parts[0]), parse_real(parts[1]), static_cast<int>(count),
                     parts.size() == 4 && parts[3] == "log");
    }
    std::vector<double> values;
    for (const auto& item : split(text, ',')) values.push_back(parse_real(item));
    return list(std::move(values));
}

void ScanSpec::validate() const {
    if (samples && *samples < 1) throw DomainError("samples must be >= 1");
    if (tol && !(*tol > 0.0)) throw DomainError("tol must be > 0");
    if (jobs < 0) throw DomainError("jobs must be >= 0");
    for (const auto& [name, grid] : grids) {
        if (grid.values.empty()) throw DomainError("grid '" + name + "' is empty");
    }
}

const std::vector<double>& Resolved::grid(const std::string& name) const {
    const auto it = grids.find(name);
    if (it == grids.end()) throw DomainError("suite has no grid parameter '" + name + "'");
    return it->second.values;
}

Resolved resolve(const Suite& suite, const ScanSpec& spec) {
    spec.validate();
    Resolved r;
    r.grids = suite.default_grids;
    for (const auto& [name, grid] : spec.grids) {
        if (!r.grids.contains(name)) {
            throw DomainError("suite '" + suite.name + "' has no grid parameter '" + name + "'");
        }
        r.grids[name] = grid;
    }
    r.samples = spec.samples.value_or(suite.default_samples);
    r.seed = spec.seed;
    r.tol = spec.tol.value_or(suite.default_tol);
    return r;
}

Summary summarize(const std::vector<ineq::IneqCase>& rows) {
    Summary s;
    s.total = rows.size();
    bool first = true;
    for (const auto& row : rows) {
        if (row.pass) {
            ++s.passes;
        } else {
            ++s.violations;
        }
        if (first || row.margin < s.min_margin) {
            s.min_margin = row.margin;
            s.argmin = row.params;
            first = false;
        }
    }
    return s;
}

namespace {

std::string describe_grids(const Resolved& r) {
    std::string out;
    for (const auto& [name, grid] : r.grids) {
        if (!out.empty()) out += "; ";
        out += name + "=" + grid.description;
    }
    if (r.samples > 0) out += (out.empty() ? "" : "; ") + std::string("samples=") + std::to_string(r.samples);
    return out.empty() ? "fixed" : out;
}

std::vector<ineq::IneqCase> evaluate(const Plan& plan, int jobs) {
    std::vector<ineq::IneqCase> rows(plan.size);
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    constexpr std::size_t kBlock = 256;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, (plan.size + kBlock - 1) / kBlock));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t begin = next.fetch_add(kBlock);
            if (begin >= plan.size) return;
            const std::size_t end = std::min(plan.size, begin + kBlock);
            try {
                for (std::size_t i = begin; i < end; ++i) rows[i] = plan.eval(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(plan.size);
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

Report make_report(const Suite& suite, const Resolved& resolved, const Plan& plan) {
    Report rep;
    rep.suite = suite.name;
    rep.seed = resolved.seed;
    rep.tol = resolved.tol;
    rep.grid_description = describe_grids(resolved);
    rep.version = kVersion;
    rep.expectation = plan.expectation;
    rep.param_names = plan.param_names;
    rep.evaluated = plan.size;
    return rep;
}

}  // namespace

Report run_suite(const ScanSpec& spec) {
    const Suite& suite = find_suite(spec.suite);
    const Resolved resolved = resolve(suite, spec);
    const Plan plan = suite.plan(resolved);
    Report rep = make_report(suite, resolved, plan);
    rep.rows = evaluate(plan, spec.jobs);
    rep.summary = summarize(rep.rows);
    rep.expectation_met = plan.expect(rep.rows);
    return rep;
}

Report run_search(const ScanSpec& spec) {
    const SearchTarget& target = find_search_target(spec.suite);
    ScanSpec inner = spec;
    inner.suite = target.suite;
    for (const auto& [name, grid] : target.default_overrides) {
        if (!inner.grids.contains(name)) inner.grids[name] = grid;
    }
    const Suite& suite = find_suite(inner.suite);
    const Resolved resolved = resolve(suite, inner);
    const Plan plan = suite.plan(resolved);
    Report rep = make_report(suite, resolved, plan);
    rep.suite = target.name;
    rep.expectation = "report violating tuples";
    for (auto& row : evaluate(plan, spec.jobs)) {
        if (!row.pass) rep.rows.push_back(std::move(row));
    }
    rep.summary = summarize(rep.rows);
    rep.expectation_met = true;
    return rep;
}

void write_csv(std::ostream& os, const Report& rep) {
    os << "# suite: " << rep.suite << '\n'
       << "# seed: " << rep.seed << '\n'
       << "# tol: " << format_real(rep.tol) << '\n'
       << "# grid: " << rep.grid_description << '\n'
       << "# expectation: " << rep.expectation << '\n'
       << "# version: hgf " << rep.version << '\n';
    os << "suite";
    for (const auto& name : rep.param_names) os << ',' << name;
    os << ",lhs,rhs,margin,pass\n";
    for (const auto& row : rep.rows) {
        os << row.name;
        if (row.params.size() != rep.param_names.size()) throw DomainError("row parameters do not match the header");
        for (std::size_t i = 0; i < row.params.size(); ++i) os << ',' << format_real(row.params[i].value);
        os << ',' << format_real(row.lhs) << ',' << format_real(row.rhs) << ',' << format_real(row.margin) << ','
           << (row.pass ? "true" : "false") << '\n';
    }
    const Summary& s = rep.summary;
    os << "# summary: evaluated=" << rep.evaluated << " rows=" << s.total << " passes=" << s.passes
       << " violations=" << s.violations << " min_margin=" << format_real(s.min_margin) << " argmin=";
    for (std::size_t i = 0; i < s.argmin.size(); ++i) {
        os << (i ? "," : "") << s.argmin[i].name << '=' << format_real(s.argmin[i].value);
    }
    os << " expectation_met=" << (rep.expectation_met ? "true" : "false") << '\n';
}

Sampler::Sampler(std::uint64_t seed) : engine_(seed) {}

double Sampler::uniform() {
    // top 53 bits; mt19937_64 output is fully specified, unlike the std distributions
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace hgf::scan
