#pragma once

// Named scalar functions callable with key=value arguments (CLI `eval`).

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hgf::registry {

/// Raw key=value arguments; points are written "re,im".
using Args = std::map<std::string, std::string>;

struct Function {
    std::string name;
    std::vector<std::string> params;
    std::string description;
    std::function<double(const Args&)> call;
};

const std::vector<Function>& functions();
/// Throws DomainError for an unknown name.
const Function& find(const std::string& name);

/// Parses "key=value" tokens; throws DomainError on malformed or repeated keys.
Args parse_args(const std::vector<std::string>& tokens);

/// Looks up and calls; throws DomainError on unknown, missing or extra arguments.
double call(const std::string& name, const Args& args);

}  // namespace hgf::registry
