#include "hgf/registry.hpp"

#include <set>

#include "hgf/errors.hpp"
#include "hgf/ineq.hpp"
#include "hgf/metrics.hpp"
#include "hgf/specfun.hpp"

namespace hgf::registry {

namespace {

double real(const Args& a, const std::string& key) {
    const std::string& text = a.at(key);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw DomainError("argument " + key + " is not a number: '" + text + "'");
    return v;
}

metrics::Point2 point(const Args& a, const std::string& key) {
    const std::string& text = a.at(key);
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw DomainError("argument " + key + " must be a point 're,im'");
    Args parts{{"re", text.substr(0, comma)}, {"im", text.substr(comma + 1)}};
    return {real(parts, "re"), real(parts, "im")};
}

std::vector<Function> build() {
    using namespace specfun;
    using namespace metrics;
    return {
        {"ellint_K", {"r"}, "complete elliptic integral of the first kind", [](const Args& a) { return ellint_K(real(a, "r")); }},
        {"mu", {"r"}, "modulus of the Grotzsch ring", [](const Args& a) { return mu(real(a, "r")); }},
        {"mu_inv", {"y"}, "inverse of mu", [](const Args& a) { return mu_inv(real(a, "y")); }},
        {"gamma2", {"s"}, "Grotzsch capacity 2 pi / mu(1/s)", [](const Args& a) { return gamma2(real(a, "s")); }},
        {"phi_K", {"K", "r"}, "distortion function mu^-1(mu(r)/K)",
         [](const Args& a) { return phi_K(real(a, "K"), real(a, "r")); }},
        {"lambda_K", {"K"}, "(phi_K(1/sqrt2) / phi_{1/K}(1/sqrt2))^2", [](const Args& a) { return lambda_K(real(a, "K")); }},
        {"eta_K", {"K", "t"}, "phi^2/(1-phi^2) at r = sqrt(t/(1+t))",
         [](const Args& a) { return eta_K(real(a, "K"), real(a, "t")); }},
        {"boundary_dist", {"dom", "p"}, "distance to the boundary of the domain",
         [](const Args& a) { return boundary_dist(parse_domain(a.at("dom")), point(a, "p")); }},
        {"rho_half_plane", {"x", "y"}, "hyperbolic distance in the upper half plane",
         [](const Args& a) { return rho_half_plane(HalfPlanePoint(point(a, "x")), HalfPlanePoint(point(a, "y"))); }},
        {"rho_disk", {"a", "b"}, "hyperbolic distance in the unit disk",
         [](const Args& a) { return rho_disk(DiskPoint(point(a, "a")), DiskPoint(point(a, "b"))); }},
        {"h_metric", {"dom", "c", "x", "y"}, "log(1 + c |x-y| / sqrt(d(x) d(y)))",
         [](const Args& a) {
             return h_metric(parse_domain(a.at("dom")), real(a, "c"), point(a, "x"), point(a, "y"));
         }},
        {"h_from_rho", {"c", "rho"}, "log(1 + 2c sh(rho/2))",
         [](const Args& a) { return h_from_rho(real(a, "c"), real(a, "rho")); }},
        {"F_mfprop", {"c", "t"}, "log(1 + c sqrt(2(ch t - 1)))",
         [](const Args& a) { return ineq::F_mfprop(real(a, "c"), real(a, "t")); }},
        {"lemma22_f", {"c", "x"}, "log(1 + c(x - 1/x)) / log x",
         [](const Args& a) { return ineq::lemma22_f(real(a, "c"), real(a, "x")); }},
        {"lemmaA_value", {"c", "K"}, "(K^(1+c))^(K/(K-1)) - 2c",
         [](const Args& a) { return ineq::lemmaA_value(real(a, "c"), real(a, "K")); }},
        {"lemmaB1_value", {"K", "t"}, "t^(1/K) log t",
         [](const Args& a) { return ineq::lemmaB1_value(real(a, "K"), real(a, "t")); }},
        {"lemmaC_value", {"c", "K", "t"}, "(1+2ct)^K - (1+2c t^K)",
         [](const Args& a) { return ineq::lemmaC_value(real(a, "c"), real(a, "K"), real(a, "t")); }},
        {"distortion_rhs", {"c", "K", "h"}, "lambda(K)^(1/2) K^(1+c) max{h^(1/K), h}",
         [](const Args& a) { return ineq::distortion_rhs(real(a, "c"), real(a, "K"), real(a, "h")); }},
    };
}

}  // namespace

const std::vector<Function>& functions() {
    static const std::vector<Function> all = build();
    return all;
}

const Function& find(const std::string& name) {
    for (const auto& f : functions()) {
        if (f.name == name) return f;
    }
    throw DomainError("unknown function '" + name + "'");
}

Args parse_args(const std::vector<std::string>& tokens) {
    Args out;
    for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw DomainError("expected key=value, got '" + tok + "'");
        if (!out.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second) {
            throw DomainError("argument given twice: " + tok.substr(0, eq));
        }
    }
    return out;
}

double call(const std::string& name, const Args& args) {
    const Function& f = find(name);
    const std::set<std::string> wanted(f.params.begin(), f.params.end());
    for (const auto& p : f.params) {
        if (!args.contains(p)) throw DomainError(name + ": missing argument '" + p + "'");
    }
    for (const auto& [key, value] : args) {
        if (!wanted.contains(key)) throw DomainError(name + ": unexpected argument '" + key + "'");
    }
    return f.call(args);
}

}  // namespace hgf::registry
