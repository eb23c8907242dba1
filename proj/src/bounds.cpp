#include "delcode/bounds.hpp"

#include <cmath>

namespace delcode {

namespace {

constexpr const char* kExact = "exact for the constructed code, every n";
constexpr const char* kLargeN = "asymptotic: holds for all n large";

double checked_log2(double arg, const std::string& name) {
    if (!(arg > 0.0) || !std::isfinite(arg))
        throw DomainError(name + ": logarithm argument " + std::to_string(arg) + " is not positive");
    return std::log2(arg);
}

void require_positive(double v, const char* what, const std::string& name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(name + ": " + what + " must be positive");
}

BoundReport make(std::string name, std::map<std::string, double> inputs, double value, std::string note) {
    if (!std::isfinite(value)) throw DomainError(name + ": value is not finite");
    return {std::move(name), std::move(inputs), value, std::move(note)};
}

}  // namespace

RepBounds rep_bounds(double n, double t) {
    require_positive(n, "n", "rep_bounds");
    if (!(t >= 0.0)) throw DomainError("rep_bounds: t must be non-negative");
    const double base = n * (1.0 - 1.0 / (2.0 * t + 1.0));
    return {make("rep_lower", {{"n", n}, {"t", t}}, base, kExact),
            make("rep_upper", {{"n", n}, {"t", t}}, base + 1.0, kExact)};
}

BoundReport any_code_lower(double n, double t) {
    const std::string name = "any_code_lower";
    require_positive(n, "n", name);
    require_positive(t, "t", name);
    const double v = t * checked_log2(n / t, name) - 10.0 * t - 2048.0 * t * t / n - 1.0;
    return make(name, {{"n", n}, {"t", t}}, v, std::string(kLargeN) + ", for t_n log n / n -> 0");
}

BoundReport frac_upper(double n, double t, double omega) {
    const std::string name = "frac_upper";
    require_positive(n, "n", name);
    require_positive(t, "t", name);
    if (!(omega >= 6.0)) throw DomainError(name + ": omega must be >= 6");
    const double k = omega * t * t;
    const double v = k * checked_log2(2.0 * n / k, name);
    return make(name, {{"n", n}, {"t", t}, {"omega", omega}}, v,
                std::string(kLargeN) + ", for omega_n t_n^3 / n -> 0; corrects a 1 - 42/omega share");
}

BoundReport frac_upper_K(double n, double t, double K) {
    const std::string name = "frac_upper_K";
    require_positive(n, "n", name);
    require_positive(t, "t", name);
    if (!(K >= 2.0)) throw DomainError(name + ": K must be >= 2");
    const double k = K * t * t;
    const double v = k * checked_log2(2.0 * n / k, name);
    return make(name, {{"n", n}, {"t", t}, {"K", K}}, v,
                "for n >= N(K), t_n^3 / n -> 0; corrects a 1 - 42/K share");
}

double delta(double P) {
    if (!(P >= 1.0)) throw DomainError("delta: P must be >= 1");
    return (P + 1.0) / std::exp2(P - 1.0);
}

BoundReport delta_report(double P) { return make("delta", {{"P", P}}, delta(P), "exact"); }

BoundReport far_upper(double n, double P) {
    const std::string name = "far_upper";
    require_positive(n, "n", name);
    if (!(P >= 2.0)) throw DomainError(name + ": P must be >= 2");
    const double d = delta(P);
    if (d >= 1.0) throw DomainError(name + ": delta(P) = " + std::to_string(d) + " >= 1, bound undefined");
    const double v = (n / P - 1.0) * checked_log2((P + 1.0) / (1.0 - d), name) + std::log2(P) + 1.0;
    return make(name, {{"n", n}, {"P", P}}, v, "exact for the constructed code, n >= P >= 2, delta(P) < 1");
}

BoundReport far_lower(double n, double P) {
    const std::string name = "far_lower";
    require_positive(n, "n", name);
    require_positive(P, "P", name);
    const double v = n / (2048.0 * (3.0 * P + 6.0)) - 2.0;
    return make(name, {{"n", n}, {"P", P}}, v, kLargeN);
}

BoundReport far_lower_largeP(double n, double P) {
    const std::string name = "far_lower_largeP";
    require_positive(n, "n", name);
    require_positive(P, "P", name);
    const double v = (n / (6.0 * P) - 1.0) * checked_log2(3.0 * P / 64.0, name) - 2.0;
    return make(name, {{"n", n}, {"P", P}}, v,
                std::string(kLargeN) + ", for P_n / sqrt(n log n) -> infinity");
}

BoundReport burst_lower(double n, double b) {
    const std::string name = "burst_lower";
    require_positive(n, "n", name);
    require_positive(b, "b", name);
    const double v = checked_log2(n, name) - (b + 5.0) - checked_log2(b * (b + 4.0), name);
    return make(name, {{"n", n}, {"b", b}}, v, kLargeN);
}

const std::map<std::string, std::vector<std::string>>& bound_catalog() {
    static const std::map<std::string, std::vector<std::string>> catalog = {
        {"rep_bounds", {"n", "t"}},         {"any_code_lower", {"n", "t"}},
        {"frac_upper", {"n", "t", "omega"}}, {"frac_upper_K", {"n", "t", "K"}},
        {"delta", {"P"}},                   {"far_upper", {"n", "P"}},
        {"far_lower", {"n", "P"}},          {"far_lower_largeP", {"n", "P"}},
        {"burst_lower", {"n", "b"}},
    };
    return catalog;
}

std::vector<BoundReport> evaluate_bound(const std::string& name, const std::map<std::string, double>& params) {
    const auto& catalog = bound_catalog();
    const auto it = catalog.find(name);
    if (it == catalog.end()) throw std::invalid_argument("unknown bound '" + name + "'");
    std::vector<double> args;
    for (const auto& key : it->second) {
        const auto p = params.find(key);
        if (p == params.end()) throw std::invalid_argument("bound '" + name + "' needs parameter '" + key + "'");
        args.push_back(p->second);
    }
    if (name == "rep_bounds") {
        auto rb = rep_bounds(args[0], args[1]);
        return {rb.lower, rb.upper};
    }
    if (name == "any_code_lower") return {any_code_lower(args[0], args[1])};
    if (name == "frac_upper") return {frac_upper(args[0], args[1], args[2])};
    if (name == "frac_upper_K") return {frac_upper_K(args[0], args[1], args[2])};
    if (name == "delta") return {delta_report(args[0])};
    if (name == "far_upper") return {far_upper(args[0], args[1])};
    if (name == "far_lower") return {far_lower(args[0], args[1])};
    if (name == "far_lower_largeP") return {far_lower_largeP(args[0], args[1])};
    return {burst_lower(args[0], args[1])};
}

}  // namespace delcode
