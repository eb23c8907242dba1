#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace delcode {

/// A bound formula evaluated outside its domain (non-positive log argument,
/// zero denominator, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct BoundReport {
    std::string name;
    std::map<std::string, double> inputs;
    double value = 0.0;
    std::string applicability;
};

/// Both sides of the repetition-code redundancy sandwich,
/// n(1 - 1/(2t+1)) <= R <= n(1 - 1/(2t+1)) + 1.
struct RepBounds {
    BoundReport lower;
    BoundReport upper;
};
RepBounds rep_bounds(double n, double t);

/// Any code correcting every pattern of weight <= t:
/// t log(n/t) - 10t - 2^11 t^2/n - 1.
BoundReport any_code_lower(double n, double t);

/// Redundancy achieved while correcting a 1 - 42/omega share of the
/// weight-<=t patterns: omega t^2 log(2n / (omega t^2)).
BoundReport frac_upper(double n, double t, double omega);

/// Fixed-K form of frac_upper: K t^2 log(2n / (K t^2)).
BoundReport frac_upper_K(double n, double t, double K);

/// delta(P) = (P+1) / 2^(P-1).
double delta(double P);
BoundReport delta_report(double P);

/// Concatenated-VT code: (n/P - 1) log((P+1)/(1 - delta(P))) + log P + 1.
/// Defined only for delta(P) < 1.
BoundReport far_upper(double n, double P);

/// Any code correcting all 3P-far patterns: n / (2^11 (3P+6)) - 2.
BoundReport far_lower(double n, double P);

/// Large-spacing regime: (n/(6P) - 1) log(3P/64) - 2.
BoundReport far_lower_largeP(double n, double P);

/// Any code correcting bursts of spread <= b: log n - (b+5) - log(b(b+4)).
BoundReport burst_lower(double n, double b);

/// Names accepted by evaluate_bound, with their parameter names in order.
const std::map<std::string, std::vector<std::string>>& bound_catalog();

/// Evaluates a bound by name. rep_bounds yields two reports.
std::vector<BoundReport> evaluate_bound(const std::string& name, const std::map<std::string, double>& params);

}  // namespace delcode
