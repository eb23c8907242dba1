#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace delcode {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Binomial coefficient; zero when k > n.
BigInt binomial(std::size_t n, std::size_t k);

/// Number of patterns of length n with at most t corrupted positions, each
/// position taking one of `kinds` error kinds:  sum_k C(n,k) kinds^k.
BigInt count_patterns(std::size_t n, std::size_t t, unsigned kinds = 3);

/// Patterns with weight <= t whose corrupted positions are pairwise >= P apart:
///   sum_k C(n - (k-1)(P-1), k) kinds^k.
BigInt count_far_patterns(std::size_t n, std::size_t P, std::size_t t, unsigned kinds = 3);

/// Patterns whose support spread (max - min) is at most b, weights 0 and 1
/// included. `max_weight` optionally truncates the weight.
BigInt count_burst_patterns(std::size_t n, std::size_t b, unsigned kinds = 3);
BigInt count_burst_patterns(std::size_t n, std::size_t b, std::size_t max_weight, unsigned kinds);

/// n - log2(size).
double redundancy(std::size_t n, const BigInt& size);

/// log2 of a big integer, accurate far past the double range of the value.
double log2_big(const BigInt& v);

struct FarFraction {
    std::size_t far_spacing = 0;  // P_n = floor(n / (t^2 omega))
    BigInt far_count;             // 3P_n-far patterns of weight <= t
    BigInt all_count;             // all patterns of weight <= t
    BigRational fraction;         // far_count / all_count, reduced
    double fraction_value = 0.0;
    double bound = 0.0;           // 1 - 42/omega
};

/// Exact share of weight-<=t patterns that are 3P_n-far, next to the
/// asymptotic guarantee 1 - 42/omega.
FarFraction far_fraction(std::size_t n, std::size_t t, double omega);

std::string to_string(const BigInt& v);

}  // namespace delcode
