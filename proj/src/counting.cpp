#include "delcode/counting.hpp"

#include <cmath>

#include "delcode/word.hpp"

namespace delcode {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

BigInt power(unsigned base, std::size_t e) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

void check_kinds(unsigned kinds) {
    if (kinds < 1 || kinds > 3) throw InvalidArgument("kind count must be in 1..3");
}

}  // namespace

BigInt count_patterns(std::size_t n, std::size_t t, unsigned kinds) {
    check_kinds(kinds);
    if (t > n) throw InvalidArgument("count_patterns: t exceeds n");
    BigInt total = 0;
    for (std::size_t k = 0; k <= t; ++k) total += binomial(n, k) * power(kinds, k);
    return total;
}

BigInt count_far_patterns(std::size_t n, std::size_t P, std::size_t t, unsigned kinds) {
    check_kinds(kinds);
    if (P < 1) throw InvalidArgument("count_far_patterns: P must be >= 1");
    if (t > n) throw InvalidArgument("count_far_patterns: t exceeds n");
    BigInt total = 1;
    for (std::size_t k = 1; k <= t; ++k) {
        // k positions spaced >= P apart <-> k-subsets of n - (k-1)(P-1) slots
        const std::size_t squeeze = (k - 1) * (P - 1);
        if (squeeze >= n) break;
        const BigInt c = binomial(n - squeeze, k);
        if (c == 0) break;
        total += c * power(kinds, k);
    }
    return total;
}

BigInt count_burst_patterns(std::size_t n, std::size_t b, unsigned kinds) {
    return count_burst_patterns(n, b, n, kinds);
}

BigInt count_burst_patterns(std::size_t n, std::size_t b, std::size_t max_weight, unsigned kinds) {
    check_kinds(kinds);
    if (n > 0 && b >= n) throw InvalidArgument("count_burst_patterns: b must be < n");
    BigInt total = 1;
    if (max_weight == 0 || n == 0) return total;
    total += BigInt(n) * kinds;
    if (max_weight == 1) return total;
    // Spread d: n - d placements of the endpoints, each interior position
    // either clean or corrupted, capped at max_weight - 2 interior errors.
    for (std::size_t d = 1; d <= b; ++d) {
        BigInt interior = 0;
        for (std::size_t j = 0; j <= d - 1 && j + 2 <= max_weight; ++j) {
            interior += binomial(d - 1, j) * power(kinds, j);
        }
        total += BigInt(n - d) * kinds * kinds * interior;
    }
    return total;
}

double log2_big(const BigInt& v) {
    if (v <= 0) throw InvalidArgument("log2 of a non-positive value");
    const std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 60) return std::log2(v.convert_to<double>());
    // Keep the top 60 bits for the mantissa.
    const std::size_t shift = bits - 60;
    const BigInt top = v >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double redundancy(std::size_t n, const BigInt& size) {
    if (size < 1) throw InvalidArgument("redundancy: codebook size must be >= 1");
    return static_cast<double>(n) - log2_big(size);
}

FarFraction far_fraction(std::size_t n, std::size_t t, double omega) {
    if (!(omega >= 6.0)) throw InvalidArgument("far_fraction: omega must be >= 6");
    if (t > n) throw InvalidArgument("far_fraction: t exceeds n");
    FarFraction out;
    out.bound = 1.0 - 42.0 / omega;
    out.all_count = count_patterns(n, t);
    if (t == 0) {
        // Only the empty pattern; it is vacuously far.
        out.far_spacing = 0;
        out.far_count = 1;
        out.fraction = 1;
        out.fraction_value = 1.0;
        return out;
    }
    const double denom = static_cast<double>(t) * static_cast<double>(t) * omega;
    const auto spacing = static_cast<std::size_t>(std::floor(static_cast<double>(n) / denom));
    if (spacing == 0) throw InvalidArgument("far_fraction: P_n = floor(n/(t^2 omega)) is zero");
    out.far_spacing = spacing;
    out.far_count = count_far_patterns(n, 3 * spacing, t);
    out.fraction = BigRational(out.far_count, out.all_count);
    out.fraction_value = out.fraction.convert_to<double>();
    return out;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace delcode
