#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delcode/counting.hpp"
#include "delcode/pattern.hpp"

namespace delcode {

/// Subset of {D, E, F} a family may use at each corrupted position.
class KindSet {
public:
    constexpr KindSet() = default;
    static constexpr KindSet all() { return KindSet(0b111); }
    static KindSet parse(std::string_view letters);

    constexpr bool contains(ErrorKind k) const { return (mask_ >> static_cast<unsigned>(k)) & 1; }
    unsigned size() const;
    /// Members in D < E < F order.
    std::vector<ErrorKind> members() const;
    std::string str() const;
    bool is_all() const { return mask_ == 0b111; }

    friend bool operator==(KindSet, KindSet) = default;

private:
    constexpr explicit KindSet(std::uint8_t mask) : mask_(mask) {}
    std::uint8_t mask_ = 0b111;
};

enum class FamilyKind { AtMost, PFar, Burst };

/// Enumerable set of error patterns of a fixed length.
///
///   at_most(t)    weight <= t
///   p_far(P[,t])  corrupted positions pairwise >= P apart, optional weight cap
///   burst(b)      max S(g) - min S(g) <= b (weight 0 and 1 included)
///
/// Every family can further be restricted to a subset of error kinds.
class PatternFamily {
public:
    static PatternFamily at_most(std::size_t n, std::size_t t, KindSet kinds = KindSet::all());
    static PatternFamily p_far(std::size_t n, std::size_t P, std::optional<std::size_t> max_weight = {},
                               KindSet kinds = KindSet::all());
    static PatternFamily burst(std::size_t n, std::size_t b, KindSet kinds = KindSet::all());

    /// Parses "atmost:T", "pfar:P[:T]" or "burst:B", each optionally
    /// followed by "/KINDS" (e.g. "atmost:1/F").
    static PatternFamily parse(std::string_view spec, std::size_t n);
    std::string spec() const;

    FamilyKind kind() const noexcept { return kind_; }
    std::size_t n() const noexcept { return n_; }
    /// t for at_most, P for p_far, b for burst.
    std::size_t parameter() const noexcept { return param_; }
    std::optional<std::size_t> weight_limit() const noexcept { return weight_limit_; }
    KindSet kinds() const noexcept { return kinds_; }

    /// Largest weight any member can have.
    std::size_t max_weight() const noexcept;
    /// Exact member count.
    BigInt size() const;

    friend bool operator==(const PatternFamily&, const PatternFamily&) = default;

private:
    PatternFamily(FamilyKind kind, std::size_t n, std::size_t param, std::optional<std::size_t> limit,
                  KindSet kinds);

    std::size_t min_gap() const noexcept;
    std::size_t max_spread() const noexcept;

    friend bool is_member(const ErrorPattern&, const PatternFamily&);
    friend bool for_each_member(const PatternFamily&, const std::function<bool(const ErrorPattern&)>&);
    friend ErrorPattern sample_pattern(const PatternFamily&, std::uint64_t);

    FamilyKind kind_ = FamilyKind::AtMost;
    std::size_t n_ = 0;
    std::size_t param_ = 0;
    std::optional<std::size_t> weight_limit_;
    KindSet kinds_ = KindSet::all();
};

/// Default enumeration cap, in patterns.
inline constexpr std::uint64_t kDefaultFamilyCap = 10'000'000;

bool is_member(const ErrorPattern& g, const PatternFamily& f);

/// Visits members in the fixed order: weight ascending, then support
/// lexicographic, then kinds lexicographic (D < E < F). The visitor returns
/// false to stop early; the function returns false iff stopped.
bool for_each_member(const PatternFamily& f, const std::function<bool(const ErrorPattern&)>& visit);

/// All members, in for_each_member order. Throws BudgetExceeded above `cap`.
std::vector<ErrorPattern> enumerate_family(const PatternFamily& f, std::uint64_t cap = kDefaultFamilyCap);

/// Uniformly random member, fully determined by `seed`.
ErrorPattern sample_pattern(const PatternFamily& f, std::uint64_t seed);

}  // namespace delcode
