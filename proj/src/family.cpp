#include "delcode/family.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "delcode/random.hpp"

namespace delcode {

KindSet KindSet::parse(std::string_view letters) {
    if (letters.empty()) throw InvalidArgument("empty error-kind set");
    std::uint8_t mask = 0;
    for (char c : letters) mask |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(parse_error_kind(c)));
    return KindSet(mask);
}

unsigned KindSet::size() const {
    return static_cast<unsigned>(((mask_ >> 0) & 1) + ((mask_ >> 1) & 1) + ((mask_ >> 2) & 1));
}

std::vector<ErrorKind> KindSet::members() const {
    std::vector<ErrorKind> out;
    for (auto k : {ErrorKind::Deletion, ErrorKind::Erasure, ErrorKind::Flip})
        if (contains(k)) out.push_back(k);
    return out;
}

std::string KindSet::str() const {
    std::string s;
    for (auto k : members()) s.push_back(to_char(k));
    return s;
}

PatternFamily::PatternFamily(FamilyKind kind, std::size_t n, std::size_t param,
                             std::optional<std::size_t> limit, KindSet kinds)
    : kind_(kind), n_(n), param_(param), weight_limit_(limit), kinds_(kinds) {
    if (n_ == 0) throw InvalidArgument("pattern family: n must be >= 1");
}

PatternFamily PatternFamily::at_most(std::size_t n, std::size_t t, KindSet kinds) {
    if (t > n) throw InvalidArgument("atmost family: t exceeds n");
    return PatternFamily(FamilyKind::AtMost, n, t, std::nullopt, kinds);
}

PatternFamily PatternFamily::p_far(std::size_t n, std::size_t P, std::optional<std::size_t> max_weight,
                                   KindSet kinds) {
    if (P < 1) throw InvalidArgument("pfar family: P must be >= 1");
    return PatternFamily(FamilyKind::PFar, n, P, max_weight, kinds);
}

PatternFamily PatternFamily::burst(std::size_t n, std::size_t b, KindSet kinds) {
    return PatternFamily(FamilyKind::Burst, n, b, std::nullopt, kinds);
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw InvalidArgument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

PatternFamily PatternFamily::parse(std::string_view spec, std::size_t n) {
    KindSet kinds = KindSet::all();
    if (auto slash = spec.find('/'); slash != std::string_view::npos) {
        kinds = KindSet::parse(spec.substr(slash + 1));
        spec = spec.substr(0, slash);
    }
    const auto parts = split(spec, ':');
    const auto name = parts.front();
    if (name == "atmost" && parts.size() == 2) return at_most(n, parse_size(parts[1], "family t"), kinds);
    if (name == "pfar" && (parts.size() == 2 || parts.size() == 3)) {
        std::optional<std::size_t> limit;
        if (parts.size() == 3) limit = parse_size(parts[2], "family weight limit");
        return p_far(n, parse_size(parts[1], "family P"), limit, kinds);
    }
    if (name == "burst" && parts.size() == 2) return burst(n, parse_size(parts[1], "family b"), kinds);
    throw InvalidArgument("malformed family spec '" + std::string(spec) +
                          "' (expected atmost:T, pfar:P[:T] or burst:B, optionally /KINDS)");
}

std::string PatternFamily::spec() const {
    std::string s;
    switch (kind_) {
    case FamilyKind::AtMost: s = "atmost:" + std::to_string(param_); break;
    case FamilyKind::PFar:
        s = "pfar:" + std::to_string(param_);
        if (weight_limit_) s += ":" + std::to_string(*weight_limit_);
        break;
    case FamilyKind::Burst: s = "burst:" + std::to_string(param_); break;
    }
    if (!kinds_.is_all()) s += "/" + kinds_.str();
    return s;
}

std::size_t PatternFamily::min_gap() const noexcept { return kind_ == FamilyKind::PFar ? param_ : 1; }

std::size_t PatternFamily::max_spread() const noexcept {
    return kind_ == FamilyKind::Burst ? std::min(param_, n_ - 1) : n_ - 1;
}

std::size_t PatternFamily::max_weight() const noexcept {
    std::size_t w = 0;
    switch (kind_) {
    case FamilyKind::AtMost: w = param_; break;
    case FamilyKind::PFar: w = (n_ - 1) / param_ + 1; break;
    case FamilyKind::Burst: w = max_spread() + 1; break;
    }
    if (weight_limit_) w = std::min(w, *weight_limit_);
    return w;
}

BigInt PatternFamily::size() const {
    const unsigned c = kinds_.size();
    switch (kind_) {
    case FamilyKind::AtMost: return count_patterns(n_, param_, c);
    case FamilyKind::PFar: return count_far_patterns(n_, param_, std::min(max_weight(), n_), c);
    case FamilyKind::Burst: return count_burst_patterns(n_, max_spread(), max_weight(), c);
    }
    return 0;
}

bool is_member(const ErrorPattern& g, const PatternFamily& f) {
    if (g.n() != f.n_) return false;
    if (g.weight() > f.max_weight()) return false;
    std::size_t prev = 0;
    for (const auto& [pos, kind] : g.errors()) {
        if (!f.kinds_.contains(kind)) return false;
        if (prev != 0 && pos - prev < f.min_gap()) return false;
        prev = pos;
    }
    if (g.weight() >= 2 && g.last() - g.first() > f.max_spread()) return false;
    return true;
}

namespace {

class MemberWalker {
public:
    MemberWalker(std::size_t n, std::size_t gap, std::size_t spread, std::vector<ErrorKind> kinds,
                 const std::function<bool(const ErrorPattern&)>& visit)
        : n_(n), gap_(gap), spread_(spread), kinds_(std::move(kinds)), visit_(visit) {}

    bool run(std::size_t max_weight) {
        for (std::size_t k = 0; k <= max_weight; ++k) {
            support_.assign(k, 0);
            if (!place(0, k)) return false;
        }
        return true;
    }

private:
    // Places support_[i..k) in lexicographic order.
    bool place(std::size_t i, std::size_t k) {
        if (i == k) return emit_kinds();
        const std::size_t lo = i == 0 ? 1 : support_[i - 1] + gap_;
        const std::size_t hi_bound = i == 0 ? n_ : std::min(n_, support_[0] + spread_);
        const std::size_t tail = (k - 1 - i) * gap_;
        if (lo > hi_bound || tail > hi_bound - lo) return true;
        for (std::size_t p = lo; p + tail <= hi_bound; ++p) {
            // Later positions must also fit within the spread of the first.
            if (i == 0 && k > 1 && tail > spread_) break;
            support_[i] = p;
            if (!place(i + 1, k)) return false;
        }
        return true;
    }

    bool emit_kinds() {
        const std::size_t k = support_.size();
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            std::map<std::size_t, ErrorKind> errors;
            for (std::size_t i = 0; i < k; ++i) errors.emplace(support_[i], kinds_[idx[i]]);
            if (!visit_(ErrorPattern(n_, std::move(errors)))) return false;
            std::size_t j = k;
            while (j > 0 && ++idx[j - 1] == kinds_.size()) {
                idx[j - 1] = 0;
                --j;
            }
            if (j == 0) return true;
        }
    }

    std::size_t n_, gap_, spread_;
    std::vector<ErrorKind> kinds_;
    const std::function<bool(const ErrorPattern&)>& visit_;
    std::vector<std::size_t> support_;
};

}  // namespace

bool for_each_member(const PatternFamily& f, const std::function<bool(const ErrorPattern&)>& visit) {
    MemberWalker walker(f.n_, f.min_gap(), f.max_spread(), f.kinds_.members(), visit);
    return walker.run(f.max_weight());
}

std::vector<ErrorPattern> enumerate_family(const PatternFamily& f, std::uint64_t cap) {
    const BigInt total = f.size();
    if (total > cap)
        throw BudgetExceeded("family " + f.spec() + " at n=" + std::to_string(f.n()) + " has " +
                             to_string(total) + " patterns, above the cap of " + std::to_string(cap));
    std::vector<ErrorPattern> out;
    out.reserve(total.convert_to<std::size_t>());
    for_each_member(f, [&](const ErrorPattern& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

namespace {

long double as_weight(const BigInt& v) { return v.convert_to<long double>(); }

// Uniform k-subset of {1..m}, ascending (Floyd's algorithm).
std::vector<std::size_t> random_subset(Rng& rng, std::size_t m, std::size_t k) {
    std::set<std::size_t> chosen;
    for (std::size_t j = m - k + 1; j <= m; ++j) {
        const std::size_t t = 1 + static_cast<std::size_t>(rng.below(j));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

}  // namespace

ErrorPattern sample_pattern(const PatternFamily& f, std::uint64_t seed) {
    Rng rng(seed);
    const auto kinds = f.kinds_.members();
    const unsigned c = static_cast<unsigned>(kinds.size());
    const std::size_t n = f.n_;
    const std::size_t max_w = f.max_weight();

    std::vector<std::size_t> support;
    if (f.kind_ != FamilyKind::Burst) {
        // Weight k has C(n - (k-1)(gap-1), k) c^k members.
        const std::size_t gap = f.min_gap();
        std::vector<long double> weights;
        for (std::size_t k = 0; k <= max_w; ++k) {
            const std::size_t squeeze = k == 0 ? 0 : (k - 1) * (gap - 1);
            if (squeeze > n) break;
            weights.push_back(as_weight(binomial(n - squeeze, k) * boost::multiprecision::pow(BigInt(c), static_cast<unsigned>(k))));
        }
        const std::size_t k = rng.weighted(weights);
        if (k > 0) {
            const std::size_t slots = n - (k - 1) * (gap - 1);
            support = random_subset(rng, slots, k);
            for (std::size_t i = 0; i < k; ++i) support[i] += i * (gap - 1);
        }
    } else {
        // Categories: empty, single position, then (spread d, interior count j).
        struct Category { std::size_t spread, interior; };
        std::vector<Category> cats;
        std::vector<long double> weights;
        cats.push_back({0, 0});
        weights.push_back(1.0L);
        if (max_w >= 1) {
            cats.push_back({0, 1});
            weights.push_back(static_cast<long double>(n) * c);
        }
        for (std::size_t d = 1; d <= f.max_spread() && max_w >= 2; ++d) {
            for (std::size_t j = 0; j <= d - 1 && j + 2 <= max_w; ++j) {
                cats.push_back({d, j});
                weights.push_back(as_weight(BigInt(n - d) * c * c * binomial(d - 1, j) *
                                            boost::multiprecision::pow(BigInt(c), static_cast<unsigned>(j))));
            }
        }
        const auto& cat = cats[rng.weighted(weights)];
        if (cat.spread == 0 && cat.interior == 1) {
            support.push_back(1 + static_cast<std::size_t>(rng.below(n)));
        } else if (cat.spread > 0) {
            const std::size_t start = 1 + static_cast<std::size_t>(rng.below(n - cat.spread));
            support.push_back(start);
            if (cat.interior > 0)
                for (auto off : random_subset(rng, cat.spread - 1, cat.interior)) support.push_back(start + off);
            support.push_back(start + cat.spread);
        }
    }

    std::map<std::size_t, ErrorKind> errors;
    for (auto pos : support) errors.emplace(pos, kinds[static_cast<std::size_t>(rng.below(c))]);
    return ErrorPattern(n, std::move(errors));
}

}  // namespace delcode
